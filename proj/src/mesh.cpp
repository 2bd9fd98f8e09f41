#include <maxsurf/mesh.hpp>
#include <maxsurf/predicates.hpp>

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace maxsurf
{

ParamMesh::ParamMesh(std::vector<Complex> vertices, std::vector<TriangleIndices> triangles,
                     std::vector<int> boundary, double radius)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)), boundary_(std::move(boundary)),
      radius_(radius)
{
    if (vertices_.empty() || triangles_.empty())
        throw InvalidMesh("mesh has no interior (no triangles)");
    if (boundary_.size() < 3)
        throw InvalidMesh("boundary cycle needs at least three vertices");
    const int nv = static_cast<int>(vertices_.size());
    for (const Complex &v : vertices_)
    {
        if (!is_finite(v) || std::abs(v) > radius_ * (1.0 + 1e-12))
            throw InvalidMesh("mesh vertex outside the closed disk");
    }
    for (const auto &t : triangles_)
    {
        for (int k : t)
            if (k < 0 || k >= nv)
                throw InvalidMesh("triangle index out of range");
        if (orient2d(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]) <= 0)
            throw InvalidMesh("parameter triangle is not positively oriented");
    }
    const std::size_t m = boundary_.size();
    for (std::size_t a = 0; a < m; ++a)
    {
        if (boundary_[a] < 0 || boundary_[a] >= nv)
            throw InvalidMesh("boundary index out of range");
        for (std::size_t b = a + 2; b < m; ++b)
        {
            if (a == 0 && b == m - 1)
                continue;
            if (segments_intersect(vertices_[boundary_[a]], vertices_[boundary_[(a + 1) % m]],
                                   vertices_[boundary_[b]], vertices_[boundary_[(b + 1) % m]]))
                throw InvalidMesh("boundary cycle is not simple");
        }
    }
    if (euler_characteristic() != 1)
        throw InvalidMesh("mesh is not a topological disk (Euler characteristic " +
                          std::to_string(euler_characteristic()) + ")");
}

std::vector<std::array<int, 2>> ParamMesh::edges() const
{
    std::vector<std::array<int, 2>> e;
    e.reserve(triangles_.size() * 3);
    for (const auto &t : triangles_)
        for (int k = 0; k < 3; ++k)
        {
            const int a = t[k];
            const int b = t[(k + 1) % 3];
            e.push_back({std::min(a, b), std::max(a, b)});
        }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

long ParamMesh::euler_characteristic() const
{
    return static_cast<long>(vertices_.size()) - static_cast<long>(edges().size()) +
           static_cast<long>(triangles_.size());
}

ParamMesh triangulate_disk(double radius, int rings)
{
    if (rings < 1)
        throw InvalidMesh("triangulate_disk needs at least one ring");
    if (!(radius > 0.0))
        throw InvalidMesh("triangulate_disk needs a positive radius");

    std::vector<Complex> vertices{Complex{}};
    std::vector<int> ring_start{0};
    for (int k = 1; k <= rings; ++k)
    {
        ring_start.push_back(static_cast<int>(vertices.size()));
        const int count = 6 * k;
        const double r = radius * static_cast<double>(k) / rings;
        for (int j = 0; j < count; ++j)
        {
            if (k == rings)
                vertices.push_back(std::polar(radius, 2.0 * std::numbers::pi * j / count));
            else
                vertices.push_back(std::polar(r, 2.0 * std::numbers::pi * j / count));
        }
    }

    std::vector<TriangleIndices> triangles;
    for (int j = 0; j < 6; ++j)
        triangles.push_back({0, ring_start[1] + j, ring_start[1] + (j + 1) % 6});

    for (int k = 2; k <= rings; ++k)
    {
        const int m_in = 6 * (k - 1);
        const int m_out = 6 * k;
        const int in0 = ring_start[k - 1];
        const int out0 = ring_start[k];
        int i = 0;
        int j = 0;
        // Merge the two rings by angle; compare (j+1)/m_out with (i+1)/m_in exactly.
        while (i < m_in || j < m_out)
        {
            const bool advance_outer =
                j < m_out && (i == m_in || static_cast<long>(j + 1) * m_in <= static_cast<long>(i + 1) * m_out);
            if (advance_outer)
            {
                triangles.push_back({in0 + i % m_in, out0 + j, out0 + (j + 1) % m_out});
                ++j;
            }
            else
            {
                triangles.push_back({in0 + i, out0 + j % m_out, in0 + (i + 1) % m_in});
                ++i;
            }
        }
    }

    std::vector<int> boundary(6 * rings);
    for (int j = 0; j < 6 * rings; ++j)
        boundary[j] = ring_start[rings] + j;
    return ParamMesh(std::move(vertices), std::move(triangles), std::move(boundary), radius);
}

std::pair<SurfaceMesh, SurfaceMesh> sample_surface_and_conjugate(const Immersion &im, const ParamMesh &mesh,
                                                                 double tol)
{
    if (mesh.radius() > im.domain_radius() * (1.0 + 1e-12))
        throw DomainError("mesh disk exceeds the immersion domain");
    std::vector<Point3> x;
    std::vector<Point3> xs;
    x.reserve(mesh.vertices().size());
    xs.reserve(mesh.vertices().size());
    for (const Complex &w : mesh.vertices())
    {
        const ImmersionValue v = immerse_both(im, w, tol);
        x.push_back(v.x);
        xs.push_back(v.conjugate);
    }
    return {SurfaceMesh{mesh, std::move(x), im.ambient()}, SurfaceMesh{mesh, std::move(xs), im.ambient()}};
}

SurfaceMesh sample_surface(const Immersion &im, const ParamMesh &mesh, double tol)
{
    return sample_surface_and_conjugate(im, mesh, tol).first;
}

void write_obj(const SurfaceMesh &mesh, std::ostream &out)
{
    char line[128];
    for (const Point3 &p : mesh.positions)
    {
        std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", p.x1, p.x2, p.x3);
        out << line;
    }
    for (const auto &t : mesh.param.triangles())
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

} // namespace maxsurf
