#pragma once

// Disk-type parameter meshes and sampled surfaces.

#include <maxsurf/weierstrass.hpp>

#include <array>
#include <iosfwd>
#include <vector>

namespace maxsurf
{

using TriangleIndices = std::array<int, 3>;

/// Triangulated closed disk of the parameter plane. Construction checks that
/// every triangle is positively oriented, the boundary cycle is simple and
/// the complex has Euler characteristic 1.
class ParamMesh
{
public:
    ParamMesh(std::vector<Complex> vertices, std::vector<TriangleIndices> triangles, std::vector<int> boundary,
              double radius);

    const std::vector<Complex> &vertices() const noexcept { return vertices_; }
    const std::vector<TriangleIndices> &triangles() const noexcept { return triangles_; }
    const std::vector<int> &boundary() const noexcept { return boundary_; }
    double radius() const noexcept { return radius_; }

    /// Undirected edges (a < b), sorted.
    std::vector<std::array<int, 2>> edges() const;
    long euler_characteristic() const;

private:
    std::vector<Complex> vertices_;
    std::vector<TriangleIndices> triangles_;
    std::vector<int> boundary_;
    double radius_;
};

/// Polar mesh: centre plus `rings` concentric rings, ring k carrying 6k
/// vertices, so 1 + 3n(n+1) vertices and 6n² triangles. The boundary is the
/// outer ring, counter-clockwise.
ParamMesh triangulate_disk(double radius, int rings);

struct SurfaceMesh
{
    ParamMesh param;
    std::vector<Point3> positions;
    Ambient ambient;
};

/// Positions X(w) at every mesh vertex.
SurfaceMesh sample_surface(const Immersion &im, const ParamMesh &mesh, double tol = kDefaultTol);

/// X and X* on the same mesh from one set of integrations.
std::pair<SurfaceMesh, SurfaceMesh> sample_surface_and_conjugate(const Immersion &im, const ParamMesh &mesh,
                                                                 double tol = kDefaultTol);

/// Wavefront OBJ: "v x1 x2 x3" lines then 1-based "f i j k" lines.
void write_obj(const SurfaceMesh &mesh, std::ostream &out);

} // namespace maxsurf
