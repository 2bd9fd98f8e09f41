#include <maxsurf/verify.hpp>
#include <maxsurf/duality.hpp>
#include <maxsurf/predicates.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxsurf
{

const char *to_string(Verdict v) noexcept
{
    switch (v)
    {
    case Verdict::Pass:
        return "PASS";
    case Verdict::Fail:
        return "FAIL";
    case Verdict::NotApplicable:
        return "NOT_APPLICABLE";
    }
    return "?";
}

GraphReport projection_report(const SurfaceMesh &mesh)
{
    const auto &param = mesh.param;
    std::vector<Complex> p;
    p.reserve(mesh.positions.size());
    for (const Point3 &x : mesh.positions)
        p.push_back(project(x));

    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
    double lo_y = lo_x, hi_y = -lo_x;
    for (const Complex &z : p)
    {
        lo_x = std::min(lo_x, z.real());
        hi_x = std::max(hi_x, z.real());
        lo_y = std::min(lo_y, z.imag());
        hi_y = std::max(hi_y, z.imag());
    }
    const double extent = std::max(hi_x - lo_x, hi_y - lo_y);
    const double scale = extent * extent;

    GraphReport report;
    report.min_projected_triangle_area = std::numeric_limits<double>::infinity();
    for (const auto &t : param.triangles())
    {
        const double area = 0.5 * signed_area2(p[t[0]], p[t[1]], p[t[2]]);
        if (std::abs(area) < 1e-16 * scale)
            throw DegenerateTriangle("projected triangle has vanishing area");
        report.min_projected_triangle_area = std::min(report.min_projected_triangle_area, area);
    }

    const auto &b = param.boundary();
    const std::size_t m = b.size();
    bool simple = true;
    for (std::size_t i = 0; i < m && simple; ++i)
    {
        const Complex a0 = p[b[i]];
        const Complex a1 = p[b[(i + 1) % m]];
        const Complex a2 = p[b[(i + 2) % m]];
        // Adjacent edges may only meet at their shared vertex.
        if (a0 == a1 || (orient2d(a0, a1, a2) == 0 &&
                         ((a2 - a1).real() * (a0 - a1).real() + (a2 - a1).imag() * (a0 - a1).imag()) > 0.0))
        {
            simple = false;
            break;
        }
        for (std::size_t j = i + 2; j < m; ++j)
        {
            if (i == 0 && j == m - 1)
                continue;
            if (segments_intersect(a0, a1, p[b[j]], p[b[(j + 1) % m]]))
            {
                simple = false;
                break;
            }
        }
    }
    report.boundary_simple = simple;

    double defect = std::numeric_limits<double>::infinity();
    double twice_area = 0.0;
    for (std::size_t i = 0; i < m; ++i)
    {
        const Complex a0 = p[b[i]];
        const Complex a1 = p[b[(i + 1) % m]];
        const Complex a2 = p[b[(i + 2) % m]];
        const Complex e0 = a1 - a0;
        const Complex e1 = a2 - a1;
        defect = std::min(defect, e0.real() * e1.imag() - e0.imag() * e1.real());
        twice_area += a0.real() * a1.imag() - a1.real() * a0.imag();
    }
    report.boundary_convexity_defect = defect;
    report.injective = report.min_projected_triangle_area > 0.0 && report.boundary_simple;
    report.is_convex_domain = report.boundary_simple && twice_area > 0.0 && defect >= kConvexityDefectTolerance;
    return report;
}

KrustResult krust_pipeline(const Immersion &im, int rings, double tol)
{
    const ParamMesh mesh = triangulate_disk(im.domain_radius(), rings);
    const auto [surface, conjugate] = sample_surface_and_conjugate(im, mesh, tol);
    KrustResult result;
    result.domain_report = projection_report(surface);
    result.conjugate_report = projection_report(conjugate);
    if (!(result.domain_report.injective && result.domain_report.is_convex_domain))
        result.verdict = Verdict::NotApplicable;
    else
        result.verdict = result.conjugate_report.injective ? Verdict::Pass : Verdict::Fail;
    return result;
}

KrustResult krust_pipeline(const WeierstrassData &data, int rings, double tol)
{
    if (data.kind() != DataKind::MaximalGraph)
        throw InvalidData("krust_pipeline expects a maximal-graph datum");
    return krust_pipeline(maximal_immersion(data), rings, tol);
}

double rotation_identity_check(const Immersion &im, const WeierstrassData &data, Complex w, double a, double b)
{
    const Point3 normal = gauss_map(data, w);
    const Frame frame = differential(im, w);
    const Tangent3 dx = apply(frame, a, b);
    // dX* = −dX∘J: X*_u = −X_v, X*_v = X_u.
    const Tangent3 dx_star = a * (-frame.xv) + b * frame.xu;
    return euclidean_norm(cross_lorentz(normal, dx) - dx_star);
}

Located newton_project(const Immersion &im, Complex target, Complex w, const Point3 &x0, double tol)
{
    constexpr int kMaxIterations = 60;
    constexpr int kMaxHalvings = 40;
    Point3 x = x0;
    double residual = std::abs(project(x) - target);
    for (int it = 0; it < kMaxIterations && residual > tol; ++it)
    {
        const Frame frame = differential(im, w);
        const double a11 = frame.xu.x1, a12 = frame.xv.x1;
        const double a21 = frame.xu.x2, a22 = frame.xv.x2;
        const double det = a11 * a22 - a12 * a21;
        if (!(std::abs(det) > 0.0) || !std::isfinite(det))
            throw NewtonDivergence("projected Jacobian is singular");
        const Complex f = project(x) - target;
        const double du = -(a22 * f.real() - a12 * f.imag()) / det;
        const double dv = -(-a21 * f.real() + a11 * f.imag()) / det;

        double lambda = 1.0;
        bool accepted = false;
        for (int k = 0; k < kMaxHalvings; ++k, lambda *= 0.5)
        {
            const Complex candidate = w + lambda * Complex{du, dv};
            if (std::abs(candidate) > im.domain_radius())
                continue;
            const auto inc = im.integrate(w, candidate, tol);
            const Point3 xc = x + Point3{inc[0].real(), inc[1].real(), inc[2].real(), im.ambient()};
            const double rc = std::abs(project(xc) - target);
            if (rc < residual)
            {
                w = candidate;
                x = xc;
                residual = rc;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw NewtonDivergence("Newton step does not reduce the projection residual");
    }
    if (!(residual <= tol))
        throw NewtonDivergence("Newton iteration did not converge");
    return {w, x, residual};
}

ParameterPath pullback_segment(const Immersion &im, Complex p1, Complex p2, int steps, double tol,
                               std::optional<Complex> start)
{
    if (steps < 1)
        throw InputError("pullback_segment needs at least one step");
    Complex w;
    Point3 x;
    if (start)
    {
        w = *start;
        x = immerse(im, w, tol);
    }
    else
    {
        const ParameterPath lead = pullback_segment(im, project(im.base_value()), p1, steps, tol, im.base_point());
        w = lead.w.back();
        x = lead.x.back();
    }

    ParameterPath path;
    path.t.reserve(steps + 1);
    path.w.reserve(steps + 1);
    path.x.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k)
    {
        const double t = static_cast<double>(k) / steps;
        const Complex target = (1.0 - t) * p1 + t * p2;
        if (k >= 2)
        {
            const Complex predicted = 2.0 * path.w[k - 1] - path.w[k - 2];
            if (std::abs(predicted) <= im.domain_radius())
            {
                const auto inc = im.integrate(w, predicted, tol);
                x = x + Point3{inc[0].real(), inc[1].real(), inc[2].real(), im.ambient()};
                w = predicted;
            }
        }
        Located hit;
        try
        {
            hit = newton_project(im, target, w, x, tol);
        }
        catch (const DomainError &e)
        {
            throw NewtonDivergence(std::string("continuation left the parameter disk: ") + e.what());
        }
        w = hit.w;
        x = hit.x;
        path.t.push_back(t);
        path.w.push_back(w);
        path.x.push_back(x);
        path.max_residual = std::max(path.max_residual, hit.residual);
    }
    return path;
}

InequalityRecord krust_inequality_check(const WeierstrassData &data, Complex w1, Complex w2, int steps, double tol)
{
    if (w1 == w2)
        throw InputError("krust_inequality_check needs two distinct parameters");
    if (steps < 2)
        throw InputError("krust_inequality_check needs at least two path steps");
    const Immersion im = maximal_immersion(data);
    const ImmersionValue v1 = immerse_both(im, w1, tol);
    const ImmersionValue v2 = immerse_both(im, w2, tol);
    const Complex p1 = project(v1.x), p2 = project(v2.x);
    const Complex q1 = project(v1.conjugate), q2 = project(v2.conjugate);
    const Complex i{0.0, 1.0};

    InequalityRecord rec;
    rec.lhs = ((p2 - p1) * std::conj(i * (q2 - q1))).real();

    const ParameterPath path = pullback_segment(im, p1, p2, steps, tol, w1);
    const double dt = 1.0 / steps;
    const auto &w = path.w;
    const std::size_t n = w.size() - 1;
    auto integrand = [&](std::size_t k) {
        Complex d;
        if (k == 0)
            d = (-3.0 * w[0] + 4.0 * w[1] - w[2]) / (2.0 * dt);
        else if (k == n)
            d = (3.0 * w[n] - 4.0 * w[n - 1] + w[n - 2]) / (2.0 * dt);
        else
            d = (w[k + 1] - w[k - 1]) / (2.0 * dt);
        const double g2 = std::norm(data.g().eval(w[k]));
        const double hp2 = std::norm(data.dh().eval(w[k]));
        return -(std::norm(d) * hp2 / 4.0) * (1.0 / g2 - g2);
    };
    double sum = 0.5 * (integrand(0) + integrand(n));
    for (std::size_t k = 1; k < n; ++k)
        sum += integrand(k);
    rec.integral = sum * dt;
    rec.margin = std::abs(rec.lhs - rec.integral);
    rec.allowed = std::max(1e-5, 1e-2 * std::abs(rec.lhs));
    return rec;
}

SpacelikeRecord spacelike_mesh_check(const SurfaceMesh &mesh)
{
    if (mesh.ambient != Ambient::Lorentzian)
        throw AmbientMismatch("spacelike_mesh_check expects a Lorentzian mesh");
    SpacelikeRecord rec{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const auto &e : mesh.param.edges())
    {
        const Tangent3 v = mesh.positions[e[1]] - mesh.positions[e[0]];
        const double q = inner(v, v);
        rec.min_edge_quadratic_form = std::min(rec.min_edge_quadratic_form, q);
        rec.pr_margin = std::min(rec.pr_margin, std::norm(project(v)) - q);
    }
    return rec;
}

GraphInverter::GraphInverter(const Immersion &im, int rings, double tol)
    : im_(im), tol_(tol), surface_(sample_surface(im, triangulate_disk(im.domain_radius(), rings), tol)),
      report_(projection_report(surface_))
{
    if (!report_.injective)
        throw InvalidMesh("surface does not project injectively; it cannot be inverted as a graph");
    projected_.reserve(surface_.positions.size());
    for (const Point3 &x : surface_.positions)
        projected_.push_back(project(x));
    lo_ = projected_.front();
    hi_ = projected_.front();
    for (const Complex &z : projected_)
    {
        lo_ = {std::min(lo_.real(), z.real()), std::min(lo_.imag(), z.imag())};
        hi_ = {std::max(hi_.real(), z.real()), std::max(hi_.imag(), z.imag())};
    }

    const auto &tris = surface_.param.triangles();
    const int per_axis = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(tris.size()) / 2.0)));
    buckets_x_ = per_axis;
    buckets_y_ = per_axis;
    buckets_.assign(static_cast<std::size_t>(buckets_x_ * buckets_y_), {});
    const double sx = (hi_.real() - lo_.real()) / buckets_x_;
    const double sy = (hi_.imag() - lo_.imag()) / buckets_y_;
    auto cell = [](double v, double lo, double size, int count) {
        return std::clamp(static_cast<int>(std::floor((v - lo) / size)), 0, count - 1);
    };
    for (std::size_t t = 0; t < tris.size(); ++t)
    {
        const Complex a = projected_[tris[t][0]], b = projected_[tris[t][1]], c = projected_[tris[t][2]];
        const int i0 = cell(std::min({a.real(), b.real(), c.real()}), lo_.real(), sx, buckets_x_);
        const int i1 = cell(std::max({a.real(), b.real(), c.real()}), lo_.real(), sx, buckets_x_);
        const int j0 = cell(std::min({a.imag(), b.imag(), c.imag()}), lo_.imag(), sy, buckets_y_);
        const int j1 = cell(std::max({a.imag(), b.imag(), c.imag()}), lo_.imag(), sy, buckets_y_);
        for (int j = j0; j <= j1; ++j)
            for (int i = i0; i <= i1; ++i)
                buckets_[static_cast<std::size_t>(j * buckets_x_ + i)].push_back(static_cast<int>(t));
    }
}

std::optional<Located> GraphInverter::locate(Complex p) const
{
    if (p.real() < lo_.real() || p.real() > hi_.real() || p.imag() < lo_.imag() || p.imag() > hi_.imag())
        return std::nullopt;
    const double sx = (hi_.real() - lo_.real()) / buckets_x_;
    const double sy = (hi_.imag() - lo_.imag()) / buckets_y_;
    const int i = std::clamp(static_cast<int>(std::floor((p.real() - lo_.real()) / sx)), 0, buckets_x_ - 1);
    const int j = std::clamp(static_cast<int>(std::floor((p.imag() - lo_.imag()) / sy)), 0, buckets_y_ - 1);
    const auto &tris = surface_.param.triangles();
    const auto &params = surface_.param.vertices();
    for (int t : buckets_[static_cast<std::size_t>(j * buckets_x_ + i)])
    {
        const auto &tri = tris[static_cast<std::size_t>(t)];
        const Complex a = projected_[tri[0]], b = projected_[tri[1]], c = projected_[tri[2]];
        const double total = signed_area2(a, b, c);
        const double la = signed_area2(p, b, c) / total;
        const double lb = signed_area2(a, p, c) / total;
        const double lc = 1.0 - la - lb;
        constexpr double slack = -1e-12;
        if (la < slack || lb < slack || lc < slack)
            continue;
        Complex w = la * params[tri[0]] + lb * params[tri[1]] + lc * params[tri[2]];
        if (std::abs(w) > im_.domain_radius())
            w *= im_.domain_radius() / std::abs(w);
        try
        {
            return newton_project(im_, p, w, immerse(im_, w, tol_), std::max(1e-2 * tol_, 1e-13));
        }
        catch (const NewtonDivergence &)
        {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

LeeRecord lee_equivalence_check(const WeierstrassData &data, double grid_h, double tol, int rings)
{
    if (!(grid_h > 0.0))
        throw InputError("grid spacing must be positive");
    const Immersion im = maximal_immersion(data);
    const Immersion dual_im = dual_immersion(im);
    const GraphInverter inverter(im, rings, tol);

    const auto [lo, hi] = inverter.bounds();
    Grid grid;
    grid.h = grid_h;
    grid.x0 = std::floor(lo.real() / grid_h) * grid_h;
    grid.y0 = std::floor(lo.imag() / grid_h) * grid_h;
    grid.nx = static_cast<int>(std::ceil((hi.real() - grid.x0) / grid_h)) + 1;
    grid.ny = static_cast<int>(std::ceil((hi.imag() - grid.y0) / grid_h)) + 1;

    const ScalarField f = resample_graph(inverter, grid, [](const Located &hit) { return hit.x.x3; });
    LeeRecord rec;
    rec.max_curl = dual_curl(f, Ambient::Lorentzian).max_abs();
    const ScalarField f_sharp = dualize_maximal_to_minimal(f, std::numeric_limits<double>::infinity());
    const ScalarField g = resample_graph(inverter, f_sharp.grid(),
                                         [&](const Located &hit) { return immerse(dual_im, hit.w, tol).x3; });

    double lo_d = std::numeric_limits<double>::infinity();
    double hi_d = -lo_d;
    const Grid &dg = f_sharp.grid();
    for (int j = 0; j < dg.ny; ++j)
        for (int i = 0; i < dg.nx; ++i)
        {
            if (!f_sharp.in_mask(i, j) || !g.in_mask(i, j))
                continue;
            const double d = f_sharp.at(i, j) - g.at(i, j);
            lo_d = std::min(lo_d, d);
            hi_d = std::max(hi_d, d);
            ++rec.overlap;
        }
    if (rec.overlap == 0)
        throw OverlapEmpty("graph dual and curve dual share no grid nodes");
    rec.discrepancy = 0.5 * (hi_d - lo_d);
    rec.shift = 0.5 * (hi_d + lo_d);
    return rec;
}

} // namespace maxsurf
