#include <maxsurf/catalog.hpp>
#include <maxsurf/duality.hpp>
#include <maxsurf/predicates.hpp>
#include <maxsurf/verify.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace maxsurf;

namespace
{
constexpr Ambient L = Ambient::Lorentzian;
const Complex I{0.0, 1.0};

Complex random_in_disk(std::mt19937_64 &rng, double r)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(r * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

SurfaceMesh synthetic(const ParamMesh &mesh, Ambient amb, Point3 (*fn)(Complex))
{
    std::vector<Point3> pos;
    for (const Complex &w : mesh.vertices())
    {
        Point3 p = fn(w);
        p.ambient = amb;
        pos.push_back(p);
    }
    return {mesh, pos, amb};
}

// (u, v, 0) with u ↦ u² for u < 0: the left half folds onto the right.
Point3 folded(Complex w)
{
    const double u = w.real();
    return {u < 0.0 ? u * u : u, w.imag(), 0.0};
}

WeierstrassData non_convex_datum()
{
    // g = 3 + 3z² on r = 0.7: the projected boundary bends inwards near ±0.7i.
    return WeierstrassData(RationalHolomorphic::polynomial(Polynomial({3.0, 0.0, 3.0}), 0.95),
                           HolomorphicForm(RationalHolomorphic::constant(1.0, 0.95)), 0.7);
}

WeierstrassData folding_datum()
{
    // |g| = |1.5 + z| drops below 1 inside the disk.
    return WeierstrassData(RationalHolomorphic::polynomial(Polynomial({1.5, 1.0}), 1.0),
                           HolomorphicForm(RationalHolomorphic::constant(1.0, 1.0)), 0.9, {}, {},
                           DataKind::General);
}
} // namespace

TEST_CASE("triangulate_disk")
{
    const ParamMesh one = triangulate_disk(1.0, 1);
    CHECK(one.vertices().size() == 7);
    CHECK(one.triangles().size() == 6);
    CHECK(one.boundary().size() == 6);
    for (int n : {1, 2, 3, 7, 16, 64})
    {
        const ParamMesh m = triangulate_disk(0.9, n);
        CHECK(m.vertices().size() == static_cast<std::size_t>(1 + 3 * n * (n + 1)));
        CHECK(m.triangles().size() == static_cast<std::size_t>(6 * n * n));
        CHECK(m.boundary().size() == static_cast<std::size_t>(6 * n));
        CHECK(m.euler_characteristic() == 1);
        for (const auto &t : m.triangles())
            CHECK(signed_area2(m.vertices()[t[0]], m.vertices()[t[1]], m.vertices()[t[2]]) > 0.0);
    }
    CHECK_THROWS_AS(triangulate_disk(1.0, 0), InvalidMesh);
    CHECK_THROWS_AS(triangulate_disk(-1.0, 3), InvalidMesh);
}

TEST_CASE("ParamMesh validation")
{
    const std::vector<Complex> tri{0.0, 0.5, 0.5 * I};
    CHECK_NOTHROW(ParamMesh(tri, {{0, 1, 2}}, {0, 1, 2}, 1.0));
    CHECK_THROWS_AS(ParamMesh(tri, {}, {0, 1, 2}, 1.0), InvalidMesh);
    CHECK_THROWS_AS(ParamMesh(tri, {{0, 2, 1}}, {0, 2, 1}, 1.0), InvalidMesh);
    CHECK_THROWS_AS(ParamMesh({0.0, 1.5, 0.5 * I}, {{0, 1, 2}}, {0, 1, 2}, 1.0), InvalidMesh);
    CHECK_THROWS_AS(ParamMesh(tri, {{0, 1, 3}}, {0, 1, 2}, 1.0), InvalidMesh);
    // two disjoint triangles: Euler characteristic 2
    const std::vector<Complex> two{0.0, 0.3, 0.3 * I, -0.5, Complex{-0.2, 0.0}, Complex{-0.5, 0.3}};
    CHECK_THROWS_AS(ParamMesh(two, {{0, 1, 2}, {3, 4, 5}}, {0, 1, 2}, 1.0), InvalidMesh);
}

TEST_CASE("sample_surface")
{
    const Immersion im = maximal_immersion(plane_datum(2.0, 0.9));
    const SurfaceMesh s = sample_surface(im, triangulate_disk(0.9, 8));
    CHECK(s.ambient == L);
    // plane spanned by (5/4, 0, −1) and (0, 3/4, 0): Euclidean normal (3/4, 0, 15/16)
    for (const Point3 &p : s.positions)
        CHECK(std::abs(0.75 * p.x1 + 15.0 / 16.0 * p.x3) < 1e-13);
    CHECK(s.positions.front() == Point3{0, 0, 0, L});

    const auto [x, xs] = sample_surface_and_conjugate(im, triangulate_disk(0.9, 4));
    for (std::size_t k = 0; k < x.positions.size(); ++k)
    {
        const Complex w = x.param.vertices()[k];
        const Point3 expect = conjugate_immerse(im, w);
        CHECK(std::abs(xs.positions[k].x2 - expect.x2) < 1e-14);
    }
    CHECK_THROWS_AS(sample_surface(im, triangulate_disk(1.0, 4)), DomainError);
}

TEST_CASE("projection_report")
{
    const Immersion im = maximal_immersion(plane_datum(2.0, 0.9));
    const auto [x, xs] = sample_surface_and_conjugate(im, triangulate_disk(0.9, 16));
    const GraphReport r = projection_report(x);
    CHECK(r.injective);
    CHECK(r.is_convex_domain);
    CHECK(r.boundary_simple);
    CHECK(r.min_projected_triangle_area > 0.0);
    CHECK(projection_report(xs).injective);

    const ParamMesh mesh = triangulate_disk(1.0, 12);
    const GraphReport f = projection_report(synthetic(mesh, Ambient::Euclidean, folded));
    CHECK_FALSE(f.injective);
    CHECK(f.min_projected_triangle_area < 0.0);

    const GraphReport id = projection_report(
        synthetic(mesh, Ambient::Euclidean, [](Complex w) { return Point3{w.real(), w.imag(), 0.0}; }));
    CHECK(id.injective);
    CHECK(id.is_convex_domain);

    // affine graphs are always certified
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 10; ++k)
    {
        const double a = u(rng), b = u(rng), c = u(rng);
        std::vector<Point3> pos;
        for (const Complex &w : mesh.vertices())
            pos.push_back({w.real(), w.imag(), a * w.real() + b * w.imag() + c, Ambient::Euclidean});
        CHECK(projection_report({mesh, pos, Ambient::Euclidean}).injective);
    }

    // a sheared fold: folds of every width are caught
    for (double s : {0.05, 0.3, 0.9})
    {
        std::vector<Point3> pos;
        for (const Complex &w : mesh.vertices())
            pos.push_back({w.real() < -s ? -2 * s - w.real() : w.real(), w.imag(), 0.0, Ambient::Euclidean});
        CHECK_FALSE(projection_report({mesh, pos, Ambient::Euclidean}).injective);
    }

    CHECK_THROWS_AS(projection_report(synthetic(mesh, Ambient::Euclidean,
                                                [](Complex w) { return Point3{w.real(), 0.0, w.imag()}; })),
                    DegenerateTriangle);
}

TEST_CASE("krust_pipeline")
{
    CHECK(krust_pipeline(plane_datum(), 16).verdict == Verdict::Pass);

    const KrustResult z3 = krust_pipeline(catalog_datum("zplus3-r0.5"), 64);
    CHECK(z3.domain_report.boundary_convexity_defect >= kConvexityDefectTolerance);
    CHECK(z3.conjugate_report.injective);
    CHECK(z3.verdict == Verdict::Pass);

    CHECK(krust_pipeline(catalog_datum("rational-r0.9"), 64).verdict != Verdict::Fail);

    const KrustResult nc = krust_pipeline(non_convex_datum(), 64);
    CHECK(nc.domain_report.injective);
    CHECK_FALSE(nc.domain_report.is_convex_domain);
    CHECK(nc.verdict == Verdict::NotApplicable);

    const KrustResult fold = krust_pipeline(maximal_immersion(folding_datum()), 32);
    CHECK_FALSE(fold.domain_report.injective);
    CHECK(fold.verdict == Verdict::NotApplicable);
    CHECK_THROWS_AS(krust_pipeline(folding_datum(), 32), InvalidData);

    CHECK(std::string(to_string(Verdict::NotApplicable)) == "NOT_APPLICABLE");
}

TEST_CASE("rotation_identity_check")
{
    const WeierstrassData plane = plane_datum();
    const Immersion im = maximal_immersion(plane);
    CHECK(rotation_identity_check(im, plane, 0.3, 1.0, 0.0) < 1e-10);
    CHECK(rotation_identity_check(im, plane, 0.3, 0.0, 1.0) < 1e-10);

    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const auto catalog = surface_catalog();
    for (int k = 0; k < 100; ++k)
    {
        const auto &e = catalog[k % catalog.size()];
        const double t = angle(rng);
        CHECK(rotation_identity_check(maximal_immersion(e.data), e.data, random_in_disk(rng, e.data.domain_radius()),
                                      std::cos(t), std::sin(t)) < 1e-8);
    }
}

TEST_CASE("pullback_segment")
{
    const Immersion im = maximal_immersion(plane_datum(2.0, 0.9));
    // π∘X(u + iv) = (5u/4, 3v/4)
    const Complex p1{-0.3, 0.2}, p2{0.5, -0.4};
    const ParameterPath path = pullback_segment(im, p1, p2, 50, 1e-12);
    REQUIRE(path.w.size() == 51);
    for (std::size_t k = 0; k < path.w.size(); ++k)
    {
        const Complex target = (1.0 - path.t[k]) * p1 + path.t[k] * p2;
        CHECK(std::abs(path.w[k] - Complex{0.8 * target.real(), target.imag() / 0.75}) < 1e-11);
        CHECK(std::abs(project(path.x[k]) - target) < 1e-12);
    }
    CHECK(path.max_residual < 1e-12);

    const ParameterPath still = pullback_segment(im, p1, p1, 10);
    for (const Complex &w : still.w)
        CHECK(std::abs(w - still.w.front()) < 1e-12);

    CHECK_THROWS_AS(pullback_segment(im, 0.0, Complex{3.0, 0.0}, 20), NewtonDivergence);
    CHECK_THROWS_AS(pullback_segment(im, 0.0, 0.1, 0), InputError);

    // curved case: residual below tol at every node
    const Immersion z3 = maximal_immersion(catalog_datum("zplus3-r0.9"));
    const ParameterPath c = pullback_segment(z3, project(immerse(z3, Complex{-0.5, 0.4})),
                                             project(immerse(z3, Complex{0.6, -0.3})));
    CHECK(c.max_residual < kDefaultTol);
    CHECK(std::abs(c.w.back() - Complex{0.6, -0.3}) < 1e-8);
}

TEST_CASE("krust_inequality_check")
{
    const InequalityRecord plane = krust_inequality_check(plane_datum(), 0.0, 1.0);
    // p2 − p1 = 5/4, q2 − q1 = −3i/4
    const Complex dp = 1.25, dq = -0.75 * I;
    const double lhs = (dp * std::conj(I * dq)).real();
    CHECK(lhs > 0.0);
    CHECK(std::abs(plane.lhs - lhs) < 1e-12);
    CHECK(std::abs(plane.integral - lhs) < 1e-9);
    CHECK(plane.holds());

    CHECK_THROWS_AS(krust_inequality_check(plane_datum(), 0.3, 0.3), InputError);

    std::mt19937_64 rng(33);
    for (const char *name : {"zplus2.5-r0.9", "rational-r0.5", "zplus4-r0.9"})
    {
        const WeierstrassData d = catalog_datum(name);
        for (int k = 0; k < 5; ++k)
        {
            const InequalityRecord r = krust_inequality_check(d, random_in_disk(rng, d.domain_radius()),
                                                              random_in_disk(rng, d.domain_radius()));
            CHECK(r.lhs > 0.0);
            CHECK(r.integral > 0.0);
            CHECK(r.margin <= r.allowed);
        }
    }
}

TEST_CASE("spacelike_mesh_check")
{
    const ParamMesh mesh = triangulate_disk(0.9, 8);
    const SurfaceMesh s = sample_surface(maximal_immersion(plane_datum(2.0, 0.9)), mesh);
    const SpacelikeRecord r = spacelike_mesh_check(s);
    double shortest = 1e300;
    for (const auto &e : mesh.edges())
        shortest = std::min(shortest, std::norm(mesh.vertices()[e[1]] - mesh.vertices()[e[0]]));
    // conformal factor 9/16 on an affine surface
    CHECK(r.min_edge_quadratic_form == doctest::Approx(9.0 / 16.0 * shortest).epsilon(1e-12));
    CHECK(r.pr_margin >= 0.0);

    const SpacelikeRecord light =
        spacelike_mesh_check(synthetic(mesh, L, [](Complex w) { return Point3{w.real(), 0.0, w.real()}; }));
    CHECK(std::abs(light.min_edge_quadratic_form) < 1e-15);
    CHECK(light.pr_margin >= 0.0);

    for (const auto &e : surface_catalog())
    {
        const SurfaceMesh m = sample_surface(maximal_immersion(e.data), triangulate_disk(e.data.domain_radius(), 8));
        const SpacelikeRecord q = spacelike_mesh_check(m);
        CHECK(q.min_edge_quadratic_form > 0.0);
        CHECK(q.pr_margin >= 0.0);
    }
    CHECK_THROWS_AS(spacelike_mesh_check(synthetic(mesh, Ambient::Euclidean, folded)), AmbientMismatch);
}

TEST_CASE("GraphInverter and resampling")
{
    const Immersion plane = maximal_immersion(plane_datum(2.0, 0.9));
    const GraphInverter inv(plane, 16);
    CHECK(inv.report().injective);
    const Grid grid{-1.2, -0.8, 0.05, 49, 33};
    const ScalarField f = resample_graph(inv, grid, [](const Located &l) { return l.x.x3; });
    CHECK(f.masked_count() > 500);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            if (f.in_mask(i, j))
                CHECK(std::abs(f.at(i, j) + 0.8 * grid.x(i)) < 1e-10);
    CHECK_FALSE(inv.locate(Complex{5.0, 0.0}).has_value());

    const Immersion z3 = maximal_immersion(catalog_datum("zplus3-r0.9"));
    const GraphInverter inv3(z3, 32);
    std::mt19937_64 rng(34);
    for (int k = 0; k < 20; ++k)
    {
        const Complex w = random_in_disk(rng, 0.85);
        const Point3 x = immerse(z3, w);
        const auto hit = inv3.locate(project(x));
        REQUIRE(hit.has_value());
        CHECK(std::abs(hit->w - w) < 1e-9);
        CHECK(std::abs(hit->x.x3 - x.x3) < 1e-10);
    }

    CHECK_THROWS_AS(GraphInverter(maximal_immersion(folding_datum()), 16), InvalidMesh);
}

TEST_CASE("resampled catalog graphs are discretely maximal")
{
    const Immersion im = maximal_immersion(catalog_datum("zplus3-r0.9"));
    const GraphInverter inv(im, 64);
    std::vector<double> res;
    for (double h : {0.04, 0.02})
    {
        const auto [lo, hi] = inv.bounds();
        const Grid g{lo.real(), lo.imag(), h, static_cast<int>((hi.real() - lo.real()) / h) + 2,
                     static_cast<int>((hi.imag() - lo.imag()) / h) + 2};
        res.push_back(maximal_residual(resample_graph(inv, g, [](const Located &l) { return l.x.x3; })).max_abs());
    }
    CHECK(res[1] < 1e-3);
    CHECK(res[0] / res[1] >= 3.0);
}

TEST_CASE("lee_equivalence_check")
{
    const LeeRecord plane = lee_equivalence_check(plane_datum(2.0, 0.9), 0.02);
    CHECK(plane.discrepancy < 1e-8);
    CHECK(plane.overlap > 1000);

    const LeeRecord coarse = lee_equivalence_check(catalog_datum("zplus3-r0.5"), 0.02);
    const LeeRecord fine = lee_equivalence_check(catalog_datum("zplus3-r0.5"), 0.01);
    CHECK(coarse.discrepancy / fine.discrepancy >= 3.0);
    CHECK(fine.discrepancy < 1e-5);

    CHECK_THROWS_AS(lee_equivalence_check(plane_datum(), 0.0), InputError);
}

TEST_CASE("graph dual twice returns the graph")
{
    const Immersion im = maximal_immersion(catalog_datum("zplus3-r0.5"));
    const GraphInverter inv(im, 64);
    std::vector<double> err;
    for (double h : {0.02, 0.01})
    {
        const auto [lo, hi] = inv.bounds();
        const Grid g{std::floor(lo.real() / h) * h, std::floor(lo.imag() / h) * h, h,
                     static_cast<int>((hi.real() - lo.real()) / h) + 3, static_cast<int>((hi.imag() - lo.imag()) / h) + 3};
        const ScalarField f = resample_graph(inv, g, [](const Located &l) { return l.x.x3; });
        const ScalarField twice = dualize_minimal_to_maximal(dualize_maximal_to_minimal(f, 1.0), 1.0);
        const Grid &tg = twice.grid();
        double lo_d = 1e300, hi_d = -1e300;
        for (int j = 0; j < tg.ny; ++j)
            for (int i = 0; i < tg.nx; ++i)
                if (twice.in_mask(i, j))
                {
                    // the double dual grid coincides with g shifted by one node
                    REQUIRE(f.in_mask(i + 1, j + 1));
                    const double d = twice.at(i, j) - f.at(i + 1, j + 1);
                    lo_d = std::min(lo_d, d);
                    hi_d = std::max(hi_d, d);
                }
        err.push_back(0.5 * (hi_d - lo_d));
    }
    CHECK(err[1] < 1e-5);
    CHECK(err[0] / err[1] >= 3.0);
}

TEST_CASE("orientation predicate is exact near degeneracy")
{
    CHECK(orient2d(0.0, 1.0, I) == 1);
    CHECK(orient2d(0.0, I, 1.0) == -1);
    CHECK(orient2d(0.0, Complex{0.1, 0.1}, Complex{0.3, 0.3}) == 0);
    CHECK(orient2d(0.0, Complex{1.0, 1.0}, Complex{2.0, 2.0 + std::ldexp(1.0, -50)}) == 1);
    CHECK(orient2d(0.0, Complex{1.0, 1.0}, Complex{2.0, 2.0 - std::ldexp(1.0, -50)}) == -1);
    // far from the origin the float filter cannot decide
    const double big = 1e8;
    CHECK(orient2d(Complex{big, big}, Complex{big + 1, big + 1}, Complex{big + 2, big + 2 + std::ldexp(1.0, -25)}) == 1);
    CHECK(orient2d(Complex{0.5, 0.5}, Complex{12.0, 12.0}, Complex{24.0, 24.0}) == 0);
}

TEST_CASE("segment intersection")
{
    CHECK(segments_intersect(0.0, Complex{1, 1}, Complex{0, 1}, Complex{1, 0}));
    CHECK(segments_intersect(0.0, 1.0, 1.0, Complex{2, 1}));      // shared endpoint
    CHECK(segments_intersect(0.0, 2.0, 1.0, 3.0));                 // collinear overlap
    CHECK_FALSE(segments_intersect(0.0, 1.0, 2.0, 3.0));           // collinear, disjoint
    CHECK_FALSE(segments_intersect(0.0, 1.0, Complex{0, 1}, Complex{1, 1 + 1e-12}));
    CHECK(segments_intersect(0.0, 2.0, Complex{1, 0}, Complex{1, 1})); // touching interior
}
