#pragma once

// Certification of the Krust property at mesh scale, together with the
// pointwise identities behind it.

#include <maxsurf/graph_pde.hpp>
#include <maxsurf/mesh.hpp>
#include <maxsurf/weierstrass.hpp>

#include <optional>
#include <string>
#include <vector>

namespace maxsurf
{

inline constexpr double kConvexityDefectTolerance = -1e-9;
inline constexpr int kDefaultPathSteps = 200;

/// Projection of a surface mesh onto the x1x2-plane.
///
/// A disk-type mesh whose projected triangles are all positively oriented
/// (local diffeomorphism) and whose projected boundary is a simple polygon
/// projects injectively.
struct GraphReport
{
    double min_projected_triangle_area = 0.0;
    bool boundary_simple = false;
    /// Most negative cross product of consecutive projected boundary edges.
    double boundary_convexity_defect = 0.0;
    bool injective = false;
    bool is_convex_domain = false;
};

GraphReport projection_report(const SurfaceMesh &mesh);

enum class Verdict
{
    Pass,
    Fail,
    NotApplicable
};

const char *to_string(Verdict v) noexcept;

struct KrustResult
{
    GraphReport domain_report;
    GraphReport conjugate_report;
    Verdict verdict = Verdict::NotApplicable;
};

/// Samples X and X* on triangulate_disk(domain_radius, rings). PASS iff the
/// projected domain of X is injective and convex and X* projects
/// injectively; NOT_APPLICABLE when the hypothesis fails.
KrustResult krust_pipeline(const Immersion &im, int rings, double tol = kDefaultTol);
KrustResult krust_pipeline(const WeierstrassData &data, int rings, double tol = kDefaultTol);

/// |N × dX(a,b) − dX*(a,b)| with N the Gauss map and × the Lorentzian product.
double rotation_identity_check(const Immersion &im, const WeierstrassData &data, Complex w, double a, double b);

/// A parameter-space curve β with π∘X(β(t_k)) = γ(t_k) at every node.
struct ParameterPath
{
    std::vector<double> t;
    std::vector<Complex> w;
    std::vector<Point3> x;
    double max_residual = 0.0;
};

/// One Newton solve of π∘X(w) = target starting from (w, X(w)).
struct Located
{
    Complex w;
    Point3 x;
    double residual;
};

Located newton_project(const Immersion &im, Complex target, Complex w, const Point3 &x, double tol);

/// Pulls the segment from p1 to p2 back through π∘X by Newton continuation
/// over `steps` equal steps. Without `start`, the preimage of p1 is itself
/// found by continuation from the base point. Throws NewtonDivergence when
/// the segment leaves the projected domain.
ParameterPath pullback_segment(const Immersion &im, Complex p1, Complex p2, int steps = kDefaultPathSteps,
                               double tol = kDefaultTol, std::optional<Complex> start = std::nullopt);

struct InequalityRecord
{
    double lhs = 0.0;      // ⟨p2 − p1, i(q2 − q1)⟩
    double integral = 0.0; // −∫ |β'|² |h'|²/4 (1/|g|² − |g|²) dt, trapezoid rule
    double margin = 0.0;   // |lhs − integral|
    /// Agreement bound max(1e-5, 1e-2 |lhs|).
    double allowed = 0.0;
    bool holds() const noexcept { return lhs > 0.0 && integral > 0.0 && margin <= allowed; }
};

InequalityRecord krust_inequality_check(const WeierstrassData &data, Complex w1, Complex w2,
                                        int steps = kDefaultPathSteps, double tol = kDefaultTol);

struct SpacelikeRecord
{
    double min_edge_quadratic_form = 0.0;
    double pr_margin = 0.0;
};

/// Over all mesh edges e: min ⟨e, e⟩ and min (|π e|² − ⟨e, e⟩).
SpacelikeRecord spacelike_mesh_check(const SurfaceMesh &mesh);

/// Inverts the projection π∘X of a graph immersion: bucketed point location
/// in the projected mesh, barycentric interpolation of the parameter, then
/// Newton polishing.
class GraphInverter
{
public:
    GraphInverter(const Immersion &im, int rings, double tol = kDefaultTol);

    const GraphReport &report() const noexcept { return report_; }
    const SurfaceMesh &surface() const noexcept { return surface_; }
    /// Projected bounding box: (min, max) corners.
    std::pair<Complex, Complex> bounds() const noexcept { return {lo_, hi_}; }

    /// Parameter and surface point over p, or nullopt outside the projected mesh.
    std::optional<Located> locate(Complex p) const;

private:
    Immersion im_;
    double tol_;
    SurfaceMesh surface_;
    GraphReport report_;
    std::vector<Complex> projected_;
    Complex lo_;
    Complex hi_;
    int buckets_x_ = 1;
    int buckets_y_ = 1;
    std::vector<std::vector<int>> buckets_;
};

/// x3 of a graph immersion resampled on the nodes of `grid` covered by its
/// projection, via `inverter`. `height` maps the located parameter to the
/// sampled value.
template <class Height>
ScalarField resample_graph(const GraphInverter &inverter, const Grid &grid, Height height)
{
    std::vector<double> values(grid.size(), 0.0);
    Mask mask(grid.size(), 0);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
        {
            const auto hit = inverter.locate({grid.x(i), grid.y(j)});
            if (!hit)
                continue;
            values[grid.index(i, j)] = height(*hit);
            mask[grid.index(i, j)] = 1;
        }
    return ScalarField(grid, std::move(values), std::move(mask));
}

struct LeeRecord
{
    double discrepancy = 0.0;  // min over vertical shifts of max |f♯ − g − c|
    double shift = 0.0;        // the minimising c
    std::size_t overlap = 0;   // dual-grid nodes compared
    double max_curl = 0.0;     // max |dual curl| of the resampled maximal graph
};

inline constexpr int kLeeMeshRings = 64;

/// Compares the graph-side dual f♯ of the resampled maximal graph with the
/// curve-side dual X♯ resampled over the same grid.
LeeRecord lee_equivalence_check(const WeierstrassData &data, double grid_h, double tol = kDefaultTol,
                                int rings = kLeeMeshRings);

} // namespace maxsurf
