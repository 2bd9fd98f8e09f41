#include <maxsurf/graph_pde.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <string>

namespace maxsurf
{

MaskTopology mask_topology(const Grid &grid, const Mask &mask)
{
    auto on = [&](int i, int j) { return grid.contains(i, j) && mask[grid.index(i, j)] != 0; };

    long vertices = 0;
    long edges = 0;
    long faces = 0;
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
        {
            if (!on(i, j))
                continue;
            ++vertices;
            edges += on(i + 1, j) ? 1 : 0;
            edges += on(i, j + 1) ? 1 : 0;
            faces += (on(i + 1, j) && on(i, j + 1) && on(i + 1, j + 1)) ? 1 : 0;
        }

    std::vector<std::uint8_t> seen(grid.size(), 0);
    int components = 0;
    std::deque<std::pair<int, int>> queue;
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
        {
            if (!on(i, j) || seen[grid.index(i, j)])
                continue;
            ++components;
            seen[grid.index(i, j)] = 1;
            queue.emplace_back(i, j);
            while (!queue.empty())
            {
                const auto [ci, cj] = queue.front();
                queue.pop_front();
                constexpr int di[4] = {1, -1, 0, 0};
                constexpr int dj[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k)
                {
                    const int ni = ci + di[k];
                    const int nj = cj + dj[k];
                    if (on(ni, nj) && !seen[grid.index(ni, nj)])
                    {
                        seen[grid.index(ni, nj)] = 1;
                        queue.emplace_back(ni, nj);
                    }
                }
            }
        }
    return {components, vertices - edges + faces};
}

ScalarField::ScalarField(Grid grid, std::vector<double> values, Mask mask)
    : grid_(grid), values_(std::move(values)), mask_(std::move(mask))
{
    if (!(grid_.h > 0.0) || !std::isfinite(grid_.h) || grid_.nx < 0 || grid_.ny < 0)
        throw DegenerateMask("grid spacing must be positive and counts non-negative");
    if (values_.size() != grid_.size() || mask_.size() != grid_.size())
        throw DegenerateMask("field storage does not match the grid dimensions");
    for (std::size_t k = 0; k < values_.size(); ++k)
    {
        if (!mask_[k])
            values_[k] = 0.0;
        else if (!std::isfinite(values_[k]))
            throw NonFiniteValue("field value is not finite on the mask");
    }
}

std::size_t ScalarField::masked_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(mask_.begin(), mask_.end(), [](auto m) { return m != 0; }));
}

double ScalarField::max_abs() const noexcept
{
    double m = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (mask_[k])
            m = std::max(m, std::abs(values_[k]));
    return m;
}

void ScalarField::require_simply_connected() const
{
    const MaskTopology t = mask_topology(grid_, mask_);
    if (!t.simply_connected())
        throw NotSimplyConnected("mask has " + std::to_string(t.components) + " component(s) and Euler number " +
                                 std::to_string(t.euler));
}

VectorField2 gradient(const ScalarField &f)
{
    const Grid &g = f.grid();
    VectorField2 out{g, std::vector<double>(g.size(), 0.0), std::vector<double>(g.size(), 0.0), f.mask()};

    auto derivative = [&](int i, int j, int di, int dj) {
        const bool fwd = f.in_mask(i + di, j + dj);
        const bool bwd = f.in_mask(i - di, j - dj);
        if (fwd && bwd)
            return (f.at(i + di, j + dj) - f.at(i - di, j - dj)) / (2.0 * g.h);
        if (fwd)
            return (f.at(i + di, j + dj) - f.at(i, j)) / g.h;
        if (bwd)
            return (f.at(i, j) - f.at(i - di, j - dj)) / g.h;
        throw DegenerateMask("masked node has no neighbour along an axis");
    };

    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
        {
            if (!f.in_mask(i, j))
                continue;
            out.w1[g.index(i, j)] = derivative(i, j, 1, 0);
            out.w2[g.index(i, j)] = derivative(i, j, 0, 1);
        }
    return out;
}

namespace
{

struct EdgeGradient
{
    double fx;
    double fy;
};

// Edge from node (i, j) to (i + 1, j); needs both adjacent plaquettes.
std::optional<EdgeGradient> horizontal_edge_gradient(const ScalarField &f, int i, int j)
{
    for (int di : {0, 1})
        for (int dj : {-1, 0, 1})
            if (!f.in_mask(i + di, j + dj))
                return std::nullopt;
    const double h = f.grid().h;
    return EdgeGradient{(f.at(i + 1, j) - f.at(i, j)) / h,
                        (f.at(i, j + 1) - f.at(i, j - 1) + f.at(i + 1, j + 1) - f.at(i + 1, j - 1)) / (4.0 * h)};
}

// Edge from node (i, j) to (i, j + 1).
std::optional<EdgeGradient> vertical_edge_gradient(const ScalarField &f, int i, int j)
{
    for (int di : {-1, 0, 1})
        for (int dj : {0, 1})
            if (!f.in_mask(i + di, j + dj))
                return std::nullopt;
    const double h = f.grid().h;
    return EdgeGradient{(f.at(i + 1, j) - f.at(i - 1, j) + f.at(i + 1, j + 1) - f.at(i - 1, j + 1)) / (4.0 * h),
                        (f.at(i, j + 1) - f.at(i, j)) / h};
}

// Normalised flux Df/√(1 ± |Df|²).
EdgeGradient normalise(const EdgeGradient &p, Ambient source)
{
    const double q = p.fx * p.fx + p.fy * p.fy;
    double denom;
    if (source == Ambient::Euclidean)
        denom = std::sqrt(1.0 + q);
    else
    {
        if (!(q < 1.0))
            throw NotSpacelike("|Df| >= 1 on a flux edge: the graph is not spacelike");
        denom = std::sqrt(1.0 - q);
    }
    return {p.fx / denom, p.fy / denom};
}

bool all_plaquettes_full(const ScalarField &f, int i, int j)
{
    for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj)
            if (!f.in_mask(i + di, j + dj))
                return false;
    return true;
}

ScalarField residual(const ScalarField &f, Ambient source)
{
    const Grid &g = f.grid();
    std::vector<double> values(g.size(), 0.0);
    Mask mask(g.size(), 0);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
        {
            if (!all_plaquettes_full(f, i, j))
                continue;
            const EdgeGradient right = normalise(*horizontal_edge_gradient(f, i, j), source);
            const EdgeGradient left = normalise(*horizontal_edge_gradient(f, i - 1, j), source);
            const EdgeGradient up = normalise(*vertical_edge_gradient(f, i, j), source);
            const EdgeGradient down = normalise(*vertical_edge_gradient(f, i, j - 1), source);
            values[g.index(i, j)] = (right.fx - left.fx + up.fy - down.fy) / g.h;
            mask[g.index(i, j)] = 1;
        }
    return ScalarField(g, std::move(values), std::move(mask));
}

// Increments of the dual field between adjacent plaquettes. Plaquette (i, j)
// has lower-left node (i, j). The ♭ field rotates by +90°, the ♯ field by −90°.
class DualIncrements
{
public:
    DualIncrements(const ScalarField &f, Ambient source)
        : f_(f), source_(source), sign_(source == Ambient::Euclidean ? 1.0 : -1.0)
    {
    }

    bool plaquette(int i, int j) const
    {
        return f_.in_mask(i, j) && f_.in_mask(i + 1, j) && f_.in_mask(i, j + 1) && f_.in_mask(i + 1, j + 1);
    }

    // (i, j) → (i + 1, j), across the vertical edge at node (i + 1, j).
    double step_x(int i, int j) const
    {
        const EdgeGradient v = normalise(*vertical_edge_gradient(f_, i + 1, j), source_);
        return -sign_ * f_.grid().h * v.fy;
    }

    // (i, j) → (i, j + 1), across the horizontal edge at node (i, j + 1).
    double step_y(int i, int j) const
    {
        const EdgeGradient v = normalise(*horizontal_edge_gradient(f_, i, j + 1), source_);
        return sign_ * f_.grid().h * v.fx;
    }

    // Circulation around the dual cell of node (i, j), counter-clockwise.
    double circulation(int i, int j) const
    {
        return step_x(i - 1, j - 1) + step_y(i, j - 1) - step_x(i - 1, j) - step_y(i - 1, j - 1);
    }

private:
    const ScalarField &f_;
    Ambient source_;
    double sign_;
};

ScalarField dualize(const ScalarField &f, Ambient source, double curl_tol)
{
    f.require_simply_connected();
    const Grid &g = f.grid();
    const Grid dg = g.dual();
    if (dg.nx <= 0 || dg.ny <= 0)
        throw DegenerateMask("grid too small to carry a dual field");

    const DualIncrements inc(f, source);
    Mask dmask(dg.size(), 0);
    for (int j = 0; j < dg.ny; ++j)
        for (int i = 0; i < dg.nx; ++i)
            dmask[dg.index(i, j)] = inc.plaquette(i, j) ? 1 : 0;
    const MaskTopology dt = mask_topology(dg, dmask);
    if (!dt.simply_connected())
        throw NotSimplyConnected("full plaquettes do not form a simply connected region");

    // Closedness of the rotated field on every elementary dual cycle.
    for (int j = 1; j < g.ny - 1; ++j)
        for (int i = 1; i < g.nx - 1; ++i)
        {
            if (!all_plaquettes_full(f, i, j))
                continue;
            const double curl = inc.circulation(i, j) / (g.h * g.h);
            if (!(std::abs(curl) <= curl_tol))
                throw CurlError("rotated flux is not closed (curl " + std::to_string(curl) + " at node " +
                                std::to_string(i) + "," + std::to_string(j) + ")");
        }

    std::vector<double> values(dg.size(), 0.0);
    std::vector<std::uint8_t> seen(dg.size(), 0);
    const auto anchor = static_cast<std::size_t>(std::find(dmask.begin(), dmask.end(), 1) - dmask.begin());
    std::deque<std::pair<int, int>> queue;
    queue.emplace_back(static_cast<int>(anchor % dg.nx), static_cast<int>(anchor / dg.nx));
    seen[anchor] = 1;
    while (!queue.empty())
    {
        const auto [i, j] = queue.front();
        queue.pop_front();
        const double here = values[dg.index(i, j)];
        auto visit = [&](int ni, int nj, double delta) {
            if (!dg.contains(ni, nj) || !dmask[dg.index(ni, nj)] || seen[dg.index(ni, nj)])
                return;
            seen[dg.index(ni, nj)] = 1;
            values[dg.index(ni, nj)] = here + delta;
            queue.emplace_back(ni, nj);
        };
        if (dg.contains(i + 1, j) && dmask[dg.index(i + 1, j)])
            visit(i + 1, j, inc.step_x(i, j));
        if (dg.contains(i - 1, j) && dmask[dg.index(i - 1, j)])
            visit(i - 1, j, -inc.step_x(i - 1, j));
        if (dg.contains(i, j + 1) && dmask[dg.index(i, j + 1)])
            visit(i, j + 1, inc.step_y(i, j));
        if (dg.contains(i, j - 1) && dmask[dg.index(i, j - 1)])
            visit(i, j - 1, -inc.step_y(i, j - 1));
    }
    return ScalarField(dg, std::move(values), std::move(dmask));
}

} // namespace

ScalarField minimal_residual(const ScalarField &f)
{
    return residual(f, Ambient::Euclidean);
}

ScalarField maximal_residual(const ScalarField &f)
{
    return residual(f, Ambient::Lorentzian);
}

ScalarField dual_curl(const ScalarField &f, Ambient source)
{
    const Grid &g = f.grid();
    const DualIncrements inc(f, source);
    std::vector<double> values(g.size(), 0.0);
    Mask mask(g.size(), 0);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
        {
            if (!all_plaquettes_full(f, i, j))
                continue;
            values[g.index(i, j)] = inc.circulation(i, j) / (g.h * g.h);
            mask[g.index(i, j)] = 1;
        }
    return ScalarField(g, std::move(values), std::move(mask));
}

ScalarField dualize_minimal_to_maximal(const ScalarField &f, double curl_tol)
{
    return dualize(f, Ambient::Euclidean, curl_tol);
}

ScalarField dualize_maximal_to_minimal(const ScalarField &f, double curl_tol)
{
    return dualize(f, Ambient::Lorentzian, curl_tol);
}

std::vector<SlopeBound> dual_slope_bounds(const ScalarField &primal, const ScalarField &dual_field, Ambient source)
{
    const Grid &dg = dual_field.grid();
    const double h = dg.h;
    std::vector<SlopeBound> out;
    auto bound = [&](const EdgeGradient &p) {
        const double q = p.fx * p.fx + p.fy * p.fy;
        return std::sqrt(q) / std::sqrt(source == Ambient::Euclidean ? 1.0 + q : 1.0 - q);
    };
    for (int j = 0; j < dg.ny; ++j)
        for (int i = 0; i < dg.nx; ++i)
        {
            if (!dual_field.in_mask(i, j))
                continue;
            if (dual_field.in_mask(i + 1, j))
            {
                const auto p = vertical_edge_gradient(primal, i + 1, j);
                if (p)
                    out.push_back({std::abs(dual_field.at(i + 1, j) - dual_field.at(i, j)) / h, bound(*p)});
            }
            if (dual_field.in_mask(i, j + 1))
            {
                const auto p = horizontal_edge_gradient(primal, i, j + 1);
                if (p)
                    out.push_back({std::abs(dual_field.at(i, j + 1) - dual_field.at(i, j)) / h, bound(*p)});
            }
        }
    return out;
}

} // namespace maxsurf
