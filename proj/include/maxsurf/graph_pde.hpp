#pragma once

// Graph-side duality between minimal graphs of E^3 and maximal graphs of
// L^3 on gridded fields.
//
// Discretisation. f lives on the nodes (x0 + i h, y0 + j h). Gradients used
// in fluxes live on edge midpoints: the along-edge component is the edge
// difference, the across-edge component averages the two adjacent
// plaquettes. The divergence residual at a node sums the four edge fluxes.
// A dual field lives on plaquette centres; its increment across a primal
// edge is h times the rotated flux through that edge, so its circulation
// around the dual cell of a node is exactly h^2 times the residual there.

#include <maxsurf/errors.hpp>
#include <maxsurf/lorentz.hpp>

#include <cstdint>
#include <vector>

namespace maxsurf
{

struct Grid
{
    double x0 = 0.0;
    double y0 = 0.0;
    double h = 1.0;
    int nx = 0;
    int ny = 0;

    std::size_t size() const noexcept { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
    std::size_t index(int i, int j) const noexcept
    {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
    }
    bool contains(int i, int j) const noexcept { return i >= 0 && j >= 0 && i < nx && j < ny; }
    double x(int i) const noexcept { return x0 + h * i; }
    double y(int j) const noexcept { return y0 + h * j; }

    /// Grid of plaquette centres.
    Grid dual() const noexcept { return {x0 + 0.5 * h, y0 + 0.5 * h, h, nx - 1, ny - 1}; }

    friend bool operator==(const Grid &, const Grid &) = default;
};

using Mask = std::vector<std::uint8_t>;

struct MaskTopology
{
    int components = 0;
    long euler = 0; // V - E + F of the node/edge/plaquette complex

    bool simply_connected() const noexcept { return components == 1 && euler == 1; }
};

MaskTopology mask_topology(const Grid &grid, const Mask &mask);

/// Gridded scalar function with a domain mask. Values off the mask are
/// ignored (stored as 0).
class ScalarField
{
public:
    ScalarField(Grid grid, std::vector<double> values, Mask mask);

    const Grid &grid() const noexcept { return grid_; }
    const std::vector<double> &values() const noexcept { return values_; }
    const Mask &mask() const noexcept { return mask_; }

    bool in_mask(int i, int j) const noexcept { return grid_.contains(i, j) && mask_[grid_.index(i, j)] != 0; }
    double at(int i, int j) const noexcept { return values_[grid_.index(i, j)]; }
    std::size_t masked_count() const noexcept;

    /// max |value| on the mask.
    double max_abs() const noexcept;

    /// Throws NotSimplyConnected unless the mask is one 4-connected,
    /// hole-free component.
    void require_simply_connected() const;

private:
    Grid grid_;
    std::vector<double> values_;
    Mask mask_;
};

/// Samples fn(x, y) on the nodes where inside(x, y) holds.
template <class Fn, class Inside>
ScalarField sample_field(const Grid &grid, Fn fn, Inside inside)
{
    std::vector<double> values(grid.size(), 0.0);
    Mask mask(grid.size(), 0);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
        {
            const double x = grid.x(i);
            const double y = grid.y(j);
            if (inside(x, y))
            {
                values[grid.index(i, j)] = fn(x, y);
                mask[grid.index(i, j)] = 1;
            }
        }
    return ScalarField(grid, std::move(values), std::move(mask));
}

struct VectorField2
{
    Grid grid;
    std::vector<double> w1;
    std::vector<double> w2;
    Mask mask;
};

/// Central differences in the interior, one-sided where a neighbour is
/// missing. Throws DegenerateMask when a masked node has no neighbour along
/// some axis.
VectorField2 gradient(const ScalarField &f);

/// div(Df/√(1+|Df|²)) on nodes whose four surrounding plaquettes are full.
ScalarField minimal_residual(const ScalarField &f);

/// div(Df/√(1−|Df|²)); throws NotSpacelike if |Df| >= 1 on a flux edge.
ScalarField maximal_residual(const ScalarField &f);

/// Circulation of the rotated normalised gradient around each dual cell,
/// divided by h². `source` selects the normaliser: Euclidean for a minimal
/// graph (the ♭ field), Lorentzian for a maximal graph (the ♯ field).
ScalarField dual_curl(const ScalarField &f, Ambient source);

/// f^♭ with Df^♭ = (−f_y, f_x)/√(1+|Df|²), on the plaquette-centre grid,
/// anchored to 0 at the lowest-index full plaquette. Throws CurlError if the
/// dual curl exceeds curl_tol anywhere.
ScalarField dualize_minimal_to_maximal(const ScalarField &f, double curl_tol);

/// f^♯ with Df^♯ = (f_y, −f_x)/√(1−|Df|²), the inverse of the ♭ map.
ScalarField dualize_maximal_to_minimal(const ScalarField &f, double curl_tol);

/// Slopes |Δf/h| of a dual field across each of its grid edges, paired with
/// the bound |Df_e|/√(1 ± |Df_e|²) from the primal edge it crosses.
struct SlopeBound
{
    double slope;
    double bound;
};
std::vector<SlopeBound> dual_slope_bounds(const ScalarField &primal, const ScalarField &dual_field, Ambient source);

} // namespace maxsurf
