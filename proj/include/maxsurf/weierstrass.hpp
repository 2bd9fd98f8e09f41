#pragma once

// Weierstrass data, isotropic curves and the immersions they integrate to.
//
// Stored isotropic forms are normalised so that X = X(z0) + Re ∫ Ψ; the
// conformal frame at w is then X_u = Re ψ(w), X_v = -Im ψ(w) where ψ is the
// density triple.

#include <maxsurf/complex_core.hpp>
#include <maxsurf/lorentz.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace maxsurf
{

enum class DataKind
{
    MaximalGraph,
    General
};

const char *to_string(DataKind kind) noexcept;

inline constexpr int kPolarAngularSamples = 64;
inline constexpr int kPolarRadialSamples = 16;
inline constexpr int kIsotropySamples = 32;
inline constexpr double kIsotropyTolerance = 1e-10;

/// Points of the closed disk used for sampled certification: a polar grid
/// with `angular` rays and `radial` rings (outermost ring on the boundary)
/// plus the centre.
std::vector<Complex> polar_samples(double radius, int angular = kPolarAngularSamples,
                                   int radial = kPolarRadialSamples);

/// Deterministic, roughly uniform points inside the disk (sunflower spiral).
std::vector<Complex> spiral_samples(double radius, int count);

/// (g, dh) on the disk |z| <= domain_radius, with base point and base value.
class WeierstrassData
{
public:
    WeierstrassData(RationalHolomorphic g, HolomorphicForm dh, double domain_radius, Complex base_point = {},
                    Point3 base_value = {}, DataKind kind = DataKind::MaximalGraph);

    /// Builds the dh-form from (g, η) by the exact product dh = g·η.
    static WeierstrassData from_g_eta(const RationalHolomorphic &g, const HolomorphicForm &eta,
                                      double domain_radius, Complex base_point = {}, Point3 base_value = {},
                                      DataKind kind = DataKind::MaximalGraph);

    const RationalHolomorphic &g() const noexcept { return g_; }
    const HolomorphicForm &dh() const noexcept { return dh_; }
    double domain_radius() const noexcept { return radius_; }
    Complex base_point() const noexcept { return base_point_; }
    const Point3 &base_value() const noexcept { return base_value_; }
    DataKind kind() const noexcept { return kind_; }

    /// min |g| over the 64×16 certification grid.
    double min_abs_g() const;

private:
    RationalHolomorphic g_;
    HolomorphicForm dh_;
    double radius_;
    Complex base_point_;
    Point3 base_value_;
    DataKind kind_;
};

/// Triple of holomorphic 1-forms with ⟨Ψ,Ψ⟩ = 0 in the complexified metric
/// of `ambient`. Construction checks isotropy at 32 sample points.
class IsotropicCurve
{
public:
    IsotropicCurve(std::array<HolomorphicForm, 3> components, Ambient ambient);

    const std::array<HolomorphicForm, 3> &components() const noexcept { return psi_; }
    const HolomorphicForm &operator[](std::size_t i) const { return psi_.at(i); }
    Ambient ambient() const noexcept { return ambient_; }
    double validity_radius() const noexcept;

    std::array<Complex, 3> eval(Complex z) const;

private:
    std::array<HolomorphicForm, 3> psi_;
    Ambient ambient_;
};

/// max over sample points of |Ψ1² + Ψ2² ∓ Ψ3²| / max_i |Ψi|².
double isotropy_residual(const std::array<HolomorphicForm, 3> &components, Ambient ambient, double radius,
                         int samples = kIsotropySamples);
double isotropy_residual(const IsotropicCurve &curve, double radius, int samples = kIsotropySamples);

/// Max coefficient difference over the three components.
double coefficient_distance(const IsotropicCurve &a, const IsotropicCurve &b);

/// Ψ = (½(1/g + g), (i/2)(1/g − g), −1) dh in L^3.
IsotropicCurve build_isotropic_maximal(const WeierstrassData &data);

/// Φ = (½(1/g − g), (i/2)(1/g + g), 1) dh in E^3.
IsotropicCurve build_isotropic_euclidean(const RationalHolomorphic &g, const HolomorphicForm &dh);

/// Ψ* = −iΨ, coefficientwise.
IsotropicCurve conjugate_curve(const IsotropicCurve &curve);

struct Frame
{
    Tangent3 xu;
    Tangent3 xv;
};

struct ImmersionValue
{
    Point3 x;
    Point3 conjugate;
};

/// X(w) = base_value + Re ∫_{base_point}^{w} Ψ on |w| <= domain_radius.
class Immersion
{
public:
    Immersion(IsotropicCurve curve, Complex base_point, Point3 base_value, double domain_radius);

    const IsotropicCurve &curve() const noexcept { return curve_; }
    Complex base_point() const noexcept { return base_point_; }
    const Point3 &base_value() const noexcept { return base_value_; }
    double domain_radius() const noexcept { return radius_; }
    Ambient ambient() const noexcept { return curve_.ambient(); }

    void require_in_domain(Complex w) const;

    /// ∫_{a}^{b} Ψ componentwise along the segment.
    std::array<Complex, 3> integrate(Complex a, Complex b, double tol = kDefaultTol) const;

private:
    IsotropicCurve curve_;
    Complex base_point_;
    Point3 base_value_;
    double radius_;
};

/// The maximal immersion of the data, built with build_isotropic_maximal.
Immersion maximal_immersion(const WeierstrassData &data);

Point3 immerse(const Immersion &im, Complex w, double tol = kDefaultTol);
/// X*(w) = Im ∫_{base_point}^{w} Ψ, pinned to 0 at the base point.
Point3 conjugate_immerse(const Immersion &im, Complex w, double tol = kDefaultTol);
/// X(w) and X*(w) from one integration.
ImmersionValue immerse_both(const Immersion &im, Complex w, double tol = kDefaultTol);

/// (X_u, X_v) by exact evaluation of the density triple.
Frame differential(const Immersion &im, Complex w);

/// dX(a ∂u + b ∂v).
Tangent3 apply(const Frame &frame, double a, double b);

/// N = μ^{-1}(g(w)).
Point3 gauss_map(const WeierstrassData &data, Complex w);

/// σ(w) = −∫ (g/2) dh, τ(w) = ∫ dh/(2g), both from the base point.
std::pair<Complex, Complex> sigma_tau(const WeierstrassData &data, Complex w, double tol = kDefaultTol);

struct ProjectionIdentities
{
    Complex pi_x;                      // π(X(w) − X(z0))
    Complex pi_xstar;                  // π(X*(w))
    Complex tau_bar_minus_sigma;       // τ̄ − σ
    Complex i_tau_bar_plus_sigma;      // i(τ̄ + σ)
};

ProjectionIdentities projection_identities(const WeierstrassData &data, Complex w, double tol = kDefaultTol);

} // namespace maxsurf
