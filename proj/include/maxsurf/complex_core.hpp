#pragma once

// Rational holomorphic functions on a closed disk |z| <= R and adaptive
// Gauss-Kronrod integration of holomorphic 1-forms along straight segments.

#include <maxsurf/errors.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace maxsurf
{

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kPoleThreshold = 1e-14;
inline constexpr int kMaxBisectionDepth = 40;

bool is_finite(Complex z) noexcept;

/// Dense polynomial with complex coefficients in ascending degree. Trailing
/// exact zeros are dropped so the zero polynomial has no coefficients.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coefficients);

    static Polynomial constant(Complex c);
    /// The identity polynomial z.
    static Polynomial identity();

    std::span<const Complex> coefficients() const noexcept { return coeffs_; }
    Complex coefficient(std::size_t k) const noexcept
    {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Complex operator()(Complex z) const noexcept;

    Polynomial derivative() const;
    /// Coefficient-shift antiderivative with zero constant term.
    Polynomial antiderivative() const;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Complex s, const Polynomial &p);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void trim();

    std::vector<Complex> coeffs_;
};

/// Number of zeros of `p` inside the circle |z| = radius, computed from the
/// accumulated argument of p along the circle (argument principle). The
/// result is the raw real-valued integral (1/2πi)∮p'/p dz; callers compare
/// it against an integer with their own band. Throws PoleInDomain if p
/// vanishes on the circle itself.
double winding_number(const Polynomial &p, double radius);

/// f = P/Q on the closed disk |z| <= validity_radius. Construction certifies
/// that Q has no zero there; every value of this type is pole-free on its disk.
class RationalHolomorphic
{
public:
    RationalHolomorphic(Polynomial numerator, Polynomial denominator, double validity_radius);

    static RationalHolomorphic constant(Complex c, double validity_radius);
    static RationalHolomorphic polynomial(Polynomial p, double validity_radius);

    const Polynomial &numerator() const noexcept { return num_; }
    const Polynomial &denominator() const noexcept { return den_; }
    double validity_radius() const noexcept { return radius_; }

    /// Horner evaluation of P(z)/Q(z).
    Complex eval(Complex z) const;
    Complex operator()(Complex z) const { return eval(z); }

    /// Exact quotient-rule derivative (P'Q - PQ')/Q^2.
    RationalHolomorphic derivative() const;
    /// Q/P on the same disk; throws PoleInDomain if P has a zero there.
    RationalHolomorphic reciprocal() const;
    RationalHolomorphic with_radius(double validity_radius) const;

    friend RationalHolomorphic operator+(const RationalHolomorphic &a, const RationalHolomorphic &b);
    friend RationalHolomorphic operator-(const RationalHolomorphic &a, const RationalHolomorphic &b);
    friend RationalHolomorphic operator*(const RationalHolomorphic &a, const RationalHolomorphic &b);
    friend RationalHolomorphic operator*(Complex s, const RationalHolomorphic &f);

    /// Max absolute coefficient difference; infinite if the denominators
    /// have different degrees. Intended for coefficient-exact comparisons.
    friend double coefficient_distance(const RationalHolomorphic &a, const RationalHolomorphic &b);

private:
    struct Unchecked
    {
    };
    RationalHolomorphic(Unchecked, Polynomial numerator, Polynomial denominator, double validity_radius);

    Polynomial num_;
    Polynomial den_;
    double radius_ = 1.0;
};

/// The holomorphic 1-form density(z) dz.
class HolomorphicForm
{
public:
    explicit HolomorphicForm(RationalHolomorphic density) : density_(std::move(density)) {}

    const RationalHolomorphic &density() const noexcept { return density_; }
    double validity_radius() const noexcept { return density_.validity_radius(); }
    Complex eval(Complex z) const { return density_.eval(z); }

    friend HolomorphicForm operator*(Complex s, const HolomorphicForm &w)
    {
        return HolomorphicForm(s * w.density_);
    }

private:
    RationalHolomorphic density_;
};

namespace detail
{

// Gauss-Kronrod 7-15 abscissae on [-1, 1] (positive half) and weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Panel
{
    std::array<Complex, N> kronrod{};
    double error = 0.0;
};

template <std::size_t N, class F>
Panel<N> gauss_kronrod_panel(const F &f, double t0, double t1)
{
    const double centre = 0.5 * (t0 + t1);
    const double half = 0.5 * (t1 - t0);
    std::array<Complex, N> kronrod{};
    std::array<Complex, N> gauss{};

    auto accumulate = [&](double t, double wk, double wg) {
        const std::array<Complex, N> v = f(t);
        for (std::size_t c = 0; c < N; ++c)
        {
            kronrod[c] += wk * v[c];
            gauss[c] += wg * v[c];
        }
    };

    accumulate(centre, kKronrodWeights[7], kGaussWeights[3]);
    for (std::size_t k = 0; k < 7; ++k)
    {
        const double dx = half * kKronrodNodes[k];
        const double wg = (k % 2 == 1) ? kGaussWeights[k / 2] : 0.0;
        accumulate(centre - dx, kKronrodWeights[k], wg);
        accumulate(centre + dx, kKronrodWeights[k], wg);
    }

    Panel<N> panel;
    for (std::size_t c = 0; c < N; ++c)
    {
        panel.kronrod[c] = half * kronrod[c];
        panel.error = std::max(panel.error, std::abs(half * (kronrod[c] - gauss[c])));
    }
    return panel;
}

template <std::size_t N, class F>
void adaptive_panels(const F &f, double t0, double t1, const Panel<N> &whole, double tol, int depth,
                     std::array<Complex, N> &sum)
{
    double magnitude = 0.0;
    for (const Complex &v : whole.kronrod)
        magnitude = std::max(magnitude, std::abs(v));
    // Below ~50 ulp of the panel value the estimate is pure rounding noise.
    if (whole.error <= tol || whole.error <= 50.0 * 2.2e-16 * magnitude)
    {
        for (std::size_t c = 0; c < N; ++c)
            sum[c] += whole.kronrod[c];
        return;
    }
    if (depth >= kMaxBisectionDepth)
        throw ToleranceError("adaptive Gauss-Kronrod: bisection depth limit reached");

    const double mid = 0.5 * (t0 + t1);
    const Panel<N> left = gauss_kronrod_panel<N>(f, t0, mid);
    const Panel<N> right = gauss_kronrod_panel<N>(f, mid, t1);
    adaptive_panels<N>(f, t0, mid, left, 0.5 * tol, depth + 1, sum);
    adaptive_panels<N>(f, mid, t1, right, 0.5 * tol, depth + 1, sum);
}

} // namespace detail

/// Integrates several forms simultaneously along the segment [a, b] sharing
/// one adaptive subdivision. The error bound applies componentwise.
template <std::size_t N>
std::array<Complex, N> path_integrate_many(const std::array<const HolomorphicForm *, N> &forms, Complex a,
                                           Complex b, double tol = kDefaultTol)
{
    if (!(tol > 0.0))
        throw DomainError("path_integrate: tol must be positive");
    for (const HolomorphicForm *form : forms)
    {
        const double r = form->validity_radius() * (1.0 + 1e-12);
        if (std::abs(a) > r || std::abs(b) > r)
            throw DomainError("path_integrate: segment leaves the validity disk");
    }
    std::array<Complex, N> sum{};
    if (a == b)
        return sum;

    const Complex direction = b - a;
    auto integrand = [&](double t) {
        const Complex z = a + t * direction;
        std::array<Complex, N> v;
        for (std::size_t c = 0; c < N; ++c)
            v[c] = forms[c]->eval(z) * direction;
        return v;
    };
    const auto whole = detail::gauss_kronrod_panel<N>(integrand, 0.0, 1.0);
    detail::adaptive_panels<N>(integrand, 0.0, 1.0, whole, tol, 0, sum);
    return sum;
}

/// ∫ over the straight segment [a, b] of the form, absolute error <= tol.
Complex path_integrate(const HolomorphicForm &form, Complex a, Complex b, double tol = kDefaultTol);

} // namespace maxsurf
