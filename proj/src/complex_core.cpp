#include <maxsurf/complex_core.hpp>

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

namespace maxsurf
{

bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Polynomial::Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients))
{
    for (const Complex &c : coeffs_)
    {
        if (!is_finite(c))
            throw NonFiniteValue("polynomial coefficient is not finite");
    }
    trim();
}

Polynomial Polynomial::constant(Complex c)
{
    return Polynomial({c});
}

Polynomial Polynomial::identity()
{
    return Polynomial({Complex{0.0}, Complex{1.0}});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == Complex{})
        coeffs_.pop_back();
}

Complex Polynomial::operator()(Complex z) const noexcept
{
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const
{
    if (coeffs_.empty())
        return {};
    std::vector<Complex> a(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        a[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(a));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b)
{
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b)
{
    return a + Complex{-1.0} * b;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial &p)
{
    std::vector<Complex> c(p.coeffs_.begin(), p.coeffs_.end());
    for (Complex &v : c)
        v *= s;
    return Polynomial(std::move(c));
}

double winding_number(const Polynomial &p, double radius)
{
    if (p.is_zero())
        throw PoleInDomain("winding number of the zero polynomial is undefined");
    if (p.degree() == 0)
        return 0.0;

    double scale = 0.0;
    double rk = 1.0;
    for (const Complex &c : p.coefficients())
    {
        scale += std::abs(c) * rk;
        rk *= radius;
    }

    // Refine until every sampled argument increment is well below π, so the
    // accumulated argument is unambiguous.
    for (std::size_t samples = 256; samples <= (std::size_t{1} << 20); samples *= 2)
    {
        double total = 0.0;
        double max_step = 0.0;
        bool on_circle = false;
        Complex previous = p(Complex{radius, 0.0});
        for (std::size_t k = 1; k <= samples; ++k)
        {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
            const Complex current = p(std::polar(radius, theta));
            if (std::abs(current) < 1e-14 * scale)
            {
                on_circle = true;
                break;
            }
            const double step = std::arg(current / previous);
            max_step = std::max(max_step, std::abs(step));
            total += step;
            previous = current;
        }
        if (on_circle)
            throw PoleInDomain("polynomial vanishes on the certification circle");
        if (max_step < std::numbers::pi / 8.0)
            return total / (2.0 * std::numbers::pi);
    }
    throw PoleInDomain("argument principle did not resolve near the certification circle");
}

RationalHolomorphic::RationalHolomorphic(Unchecked, Polynomial numerator, Polynomial denominator,
                                         double validity_radius)
    : num_(std::move(numerator)), den_(std::move(denominator)), radius_(validity_radius)
{
}

RationalHolomorphic::RationalHolomorphic(Polynomial numerator, Polynomial denominator, double validity_radius)
    : RationalHolomorphic(Unchecked{}, std::move(numerator), std::move(denominator), validity_radius)
{
    if (!(radius_ > 0.0) || !std::isfinite(radius_))
        throw DomainError("validity radius must be positive and finite");
    if (den_.is_zero())
        throw PoleInDomain("denominator is identically zero");
    const double zeros = winding_number(den_, radius_);
    if (std::abs(zeros) >= 0.4)
        throw PoleInDomain("denominator has " + std::to_string(std::lround(zeros)) +
                           " zero(s) in the validity disk");
}

RationalHolomorphic RationalHolomorphic::constant(Complex c, double validity_radius)
{
    return RationalHolomorphic(Polynomial::constant(c), Polynomial::constant(1.0), validity_radius);
}

RationalHolomorphic RationalHolomorphic::polynomial(Polynomial p, double validity_radius)
{
    return RationalHolomorphic(std::move(p), Polynomial::constant(1.0), validity_radius);
}

Complex RationalHolomorphic::eval(Complex z) const
{
    if (!is_finite(z))
        throw NonFiniteValue("evaluation point is not finite");
    if (std::abs(z) > radius_ * (1.0 + 1e-12))
        throw DomainError("evaluation point outside the validity disk");
    const Complex q = den_(z);
    if (std::abs(q) < kPoleThreshold)
        throw PoleError("denominator vanishes at evaluation point");
    return num_(z) / q;
}

RationalHolomorphic RationalHolomorphic::derivative() const
{
    // Q has no zeros in the disk, so neither has Q^2.
    if (den_.degree() == 0)
        return RationalHolomorphic(Unchecked{}, num_.derivative(), den_, radius_);
    return RationalHolomorphic(Unchecked{}, num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_,
                               radius_);
}

RationalHolomorphic RationalHolomorphic::reciprocal() const
{
    return RationalHolomorphic(den_, num_, radius_);
}

RationalHolomorphic RationalHolomorphic::with_radius(double validity_radius) const
{
    if (validity_radius <= radius_)
    {
        if (!(validity_radius > 0.0))
            throw DomainError("validity radius must be positive");
        return RationalHolomorphic(Unchecked{}, num_, den_, validity_radius);
    }
    return RationalHolomorphic(num_, den_, validity_radius);
}

namespace
{
bool same_denominator(const Polynomial &a, const Polynomial &b)
{
    return a == b;
}
} // namespace

RationalHolomorphic operator+(const RationalHolomorphic &a, const RationalHolomorphic &b)
{
    const double r = std::min(a.radius_, b.radius_);
    if (same_denominator(a.den_, b.den_))
        return RationalHolomorphic(RationalHolomorphic::Unchecked{}, a.num_ + b.num_, a.den_, r);
    return RationalHolomorphic(RationalHolomorphic::Unchecked{}, a.num_ * b.den_ + b.num_ * a.den_,
                               a.den_ * b.den_, r);
}

RationalHolomorphic operator-(const RationalHolomorphic &a, const RationalHolomorphic &b)
{
    return a + Complex{-1.0} * b;
}

RationalHolomorphic operator*(const RationalHolomorphic &a, const RationalHolomorphic &b)
{
    return RationalHolomorphic(RationalHolomorphic::Unchecked{}, a.num_ * b.num_, a.den_ * b.den_,
                               std::min(a.radius_, b.radius_));
}

RationalHolomorphic operator*(Complex s, const RationalHolomorphic &f)
{
    return RationalHolomorphic(RationalHolomorphic::Unchecked{}, s * f.num_, f.den_, f.radius_);
}

double coefficient_distance(const RationalHolomorphic &a, const RationalHolomorphic &b)
{
    if (a.den_.degree() != b.den_.degree())
        return std::numeric_limits<double>::infinity();
    double d = 0.0;
    const auto n = std::max(a.num_.coefficients().size(), b.num_.coefficients().size());
    for (std::size_t k = 0; k < n; ++k)
        d = std::max(d, std::abs(a.num_.coefficient(k) - b.num_.coefficient(k)));
    for (std::size_t k = 0; k < a.den_.coefficients().size(); ++k)
        d = std::max(d, std::abs(a.den_.coefficient(k) - b.den_.coefficient(k)));
    return d;
}

Complex path_integrate(const HolomorphicForm &form, Complex a, Complex b, double tol)
{
    return path_integrate_many<1>({&form}, a, b, tol)[0];
}

} // namespace maxsurf
