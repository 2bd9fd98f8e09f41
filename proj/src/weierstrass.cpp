#include <maxsurf/weierstrass.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace maxsurf
{

const char *to_string(DataKind kind) noexcept
{
    return kind == DataKind::MaximalGraph ? "maximal-graph" : "general";
}

std::vector<Complex> polar_samples(double radius, int angular, int radial)
{
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(angular * radial + 1));
    pts.emplace_back(0.0, 0.0);
    for (int k = 1; k <= radial; ++k)
    {
        const double r = radius * static_cast<double>(k) / radial;
        for (int j = 0; j < angular; ++j)
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angular));
    }
    return pts;
}

std::vector<Complex> spiral_samples(double radius, int count)
{
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
    {
        const double r = radius * std::sqrt((k + 0.5) / count);
        pts.push_back(std::polar(r, golden * k));
    }
    return pts;
}

WeierstrassData::WeierstrassData(RationalHolomorphic g, HolomorphicForm dh, double domain_radius,
                                 Complex base_point, Point3 base_value, DataKind kind)
    : g_(std::move(g)), dh_(std::move(dh)), radius_(domain_radius), base_point_(base_point),
      base_value_(base_value), kind_(kind)
{
    if (!(radius_ > 0.0) || !std::isfinite(radius_))
        throw InvalidData("domain radius must be positive");
    if (radius_ > g_.validity_radius() || radius_ > dh_.validity_radius())
        throw InvalidData("domain radius exceeds the validity radius of g or dh");
    if (!is_finite(base_point_) || std::abs(base_point_) > radius_)
        throw InvalidData("base point outside the domain disk");
    if (!std::isfinite(base_value_.x1) || !std::isfinite(base_value_.x2) || !std::isfinite(base_value_.x3))
        throw InvalidData("base value is not finite");
    base_value_.ambient = Ambient::Lorentzian;

    // With g finite and nonzero on the disk, Ψ3 = -dh vanishes exactly where
    // all of Ψ vanishes, so common zeros are the zeros of dh's numerator.
    try
    {
        if (std::abs(winding_number(dh_.density().numerator(), radius_)) >= 0.4)
            throw CommonZeroError("dh has zeros in the domain disk (common zeros of the Weierstrass triple)");
    }
    catch (const PoleInDomain &)
    {
        throw CommonZeroError("dh vanishes identically or on the domain boundary");
    }

    if (kind_ == DataKind::MaximalGraph && !(min_abs_g() > 1.0 + 1e-9))
        throw InvalidData("maximal-graph datum requires |g| > 1 on the domain disk");
}

WeierstrassData WeierstrassData::from_g_eta(const RationalHolomorphic &g, const HolomorphicForm &eta,
                                            double domain_radius, Complex base_point, Point3 base_value,
                                            DataKind kind)
{
    return WeierstrassData(g, HolomorphicForm(g * eta.density()), domain_radius, base_point, base_value, kind);
}

double WeierstrassData::min_abs_g() const
{
    double m = std::numeric_limits<double>::infinity();
    for (const Complex &z : polar_samples(radius_))
        m = std::min(m, std::abs(g_.eval(z)));
    return m;
}

IsotropicCurve::IsotropicCurve(std::array<HolomorphicForm, 3> components, Ambient ambient)
    : psi_(std::move(components)), ambient_(ambient)
{
    const double residual = isotropy_residual(psi_, ambient_, validity_radius());
    if (!(residual < kIsotropyTolerance))
        throw NotIsotropic("curve fails the isotropy check (residual " + std::to_string(residual) + ")");
}

double IsotropicCurve::validity_radius() const noexcept
{
    return std::min({psi_[0].validity_radius(), psi_[1].validity_radius(), psi_[2].validity_radius()});
}

std::array<Complex, 3> IsotropicCurve::eval(Complex z) const
{
    return {psi_[0].eval(z), psi_[1].eval(z), psi_[2].eval(z)};
}

double isotropy_residual(const std::array<HolomorphicForm, 3> &components, Ambient ambient, double radius,
                         int samples)
{
    const double sign = ambient == Ambient::Lorentzian ? -1.0 : 1.0;
    double worst = 0.0;
    for (const Complex &z : spiral_samples(radius, samples))
    {
        const Complex a = components[0].eval(z);
        const Complex b = components[1].eval(z);
        const Complex c = components[2].eval(z);
        const double scale = std::max({std::norm(a), std::norm(b), std::norm(c)});
        if (scale == 0.0)
            continue;
        worst = std::max(worst, std::abs(a * a + b * b + sign * c * c) / scale);
    }
    return worst;
}

double isotropy_residual(const IsotropicCurve &curve, double radius, int samples)
{
    return isotropy_residual(curve.components(), curve.ambient(), radius, samples);
}

double coefficient_distance(const IsotropicCurve &a, const IsotropicCurve &b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        d = std::max(d, coefficient_distance(a[i].density(), b[i].density()));
    return d;
}

IsotropicCurve build_isotropic_maximal(const WeierstrassData &data)
{
    const RationalHolomorphic &g = data.g();
    const RationalHolomorphic inv = g.reciprocal();
    const RationalHolomorphic &dh = data.dh().density();
    const Complex half{0.5, 0.0};
    const Complex half_i{0.0, 0.5};
    return IsotropicCurve({HolomorphicForm(half * ((inv + g) * dh)), HolomorphicForm(half_i * ((inv - g) * dh)),
                           HolomorphicForm(Complex{-1.0} * dh)},
                          Ambient::Lorentzian);
}

IsotropicCurve build_isotropic_euclidean(const RationalHolomorphic &g, const HolomorphicForm &dh)
{
    const RationalHolomorphic inv = g.reciprocal();
    const RationalHolomorphic &h = dh.density();
    const Complex half{0.5, 0.0};
    const Complex half_i{0.0, 0.5};
    return IsotropicCurve({HolomorphicForm(half * ((inv - g) * h)), HolomorphicForm(half_i * ((inv + g) * h)),
                           HolomorphicForm(h)},
                          Ambient::Euclidean);
}

IsotropicCurve conjugate_curve(const IsotropicCurve &curve)
{
    const Complex minus_i{0.0, -1.0};
    return IsotropicCurve({minus_i * curve[0], minus_i * curve[1], minus_i * curve[2]}, curve.ambient());
}

Immersion::Immersion(IsotropicCurve curve, Complex base_point, Point3 base_value, double domain_radius)
    : curve_(std::move(curve)), base_point_(base_point), base_value_(base_value), radius_(domain_radius)
{
    if (!(radius_ > 0.0) || radius_ > curve_.validity_radius())
        throw InvalidData("immersion domain exceeds the validity disk of its curve");
    if (std::abs(base_point_) > radius_)
        throw InvalidData("base point outside the immersion domain");
    base_value_.ambient = curve_.ambient();
}

void Immersion::require_in_domain(Complex w) const
{
    if (!is_finite(w) || std::abs(w) > radius_ * (1.0 + 1e-12))
        throw DomainError("parameter outside the immersion domain");
}

std::array<Complex, 3> Immersion::integrate(Complex a, Complex b, double tol) const
{
    require_in_domain(a);
    require_in_domain(b);
    const auto &c = curve_.components();
    return path_integrate_many<3>({&c[0], &c[1], &c[2]}, a, b, tol);
}

Immersion maximal_immersion(const WeierstrassData &data)
{
    return Immersion(build_isotropic_maximal(data), data.base_point(), data.base_value(), data.domain_radius());
}

ImmersionValue immerse_both(const Immersion &im, Complex w, double tol)
{
    const auto integral = im.integrate(im.base_point(), w, tol);
    const Ambient amb = im.ambient();
    const Point3 re{integral[0].real(), integral[1].real(), integral[2].real(), amb};
    const Point3 imag{integral[0].imag(), integral[1].imag(), integral[2].imag(), amb};
    return {im.base_value() + re, imag};
}

Point3 immerse(const Immersion &im, Complex w, double tol)
{
    return immerse_both(im, w, tol).x;
}

Point3 conjugate_immerse(const Immersion &im, Complex w, double tol)
{
    return immerse_both(im, w, tol).conjugate;
}

Frame differential(const Immersion &im, Complex w)
{
    im.require_in_domain(w);
    const auto psi = im.curve().eval(w);
    const Ambient amb = im.ambient();
    return {{psi[0].real(), psi[1].real(), psi[2].real(), amb}, {-psi[0].imag(), -psi[1].imag(), -psi[2].imag(), amb}};
}

Tangent3 apply(const Frame &frame, double a, double b)
{
    return a * frame.xu + b * frame.xv;
}

Point3 gauss_map(const WeierstrassData &data, Complex w)
{
    if (std::abs(w) > data.domain_radius() * (1.0 + 1e-12))
        throw DomainError("gauss_map: parameter outside the domain");
    return stereo_inv(data.g().eval(w));
}

std::pair<Complex, Complex> sigma_tau(const WeierstrassData &data, Complex w, double tol)
{
    if (std::abs(w) > data.domain_radius() * (1.0 + 1e-12))
        throw DomainError("sigma_tau: parameter outside the domain");
    const RationalHolomorphic &dh = data.dh().density();
    const HolomorphicForm sigma_form(Complex{-0.5} * (data.g() * dh));
    const HolomorphicForm tau_form(Complex{0.5} * (data.g().reciprocal() * dh));
    const auto v = path_integrate_many<2>({&sigma_form, &tau_form}, data.base_point(), w, tol);
    return {v[0], v[1]};
}

ProjectionIdentities projection_identities(const WeierstrassData &data, Complex w, double tol)
{
    const Immersion im = maximal_immersion(data);
    const ImmersionValue value = immerse_both(im, w, tol);
    const auto [sigma, tau] = sigma_tau(data, w, tol);
    const Complex i{0.0, 1.0};
    return {project(value.x - data.base_value()), project(value.conjugate), std::conj(tau) - sigma,
            i * (std::conj(tau) + sigma)};
}

} // namespace maxsurf
