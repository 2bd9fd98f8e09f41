#include <maxsurf/lorentz.hpp>

#include <cmath>

namespace maxsurf
{

const char *to_string(Ambient ambient) noexcept
{
    return ambient == Ambient::Euclidean ? "euclidean" : "lorentzian";
}

const char *to_string(CausalCharacter c) noexcept
{
    switch (c)
    {
    case CausalCharacter::Spacelike:
        return "spacelike";
    case CausalCharacter::Timelike:
        return "timelike";
    case CausalCharacter::Lightlike:
        return "lightlike";
    }
    return "?";
}

namespace
{
void require_same(const Vec3 &a, const Vec3 &b)
{
    if (a.ambient != b.ambient)
        throw AmbientMismatch("operands live in different ambient spaces");
}

void require_lorentzian(const Vec3 &v)
{
    if (v.ambient != Ambient::Lorentzian)
        throw AmbientMismatch("operation is defined only in Lorentz-Minkowski space");
}
} // namespace

Vec3 operator+(const Vec3 &a, const Vec3 &b)
{
    require_same(a, b);
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.ambient};
}

Vec3 operator-(const Vec3 &a, const Vec3 &b)
{
    require_same(a, b);
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.ambient};
}

Vec3 operator-(const Vec3 &a)
{
    return {-a.x1, -a.x2, -a.x3, a.ambient};
}

Vec3 operator*(double s, const Vec3 &v)
{
    return {s * v.x1, s * v.x2, s * v.x3, v.ambient};
}

double euclidean_norm(const Vec3 &v) noexcept
{
    return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3);
}

double det3(const Vec3 &a, const Vec3 &b, const Vec3 &c) noexcept
{
    return a.x1 * (b.x2 * c.x3 - b.x3 * c.x2) - a.x2 * (b.x1 * c.x3 - b.x3 * c.x1) +
           a.x3 * (b.x1 * c.x2 - b.x2 * c.x1);
}

double inner(const Vec3 &u, const Vec3 &v)
{
    require_same(u, v);
    const double third = u.x3 * v.x3;
    return u.x1 * v.x1 + u.x2 * v.x2 + (u.ambient == Ambient::Lorentzian ? -third : third);
}

CausalCharacter causal_character(const Vec3 &v)
{
    require_lorentzian(v);
    const double q = inner(v, v);
    if (std::abs(q) < kCausalBand)
        return CausalCharacter::Lightlike;
    return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

Vec3 cross_lorentz(const Vec3 &u, const Vec3 &v)
{
    require_lorentzian(u);
    require_lorentzian(v);
    return {u.x3 * v.x2 - u.x2 * v.x3, u.x1 * v.x3 - u.x3 * v.x1, u.x1 * v.x2 - u.x2 * v.x1, Ambient::Lorentzian};
}

Vec3 cross_euclidean(const Vec3 &u, const Vec3 &v)
{
    require_same(u, v);
    if (u.ambient != Ambient::Euclidean)
        throw AmbientMismatch("Euclidean cross product on Lorentzian vectors");
    return {u.x2 * v.x3 - u.x3 * v.x2, u.x3 * v.x1 - u.x1 * v.x3, u.x1 * v.x2 - u.x2 * v.x1, Ambient::Euclidean};
}

Point3 stereo_inv(Complex z)
{
    if (!is_finite(z))
        throw NonFiniteValue("stereo_inv: non-finite argument");
    const double r2 = std::norm(z);
    const double d = r2 - 1.0;
    if (std::abs(d) < 1e-12)
        throw EquatorError("stereo_inv: |z| = 1 has no image on the hyperboloid");
    return {-2.0 * z.real() / d, -2.0 * z.imag() / d, (r2 + 1.0) / d, Ambient::Lorentzian};
}

Complex stereo(const Point3 &p)
{
    require_lorentzian(p);
    if (std::abs(inner(p, p) + 1.0) > 1e-8)
        throw OffHyperboloid("stereo: point is not on <x,x> = -1");
    const double d = p.x3 - 1.0;
    if (std::abs(d) < 1e-12)
        throw NorthPole("stereo: projection centre has no image");
    return {-p.x1 / d, -p.x2 / d};
}

} // namespace maxsurf
