#pragma once

// Linear algebra of E^3 (dx1^2 + dx2^2 + dx3^2) and L^3 (dx1^2 + dx2^2 - dx3^2).

#include <maxsurf/complex_core.hpp>

namespace maxsurf
{

enum class Ambient
{
    Euclidean,
    Lorentzian
};

const char *to_string(Ambient ambient) noexcept;

enum class CausalCharacter
{
    Spacelike,
    Timelike,
    Lightlike
};

const char *to_string(CausalCharacter c) noexcept;

inline constexpr double kCausalBand = 1e-12;

/// A point or tangent vector of R^3 tagged with the ambient metric it lives in.
struct Vec3
{
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    Ambient ambient = Ambient::Lorentzian;

    friend bool operator==(const Vec3 &, const Vec3 &) = default;
};

using Point3 = Vec3;
using Tangent3 = Vec3;

Vec3 operator+(const Vec3 &a, const Vec3 &b);
Vec3 operator-(const Vec3 &a, const Vec3 &b);
Vec3 operator-(const Vec3 &a);
Vec3 operator*(double s, const Vec3 &v);

/// Orthogonal projection onto the x1x2-plane, as a complex number x1 + i x2.
inline Complex project(const Vec3 &v) noexcept { return {v.x1, v.x2}; }

/// Euclidean length regardless of ambient, used for residuals.
double euclidean_norm(const Vec3 &v) noexcept;

double det3(const Vec3 &a, const Vec3 &b, const Vec3 &c) noexcept;

/// u1v1 + u2v2 ± u3v3 (minus in L^3). Throws AmbientMismatch on mixed input.
double inner(const Vec3 &u, const Vec3 &v);

/// Sign of inner(v, v) with a zero band of kCausalBand. Lorentzian only.
CausalCharacter causal_character(const Vec3 &v);

/// Lorentzian vector product, characterised by <u × v, z> = -det(u, v, z)
/// for every z. With this orientation the upward unit normal N of a
/// conformal spacelike frame satisfies N = λ (X_u × X_v), λ > 0, and
/// N × X_u = -X_v, N × X_v = X_u.
Vec3 cross_lorentz(const Vec3 &u, const Vec3 &v);

Vec3 cross_euclidean(const Vec3 &u, const Vec3 &v);

/// Inverse stereographic projection from (0,0,1) onto the hyperboloid
/// <x, x> = -1. |z| > 1 lands on the upper sheet, |z| < 1 on the lower one.
Point3 stereo_inv(Complex z);

/// Inverse of stereo_inv. Throws OffHyperboloid / NorthPole.
Complex stereo(const Point3 &p);

} // namespace maxsurf
