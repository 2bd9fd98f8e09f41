#pragma once

#include <maxsurf/complex_core.hpp>

namespace maxsurf
{

/// Sign of the orientation determinant of (a, b, c) in the plane: +1 for a
/// counter-clockwise turn, -1 clockwise, 0 collinear. Exact: a floating-point
/// filter with an exact big-integer fallback.
int orient2d(Complex a, Complex b, Complex c);

/// Whether the closed segments [a, b] and [c, d] share a point.
bool segments_intersect(Complex a, Complex b, Complex c, Complex d);

/// Twice the signed area of triangle (a, b, c), in plain floating point.
inline double signed_area2(Complex a, Complex b, Complex c) noexcept
{
    return (b.real() - a.real()) * (c.imag() - a.imag()) - (b.imag() - a.imag()) * (c.real() - a.real());
}

} // namespace maxsurf
