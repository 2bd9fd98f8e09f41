#include <maxsurf/predicates.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace maxsurf
{

namespace
{
using boost::multiprecision::cpp_int;

struct Dyadic
{
    cpp_int mantissa;
    int exponent;
};

Dyadic to_dyadic(double x)
{
    if (x == 0.0)
        return {0, 0};
    int e = 0;
    const double f = std::frexp(x, &e);
    return {cpp_int(static_cast<long long>(std::ldexp(f, 53))), e - 53};
}

int exact_orient(Complex a, Complex b, Complex c)
{
    std::array<Dyadic, 6> v = {to_dyadic(a.real()), to_dyadic(a.imag()), to_dyadic(b.real()),
                               to_dyadic(b.imag()), to_dyadic(c.real()), to_dyadic(c.imag())};
    int lowest = 0;
    bool any = false;
    for (const auto &d : v)
    {
        if (d.mantissa == 0)
            continue;
        lowest = any ? std::min(lowest, d.exponent) : d.exponent;
        any = true;
    }
    std::array<cpp_int, 6> n;
    for (std::size_t k = 0; k < 6; ++k)
        n[k] = v[k].mantissa == 0 ? cpp_int(0) : cpp_int(v[k].mantissa << (v[k].exponent - lowest));
    const cpp_int det = (n[2] - n[0]) * (n[5] - n[1]) - (n[3] - n[1]) * (n[4] - n[0]);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

bool on_segment(Complex a, Complex b, Complex p)
{
    // p is collinear with a, b; check the bounding box.
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}
} // namespace

int orient2d(Complex a, Complex b, Complex c)
{
    const double left = (b.real() - a.real()) * (c.imag() - a.imag());
    const double right = (b.imag() - a.imag()) * (c.real() - a.real());
    const double det = left - right;
    const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
    if (det > bound)
        return 1;
    if (-det > bound)
        return -1;
    return exact_orient(a, b, c);
}

bool segments_intersect(Complex a, Complex b, Complex c, Complex d)
{
    const int o1 = orient2d(a, b, c);
    const int o2 = orient2d(a, b, d);
    const int o3 = orient2d(c, d, a);
    const int o4 = orient2d(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    if (o1 == 0 && on_segment(a, b, c))
        return true;
    if (o2 == 0 && on_segment(a, b, d))
        return true;
    if (o3 == 0 && on_segment(c, d, a))
        return true;
    if (o4 == 0 && on_segment(c, d, b))
        return true;
    return false;
}

} // namespace maxsurf
