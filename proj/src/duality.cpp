#include <maxsurf/duality.hpp>

namespace maxsurf
{

namespace
{
IsotropicCurve twist_third(const IsotropicCurve &curve, Complex factor, Ambient target)
{
    const auto &c = curve.components();
    return IsotropicCurve({c[0], c[1], factor * c[2]}, target);
}
} // namespace

IsotropicCurve flat(const IsotropicCurve &euclidean)
{
    if (euclidean.ambient() != Ambient::Euclidean)
        throw AmbientMismatch("flat expects a Euclidean isotropic curve");
    return twist_third(euclidean, Complex{0.0, -1.0}, Ambient::Lorentzian);
}

IsotropicCurve sharp(const IsotropicCurve &lorentzian)
{
    if (lorentzian.ambient() != Ambient::Lorentzian)
        throw AmbientMismatch("sharp expects a Lorentzian isotropic curve");
    return twist_third(lorentzian, Complex{0.0, 1.0}, Ambient::Euclidean);
}

IsotropicCurve dual(const IsotropicCurve &curve)
{
    return curve.ambient() == Ambient::Euclidean ? flat(curve) : sharp(curve);
}

Immersion dual_immersion(const Immersion &im)
{
    Point3 base = im.base_value();
    base.ambient = im.ambient() == Ambient::Euclidean ? Ambient::Lorentzian : Ambient::Euclidean;
    return Immersion(dual(im.curve()), im.base_point(), base, im.domain_radius());
}

double check_commutation(const IsotropicCurve &curve)
{
    return coefficient_distance(conjugate_curve(dual(curve)), dual(conjugate_curve(curve)));
}

} // namespace maxsurf
