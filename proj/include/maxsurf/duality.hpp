#pragma once

// Isotropic-curve duality between minimal surfaces of E^3 and maximal
// surfaces of L^3: the third component is twisted by ∓i.

#include <maxsurf/weierstrass.hpp>

namespace maxsurf
{

/// (Φ1, Φ2, Φ3) ↦ (Φ1, Φ2, −iΦ3), E^3 → L^3.
IsotropicCurve flat(const IsotropicCurve &euclidean);

/// (Ψ1, Ψ2, Ψ3) ↦ (Ψ1, Ψ2, iΨ3), L^3 → E^3.
IsotropicCurve sharp(const IsotropicCurve &lorentzian);

/// The dual of either ambient: flat for Euclidean input, sharp otherwise.
IsotropicCurve dual(const IsotropicCurve &curve);

/// Immersion of the dual curve with the same base point and base value.
Immersion dual_immersion(const Immersion &im);

/// Max coefficient discrepancy between conj(dual(c)) and dual(conj(c)).
double check_commutation(const IsotropicCurve &curve);

} // namespace maxsurf
