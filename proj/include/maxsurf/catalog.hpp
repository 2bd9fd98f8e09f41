#pragma once

// Built-in maximal-graph data: constant, polynomial and rational g, each on
// two domain radii. All entries use dh = dz and base point 0 ↦ 0.

#include <maxsurf/weierstrass.hpp>

#include <string>
#include <vector>

namespace maxsurf
{

struct CatalogEntry
{
    std::string name;
    WeierstrassData data;
};

std::vector<CatalogEntry> surface_catalog();

/// Throws InputError for unknown names.
WeierstrassData catalog_datum(const std::string &name);

/// g ≡ c, dh = dz.
WeierstrassData plane_datum(Complex c = 2.0, double radius = 1.0);

} // namespace maxsurf
