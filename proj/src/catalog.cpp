#include <maxsurf/catalog.hpp>

#include <cstdio>

namespace maxsurf
{

namespace
{
constexpr double kCatalogValidity = 1.0;

std::string radius_tag(double r)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "r%.1f", r);
    return buf;
}

HolomorphicForm unit_form()
{
    return HolomorphicForm(RationalHolomorphic::constant(1.0, kCatalogValidity));
}
} // namespace

WeierstrassData plane_datum(Complex c, double radius)
{
    return WeierstrassData(RationalHolomorphic::constant(c, std::max(radius, kCatalogValidity)),
                           HolomorphicForm(RationalHolomorphic::constant(1.0, std::max(radius, kCatalogValidity))),
                           radius);
}

std::vector<CatalogEntry> surface_catalog()
{
    std::vector<CatalogEntry> entries;
    for (double r : {0.5, 0.9})
    {
        const std::string tag = radius_tag(r);
        entries.push_back({"plane-" + tag, plane_datum(2.0, r)});
        for (double c : {2.5, 3.0, 4.0})
        {
            char name[32];
            std::snprintf(name, sizeof name, "zplus%g-", c);
            const RationalHolomorphic g = RationalHolomorphic::polynomial(Polynomial({c, 1.0}), kCatalogValidity);
            entries.push_back({name + tag, WeierstrassData(g, unit_form(), r)});
        }
        // g = (z + 3)/(1 - z/5)
        const RationalHolomorphic g(Polynomial({3.0, 1.0}), Polynomial({1.0, -0.2}), kCatalogValidity);
        entries.push_back({"rational-" + tag, WeierstrassData(g, unit_form(), r)});
    }
    return entries;
}

WeierstrassData catalog_datum(const std::string &name)
{
    for (auto &entry : surface_catalog())
    {
        if (entry.name == name)
            return entry.data;
    }
    throw InputError("unknown catalog datum '" + name + "'");
}

} // namespace maxsurf
