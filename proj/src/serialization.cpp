#include <maxsurf/serialization.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace maxsurf
{

namespace
{
json coefficients_to_json(const Polynomial &p)
{
    json arr = json::array();
    for (const Complex &c : p.coefficients())
        arr.push_back({c.real(), c.imag()});
    return arr;
}

Complex complex_from_json(const json &j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2)
        throw InputError("complex value must be [re, im]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Polynomial coefficients_from_json(const json &j)
{
    if (!j.is_array())
        throw InputError("coefficient list must be an array");
    std::vector<Complex> c;
    for (const json &v : j)
        c.push_back(complex_from_json(v));
    return Polynomial(std::move(c));
}

template <class F>
auto guarded(const char *what, F &&fn)
{
    try
    {
        return fn();
    }
    catch (const json::exception &e)
    {
        throw InputError(std::string(what) + ": " + e.what());
    }
}
} // namespace

json to_json(const RationalHolomorphic &f)
{
    return {{"num", coefficients_to_json(f.numerator())},
            {"den", coefficients_to_json(f.denominator())},
            {"radius", f.validity_radius()}};
}

RationalHolomorphic rational_from_json(const json &j)
{
    return guarded("rational function", [&] {
        return RationalHolomorphic(coefficients_from_json(j.at("num")), coefficients_from_json(j.at("den")),
                                   j.at("radius").get<double>());
    });
}

json to_json(const Point3 &p)
{
    return json::array({p.x1, p.x2, p.x3});
}

json to_json(const WeierstrassData &data)
{
    return {{"g", to_json(data.g())},
            {"dh", to_json(data.dh().density())},
            {"radius", data.domain_radius()},
            {"base", {data.base_point().real(), data.base_point().imag()}},
            {"base_value", to_json(data.base_value())},
            {"kind", to_string(data.kind())}};
}

WeierstrassData weierstrass_from_json(const json &j)
{
    return guarded("Weierstrass data", [&] {
        DataKind kind = DataKind::MaximalGraph;
        if (j.contains("kind"))
        {
            const auto k = j.at("kind").get<std::string>();
            if (k == "general")
                kind = DataKind::General;
            else if (k != "maximal-graph")
                throw InputError("unknown datum kind '" + k + "'");
        }
        Complex base{};
        if (j.contains("base"))
            base = complex_from_json(j.at("base"));
        Point3 base_value{};
        if (j.contains("base_value"))
        {
            const json &b = j.at("base_value");
            if (!b.is_array() || b.size() != 3)
                throw InputError("base_value must be [x1, x2, x3]");
            base_value = {b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>()};
        }
        return WeierstrassData(rational_from_json(j.at("g")), HolomorphicForm(rational_from_json(j.at("dh"))),
                               j.at("radius").get<double>(), base, base_value, kind);
    });
}

json to_json(const IsotropicCurve &curve)
{
    json comps = json::array();
    for (const auto &c : curve.components())
        comps.push_back(to_json(c.density()));
    return {{"ambient", to_string(curve.ambient())}, {"components", comps}};
}

IsotropicCurve curve_from_json(const json &j)
{
    return guarded("isotropic curve", [&] {
        const auto amb = j.at("ambient").get<std::string>();
        if (amb != "euclidean" && amb != "lorentzian")
            throw InputError("unknown ambient '" + amb + "'");
        const json &c = j.at("components");
        if (!c.is_array() || c.size() != 3)
            throw InputError("curve needs three components");
        return IsotropicCurve({HolomorphicForm(rational_from_json(c.at(0))),
                               HolomorphicForm(rational_from_json(c.at(1))),
                               HolomorphicForm(rational_from_json(c.at(2)))},
                              amb == "euclidean" ? Ambient::Euclidean : Ambient::Lorentzian);
    });
}

json to_json(const SurfaceMesh &mesh)
{
    json vertices = json::array();
    for (const Complex &w : mesh.param.vertices())
        vertices.push_back({w.real(), w.imag()});
    json positions = json::array();
    for (const Point3 &x : mesh.positions)
        positions.push_back(to_json(x));
    json triangles = json::array();
    for (const auto &t : mesh.param.triangles())
        triangles.push_back({t[0], t[1], t[2]});
    return {{"ambient", to_string(mesh.ambient)},
            {"radius", mesh.param.radius()},
            {"vertices", vertices},
            {"positions", positions},
            {"triangles", triangles},
            {"boundary", mesh.param.boundary()}};
}

SurfaceMesh surface_from_json(const json &j)
{
    return guarded("surface mesh", [&] {
        const auto amb = j.at("ambient").get<std::string>();
        if (amb != "euclidean" && amb != "lorentzian")
            throw InputError("unknown ambient '" + amb + "'");
        const Ambient ambient = amb == "euclidean" ? Ambient::Euclidean : Ambient::Lorentzian;
        std::vector<Complex> vertices;
        for (const json &v : j.at("vertices"))
            vertices.push_back(complex_from_json(v));
        std::vector<TriangleIndices> triangles;
        for (const json &t : j.at("triangles"))
        {
            if (!t.is_array() || t.size() != 3)
                throw InputError("triangle must list three vertex indices");
            triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
        }
        std::vector<Point3> positions;
        for (const json &p : j.at("positions"))
        {
            if (!p.is_array() || p.size() != 3)
                throw InputError("position must be [x1, x2, x3]");
            positions.push_back({p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>(), ambient});
        }
        if (positions.size() != vertices.size())
            throw InputError("surface mesh has mismatched vertex and position counts");
        ParamMesh param(std::move(vertices), std::move(triangles), j.at("boundary").get<std::vector<int>>(),
                        j.at("radius").get<double>());
        return SurfaceMesh{std::move(param), std::move(positions), ambient};
    });
}

json to_json(const GraphReport &report)
{
    return {{"min_projected_triangle_area", report.min_projected_triangle_area},
            {"boundary_simple", report.boundary_simple},
            {"boundary_convexity_defect", report.boundary_convexity_defect},
            {"injective", report.injective},
            {"is_convex_domain", report.is_convex_domain}};
}

json grid_header(const Grid &grid)
{
    return {{"origin", {grid.x0, grid.y0}}, {"spacing", grid.h}, {"nx", grid.nx}, {"ny", grid.ny}};
}

Grid grid_from_header(const json &j)
{
    return guarded("field header", [&] {
        Grid g{j.at("origin").at(0).get<double>(), j.at("origin").at(1).get<double>(), j.at("spacing").get<double>(),
               j.at("nx").get<int>(), j.at("ny").get<int>()};
        if (!(g.h > 0.0) || g.nx <= 0 || g.ny <= 0)
            throw InputError("field header has non-positive spacing or counts");
        return g;
    });
}

void write_field_csv(const ScalarField &field, std::ostream &out)
{
    const Grid &g = field.grid();
    out << "x,y,value\n";
    char line[96];
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
        {
            if (!field.in_mask(i, j))
                continue;
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", g.x(i), g.y(j), field.at(i, j));
            out << line;
        }
}

ScalarField read_field_csv(const Grid &grid, std::istream &in)
{
    std::vector<double> values(grid.size(), 0.0);
    Mask mask(grid.size(), 0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (line.empty() || (lineno == 1 && line.rfind("x,", 0) == 0))
            continue;
        double x = 0.0, y = 0.0, v = 0.0;
        char trailing = 0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf%c", &x, &y, &v, &trailing) < 3)
            throw InputError("malformed field row at line " + std::to_string(lineno));
        const double fi = (x - grid.x0) / grid.h;
        const double fj = (y - grid.y0) / grid.h;
        const long i = std::lround(fi);
        const long j = std::lround(fj);
        if (std::abs(fi - i) > 1e-6 || std::abs(fj - j) > 1e-6 || !grid.contains(int(i), int(j)))
            throw InputError("field row at line " + std::to_string(lineno) + " is not on the grid");
        values[grid.index(int(i), int(j))] = v;
        mask[grid.index(int(i), int(j))] = 1;
    }
    return ScalarField(grid, std::move(values), std::move(mask));
}

json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path.string() + "'");
    try
    {
        return json::parse(in);
    }
    catch (const json::exception &e)
    {
        throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

void write_json_file(const json &j, const std::filesystem::path &path)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

void save_field(const ScalarField &field, const std::filesystem::path &header_path,
                const std::filesystem::path &csv_path)
{
    write_json_file(grid_header(field.grid()), header_path);
    std::ofstream out(csv_path);
    if (!out)
        throw InputError("cannot write '" + csv_path.string() + "'");
    write_field_csv(field, out);
}

ScalarField load_field(const std::filesystem::path &header_path, const std::filesystem::path &csv_path)
{
    const Grid grid = grid_from_header(read_json_file(header_path));
    std::ifstream in(csv_path);
    if (!in)
        throw InputError("cannot open '" + csv_path.string() + "'");
    return read_field_csv(grid, in);
}

} // namespace maxsurf
