#pragma once

// JSON and CSV encodings of the library's value types.
//
//   RationalHolomorphic  {"num": [[re,im],...], "den": [[re,im],...], "radius": r}
//   WeierstrassData      {"g": <rational>, "dh": <rational>, "radius": r, "base": [re,im],
//                         "base_value": [x1,x2,x3], "kind": "maximal-graph" | "general"}
//   ScalarField          JSON header {"origin": [x0,y0], "spacing": h, "nx": n, "ny": m}
//                        plus CSV rows "x,y,value" for masked nodes only.
//   SurfaceMesh          {"ambient", "radius", "vertices": [[u,v]], "positions": [[x1,x2,x3]],
//                         "triangles": [[a,b,c]], "boundary": [i,...]}

#include <maxsurf/graph_pde.hpp>
#include <maxsurf/mesh.hpp>
#include <maxsurf/verify.hpp>
#include <maxsurf/weierstrass.hpp>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>

namespace maxsurf
{

using json = nlohmann::json;

json to_json(const RationalHolomorphic &f);
RationalHolomorphic rational_from_json(const json &j);

json to_json(const WeierstrassData &data);
WeierstrassData weierstrass_from_json(const json &j);

json to_json(const IsotropicCurve &curve);
IsotropicCurve curve_from_json(const json &j);

json to_json(const Point3 &p);

json to_json(const SurfaceMesh &mesh);
SurfaceMesh surface_from_json(const json &j);

json to_json(const GraphReport &report);

json grid_header(const Grid &grid);
Grid grid_from_header(const json &j);

void write_field_csv(const ScalarField &field, std::ostream &out);
ScalarField read_field_csv(const Grid &grid, std::istream &in);

void save_field(const ScalarField &field, const std::filesystem::path &header_path,
                const std::filesystem::path &csv_path);
ScalarField load_field(const std::filesystem::path &header_path, const std::filesystem::path &csv_path);

json read_json_file(const std::filesystem::path &path);
void write_json_file(const json &j, const std::filesystem::path &path);

} // namespace maxsurf
