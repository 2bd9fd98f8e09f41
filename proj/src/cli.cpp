#include <maxsurf/cli.hpp>
#include <maxsurf/catalog.hpp>
#include <maxsurf/duality.hpp>
#include <maxsurf/serialization.hpp>
#include <maxsurf/verify.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

namespace maxsurf
{

namespace
{

constexpr std::pair<Command, const char *> kCommandNames[] = {
    {Command::Generate, "generate"},         {Command::Conjugate, "conjugate"},
    {Command::DualizeCurve, "dualize-curve"}, {Command::DualizeGraph, "dualize-graph"},
    {Command::VerifyKrust, "verify-krust"},  {Command::Identities, "identities"},
    {Command::Export, "export"},
};

constexpr double kIdentityTolerance = 1e-8;

json knobs(const JobConfig &c)
{
    return {{"tol", c.tol},
            {"mesh_n", c.mesh_n},
            {"grid_h", c.grid_h},
            {"curl_tol", c.curl_tol},
            {"seed", c.seed},
            {"samples", c.samples},
            {"pairs", c.pairs},
            {"direction", c.direction}};
}

WeierstrassData load_datum(const JobConfig &c)
{
    if (!c.datum_file.empty())
    {
        const json j = read_json_file(c.datum_file);
        return weierstrass_from_json(j.contains("datum") ? j.at("datum") : j);
    }
    return catalog_datum(c.datum);
}

json datum_label(const JobConfig &c)
{
    return c.datum_file.empty() ? json(c.datum) : json(c.datum_file.string());
}

void ensure_out_dir(const JobConfig &c)
{
    std::error_code ec;
    std::filesystem::create_directories(c.out_dir, ec);
    if (ec)
        throw InputError("cannot create output directory '" + c.out_dir.string() + "'");
}

Complex random_in_disk(std::mt19937_64 &rng, double radius)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(r, theta);
}

json report_generate(const JobConfig &c, bool conjugate)
{
    const WeierstrassData data = load_datum(c);
    const Immersion im = maximal_immersion(data);
    const ParamMesh mesh = triangulate_disk(data.domain_radius(), c.mesh_n);
    auto [surface, conj] = sample_surface_and_conjugate(im, mesh, c.tol);
    const SurfaceMesh &chosen = conjugate ? conj : surface;
    ensure_out_dir(c);
    const std::string name = conjugate ? "conjugate.json" : "surface.json";
    write_json_file(to_json(chosen), c.out_dir / name);
    return {{"mesh", name},
            {"vertices", chosen.positions.size()},
            {"triangles", chosen.param.triangles().size()},
            {"projection", to_json(projection_report(chosen))},
            {"spacelike", {{"min_edge_quadratic_form", spacelike_mesh_check(chosen).min_edge_quadratic_form},
                           {"pr_margin", spacelike_mesh_check(chosen).pr_margin}}}};
}

json report_dualize_curve(const JobConfig &c)
{
    const IsotropicCurve source = c.input.empty() ? build_isotropic_maximal(load_datum(c))
                                                  : curve_from_json(read_json_file(c.input));
    const IsotropicCurve target = dual(source);
    ensure_out_dir(c);
    write_json_file(to_json(target), c.out_dir / "dual_curve.json");
    return {{"source_ambient", to_string(source.ambient())},
            {"dual_ambient", to_string(target.ambient())},
            {"dual_curve", "dual_curve.json"},
            {"involution_distance", coefficient_distance(dual(target), source)},
            {"commutation_residual", check_commutation(source)},
            {"isotropy_residual", isotropy_residual(target, target.validity_radius())}};
}

json report_dualize_graph(const JobConfig &c)
{
    if (c.input.empty())
        throw InputError("dualize-graph needs --input <header.json> (values in the sibling .csv)");
    std::filesystem::path csv = c.input;
    csv.replace_extension(".csv");
    const ScalarField f = load_field(c.input, csv);
    const bool to_maximal = c.direction == "minimal-to-maximal";
    if (!to_maximal && c.direction != "maximal-to-minimal")
        throw InputError("direction must be minimal-to-maximal or maximal-to-minimal");
    const Ambient source = to_maximal ? Ambient::Euclidean : Ambient::Lorentzian;
    const double curl = dual_curl(f, source).max_abs();
    const ScalarField result =
        to_maximal ? dualize_minimal_to_maximal(f, c.curl_tol) : dualize_maximal_to_minimal(f, c.curl_tol);
    double max_slope = 0.0;
    double max_excess = -std::numeric_limits<double>::infinity();
    for (const SlopeBound &s : dual_slope_bounds(f, result, source))
    {
        max_slope = std::max(max_slope, s.slope);
        max_excess = std::max(max_excess, s.slope - s.bound);
    }
    ensure_out_dir(c);
    save_field(result, c.out_dir / "dual.json", c.out_dir / "dual.csv");
    return {{"input_nodes", f.masked_count()},
            {"dual_nodes", result.masked_count()},
            {"max_curl", curl},
            {"max_dual_slope", max_slope},
            {"max_slope_bound_excess", max_excess},
            {"field", "dual.json"}};
}

std::pair<json, bool> report_krust(const JobConfig &c)
{
    const KrustResult r = krust_pipeline(load_datum(c), c.mesh_n, c.tol);
    return {{{"verdict", to_string(r.verdict)},
             {"domain_report", to_json(r.domain_report)},
             {"conjugate_report", to_json(r.conjugate_report)}},
            r.verdict != Verdict::Fail};
}

std::pair<json, bool> report_identities(const JobConfig &c)
{
    const WeierstrassData data = load_datum(c);
    const Immersion im = maximal_immersion(data);
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double reach = 0.95 * data.domain_radius();

    double worst_p1 = 0.0, worst_p11 = 0.0, worst_rotation = 0.0;
    for (int k = 0; k < c.samples; ++k)
    {
        const Complex w = random_in_disk(rng, reach);
        const ProjectionIdentities id = projection_identities(data, w, c.tol);
        worst_p1 = std::max(worst_p1, std::abs(id.pi_x - id.tau_bar_minus_sigma));
        worst_p11 = std::max(worst_p11, std::abs(id.pi_xstar - id.i_tau_bar_plus_sigma));
        const double theta = angle(rng);
        worst_rotation = std::max(worst_rotation, rotation_identity_check(im, data, w, std::cos(theta), std::sin(theta)));
    }
    bool ok = worst_p1 < kIdentityTolerance && worst_p11 < kIdentityTolerance && worst_rotation < kIdentityTolerance;
    json report = {{"projection_identity_max", worst_p1},
                   {"conjugate_projection_identity_max", worst_p11},
                   {"rotation_identity_max", worst_rotation},
                   {"threshold", kIdentityTolerance}};

    const KrustResult domain = krust_pipeline(data, c.mesh_n, c.tol);
    if (data.kind() == DataKind::MaximalGraph && domain.domain_report.injective &&
        domain.domain_report.is_convex_domain)
    {
        double min_lhs = std::numeric_limits<double>::infinity();
        double worst_relative = 0.0;
        bool all_hold = true;
        for (int k = 0; k < c.pairs; ++k)
        {
            const Complex w1 = random_in_disk(rng, reach);
            const Complex w2 = random_in_disk(rng, reach);
            const InequalityRecord rec = krust_inequality_check(data, w1, w2, kDefaultPathSteps, c.tol);
            min_lhs = std::min(min_lhs, rec.lhs);
            worst_relative = std::max(worst_relative, rec.margin / std::abs(rec.lhs));
            all_hold = all_hold && rec.holds();
        }
        report["inequality"] = {{"pairs", c.pairs},
                                {"min_lhs", min_lhs},
                                {"max_relative_margin", worst_relative},
                                {"all_hold", all_hold}};
        ok = ok && all_hold;
    }
    else
    {
        report["inequality"] = "skipped: projected domain not certified convex";
    }
    report["verdict"] = ok ? "PASS" : "FAIL";
    return {report, ok};
}

json report_export(const JobConfig &c)
{
    if (c.input.empty())
        throw InputError("export needs --input <mesh.json>");
    const SurfaceMesh mesh = surface_from_json(read_json_file(c.input));
    ensure_out_dir(c);
    std::filesystem::path name = c.input.filename();
    name.replace_extension(".obj");
    std::ofstream obj(c.out_dir / name);
    if (!obj)
        throw InputError("cannot write '" + (c.out_dir / name).string() + "'");
    write_obj(mesh, obj);
    return {{"obj", name.string()}, {"vertices", mesh.positions.size()}, {"faces", mesh.param.triangles().size()}};
}

} // namespace

const char *to_string(Command c) noexcept
{
    for (const auto &[cmd, name] : kCommandNames)
        if (cmd == c)
            return name;
    return "?";
}

std::optional<Command> parse_command(const std::string &name)
{
    for (const auto &[cmd, n] : kCommandNames)
        if (name == n)
            return cmd;
    return std::nullopt;
}

void validate(const JobConfig &c)
{
    if (!(c.tol > 0.0) || !(c.grid_h > 0.0) || !(c.curl_tol > 0.0))
        throw InputError("tol, grid-h and curl-tol must be positive");
    if (c.mesh_n < 1 || c.samples < 1 || c.pairs < 0)
        throw InputError("mesh-n and samples must be positive");
}

void apply_config_file(const std::filesystem::path &path, JobConfig &c)
{
    const json j = read_json_file(path);
    if (!j.is_object())
        throw InputError("config file must hold a JSON object");
    try
    {
        if (j.contains("command"))
        {
            const auto cmd = parse_command(j.at("command").get<std::string>());
            if (!cmd)
                throw InputError("unknown command in config");
            c.command = *cmd;
        }
        const auto dir = path.parent_path();
        auto rel = [&](const std::string &p) {
            const std::filesystem::path q(p);
            return q.is_absolute() ? q : dir / q;
        };
        if (j.contains("datum"))
        {
            if (j.at("datum").is_string())
                c.datum = j.at("datum").get<std::string>();
            else
                c.datum_file = path;
        }
        if (j.contains("datum_file"))
            c.datum_file = rel(j.at("datum_file").get<std::string>());
        if (j.contains("input"))
            c.input = rel(j.at("input").get<std::string>());
        if (j.contains("out"))
            c.out_dir = rel(j.at("out").get<std::string>());
        if (j.contains("direction"))
            c.direction = j.at("direction").get<std::string>();
        if (j.contains("tol"))
            c.tol = j.at("tol").get<double>();
        if (j.contains("mesh_n"))
            c.mesh_n = j.at("mesh_n").get<int>();
        if (j.contains("grid_h"))
            c.grid_h = j.at("grid_h").get<double>();
        if (j.contains("curl_tol"))
            c.curl_tol = j.at("curl_tol").get<double>();
        if (j.contains("seed"))
            c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("samples"))
            c.samples = j.at("samples").get<int>();
        if (j.contains("pairs"))
            c.pairs = j.at("pairs").get<int>();
    }
    catch (const json::exception &e)
    {
        throw InputError(std::string("config: ") + e.what());
    }
}

int run(const JobConfig &c, std::ostream &out, std::ostream &err)
{
    json report;
    bool ok = true;
    try
    {
        validate(c);
        report = {{"command", to_string(c.command)}, {"parameters", knobs(c)}};
        json body;
        switch (c.command)
        {
        case Command::Generate:
            body = report_generate(c, false);
            break;
        case Command::Conjugate:
            body = report_generate(c, true);
            break;
        case Command::DualizeCurve:
            body = report_dualize_curve(c);
            break;
        case Command::DualizeGraph:
            body = report_dualize_graph(c);
            break;
        case Command::VerifyKrust:
            std::tie(body, ok) = report_krust(c);
            break;
        case Command::Identities:
            std::tie(body, ok) = report_identities(c);
            break;
        case Command::Export:
            body = report_export(c);
            break;
        }
        if (c.command != Command::Export && c.command != Command::DualizeGraph &&
            !(c.command == Command::DualizeCurve && !c.input.empty()))
            report["datum"] = datum_label(c);
        report["result"] = body;
        ensure_out_dir(c);
        write_json_file(report, c.out_dir / "report.json");
    }
    catch (const Error &e)
    {
        if (c.json_errors)
            err << json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
        else
            err << "error (" << e.kind() << "): " << e.what() << '\n';
        return kExitInputError;
    }
    catch (const json::exception &e)
    {
        if (c.json_errors)
            err << json{{"error", "InputError"}, {"message", e.what()}}.dump() << '\n';
        else
            err << "error (InputError): " << e.what() << '\n';
        return kExitInputError;
    }
    out << report.dump(2) << '\n';
    return ok ? kExitSuccess : kExitCheckFailed;
}

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Maximal and minimal surface pipeline"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path, datum, datum_file, input, out_dir, direction;
    double tol = 0.0, grid_h = 0.0, curl_tol = 0.0;
    int mesh_n = 0, samples = 0, pairs = 0;
    std::uint64_t seed = 0;
    bool json_errors = false;

    auto *o_config = app.add_option("--config", config_path, "JSON config file");
    auto *o_datum = app.add_option("--datum", datum, "catalog datum name");
    auto *o_datum_file = app.add_option("--datum-file", datum_file, "Weierstrass data JSON");
    auto *o_input = app.add_option("--input", input, "input file");
    auto *o_out = app.add_option("--out", out_dir, "output directory");
    auto *o_direction = app.add_option("--direction", direction, "minimal-to-maximal | maximal-to-minimal");
    auto *o_tol = app.add_option("--tol", tol, "quadrature tolerance");
    auto *o_mesh = app.add_option("--mesh-n", mesh_n, "number of mesh rings");
    auto *o_grid = app.add_option("--grid-h", grid_h, "grid spacing");
    auto *o_curl = app.add_option("--curl-tol", curl_tol, "curl certification threshold");
    auto *o_seed = app.add_option("--seed", seed, "seed for randomized checks");
    auto *o_samples = app.add_option("--samples", samples, "random identity samples");
    auto *o_pairs = app.add_option("--pairs", pairs, "random inequality pairs");
    app.add_flag("--json", json_errors, "machine-readable errors");
    const std::pair<const char *, const char *> blurbs[] = {
        {"generate", "sample X on the disk mesh, write surface.json"},
        {"conjugate", "sample X*, write conjugate.json"},
        {"dualize-curve", "dual isotropic curve, write dual_curve.json"},
        {"dualize-graph", "graph dual of a gridded field, write dual.json/dual.csv"},
        {"verify-krust", "graph certificate for X and X*, exit 2 on FAIL"},
        {"identities", "randomized identity and inequality checks, exit 2 on FAIL"},
        {"export", "mesh JSON to OBJ"},
    };
    for (const auto &[name, blurb] : blurbs)
        app.add_subcommand(name, blurb);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
        {
            out << app.help();
            return kExitSuccess;
        }
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    JobConfig c;
    c.json_errors = json_errors;
    try
    {
        if (o_config->count())
            apply_config_file(config_path, c);
    }
    catch (const Error &e)
    {
        if (json_errors)
            err << json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
        else
            err << "error (" << e.kind() << "): " << e.what() << '\n';
        return kExitInputError;
    }
    c.command = *parse_command(app.get_subcommands().front()->get_name());
    if (o_datum->count())
    {
        c.datum = datum;
        c.datum_file.clear();
    }
    if (o_datum_file->count())
        c.datum_file = datum_file;
    if (o_input->count())
        c.input = input;
    if (o_out->count())
        c.out_dir = out_dir;
    if (o_direction->count())
        c.direction = direction;
    if (o_tol->count())
        c.tol = tol;
    if (o_mesh->count())
        c.mesh_n = mesh_n;
    if (o_grid->count())
        c.grid_h = grid_h;
    if (o_curl->count())
        c.curl_tol = curl_tol;
    if (o_seed->count())
        c.seed = seed;
    if (o_samples->count())
        c.samples = samples;
    if (o_pairs->count())
        c.pairs = pairs;
    return run(c, out, err);
}

} // namespace maxsurf
