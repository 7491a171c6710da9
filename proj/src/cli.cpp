#include "baumkuchen/cli.hpp"

#include "baumkuchen/error.hpp"
#include "baumkuchen/io.hpp"
#include "baumkuchen/oracle.hpp"
#include "baumkuchen/render.hpp"
#include "baumkuchen/theorems.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>

namespace baumkuchen {

namespace {

struct ConfigFlags {
    std::optional<std::string> config_path;
    std::optional<std::string> center;
    std::optional<std::string> point;
    std::optional<double> outer;
    std::optional<double> inner;
    std::optional<double> radius;
    std::optional<int> cuts;
    std::optional<double> phase;
    bool degrees = false;
};

struct OutputFlags {
    std::string format = "text";
    std::optional<std::string> out_path;
};

struct Invocation {
    ConfigFlags config;
    OutputFlags output;
    std::string theorem;
    double tol = default_tolerance;
    std::optional<std::uint64_t> seed;
    std::uint64_t samples = 1'000'000;
    unsigned threads = 1;
    double quad_tol = default_quad_tol;
    bool clockwise = false;
    RenderOptions render;
    bool no_shade = false;
    bool no_labels = false;
};

double parse_number(std::string_view text, const std::string& what)
{
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::invalid_argument, what + ": '" + std::string(text) + "' is not a number");
    }
    return value;
}

Point parse_point(const std::string& text, const std::string& what)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw Error(ErrorCode::invalid_argument, what + " expects X,Y");
    }
    return {parse_number(std::string_view(text).substr(0, comma), what),
            parse_number(std::string_view(text).substr(comma + 1), what)};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::invalid_argument, "cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename T>
T pick(const std::optional<T>& flag, const std::optional<T>& file, const char* name, std::ostream& err)
{
    if (flag && file && !(*flag == *file)) {
        err << "warning: --" << name << " overrides the value from the config file\n";
    }
    return flag ? *flag : *file;
}

template <typename T>
std::optional<T> either(const std::optional<T>& a, const std::optional<T>& b)
{
    return a ? a : b;
}

BaumkuchenConfig resolve_config(const ConfigFlags& flags, bool needs_inner, std::ostream& err)
{
    ConfigFields file;
    if (flags.config_path) {
        file = parse_config_json(read_file(*flags.config_path));
    }

    std::optional<Point> center;
    if (flags.center) {
        center = parse_point(*flags.center, "--center");
    }
    std::optional<Point> point;
    if (flags.point) {
        point = parse_point(*flags.point, "--point");
    }
    std::optional<double> phase = flags.phase;
    if (phase && flags.degrees) {
        *phase *= pi / 180.0;
    }
    const std::optional<double> outer_flag = either(flags.outer, flags.radius);

    BaumkuchenConfig cfg;
    cfg.center = (center || file.center) ? pick(center, file.center, "center", err) : Point{};
    if (!outer_flag && !file.outer_radius) {
        throw Error(ErrorCode::invalid_argument, "missing outer radius (--outer or --radius)");
    }
    cfg.outer_radius = pick(outer_flag, file.outer_radius, "outer", err);
    if (flags.inner || file.inner_radius) {
        cfg.inner_radius = pick(flags.inner, file.inner_radius, "inner", err);
    } else if (needs_inner) {
        throw Error(ErrorCode::invalid_argument, "missing inner radius (--inner)");
    } else {
        cfg.inner_radius = cfg.outer_radius;
    }
    cfg.cut_point = (point || file.point) ? pick(point, file.point, "point", err) : cfg.center;
    if (!flags.cuts && !file.cuts) {
        throw Error(ErrorCode::invalid_argument, "missing --cuts");
    }
    cfg.cuts = pick(flags.cuts, file.cuts, "cuts", err);
    cfg.phase = Angle{(phase || file.phase) ? pick(phase, file.phase, "phase", err) : 0.0};
    return cfg;
}

DiskFanConfig as_disk(const BaumkuchenConfig& cfg)
{
    return {cfg.center, cfg.outer_radius, cfg.cut_point, cfg.cuts, cfg.phase};
}

std::uint64_t default_seed(std::ostream& err)
{
    if (const char* env = std::getenv(seed_env_var); env != nullptr && *env != '\0') {
        std::uint64_t value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size()) {
            return value;
        }
        err << "warning: ignoring non-numeric " << seed_env_var << "\n";
    }
    return 1;
}

std::ostringstream text_stream()
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(12);
    return os;
}

void emit(const std::string& document, const OutputFlags& output, std::ostream& out)
{
    if (output.out_path) {
        std::ofstream file(*output.out_path, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::invalid_argument, "cannot write '" + *output.out_path + "'");
        }
        file << document;
        return;
    }
    out << document;
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

int cmd_slices(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const BaumkuchenConfig cfg = resolve_config(inv.config, true, err);
    const FanPartition fan = full_partition(cfg);
    if (inv.output.format == "json") {
        emit(dump(partition_json(cfg, fan, inv.clockwise)), inv.output, out);
        return exit_ok;
    }
    auto os = text_stream();
    const std::size_t count = fan.directions.size();
    os << "wedge  direction  outer_slice  inner_slice  outer_sector  piece\n";
    for (std::size_t k = 0; k < count; ++k) {
        os << display_label(k, count, inv.clockwise) << "  " << fan.directions[k].radians() << "  "
           << fan.outer_slices[k] << "  " << fan.inner_slices[k] << "  " << fan.outer_sectors[k] << "  "
           << fan.pieces[k] << "\n";
    }
    emit(os.str(), inv.output, out);
    return exit_ok;
}

VerificationReport run_verifier(const Invocation& inv, std::ostream& err)
{
    const bool pizza = inv.theorem == "pizza";
    const BaumkuchenConfig cfg = resolve_config(inv.config, !pizza, err);
    if (inv.theorem == "baumkuchen") {
        return verify_theorem1(cfg, inv.tol);
    }
    if (inv.theorem == "lemma2") {
        return verify_lemma2(cfg, inv.tol);
    }
    if (inv.theorem == "lemma3") {
        return verify_lemma3(cfg, inv.tol);
    }
    if (inv.theorem == "decompose") {
        return decompose_via_op(cfg, inv.tol);
    }
    return verify_pizza(as_disk(cfg), inv.tol);
}

int cmd_verify(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const VerificationReport report = run_verifier(inv, err);
    if (inv.output.format == "json") {
        emit(dump(to_json(report)), inv.output, out);
    } else {
        auto os = text_stream();
        os << report.identity << ": " << (report.passed ? "PASSED" : "FAILED")
           << " (max |residual| = " << report.max_abs_residual() << ", tolerance " << report.tolerance << ")\n";
        for (const Residual& r : report.residuals) {
            os << "  " << r.label << " = " << r.value << "\n";
        }
        emit(os.str(), inv.output, out);
    }
    return report.passed ? exit_ok : exit_failed;
}

int cmd_pizza(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const DiskFanConfig disk = as_disk(resolve_config(inv.config, false, err));
    const PizzaAssignment shares = pizza_shares(disk);
    if (inv.output.format == "json") {
        emit(dump(pizza_json(disk, shares)), inv.output, out);
        return exit_ok;
    }
    auto os = text_stream();
    os << shares.people << " people, target share " << 2.0 * pi * disk.radius * disk.radius / disk.cuts << "\n";
    for (std::size_t k = 0; k < shares.shares.size(); ++k) {
        const auto& s = shares.shares[k];
        os << "person " << k + 1 << ": slices " << s[0] << "," << s[1] << "," << s[2] << "," << s[3]
           << " total " << shares.totals[k] << "\n";
    }
    emit(os.str(), inv.output, out);
    return exit_ok;
}

Json compare(double exact, const McEstimate& mc)
{
    Json entry = Json::object();
    entry["exact"] = exact;
    entry["mc"] = to_json(mc);
    entry["z"] = mc.std_error > 0.0 ? (mc.mean - exact) / mc.std_error : 0.0;
    return entry;
}

int cmd_oracle(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const BaumkuchenConfig cfg = resolve_config(inv.config, true, err);
    const std::uint64_t seed = inv.seed ? *inv.seed : default_seed(err);
    const FanPartition fan = full_partition(cfg);
    const McPartition mc = mc_partition_areas(cfg, inv.samples, seed, inv.threads);
    const std::size_t count = fan.directions.size();
    const double step = pi / cfg.cuts;

    Json doc = Json::object();
    doc["config"] = to_json(cfg);
    doc["samples"] = inv.samples;
    doc["seed"] = seed;
    doc["chunk_size"] = mc_chunk_size;
    doc["quad_tol"] = inv.quad_tol;

    double max_z = 0.0;
    double max_quad = 0.0;
    Json wedges = Json::array();
    for (std::size_t k = 0; k < count; ++k) {
        const Angle from = fan.directions[k];
        const Angle to{from.radians() + step};
        const double quad_outer = quad_slice_area(cfg.outer_circle(), cfg.cut_point, from, to, inv.quad_tol);
        const double quad_inner = quad_slice_area(cfg.inner_circle(), cfg.cut_point, from, to, inv.quad_tol);
        max_quad = std::max({max_quad, std::abs(quad_outer - fan.outer_slices[k]),
                             std::abs(quad_inner - fan.inner_slices[k])});

        Json wedge = Json::object();
        wedge["label"] = k + 1;
        wedge["outer_slice"] = compare(fan.outer_slices[k], mc.outer_slices[k]);
        wedge["outer_slice"]["quad"] = quad_outer;
        wedge["inner_slice"] = compare(fan.inner_slices[k], mc.inner_slices[k]);
        wedge["inner_slice"]["quad"] = quad_inner;
        wedge["piece"] = compare(fan.pieces[k], mc.pieces[k]);
        for (const char* key : {"outer_slice", "inner_slice", "piece"}) {
            max_z = std::max(max_z, std::abs(wedge[key]["z"].get<double>()));
        }
        wedges.push_back(std::move(wedge));
    }
    doc["wedges"] = std::move(wedges);
    doc["disk"] = compare(pi * cfg.outer_radius * cfg.outer_radius, mc.disk);
    doc["max_abs_z"] = max_z;
    doc["max_quad_error"] = max_quad;

    if (inv.output.format == "json") {
        emit(dump(doc), inv.output, out);
        return exit_ok;
    }
    auto os = text_stream();
    os << "seed " << seed << ", samples " << inv.samples << "\n";
    os << "wedge  exact_outer  quad_outer  mc_outer  se  exact_piece  mc_piece  se\n";
    for (std::size_t k = 0; k < count; ++k) {
        const Json& w = doc["wedges"][k];
        os << k + 1 << "  " << fan.outer_slices[k] << "  " << w["outer_slice"]["quad"].get<double>() << "  "
           << mc.outer_slices[k].mean << "  " << mc.outer_slices[k].std_error << "  " << fan.pieces[k] << "  "
           << mc.pieces[k].mean << "  " << mc.pieces[k].std_error << "\n";
    }
    os << "max |z| = " << max_z << ", max |exact - quad| = " << max_quad << "\n";
    emit(os.str(), inv.output, out);
    return exit_ok;
}

int cmd_render(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const BaumkuchenConfig cfg = resolve_config(inv.config, true, err);
    RenderOptions opts = inv.render;
    opts.shade_pairs = !inv.no_shade;
    opts.label_points = !inv.no_labels;
    emit(render_svg(cfg, full_partition(cfg), opts), inv.output, out);
    return exit_ok;
}

void add_config_options(CLI::App* sub, Invocation& inv)
{
    ConfigFlags& f = inv.config;
    sub->add_option("--config", f.config_path, "JSON configuration file");
    sub->add_option("--center", f.center, "center O as X,Y (default 0,0)");
    sub->add_option("--outer", f.outer, "outer radius R");
    sub->add_option("--radius", f.radius, "disk radius (alias of --outer)");
    sub->add_option("--inner", f.inner, "inner radius r");
    sub->add_option("--point", f.point, "cut point P as X,Y (default: the center)");
    sub->add_option("--cuts", f.cuts, "number of lines n");
    sub->add_option("--phase", f.phase, "direction of the first cut (radians)");
    sub->add_flag("--degrees", f.degrees, "read --phase in degrees");
    sub->add_option("--format", inv.output.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", inv.output.out_path, "write the document to this path");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Invocation inv;
    CLI::App app{"Equiangular fans on disks and annuli: exact areas and identity checks", "baumkuchen"};
    app.require_subcommand(1);

    CLI::App* slices = app.add_subcommand("slices", "print slice, sector and piece areas");
    add_config_options(slices, inv);
    slices->add_flag("--clockwise", inv.clockwise, "number wedges clockwise");

    CLI::App* verify = app.add_subcommand("verify", "check an identity and report residuals");
    add_config_options(verify, inv);
    verify->add_option("--theorem", inv.theorem, "identity to check")
        ->required()
        ->check(CLI::IsMember({"baumkuchen", "lemma2", "lemma3", "pizza", "decompose"}));
    verify->add_option("--tol", inv.tol, "tolerance relative to the disk area");

    CLI::App* pizza = app.add_subcommand("pizza", "share the slices of a disk between n/2 people");
    add_config_options(pizza, inv);

    CLI::App* oracle = app.add_subcommand("oracle", "compare exact areas with quadrature and Monte Carlo");
    add_config_options(oracle, inv);
    oracle->add_option("--seed", inv.seed, std::string("Monte Carlo seed (default $") + seed_env_var + " or 1)");
    oracle->add_option("--samples", inv.samples, "Monte Carlo samples")->capture_default_str();
    oracle->add_option("--threads", inv.threads, "worker threads (does not change results)")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--quad-tol", inv.quad_tol, "absolute quadrature tolerance per wedge");

    CLI::App* render = app.add_subcommand("render", "write an SVG figure");
    add_config_options(render, inv);
    render->add_option("--canvas", inv.render.canvas_px, "canvas size in pixels");
    render->add_option("--stroke", inv.render.stroke_width, "stroke width in pixels");
    render->add_option("--decimals", inv.render.decimals, "decimals in area annotations");
    render->add_flag("--no-shade", inv.no_shade, "do not fill paired pieces");
    render->add_flag("--no-labels", inv.no_labels, "omit point labels");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_input;
    }

    try {
        if (slices->parsed()) {
            return cmd_slices(inv, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(inv, out, err);
        }
        if (pizza->parsed()) {
            return cmd_pizza(inv, out, err);
        }
        if (oracle->parsed()) {
            return cmd_oracle(inv, out, err);
        }
        return cmd_render(inv, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_numeric_failure(e.code()) ? exit_numeric : exit_invalid_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }
}

} // namespace baumkuchen
