/* Copyright 2026 The strainvalley Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "strainvalley/cli_io.hpp"

#include "strainvalley/design_engine.hpp"
#include "strainvalley/errors.hpp"
#include "strainvalley/quantum_well.hpp"
#include "strainvalley/relaxation.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace strainvalley::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return v;
}

using ParamRef = std::function<double&(MaterialParams&)>;

const std::map<std::string, ParamRef, std::less<>>& param_table() {
    static const std::map<std::string, ParamRef, std::less<>> table = [] {
        std::map<std::string, ParamRef, std::less<>> t;
        t["elastic.c11"] = [](MaterialParams& p) -> double& { return p.elastic.c11; };
        t["elastic.c12"] = [](MaterialParams& p) -> double& { return p.elastic.c12; };
        t["elastic.c44"] = [](MaterialParams& p) -> double& { return p.elastic.c44; };
        t["deformation.xi_u_delta"] = [](MaterialParams& p) -> double& { return p.deformation.xi_u_delta; };
        t["deformation.xi_d_delta"] = [](MaterialParams& p) -> double& { return p.deformation.xi_d_delta; };
        t["deformation.xi_u_L"] = [](MaterialParams& p) -> double& { return p.deformation.xi_u_L; };
        t["deformation.xi_d_L"] = [](MaterialParams& p) -> double& { return p.deformation.xi_d_L; };
        t["quadratic.d_L1"] = [](MaterialParams& p) -> double& { return p.quadratic.d_L1; };
        t["quadratic.d_L3"] = [](MaterialParams& p) -> double& { return p.quadratic.d_L3; };
        t["quadratic.d_delta6"] = [](MaterialParams& p) -> double& { return p.quadratic.d_delta6; };
        for (ValleyKind v : all_valleys) {
            const std::string name(to_string(v));
            t["masses." + name + ".m_in"] = [v](MaterialParams& p) -> double& { return p.masses(v).m_in; };
            t["masses." + name + ".m_out"] = [v](MaterialParams& p) -> double& { return p.masses(v).m_out; };
        }
        t["masses.m_inplane_L1"] = [](MaterialParams& p) -> double& { return p.masses.m_inplane_L1; };
        t["lattice.a_si"] = [](MaterialParams& p) -> double& { return p.lattice.a_si; };
        t["lattice.a_ge"] = [](MaterialParams& p) -> double& { return p.lattice.a_ge; };
        t["lattice.bowing_b"] = [](MaterialParams& p) -> double& { return p.lattice.bowing_b; };
        t["band.e0_L"] = [](MaterialParams& p) -> double& { return p.band.e0_L; };
        t["band.e0_delta"] = [](MaterialParams& p) -> double& { return p.band.e0_delta; };
        t["band.v0_offset_111"] = [](MaterialParams& p) -> double& { return p.band.v0_offset_111; };
        t["constants.hbar2_over_2m0"] = [](MaterialParams& p) -> double& { return p.constants.hbar2_over_2m0; };
        t["constants.burgers_si"] = [](MaterialParams& p) -> double& { return p.constants.burgers_si; };
        return t;
    }();
    return table;
}

std::string json_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Sweep builders shared by commands and figures. Each appends rows and
// returns the number of failed points (filled with NaN).

int crossover_rows(Table& table, const MaterialParams& params, std::span<const double> grid,
                   bool want_eps, bool want_x, std::ostream* err) {
    int failures = 0;
    for (const auto& pt : crossover_curve(params, grid)) {
        std::vector<Cell> row{pt.thickness_t};
        double eps = kNaN, x = kNaN;
        if (pt.result) {
            eps = pt.result->eps_critical;
            x = pt.result->x_critical;
        } else {
            ++failures;
            if (err) *err << "t=" << format_number(pt.thickness_t) << " nm: " << pt.error << '\n';
        }
        if (want_eps) row.emplace_back(eps);
        if (want_x) row.emplace_back(x);
        table.rows.push_back(std::move(row));
    }
    return failures;
}

void hc_rows(Table& table, const RelaxationInput& templ, std::span<const double> grid) {
    const auto curve = hc_curve(templ, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table.rows.push_back({Cell{grid[i]}, Cell{curve[i].misfit_f}, Cell{curve[i].nu_111},
                              Cell{curve[i].h_c}});
    }
}

void sensitivity_rows(Table& table, const MaterialParams& params, std::span<const double> grid,
                      SensitivityMode mode) {
    for (const auto& b : sensitivity_band(params, grid, mode)) {
        table.rows.push_back({Cell{b.thickness_t}, Cell{b.x_low}, Cell{b.x_nominal}, Cell{b.x_high},
                              Cell{b.eps_low}, Cell{b.eps_high},
                              Cell{static_cast<double>(b.clipped_corners)}});
    }
}

const std::vector<std::string> kCrossoverHeader{"t_nm", "eps_critical", "x_critical"};
const std::vector<std::string> kHcHeader{"x", "f", "nu_111", "h_c_nm"};
const std::vector<std::string> kSensitivityHeader{"t_nm", "x_low", "x_nominal", "x_high",
                                                  "eps_low", "eps_high", "clipped_corners"};

// Options for one swept variable: a single value or min / max / step.
struct SweepOption {
    std::optional<double> value, min, max, step;

    void attach(CLI::App* app, const std::string& name, const std::string& what) {
        app->add_option("--" + name, value, what);
        app->add_option("--" + name + "-min", min, "sweep start of " + name);
        app->add_option("--" + name + "-max", max, "sweep end of " + name);
        app->add_option("--" + name + "-step", step, "sweep step of " + name);
    }

    bool given() const { return value || min || max || step; }

    std::vector<double> resolve(const std::string& name) const {
        if (value && (min || max || step)) {
            throw UsageError("give either --" + name + " or --" + name + "-min/-max/-step, not both");
        }
        if (value) return {*value};
        if (!(min && max && step)) {
            throw UsageError("--" + name + " or all of --" + name + "-min, --" + name + "-max, --" +
                             name + "-step are required");
        }
        return make_grid({*min, *max, *step});
    }
};

struct CommonOptions {
    std::string config;
    std::vector<std::string> sets;
    std::string output;
    std::string format = "csv";
};

void attach_common(CLI::App* app, CommonOptions& c) {
    app->add_option("--config", c.config, "flat key = value configuration file");
    app->add_option("--set", c.sets, "parameter override KEY=VALUE (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    app->add_option("-o,--output", c.output, "output file (default: stdout or $" +
                                                 std::string(kOutputDirEnv) + "/<name>)");
    app->add_option("--format", c.format, "csv or jsonl");
}

std::optional<std::filesystem::path> output_path(const CommonOptions& c, const std::string& name,
                                                 OutputFormat fmt) {
    if (!c.output.empty()) return std::filesystem::path(c.output);
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
        return std::filesystem::path(dir) / (name + (fmt == OutputFormat::Csv ? ".csv" : ".jsonl"));
    }
    return std::nullopt;
}

// Finds --config in the raw arguments before CLI11 sees them, so file values
// can be inserted ahead of the user's flags.
std::optional<std::string> find_config(std::span<const std::string> args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file path");
            return args[i + 1];
        }
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return std::nullopt;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "jsonl" || name == "json-lines") return OutputFormat::JsonLines;
    throw UsageError("unknown output format '" + std::string(name) + "' (valid: csv, jsonl)");
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    return fmt::format("{:.9g}", v);
}

std::string render(const Table& table, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Csv) {
        for (std::size_t i = 0; i < table.header.size(); ++i) {
            if (i) out += ',';
            out += table.header[i];
        }
        out += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                if (const double* d = std::get_if<double>(&row[i])) out += format_number(*d);
                else out += std::get<std::string>(row[i]);
            }
            out += '\n';
        }
        return out;
    }
    for (const auto& row : table.rows) {
        out += '{';
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += '"' + json_escape(table.header.at(i)) + "\":";
            if (const double* d = std::get_if<double>(&row[i])) {
                out += std::isfinite(*d) ? format_number(*d) : "null";
            } else {
                out += '"' + json_escape(std::get<std::string>(row[i])) + '"';
            }
        }
        out += "}\n";
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp =
        path.string() + ".tmp." + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw UsageError("cannot write output '" + path.string() + "': " + std::strerror(errno));
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        os.close();
        if (!os) {
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw UsageError("cannot write output '" + path.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw UsageError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

std::vector<double> make_grid(const GridSpec& spec) {
    if (!std::isfinite(spec.min) || !std::isfinite(spec.max) || !std::isfinite(spec.step)) {
        throw UsageError("grid bounds must be finite");
    }
    if (!(spec.step > 0.0)) throw UsageError("grid step must be positive");
    if (spec.max < spec.min) throw UsageError("grid max must not be below grid min");
    const double span = (spec.max - spec.min) / spec.step;
    if (span > 1e7) throw UsageError("grid has more than 1e7 points");
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = spec.min + static_cast<double>(i) * spec.step;
    return grid;
}

KeyValues parse_config_text(std::string_view text) {
    KeyValues out;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw UsageError("config line " + std::to_string(line_no) + ": empty key or value");
        }
        out.emplace_back(std::string(key), std::string(value));
    }
    return out;
}

KeyValues parse_config_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw UsageError("cannot read config file '" + path.string() + "'");
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

std::vector<std::string> override_keys() {
    std::vector<std::string> keys{"deformation.set"};
    for (const auto& [k, _] : param_table()) keys.push_back(k);
    return keys;
}

void apply_override(MaterialParams& params, std::string_view key, std::string_view value) {
    if (key == "deformation.set") {
        params.deformation = table1_set(trim(value));
        return;
    }
    const auto it = param_table().find(key);
    if (it == param_table().end()) {
        throw LookupError("unknown parameter key '" + std::string(key) + "'");
    }
    const auto v = parse_double(value);
    if (!v) {
        throw UsageError("parameter '" + std::string(key) + "' needs a number, got '" +
                         std::string(value) + "'");
    }
    it->second(params) = *v;
}

FigureId parse_figure_id(std::string_view name) {
    static const std::map<std::string, FigureId, std::less<>> ids{
        {"fig1", FigureId::Fig1}, {"fig2", FigureId::Fig2}, {"fig3", FigureId::Fig3},
        {"fig4", FigureId::Fig4}, {"fig5", FigureId::Fig5}, {"fig7", FigureId::Fig7},
        {"fig8", FigureId::Fig8}, {"fig9", FigureId::Fig9}, {"fig10", FigureId::Fig10}};
    const auto it = ids.find(name);
    if (it == ids.end()) {
        throw UsageError("unknown figure id '" + std::string(name) +
                         "' (valid: fig1..fig5, fig7..fig10)");
    }
    return it->second;
}

std::string_view to_string(FigureId id) {
    switch (id) {
    case FigureId::Fig1: return "fig1";
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig4: return "fig4";
    case FigureId::Fig5: return "fig5";
    case FigureId::Fig7: return "fig7";
    case FigureId::Fig8: return "fig8";
    case FigureId::Fig9: return "fig9";
    case FigureId::Fig10: return "fig10";
    }
    return "?";
}

Table figure_table(FigureId id, const MaterialParams& params) {
    const auto thickness = make_grid({1.0, 10.0, 0.1});
    Table table;
    switch (id) {
    case FigureId::Fig1: {
        table.header = {"t_nm", "Eq_L1_eV", "Eq_L3_eV", "Eq_Delta6_eV"};
        std::array<std::vector<ThicknessEnergy>, 3> curves;
        for (std::size_t k = 0; k < 3; ++k) curves[k] = eq_vs_thickness(all_valleys[k], params, thickness);
        for (std::size_t i = 0; i < thickness.size(); ++i) {
            table.rows.push_back({Cell{thickness[i]}, Cell{curves[0][i].eq}, Cell{curves[1][i].eq},
                                  Cell{curves[2][i].eq}});
        }
        break;
    }
    case FigureId::Fig2:
    case FigureId::Fig3: {
        const double t = id == FigureId::Fig2 ? 10.0 : 3.0;
        table.header = {"eps_par", "E_L1_eV", "E_L3_eV", "E_Delta6_eV"};
        for (double eps : make_grid({0.0, 0.05, 0.0001})) {
            std::vector<Cell> row{eps};
            for (ValleyKind v : all_valleys) row.emplace_back(total_energy(v, params, t, eps).total);
            table.rows.push_back(std::move(row));
        }
        break;
    }
    case FigureId::Fig4:
        table.header = {"t_nm", "eps_critical"};
        crossover_rows(table, params, thickness, true, false, nullptr);
        break;
    case FigureId::Fig5:
        table.header = {"t_nm", "x_critical"};
        crossover_rows(table, params, thickness, false, true, nullptr);
        break;
    case FigureId::Fig7:
        table.header = kHcHeader;
        hc_rows(table, RelaxationInput::from_params(params, 1.0), make_grid({0.5, 1.0, 0.01}));
        break;
    case FigureId::Fig8:
    case FigureId::Fig9:
    case FigureId::Fig10: {
        const SensitivityMode mode = id == FigureId::Fig8   ? SensitivityMode::Linear10pct
                                     : id == FigureId::Fig9 ? SensitivityMode::QuadraticRange
                                                            : SensitivityMode::Both;
        table.header = kSensitivityHeader;
        sensitivity_rows(table, params, thickness, mode);
        break;
    }
    }
    return table;
}

void emit_figure_data(FigureId id, const MaterialParams& params, const std::filesystem::path& path) {
    write_atomic(path, render(figure_table(id, params), OutputFormat::Csv));
}

int run(std::span<const std::string> input, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> commands{"energy", "well",      "crossover", "hc",
                                                   "sensitivity", "splitting", "figure"};
    std::vector<std::string> args(input.begin(), input.end());

    try {
        if (!args.empty() && !args[0].starts_with('-') &&
            std::find(commands.begin(), commands.end(), args[0]) == commands.end()) {
            std::string valid;
            for (const auto& c : commands) valid += (valid.empty() ? "" : ", ") + c;
            throw UsageError("unknown command '" + args[0] + "' (valid: " + valid + ")");
        }
        // Config file values go right after the subcommand so that later
        // command-line flags take precedence.
        if (const auto config = find_config(args)) {
            const auto sub = std::find_first_of(args.begin(), args.end(), commands.begin(), commands.end());
            if (sub == args.end()) throw UsageError("--config needs a command");
            std::vector<std::string> injected;
            for (const auto& [key, value] : parse_config_file(*config)) {
                if (key.find('.') != std::string::npos) {
                    injected.push_back("--set");
                    injected.push_back(key + "=" + value);
                } else {
                    injected.push_back("--" + key);
                    injected.push_back(value);
                }
            }
            args.insert(sub + 1, injected.begin(), injected.end());
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    CLI::App app{"Strained Si(111) valley energies, L1/Delta6 crossover and critical thickness",
                 "strainvalley"};
    app.option_defaults()->take_last();
    app.require_subcommand(1);

    CommonOptions common;
    std::string valley = "all";
    std::string mode;
    std::string figure;
    std::string misfit_model = "linear";
    double misfit_slope = kDefaultMisfitSlope;
    SweepOption t_opt, eps_opt, x_opt;

    auto* energy = app.add_subcommand("energy", "valley energy breakdown vs strain or Ge fraction");
    attach_common(energy, common);
    energy->add_option("--valley", valley, "L1, L3, Delta6 or all");
    t_opt.attach(energy, "t", "well thickness in nm");
    eps_opt.attach(energy, "eps", "in-plane strain");
    x_opt.attach(energy, "x", "Ge fraction of the barriers");

    auto* well = app.add_subcommand("well", "ground-state confinement energy");
    attach_common(well, common);
    well->add_option("--valley", valley, "L1, L3 or Delta6")->required();
    t_opt.attach(well, "t", "well thickness in nm");

    auto* crossover = app.add_subcommand("crossover", "critical strain and Ge fraction vs thickness");
    attach_common(crossover, common);
    t_opt.attach(crossover, "t", "well thickness in nm");

    auto* hc = app.add_subcommand("hc", "critical thickness vs Ge fraction");
    attach_common(hc, common);
    x_opt.attach(hc, "x", "Ge fraction");
    hc->add_option("--misfit-model", misfit_model, "linear or vegard");
    hc->add_option("--misfit-slope", misfit_slope, "f = slope * x for the linear model");

    auto* sens = app.add_subcommand("sensitivity", "crossover Ge fraction envelope");
    attach_common(sens, common);
    sens->add_option("--mode", mode, "linear10pct, quadratic_range or both")->required();
    t_opt.attach(sens, "t", "well thickness in nm");

    auto* split = app.add_subcommand("splitting", "Delta6 - L1 and L3 - L1 at a design point");
    attach_common(split, common);
    t_opt.attach(split, "t", "well thickness in nm");
    x_opt.attach(split, "x", "Ge fraction of the barriers");

    auto* fig = app.add_subcommand("figure", "data behind one published figure");
    attach_common(fig, common);
    fig->add_option("--id", figure, "fig1..fig5, fig7..fig10")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << " (see --help)\n";
        return 2;
    }

    const auto* active = app.get_subcommands().front();
    const std::string command = active->get_name();

    MaterialParams params;
    OutputFormat format{};
    try {
        format = parse_format(common.format);
        params = default_params();
        for (const auto& kv : common.sets) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw UsageError("--set expects KEY=VALUE, got '" + kv + "'");
            apply_override(params, trim(std::string_view(kv).substr(0, eq)),
                           trim(std::string_view(kv).substr(eq + 1)));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const LookupError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    Table table;
    int failures = 0;
    std::string name = command;
    try {
        validate(params);
        if (command == "energy") {
            const auto t = t_opt.resolve("t");
            if (t.size() != 1) throw UsageError("energy takes a single --t");
            if (eps_opt.given() == x_opt.given()) {
                throw UsageError("energy needs exactly one of --eps... or --x...");
            }
            std::vector<ValleyKind> valleys;
            if (valley == "all") valleys.assign(all_valleys.begin(), all_valleys.end());
            else valleys.push_back(parse_valley(valley));
            table.header = {"valley", "t_nm", "eps_par", "e0_eV", "de1_eV", "de2_eV", "eq_eV", "total_eV"};
            std::vector<double> strains;
            if (eps_opt.given()) {
                strains = eps_opt.resolve("eps");
            } else {
                for (double x : x_opt.resolve("x")) strains.push_back(x_to_strain(x, params.lattice));
            }
            for (double eps : strains) {
                for (ValleyKind v : valleys) {
                    const ValleyEnergy e = total_energy(v, params, t[0], eps);
                    table.rows.push_back({Cell{std::string(to_string(v))}, Cell{t[0]}, Cell{eps},
                                          Cell{e.e0}, Cell{e.de1}, Cell{e.de2}, Cell{e.eq},
                                          Cell{e.total}});
                }
            }
        } else if (command == "well") {
            const ValleyKind v = parse_valley(valley);
            table.header = {"t_nm", "E_q_eV"};
            for (const auto& p : eq_vs_thickness(v, params, t_opt.resolve("t"))) {
                table.rows.push_back({Cell{p.t}, Cell{p.eq}});
            }
        } else if (command == "crossover") {
            table.header = kCrossoverHeader;
            failures = crossover_rows(table, params, t_opt.resolve("t"), true, true, &err);
        } else if (command == "hc") {
            RelaxationInput templ = RelaxationInput::from_params(params, 1.0);
            templ.misfit_model = parse_misfit_model(misfit_model);
            templ.misfit_slope = misfit_slope;
            table.header = kHcHeader;
            hc_rows(table, templ, x_opt.resolve("x"));
        } else if (command == "sensitivity") {
            table.header = kSensitivityHeader;
            sensitivity_rows(table, params, t_opt.resolve("t"), parse_sensitivity_mode(mode));
        } else if (command == "splitting") {
            const auto t = t_opt.resolve("t");
            if (t.size() != 1) throw UsageError("splitting takes a single --t");
            table.header = {"t_nm", "x", "eps_par", "delta6_minus_l1_eV", "l3_minus_l1_eV"};
            for (double x : x_opt.resolve("x")) {
                const Splitting s = splitting_report(params, t[0], x);
                table.rows.push_back({Cell{t[0]}, Cell{x}, Cell{x_to_strain(x, params.lattice)},
                                      Cell{s.delta6_minus_l1}, Cell{s.l3_minus_l1}});
            }
        } else if (command == "figure") {
            const FigureId id = parse_figure_id(figure);
            name = std::string(to_string(id));
            table = figure_table(id, params);
        }

        const std::string text = render(table, format);
        if (const auto path = output_path(common, name, format)) write_atomic(*path, text);
        else out << text;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const LookupError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return failures > 0 ? 1 : 0;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace strainvalley::cli
