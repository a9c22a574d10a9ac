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

/** @file cli_io.hpp
 *  @brief Command-line driver, flat key-value configuration, and CSV /
 *         JSON-lines table emission.
 *
 *  Configuration files hold one `key = value` per line; `#` starts a comment.
 *  Dotted keys override material parameters (see override_keys()); undotted
 *  keys name a long flag of the active command (`t-min = 1` is `--t-min 1`).
 *  Flags given on the command line win over the file.
 *
 *  Numbers are written with 9 significant digits in the C locale.
 *  Exit status: 0 success, 1 domain or infeasibility error, 2 usage error.
 */

#ifndef STRAINVALLEY_CLI_IO_HPP
#define STRAINVALLEY_CLI_IO_HPP

#include "strainvalley/material_db.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace strainvalley::cli {

inline constexpr const char* kOutputDirEnv = "STRAINVALLEY_OUTPUT_DIR";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, JsonLines };

OutputFormat parse_format(std::string_view name);

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

/// "{:.9g}" with "nan" / "inf" spelled out; independent of the global locale.
std::string format_number(double v);

std::string render(const Table& table, OutputFormat format);

/// Writes to a sibling temporary file then renames it over `path`.
/// Throws UsageError when the destination cannot be written.
void write_atomic(const std::filesystem::path& path, std::string_view content);

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;
};

/// min, min + step, ..., up to max (inclusive within 1e-9 of a step).
/// Throws UsageError for step <= 0, max < min, or non-finite bounds.
std::vector<double> make_grid(const GridSpec& spec);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Throws UsageError with the line number for malformed lines.
KeyValues parse_config_text(std::string_view text);
KeyValues parse_config_file(const std::filesystem::path& path);

/// Dotted parameter keys accepted by apply_override.
std::vector<std::string> override_keys();

/// Applies one `key = value` override; `deformation.set` selects a literature
/// set by label. Throws LookupError for unknown keys, UsageError for
/// non-numeric values. Call validate() after the last override.
void apply_override(MaterialParams& params, std::string_view key, std::string_view value);

enum class FigureId { Fig1, Fig2, Fig3, Fig4, Fig5, Fig7, Fig8, Fig9, Fig10 };

FigureId parse_figure_id(std::string_view name);
std::string_view to_string(FigureId id);

/// The sweep behind one figure. Per-point failures become NaN cells.
Table figure_table(FigureId id, const MaterialParams& params);

void emit_figure_data(FigureId id, const MaterialParams& params, const std::filesystem::path& path);

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace strainvalley::cli

#endif
