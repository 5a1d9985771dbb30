#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hierq/sweep.hpp"

namespace hierq {

// CSV layout:
//   alpha,I1,...,In,entropy_bits,sum_residual,projection_residual
// alpha in fixed notation with 12 decimals, everything else with 12
// significant digits; every row, including the last, ends in '\n'.
std::string csv_header(std::size_t variables);
std::string format_csv_row(const SweepRow& row);
void emit_csv(const SweepTable& table, std::ostream& out);
// Throws IoError when the file cannot be written.
void emit_csv(const SweepTable& table, const std::filesystem::path& path);

// Reads a table written by emit_csv. Spectrum diagnostics other than the
// level values are not stored in the CSV and come back empty. Throws
// InvalidArgument on malformed input, IoError on unreadable files.
SweepTable parse_csv(std::istream& in, std::string family_label = {});
SweepTable parse_csv(const std::filesystem::path& path);

// foo/bar.csv -> foo/bar.py
std::filesystem::path plot_script_path(const std::filesystem::path& csv_path);

// A standalone matplotlib script drawing every I^(k) against alpha from the
// CSV named `csv_name`, resolved next to the script.
void emit_plot_script(const SweepTable& table, const std::string& csv_name, std::ostream& out);
void emit_plot_script(const SweepTable& table, const std::filesystem::path& csv_path);

}  // namespace hierq
