#include "hierq/sweep_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hierq/errors.hpp"

namespace hierq {

namespace {

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_alpha(double a) {
  if (a == 0.0) a = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", a);
  return buf;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not a number: '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("trailing characters in number: '" + text + "'");
  return v;
}

}  // namespace

std::string csv_header(std::size_t variables) {
  std::string header = "alpha";
  for (std::size_t k = 1; k <= variables; ++k) header += ",I" + std::to_string(k);
  header += ",entropy_bits,sum_residual,projection_residual";
  return header;
}

std::string format_csv_row(const SweepRow& row) {
  std::string line = format_alpha(row.alpha);
  for (double v : row.spectrum.values) line += "," + format_value(v);
  line += "," + format_value(row.entropy_bits);
  line += "," + format_value(row.sum_residual);
  line += "," + format_value(row.projection_residual);
  return line;
}

void emit_csv(const SweepTable& table, std::ostream& out) {
  out << csv_header(table.variables) << '\n';
  for (const auto& row : table.rows) out << format_csv_row(row) << '\n';
}

void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  emit_csv(table, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

SweepTable parse_csv(std::istream& in, std::string family_label) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("CSV is empty");
  const auto header = split_commas(line);
  if (header.size() < 5 || header.front() != "alpha") throw InvalidArgument("unrecognized CSV header");
  const std::size_t variables = header.size() - 4;
  if (line != csv_header(variables)) throw InvalidArgument("unrecognized CSV header: " + line);

  SweepTable table;
  table.family_label = std::move(family_label);
  table.variables = variables;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (fields.size() != header.size()) {
      throw InvalidArgument("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(header.size()));
    }
    SweepRow row;
    row.alpha = parse_number(fields[0]);
    row.spectrum.variables = variables;
    for (std::size_t k = 0; k < variables; ++k) row.spectrum.values.push_back(parse_number(fields[1 + k]));
    row.entropy_bits = parse_number(fields[1 + variables]);
    row.sum_residual = parse_number(fields[2 + variables]);
    row.projection_residual = parse_number(fields[3 + variables]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

SweepTable parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_csv(in);
}

std::filesystem::path plot_script_path(const std::filesystem::path& csv_path) {
  std::filesystem::path out = csv_path;
  out.replace_extension(".py");
  return out;
}

void emit_plot_script(const SweepTable& table, const std::string& csv_name, std::ostream& out) {
  const std::string family = table.family_label.empty() ? "custom" : table.family_label;
  out << "#!/usr/bin/env python3\n"
      << "# Hierarchical information I^(k) versus alpha for the " << family << " family.\n"
      << "# Generated by hierq; reads " << csv_name << " from this script's directory.\n"
      << "import csv\n"
      << "import os\n"
      << "\n"
      << "import matplotlib\n"
      << "matplotlib.use(\"Agg\")\n"
      << "import matplotlib.pyplot as plt\n"
      << "\n"
      << "HERE = os.path.dirname(os.path.abspath(__file__))\n"
      << "CSV_PATH = os.path.join(HERE, \"" << csv_name << "\")\n"
      << "LEVELS = [";
  for (std::size_t k = 1; k <= table.variables; ++k) {
    out << (k > 1 ? ", " : "") << "\"I" << k << "\"";
  }
  out << "]\n"
      << "\n"
      << "\n"
      << "def main():\n"
      << "    alpha = []\n"
      << "    series = {name: [] for name in LEVELS}\n"
      << "    with open(CSV_PATH, newline=\"\") as f:\n"
      << "        for row in csv.DictReader(f):\n"
      << "            alpha.append(float(row[\"alpha\"]))\n"
      << "            for name in LEVELS:\n"
      << "                series[name].append(float(row[name]))\n"
      << "\n"
      << "    fig, ax = plt.subplots(figsize=(6, 4.5))\n"
      << "    for k, name in enumerate(LEVELS, start=1):\n"
      << "        ax.plot(alpha, series[name], marker=\".\", markersize=3, label=\"$I^{(%d)}$\" % k)\n"
      << "    ax.set_xlabel(r\"$\\alpha$\")\n"
      << "    ax.set_ylabel(\"hierarchical information [bits]\")\n"
      << "    ax.set_title(r\"Hierarchical information $I^{(k)}$ of $\\varrho_{\\mathrm{" << family
      << "}}$ (n = " << table.variables << ")\")\n"
      << "    ax.set_xlim(0.0, 1.0)\n"
      << "    ax.grid(True, alpha=0.3)\n"
      << "    ax.legend()\n"
      << "    fig.tight_layout()\n"
      << "    fig.savefig(os.path.splitext(CSV_PATH)[0] + \".png\", dpi=150)\n"
      << "\n"
      << "\n"
      << "if __name__ == \"__main__\":\n"
      << "    main()\n";
}

void emit_plot_script(const SweepTable& table, const std::filesystem::path& csv_path) {
  const auto script = plot_script_path(csv_path);
  std::ofstream out(script, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + script.string() + " for writing");
  emit_plot_script(table, csv_path.filename().string(), out);
  out.flush();
  if (!out) throw IoError("failed writing " + script.string());
}

}  // namespace hierq
