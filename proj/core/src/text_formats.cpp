#include "hierq/text_formats.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hierq/errors.hpp"

namespace hierq {

namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<double> parse_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<double> out;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: '" + token + "'");
    }
    if (used != token.size()) throw InvalidArgument("malformed number: '" + token + "'");
    out.push_back(v);
  }
  return out;
}

std::size_t as_count(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) {
    throw InvalidArgument(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

JointDistribution read_distribution(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw InvalidArgument("distribution file is empty");
  const auto head = parse_fields(line);
  if (head.empty()) throw InvalidArgument("missing variable count");
  const std::size_t n = as_count(head[0], "variable count");
  if (head.size() != n + 1) {
    throw InvalidArgument("header lists " + std::to_string(head.size() - 1) +
                          " alphabet sizes for " + std::to_string(n) + " variables");
  }
  std::vector<std::size_t> sizes;
  std::size_t cells = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    sizes.push_back(as_count(head[i], "alphabet size"));
    cells *= sizes.back();
    if (cells > (std::size_t{1} << 24)) throw InvalidArgument("distribution too large");
  }

  std::vector<double> probs;
  probs.reserve(cells);
  double total = 0.0;
  while (next_content_line(in, line)) {
    const auto fields = parse_fields(line);
    if (fields.size() != 1) throw InvalidArgument("expected one probability per line");
    if (!std::isfinite(fields[0]) || fields[0] < 0.0) {
      throw InvalidArgument("probabilities must be finite and nonnegative");
    }
    probs.push_back(fields[0]);
    total += fields[0];
  }
  if (probs.size() != cells) {
    throw InvalidArgument("expected " + std::to_string(cells) + " probabilities, found " +
                          std::to_string(probs.size()));
  }
  if (std::abs(total - 1.0) > kTextInputTolerance) {
    throw InvalidArgument("probabilities sum to " + std::to_string(total));
  }
  return JointDistribution::from_weights(std::move(sizes), std::move(probs));
}

JointDistribution read_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_distribution(in);
}

void write_distribution(const JointDistribution& p, std::ostream& out) {
  out << p.variables();
  for (std::size_t s : p.alphabet_sizes()) out << ' ' << s;
  out << '\n';
  char buf[64];
  for (double v : p.probabilities()) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << '\n';
  }
}

StateVector read_state(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw InvalidArgument("state file is empty");
  const auto head = parse_fields(line);
  if (head.size() != 1) throw InvalidArgument("state header must be the qubit count alone");
  const std::size_t n = as_count(head[0], "qubit count");
  if (n > kMaxQubits) throw InvalidArgument("state file exceeds the qubit limit");
  const std::size_t dim = std::size_t{1} << n;

  ComplexVector amps(static_cast<Eigen::Index>(dim));
  std::size_t count = 0;
  while (next_content_line(in, line)) {
    const auto fields = parse_fields(line);
    if (fields.empty() || fields.size() > 2) throw InvalidArgument("expected 're [im]' per line");
    if (count == dim) throw InvalidArgument("too many amplitudes in state file");
    amps[static_cast<Eigen::Index>(count++)] = Complex(fields[0], fields.size() == 2 ? fields[1] : 0.0);
  }
  if (count != dim) {
    throw InvalidArgument("expected " + std::to_string(dim) + " amplitudes, found " +
                          std::to_string(count));
  }
  const double norm2 = amps.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kTextInputTolerance) {
    throw InvalidArgument("state amplitudes are not normalized (squared norm " +
                          std::to_string(norm2) + ")");
  }
  amps /= std::sqrt(norm2);
  return StateVector(std::move(amps));
}

StateVector read_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_state(in);
}

}  // namespace hierq
