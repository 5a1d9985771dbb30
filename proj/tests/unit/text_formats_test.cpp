#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hierq/errors.hpp"
#include "hierq/text_formats.hpp"

using namespace hierq;

TEST_CASE("distribution files") {
  std::istringstream in(
      "# three bits\n"
      "3 2 2 2\n"
      "0.5\n0\n0\n0\n\n0\n0\n0\n0.5\n");
  const auto p = read_distribution(in);
  CHECK(p.variables() == 3);
  CHECK(p[0] == 0.5);
  CHECK(p[7] == 0.5);

  std::ostringstream out;
  write_distribution(p, out);
  std::istringstream back(out.str());
  const auto q = read_distribution(back);
  for (std::size_t i = 0; i < 8; ++i) CHECK(q[i] == p[i]);

  std::istringstream mixed("2 3 2\n0.1\n0.2\n0.1\n0.2\n0.3\n0.1\n");
  CHECK(read_distribution(mixed).alphabet_sizes() == std::vector<std::size_t>{3, 2});
}

TEST_CASE("distribution file errors") {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_distribution(in);
  };
  CHECK_THROWS_AS(parse(""), InvalidArgument);
  CHECK_THROWS_AS(parse("2 2\n0.5\n0.5\n"), InvalidArgument);            // missing size
  CHECK_THROWS_AS(parse("1 2\n0.5\n"), InvalidArgument);                 // too few
  CHECK_THROWS_AS(parse("1 2\n0.5\n0.4\n"), InvalidArgument);            // sum
  CHECK_THROWS_AS(parse("1 2\n1.5\n-0.5\n"), InvalidArgument);           // negative
  CHECK_THROWS_AS(parse("1 2\n0.5 0.5\n"), InvalidArgument);             // two per line
  CHECK_THROWS_AS(parse("1.5 2\n0.5\n0.5\n"), InvalidArgument);          // fractional count
  CHECK_THROWS_AS(parse("1 2\n0.5x\n0.5\n"), InvalidArgument);
  CHECK_THROWS_AS(read_distribution(std::filesystem::path("/nonexistent/p.txt")), IoError);
}

TEST_CASE("state files") {
  std::istringstream in("2\n0.7071067811865476\n0 0\n0\n0.7071067811865476 0\n");
  const auto psi = read_state(in);
  CHECK(psi.qubits() == 2);
  CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) <= 1e-15);
  CHECK(std::abs(psi[3].real() - 1.0 / std::sqrt(2.0)) <= 1e-15);

  std::istringstream complex_amp("1\n0 0.6\n0.8 0\n");
  CHECK(read_state(complex_amp)[0] == Complex(0.0, 0.6));

  auto parse = [](const char* text) {
    std::istringstream s(text);
    return read_state(s);
  };
  CHECK_THROWS_AS(parse("2\n1\n0\n0\n"), InvalidArgument);        // too few
  CHECK_THROWS_AS(parse("1\n1\n0\n0\n"), InvalidArgument);        // too many
  CHECK_THROWS_AS(parse("1\n1\n1\n"), InvalidArgument);           // not normalized
  CHECK_THROWS_AS(parse("1 2\n1\n0\n"), InvalidArgument);         // bad header
  CHECK_THROWS_AS(parse("1\n1 0 0\n0\n"), InvalidArgument);       // three fields
  CHECK_THROWS_AS(read_state(std::filesystem::path("/nonexistent/s.txt")), IoError);
}
