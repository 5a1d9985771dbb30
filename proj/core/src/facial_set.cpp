#include "facial_set.hpp"

#include <cmath>
#include <limits>

#include "hierq/errors.hpp"

namespace hierq::detail {

MarginIndex build_margin_index(const std::vector<std::size_t>& sizes,
                               const std::vector<std::size_t>& variables) {
  MarginIndex index;
  index.variables = variables;
  index.margin_cells = 1;
  for (std::size_t v : variables) index.margin_cells *= sizes[v];

  std::size_t cells = 1;
  for (std::size_t s : sizes) cells *= s;
  index.cell_to_margin.resize(cells);

  std::vector<std::size_t> digits(sizes.size(), 0);
  for (std::size_t flat = 0; flat < cells; ++flat) {
    std::size_t m = 0;
    for (std::size_t v : variables) m = m * sizes[v] + digits[v];
    index.cell_to_margin[flat] = m;
    // Odometer increment, last variable fastest.
    for (std::size_t v = sizes.size(); v-- > 0;) {
      if (++digits[v] < sizes[v]) break;
      digits[v] = 0;
    }
  }
  return index;
}

std::vector<double> margin_of(const std::vector<double>& table, const MarginIndex& index) {
  std::vector<double> out(index.margin_cells, 0.0);
  for (std::size_t flat = 0; flat < table.size(); ++flat) {
    out[index.cell_to_margin[flat]] += table[flat];
  }
  return out;
}

std::vector<double> simplex_maximize(const std::vector<std::vector<double>>& a,
                                     const std::vector<double>& b, const std::vector<double>& c) {
  constexpr double kEps = 1e-11;
  const std::size_t rows = a.size();
  const std::size_t vars = c.size();
  const std::size_t cols = vars + rows;  // structural + slack

  // tableau[r] = [A_r | e_r | b_r]; objective row holds reduced costs.
  std::vector<std::vector<double>> tab(rows, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < vars; ++j) tab[r][j] = a[r][j];
    tab[r][vars + r] = 1.0;
    tab[r][cols] = b[r];
    basis[r] = vars + r;
  }
  std::vector<double> obj(cols + 1, 0.0);
  for (std::size_t j = 0; j < vars; ++j) obj[j] = -c[j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][enter] > kEps) {
        const double ratio = tab[r][cols] / tab[r][enter];
        if (leave == rows || ratio < best - kEps) {
          best = ratio;
          leave = r;
        } else if (ratio <= best + kEps && basis[r] < basis[leave]) {
          leave = r;
        }
      }
    }
    if (leave == rows) throw NumericalFailure("simplex: objective is unbounded");

    const double pivot = tab[leave][enter];
    for (double& x : tab[leave]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const double f = tab[r][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) tab[r][j] -= f * tab[leave][j];
    }
    const double f = obj[enter];
    for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }

  std::vector<double> x(vars, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) x[basis[r]] = tab[r][cols];
  }
  return x;
}

std::vector<bool> projection_support(const JointDistribution& p,
                                     const std::vector<MarginIndex>& margins) {
  const std::vector<double> table(p.probabilities().begin(), p.probabilities().end());
  const std::size_t cells = table.size();

  // Upper bound: a cell can only carry mass if every constrained marginal
  // cell it falls in is positive. Lower bound: p itself has the marginals.
  std::vector<bool> candidate(cells, true);
  std::vector<std::vector<double>> targets;
  targets.reserve(margins.size());
  for (const auto& m : margins) {
    targets.push_back(margin_of(table, m));
    for (std::size_t x = 0; x < cells; ++x) {
      if (targets.back()[m.cell_to_margin[x]] <= 0.0) candidate[x] = false;
    }
  }
  std::vector<std::size_t> free_cells;
  bool settled = true;
  for (std::size_t x = 0; x < cells; ++x) {
    if (!candidate[x]) continue;
    free_cells.push_back(x);
    if (table[x] <= 0.0) settled = false;
  }
  if (settled) return candidate;

  // Homogenized LP over the candidate cells: variables (q_x, lambda, s_x),
  //   maximize sum s_x
  //   subject to  margin_A(q) = lambda * target_A   for every margin A,
  //               s_x <= q_x,  s_x <= 1.
  // Rescaling and summing feasible points lets every supportable cell reach
  // s_x = 1, while q_x = 0 is forced elsewhere.
  const std::size_t u = free_cells.size();
  const std::size_t lambda = u;
  const std::size_t vars = 2 * u + 1;
  std::vector<std::vector<double>> a;
  std::vector<double> b;

  for (std::size_t mi = 0; mi < margins.size(); ++mi) {
    const auto& m = margins[mi];
    std::vector<std::vector<double>> rows(m.margin_cells, std::vector<double>(vars, 0.0));
    std::vector<bool> used(m.margin_cells, false);
    for (std::size_t i = 0; i < u; ++i) {
      const std::size_t cell = m.cell_to_margin[free_cells[i]];
      rows[cell][i] = 1.0;
      used[cell] = true;
    }
    for (std::size_t cell = 0; cell < m.margin_cells; ++cell) {
      if (!used[cell]) continue;
      rows[cell][lambda] = -targets[mi][cell];
      a.push_back(rows[cell]);
      b.push_back(0.0);
      for (double& v : rows[cell]) v = -v;
      a.push_back(rows[cell]);
      b.push_back(0.0);
    }
  }
  for (std::size_t i = 0; i < u; ++i) {
    std::vector<double> row(vars, 0.0);
    row[u + 1 + i] = 1.0;
    row[i] = -1.0;
    a.push_back(row);
    b.push_back(0.0);
    row[i] = 0.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }
  std::vector<double> c(vars, 0.0);
  for (std::size_t i = 0; i < u; ++i) c[u + 1 + i] = 1.0;

  const std::vector<double> x = simplex_maximize(a, b, c);

  std::vector<bool> support(cells, false);
  for (std::size_t i = 0; i < u; ++i) {
    support[free_cells[i]] = x[u + 1 + i] > 0.5;
  }
  // Cells p already occupies are supportable regardless of LP rounding.
  for (std::size_t x_cell = 0; x_cell < cells; ++x_cell) {
    if (table[x_cell] > 0.0) support[x_cell] = true;
  }
  return support;
}

}  // namespace hierq::detail
