#include "weyl/feasibility.hpp"

#include <algorithm>
#include <map>

#include "weyl/error.hpp"

namespace weyl {

namespace {

// A derived constraint together with the nonnegative combination of input
// constraints it came from.
struct Row {
  std::vector<Rational> a;
  Rational b;
  std::vector<Rational> mult;
};

// Scales so the first nonzero coefficient has absolute value 1.
void normalize(Row& row) {
  auto it = std::find_if(row.a.begin(), row.a.end(), [](const Rational& q) { return q != 0; });
  if (it == row.a.end()) return;
  const Rational s = 1 / abs(*it);
  for (auto& q : row.a) q *= s;
  row.b *= s;
  for (auto& m : row.mult) m *= s;
}

// Keeps one row per direction: the one with the largest bound.
void deduplicate(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, std::size_t> best;
  std::vector<Row> out;
  for (auto& row : rows) {
    auto [it, inserted] = best.try_emplace(row.a, out.size());
    if (inserted) {
      out.push_back(std::move(row));
    } else if (row.b > out[it->second].b) {
      out[it->second] = std::move(row);
    }
  }
  rows = std::move(out);
}

}  // namespace

FeasibilityResult solve_inequalities(std::span<const LinearConstraint> constraints,
                                     std::size_t dimension) {
  const std::size_t m = constraints.size();
  std::vector<Row> rows;
  for (std::size_t k = 0; k < m; ++k) {
    if (constraints[k].coefficients.size() != dimension) {
      throw WeylError("constraint width does not match the variable count");
    }
    Row row{constraints[k].coefficients, constraints[k].bound, std::vector<Rational>(m, 0)};
    row.mult[k] = 1;
    for (auto& q : row.a) q.canonicalize();
    row.b.canonicalize();
    normalize(row);
    rows.push_back(std::move(row));
  }

  auto contradiction = [](const Row& row) {
    return row.b > 0 && std::all_of(row.a.begin(), row.a.end(),
                                    [](const Rational& q) { return q == 0; });
  };

  // stages[v] holds the rows involving variable v at the moment it was
  // eliminated; their other nonzero entries only involve variables > v.
  std::vector<std::vector<Row>> stages(dimension);
  for (std::size_t v = 0; v < dimension; ++v) {
    for (const auto& row : rows) {
      if (contradiction(row)) return {std::nullopt, row.mult};
    }
    std::vector<Row> pos, neg, rest;
    for (auto& row : rows) {
      const int s = sgn(row.a[v]);
      (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(row));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Rational cp = -q.a[v];
        const Rational cq = p.a[v];
        Row combined{std::vector<Rational>(dimension), cp * p.b + cq * q.b,
                     std::vector<Rational>(m)};
        for (std::size_t k = 0; k < dimension; ++k) combined.a[k] = cp * p.a[k] + cq * q.a[k];
        combined.a[v] = 0;
        for (std::size_t k = 0; k < m; ++k) combined.mult[k] = cp * p.mult[k] + cq * q.mult[k];
        normalize(combined);
        const bool trivial = std::all_of(combined.a.begin(), combined.a.end(),
                                         [](const Rational& q) { return q == 0; }) &&
                             combined.b <= 0;
        if (!trivial) rest.push_back(std::move(combined));
      }
    }
    stages[v] = std::move(pos);
    stages[v].insert(stages[v].end(), std::make_move_iterator(neg.begin()),
                     std::make_move_iterator(neg.end()));
    deduplicate(rest);
    rows = std::move(rest);
  }
  for (const auto& row : rows) {
    if (contradiction(row)) return {std::nullopt, row.mult};
  }

  // Back substitution from the last eliminated variable. Each variable takes
  // its tightest lower bound (or 0 / its upper bound when unbounded below).
  std::vector<Rational> x(dimension, 0);
  for (std::size_t v = dimension; v-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& row : stages[v]) {
      Rational rhs = row.b;
      for (std::size_t k = v + 1; k < dimension; ++k) rhs -= row.a[k] * x[k];
      const Rational bound = rhs / row.a[v];
      if (row.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo) {
      x[v] = *lo;
    } else if (hi) {
      x[v] = std::min(*hi, Rational(0));
    }
    if (lo && hi && *lo > *hi) throw InvariantViolation("Fourier-Motzkin back substitution failed");
  }
  if (!satisfies(constraints, x)) {
    throw InvariantViolation("Fourier-Motzkin produced a point violating the system");
  }
  return {std::move(x), std::nullopt};
}

bool satisfies(std::span<const LinearConstraint> constraints, std::span<const Rational> point) {
  for (const auto& c : constraints) {
    if (c.coefficients.size() != point.size()) return false;
    Rational lhs = 0;
    for (std::size_t k = 0; k < point.size(); ++k) lhs += c.coefficients[k] * point[k];
    if (lhs < c.bound) return false;
  }
  return true;
}

bool is_farkas_certificate(std::span<const LinearConstraint> constraints,
                           std::span<const Rational> multipliers) {
  if (multipliers.size() != constraints.size() || constraints.empty()) return false;
  const std::size_t dim = constraints.front().coefficients.size();
  std::vector<Rational> combo(dim, 0);
  Rational bound = 0;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (multipliers[k] < 0) return false;
    if (constraints[k].coefficients.size() != dim) return false;
    for (std::size_t j = 0; j < dim; ++j) combo[j] += multipliers[k] * constraints[k].coefficients[j];
    bound += multipliers[k] * constraints[k].bound;
  }
  return bound > 0 && std::all_of(combo.begin(), combo.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace weyl
