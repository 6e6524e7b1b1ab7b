#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// coefficients . x >= bound
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational bound;
};

/// Outcome of an exact feasibility query. Exactly one of point and farkas is
/// set. A Farkas certificate is a vector y >= 0, one entry per input
/// constraint, with sum y_i a_i = 0 and sum y_i b_i > 0: adding the scaled
/// constraints yields 0 >= positive.
struct FeasibilityResult {
  std::optional<std::vector<Rational>> point;
  std::optional<std::vector<Rational>> farkas;

  bool feasible() const { return point.has_value(); }
};

/// Fourier-Motzkin elimination over Q with multiplier tracking, so that an
/// infeasible system always comes back with its Farkas certificate.
FeasibilityResult solve_inequalities(std::span<const LinearConstraint> constraints,
                                     std::size_t dimension);

bool satisfies(std::span<const LinearConstraint> constraints, std::span<const Rational> point);

/// Checks a certificate against the system independently of the solver.
bool is_farkas_certificate(std::span<const LinearConstraint> constraints,
                           std::span<const Rational> multipliers);

}  // namespace weyl
