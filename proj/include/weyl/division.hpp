#pragma once

#include <span>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/ordering.hpp"

namespace weyl {

/// lt and the coefficient c of ls = c * lt for a nonzero element.
struct LeadingData {
  ExponentPair monomial;
  Rational coefficient;
};

/// A single term c * xi^lambda d^mu.
struct Term {
  Rational coefficient;
  ExponentPair monomial;
};

/// Throws WeylError for w == 0.
LeadingData leading(const WeylElement& w, const OrderingSpec& ord);

/// ls(num) / ls(den). Throws WeylError unless den.monomial divides num.monomial.
Term leading_quotient(const LeadingData& num, const LeadingData& den);

struct DivisionResult {
  std::vector<WeylElement> quotients;  // one per divisor, in list order
  WeylElement remainder;
  // Leading monomial of the working element before each step; strictly
  // decreasing under the ordering.
  std::vector<ExponentPair> leading_trace;
};

/// Division of w by the ordered list divisors. Each step looks at the leading
/// term of the working element: the first nonzero divisor whose leading
/// monomial divides it is used to cancel it (the cofactor multiplies on the
/// left); otherwise the term moves to the remainder. The result satisfies
///  (a) w = sum q_f f + r,
///  (b) no lt(f) divides a monomial of supp(r),
///  (c) LT(q_f f) <= LT(w) whenever q_f f != 0.
DivisionResult divide(const WeylElement& w, std::span<const WeylElement> divisors,
                      const OrderingSpec& ord);

/// The remainder of divide() without accumulating quotients.
WeylElement normal_form(const WeylElement& w, std::span<const WeylElement> divisors,
                        const OrderingSpec& ord);

/// Independent verification of the three division clauses.
struct DivisionContract {
  bool reconstruction = false;         // (a)
  bool remainder_irreducible = false;  // (b)
  bool quotient_bound = false;         // (c)

  bool holds() const { return reconstruction && remainder_irreducible && quotient_bound; }
};

DivisionContract check_division_contract(const WeylElement& w,
                                         std::span<const WeylElement> divisors,
                                         const OrderingSpec& ord, const DivisionResult& result);

}  // namespace weyl
