#include "weyl/universal.hpp"

#include <algorithm>
#include <set>

#include "weyl/groebner.hpp"

namespace weyl {

SupportCapExceeded::SupportCapExceeded(std::size_t size, std::size_t cap,
                                       std::vector<WeylElement> partial, std::size_t iterations)
    : WeylError("support of size " + std::to_string(size) + " exceeds the cap of " +
                std::to_string(cap) + " monomials"),
      size_(size),
      cap_(cap),
      partial_(std::move(partial)),
      iterations_(iterations) {}

namespace {

// w . (b - a) >= 1
LinearConstraint strictly_below(const ExponentPair& a, const ExponentPair& b) {
  const auto fa = a.flat();
  const auto fb = b.flat();
  LinearConstraint c{std::vector<Rational>(fa.size()), 1};
  for (std::size_t k = 0; k < fa.size(); ++k) c.coefficients[k] = Rational(fb[k]) - Rational(fa[k]);
  return c;
}

void append_nonnegativity(std::vector<LinearConstraint>& system, std::size_t width) {
  for (std::size_t k = 0; k < width; ++k) {
    LinearConstraint c{std::vector<Rational>(width, 0), 0};
    c.coefficients[k] = 1;
    system.push_back(std::move(c));
  }
}

void validate(const Restriction& r) {
  if (r.monomials.empty()) return;
  const std::size_t n = r.monomials.front().dimension();
  std::set<ExponentPair> seen;
  for (const auto& m : r.monomials) {
    if (m.dimension() != n) throw DimensionMismatch(n, m.dimension());
    if (!seen.insert(m).second) throw WeylError("restriction lists a monomial twice");
  }
}

// Feasibility of: prefix ascending, and prefix.back() below every remaining
// monomial. Necessary for any completion of the prefix to be realizable.
bool prefix_feasible(const std::vector<ExponentPair>& prefix,
                     const std::vector<ExponentPair>& remaining) {
  std::vector<LinearConstraint> system;
  for (std::size_t k = 1; k < prefix.size(); ++k) system.push_back(strictly_below(prefix[k - 1], prefix[k]));
  for (const auto& c : remaining) system.push_back(strictly_below(prefix.back(), c));
  const std::size_t width = prefix.back().flat().size();
  append_nonnegativity(system, width);
  return solve_inequalities(system, width).feasible();
}

void extend(std::vector<ExponentPair>& prefix, std::vector<ExponentPair>& remaining,
            std::vector<RealizedRestriction>& out) {
  if (remaining.empty()) {
    Restriction r{prefix};
    Realization real = realize_restriction(r);
    if (!real.realizable()) throw InvariantViolation("pruned enumeration reached an infeasible leaf");
    out.push_back({std::move(r), std::move(*real.witness)});
    return;
  }
  for (std::size_t k = 0; k < remaining.size(); ++k) {
    ExponentPair next = remaining[k];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
    prefix.push_back(next);
    if (prefix_feasible(prefix, remaining)) extend(prefix, remaining, out);
    prefix.pop_back();
    remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(k), std::move(next));
  }
}

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) throw SupportCapExceeded(size, cap);
}

}  // namespace

std::vector<LinearConstraint> realization_constraints(const Restriction& r) {
  std::vector<LinearConstraint> system;
  if (r.monomials.empty()) return system;
  for (std::size_t k = 1; k < r.monomials.size(); ++k) {
    system.push_back(strictly_below(r.monomials[k - 1], r.monomials[k]));
  }
  append_nonnegativity(system, r.monomials.front().flat().size());
  return system;
}

Realization realize_restriction(const Restriction& r) {
  validate(r);
  if (r.monomials.empty()) throw WeylError("cannot realize an empty restriction");
  const std::size_t width = r.monomials.front().flat().size();
  std::vector<LinearConstraint> system = realization_constraints(r);
  FeasibilityResult res = solve_inequalities(system, width);
  if (res.feasible()) {
    WeightWitness w{std::move(*res.point)};
    if (!witness_reproduces(w, r)) throw InvariantViolation("weight witness does not reproduce");
    return {std::move(w), std::nullopt};
  }
  if (!is_farkas_certificate(system, *res.farkas)) {
    throw InvariantViolation("invalid Farkas certificate");
  }
  return {std::nullopt, FarkasWitness{std::move(system), std::move(*res.farkas)}};
}

bool witness_reproduces(const WeightWitness& witness, const Restriction& r) {
  const OrderingSpec ord = witness.ordering();
  for (std::size_t k = 1; k < r.monomials.size(); ++k) {
    if (compare(ord, r.monomials[k - 1], r.monomials[k]) >= 0) return false;
  }
  return true;
}

std::vector<RealizedRestriction> enumerate_restrictions(const MonomialSet& support,
                                                        const EnumerationOptions& options) {
  check_cap(support.size(), options.support_cap);
  std::vector<RealizedRestriction> out;
  if (support.empty()) return out;
  std::vector<ExponentPair> items(support.begin(), support.end());

  if (!options.pruned) {
    std::sort(items.begin(), items.end(), GradedLexLess{});
    do {
      Restriction r{items};
      Realization real = realize_restriction(r);
      if (real.realizable()) out.push_back({std::move(r), std::move(*real.witness)});
    } while (std::next_permutation(items.begin(), items.end(), GradedLexLess{}));
    return out;
  }

  std::vector<ExponentPair> prefix;
  extend(prefix, items, out);
  return out;
}

CertificationResult certify_universal(std::span<const WeylElement> basis,
                                      const CertifyOptions& options) {
  if (basis.empty()) throw WeylError("cannot certify an empty basis");
  for (const auto& b : basis) {
    if (b.is_zero()) throw WeylError("basis elements must be nonzero");
  }
  const MonomialSet supp = support(basis);
  check_cap(supp.size(), options.support_cap);

  UniversalCertificate cert{std::vector<WeylElement>(basis.begin(), basis.end()),
                            std::vector<ExponentPair>(supp.begin(), supp.end()),
                            {},
                            0,
                            {}};
  for (auto& [restriction, witness] :
       enumerate_restrictions(supp, {options.support_cap, true})) {
    const OrderingSpec ord = witness.ordering();
    bool passed = is_groebner(basis, ord);
    for (const auto& g : options.ideal_generators) {
      if (!passed) break;
      passed = normal_form(g, basis, ord).is_zero();
    }
    if (!passed) return CounterexampleOrdering{std::move(restriction), std::move(witness)};
    cert.cones.push_back({std::move(restriction), std::move(witness), true});
  }
  return cert;
}

namespace {

// Scales w so its GradedLexLess-greatest term has coefficient 1; elements
// equal up to a scalar then compare equal.
WeylElement display_monic(WeylElement w) {
  const Rational c = w.terms().rbegin()->second;
  w *= 1 / c;
  return w;
}

}  // namespace

UniversalCertificate universal_groebner(std::span<const WeylElement> generators,
                                        const SaturationOptions& options) {
  const BuchbergerOptions bopts{true, false};
  std::vector<WeylElement> v;
  for (auto& g : buchberger(generators, options.initial_ordering, bopts).elements) {
    v.push_back(display_monic(std::move(g)));
  }
  if (v.empty()) throw WeylError("universal basis of the zero ideal is not defined here");

  std::vector<std::size_t> sizes;
  for (std::size_t round = 1; round <= options.max_iterations; ++round) {
    sizes.push_back(v.size());
    CertificationResult res;
    try {
      res = certify_universal(v, {options.support_cap, {}});
    } catch (const SupportCapExceeded& e) {
      throw SupportCapExceeded(e.size(), e.cap(), v, round);
    }
    if (auto* cert = std::get_if<UniversalCertificate>(&res)) {
      cert->iterations = round;
      cert->basis_sizes = std::move(sizes);
      return std::move(*cert);
    }
    const auto& counter = std::get<CounterexampleOrdering>(res);
    const GroebnerBasis local = buchberger(generators, counter.witness.ordering(), bopts);
    std::size_t added = 0;
    for (const auto& element : local.elements) {
      WeylElement g = display_monic(element);
      if (std::find(v.begin(), v.end(), g) == v.end()) {
        v.push_back(std::move(g));
        ++added;
      }
    }
    if (added == 0) throw InvariantViolation("saturation round added no new basis element");
  }
  throw InvariantViolation("saturation did not converge within the iteration budget");
}

}  // namespace weyl
