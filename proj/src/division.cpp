#include "weyl/division.hpp"

#include <optional>

#include "weyl/error.hpp"

namespace weyl {

LeadingData leading(const WeylElement& w, const OrderingSpec& ord) {
  if (w.is_zero()) throw WeylError("leading term of the zero element");
  auto best = w.terms().begin();
  for (auto it = std::next(best); it != w.terms().end(); ++it) {
    if (compare(ord, best->first, it->first) < 0) best = it;
  }
  return {best->first, best->second};
}

Term leading_quotient(const LeadingData& num, const LeadingData& den) {
  if (!monomial_divides(den.monomial, num.monomial)) {
    throw WeylError("leading quotient of non-divisible monomials");
  }
  return {num.coefficient / den.coefficient, monomial_quotient(num.monomial, den.monomial)};
}

namespace {

template <bool WithQuotients>
DivisionResult run_division(const WeylElement& w, std::span<const WeylElement> divisors,
                            const OrderingSpec& ord) {
  const std::size_t n = w.dimension();
  for (const auto& f : divisors) {
    if (f.dimension() != n) throw DimensionMismatch(n, f.dimension());
  }

  std::vector<std::optional<LeadingData>> heads;
  heads.reserve(divisors.size());
  for (const auto& f : divisors) {
    heads.push_back(f.is_zero() ? std::nullopt : std::optional(leading(f, ord)));
  }

  DivisionResult result{{}, WeylElement(n), {}};
  if constexpr (WithQuotients) result.quotients.assign(divisors.size(), WeylElement(n));

  TermMap remainder;
  WeylElement current = w;
  while (!current.is_zero()) {
    const LeadingData head = leading(current, ord);
    if constexpr (WithQuotients) result.leading_trace.push_back(head.monomial);

    std::size_t chosen = divisors.size();
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (heads[k] && monomial_divides(heads[k]->monomial, head.monomial)) {
        chosen = k;
        break;
      }
    }

    if (chosen == divisors.size()) {
      remainder.emplace(head.monomial, head.coefficient);
      current -= WeylElement::monomial(head.monomial, head.coefficient);
      continue;
    }
    const Term t = leading_quotient(head, *heads[chosen]);
    current -= mul_term_left(t.coefficient, t.monomial, divisors[chosen]);
    if constexpr (WithQuotients) {
      result.quotients[chosen] += WeylElement::monomial(t.monomial, t.coefficient);
    }
  }
  result.remainder = WeylElement(n, std::move(remainder));
  return result;
}

}  // namespace

DivisionResult divide(const WeylElement& w, std::span<const WeylElement> divisors,
                      const OrderingSpec& ord) {
  return run_division<true>(w, divisors, ord);
}

WeylElement normal_form(const WeylElement& w, std::span<const WeylElement> divisors,
                        const OrderingSpec& ord) {
  return run_division<false>(w, divisors, ord).remainder;
}

DivisionContract check_division_contract(const WeylElement& w,
                                         std::span<const WeylElement> divisors,
                                         const OrderingSpec& ord, const DivisionResult& result) {
  DivisionContract c;
  if (result.quotients.size() != divisors.size()) return c;

  WeylElement sum = result.remainder;
  for (std::size_t k = 0; k < divisors.size(); ++k) sum += result.quotients[k] * divisors[k];
  c.reconstruction = sum == w;

  c.remainder_irreducible = true;
  for (const auto& f : divisors) {
    if (f.is_zero()) continue;
    const ExponentPair lt = leading(f, ord).monomial;
    for (const auto& [s, coeff] : result.remainder.terms()) {
      if (monomial_divides(lt, s)) c.remainder_irreducible = false;
    }
  }

  c.quotient_bound = true;
  if (!w.is_zero()) {
    const ExponentPair lt_w = leading(w, ord).monomial;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const WeylElement product = result.quotients[k] * divisors[k];
      if (product.is_zero()) continue;
      if (compare(ord, leading(product, ord).monomial, lt_w) > 0) c.quotient_bound = false;
    }
  }
  return c;
}

}  // namespace weyl
