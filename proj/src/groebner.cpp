#include "weyl/groebner.hpp"

#include <algorithm>
#include <optional>

#include "weyl/error.hpp"

namespace weyl {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  ExponentPair lcm;
};

// Working basis with optional membership bookkeeping.
class Completion {
 public:
  Completion(std::size_t n, std::size_t generator_count, const OrderingSpec& ord, bool track)
      : n_(n), generator_count_(generator_count), ord_(ord), track_(track) {}

  void add(WeylElement element, std::vector<WeylElement> cofactor) {
    const LeadingData head = leading(element, ord_);
    const Rational scale = 1 / head.coefficient;
    element *= scale;
    for (auto& c : cofactor) c *= scale;
    heads_.push_back(head.monomial);
    elements_.push_back(std::move(element));
    if (track_) cofactors_.push_back(std::move(cofactor));
  }

  std::vector<WeylElement> unit_cofactor(std::size_t index) const {
    if (!track_) return {};
    std::vector<WeylElement> c(generator_count_, WeylElement(n_));
    c[index] = WeylElement::constant(n_, 1);
    return c;
  }

  // Reduces the S-pair of (i, j); returns the nonzero remainder together with
  // its cofactors, or nothing when it reduces to zero.
  std::optional<std::pair<WeylElement, std::vector<WeylElement>>> process(const Pair& p) const {
    const Term ti{1, monomial_quotient(p.lcm, heads_[p.i])};
    const Term tj{1, monomial_quotient(p.lcm, heads_[p.j])};
    WeylElement s = mul_term_left(ti.coefficient, ti.monomial, elements_[p.i]) -
                    mul_term_left(tj.coefficient, tj.monomial, elements_[p.j]);
    if (!track_) {
      WeylElement r = normal_form(s, elements_, ord_);
      if (r.is_zero()) return std::nullopt;
      return std::pair{std::move(r), std::vector<WeylElement>{}};
    }
    DivisionResult div = divide(s, elements_, ord_);
    if (div.remainder.is_zero()) return std::nullopt;
    std::vector<WeylElement> cof(generator_count_, WeylElement(n_));
    for (std::size_t g = 0; g < generator_count_; ++g) {
      cof[g] = mul_term_left(ti.coefficient, ti.monomial, cofactors_[p.i][g]) -
               mul_term_left(tj.coefficient, tj.monomial, cofactors_[p.j][g]);
      for (std::size_t k = 0; k < elements_.size(); ++k) {
        if (!div.quotients[k].is_zero()) cof[g] -= div.quotients[k] * cofactors_[k][g];
      }
    }
    return std::pair{std::move(div.remainder), std::move(cof)};
  }

  std::size_t size() const { return elements_.size(); }
  const ExponentPair& head(std::size_t k) const { return heads_[k]; }
  std::vector<WeylElement>& elements() { return elements_; }
  std::vector<std::vector<WeylElement>>& cofactors() { return cofactors_; }

 private:
  std::size_t n_;
  std::size_t generator_count_;
  const OrderingSpec& ord_;
  bool track_;
  std::vector<WeylElement> elements_;
  std::vector<ExponentPair> heads_;
  std::vector<std::vector<WeylElement>> cofactors_;
};

std::size_t common_dimension(std::span<const WeylElement> elements) {
  if (elements.empty()) throw WeylError("cannot infer the dimension of an empty generator list");
  const std::size_t n = elements.front().dimension();
  for (const auto& e : elements) {
    if (e.dimension() != n) throw DimensionMismatch(n, e.dimension());
  }
  return n;
}

}  // namespace

WeylElement s_pair(const WeylElement& u, const WeylElement& v, const OrderingSpec& ord) {
  const LeadingData lu = leading(u, ord);
  const LeadingData lv = leading(v, ord);
  const ExponentPair m = monomial_lcm(lu.monomial, lv.monomial);
  const Term cu = leading_quotient({m, 1}, lu);
  const Term cv = leading_quotient({m, 1}, lv);
  return mul_term_left(cu.coefficient, cu.monomial, u) -
         mul_term_left(cv.coefficient, cv.monomial, v);
}

GroebnerBasis buchberger(std::span<const WeylElement> generators, const OrderingSpec& ord,
                         const BuchbergerOptions& options) {
  const std::size_t n = common_dimension(generators);
  Completion work(n, generators.size(), ord, options.track_cofactors);

  std::vector<Pair> pending;
  auto add_pairs_for_last = [&] {
    const std::size_t j = work.size() - 1;
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, monomial_lcm(work.head(i), work.head(j))});
    }
  };

  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].is_zero()) continue;
    work.add(generators[g], work.unit_cofactor(g));
    add_pairs_for_last();
  }

  // Normal strategy: smallest lcm first; ties by (j, i) for determinism.
  auto later = [&ord](const Pair& a, const Pair& b) {
    const auto c = compare(ord, a.lcm, b.lcm);
    if (c != 0) return c > 0;
    return std::tie(a.j, a.i) > std::tie(b.j, b.i);
  };
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(),
                                 [&later](const Pair& a, const Pair& b) { return later(b, a); });
    const Pair p = *best;
    pending.erase(best);
    if (auto reduced = work.process(p)) {
      work.add(std::move(reduced->first), std::move(reduced->second));
      add_pairs_for_last();
    }
  }

  GroebnerBasis basis{std::move(work.elements()), ord,
                      std::vector<WeylElement>(generators.begin(), generators.end()),
                      std::move(work.cofactors())};
  return options.reduce ? reduce_basis(basis) : basis;
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  const OrderingSpec& ord = basis.ordering;
  const bool track = !basis.cofactors.empty();

  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    if (!basis.elements[k].is_zero()) order.push_back(k);
  }
  std::vector<ExponentPair> heads;
  for (const auto& e : basis.elements) {
    heads.push_back(e.is_zero() ? ExponentPair(e.dimension()) : leading(e, ord).monomial);
  }
  // Divisibility implies <= under a normal ordering, so scanning by ascending
  // leading monomial keeps exactly one element per minimal generator of the
  // leading-term ideal.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare(ord, heads[a], heads[b]) < 0;
  });
  std::vector<std::size_t> kept;
  for (std::size_t k : order) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](std::size_t m) {
      return monomial_divides(heads[m], heads[k]);
    });
    if (!redundant) kept.push_back(k);
  }

  GroebnerBasis out{{}, ord, basis.generators, {}};
  std::vector<WeylElement> minimal;
  for (std::size_t k : kept) minimal.push_back(basis.elements[k]);

  for (std::size_t idx = 0; idx < kept.size(); ++idx) {
    std::vector<WeylElement> others;
    std::vector<std::size_t> other_ids;
    for (std::size_t o = 0; o < kept.size(); ++o) {
      if (o == idx) continue;
      others.push_back(minimal[o]);
      other_ids.push_back(kept[o]);
    }
    DivisionResult div = divide(minimal[idx], others, ord);
    WeylElement r = std::move(div.remainder);
    const LeadingData head = leading(r, ord);
    if (head.monomial != heads[kept[idx]]) {
      throw InvariantViolation("inter-reduction changed a leading monomial");
    }
    const Rational scale = 1 / head.coefficient;
    r *= scale;
    out.elements.push_back(std::move(r));
    if (track) {
      std::vector<WeylElement> cof = basis.cofactors[kept[idx]];
      for (std::size_t g = 0; g < cof.size(); ++g) {
        for (std::size_t o = 0; o < others.size(); ++o) {
          if (!div.quotients[o].is_zero()) {
            cof[g] -= div.quotients[o] * basis.cofactors[other_ids[o]][g];
          }
        }
        cof[g] *= scale;
      }
      out.cofactors.push_back(std::move(cof));
    }
  }

  // Descending by leading monomial.
  std::vector<std::size_t> perm(out.elements.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::vector<ExponentPair> out_heads;
  for (const auto& e : out.elements) out_heads.push_back(leading(e, ord).monomial);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return compare(ord, out_heads[a], out_heads[b]) > 0;
  });
  GroebnerBasis sorted{{}, ord, out.generators, {}};
  for (std::size_t k : perm) {
    sorted.elements.push_back(std::move(out.elements[k]));
    if (track) sorted.cofactors.push_back(std::move(out.cofactors[k]));
  }
  return sorted;
}

bool is_groebner(std::span<const WeylElement> basis, const OrderingSpec& ord) {
  std::vector<WeylElement> nonzero;
  for (const auto& b : basis) {
    if (!b.is_zero()) nonzero.push_back(b);
  }
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      if (!normal_form(s_pair(nonzero[i], nonzero[j], ord), nonzero, ord).is_zero()) return false;
    }
  }
  return true;
}

MonomialSet support(std::span<const WeylElement> elements) {
  MonomialSet s;
  for (const auto& e : elements) {
    for (const auto& [m, c] : e.terms()) s.insert(m);
  }
  return s;
}

bool restriction_stable(std::span<const WeylElement> basis, const OrderingSpec& ord1,
                        const OrderingSpec& ord2) {
  return agree_on(ord1, ord2, support(basis));
}

bool ideal_member(const WeylElement& w, const GroebnerBasis& basis) {
  return normal_form(w, basis.elements, basis.ordering).is_zero();
}

}  // namespace weyl
