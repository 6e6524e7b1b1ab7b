#include "weyl/commutative.hpp"

#include <algorithm>

#include "weyl/error.hpp"

namespace weyl {

namespace {

void add_term(TermMap& terms, const ExponentPair& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

CommutativePolynomial scaled_shift(const CommutativePolynomial& p, const Rational& c,
                                   const ExponentPair& m) {
  TermMap terms;
  for (const auto& [e, coeff] : p.terms()) terms.emplace(e + m, coeff * c);
  return CommutativePolynomial(p.dimension(), std::move(terms));
}

Rational leading_coefficient(const CommutativePolynomial& p, const OrderingSpec& ord) {
  return p.terms().at(leading_monomial(p, ord));
}

CommutativePolynomial monic(const CommutativePolynomial& p, const OrderingSpec& ord) {
  return scaled_shift(p, 1 / leading_coefficient(p, ord), ExponentPair(p.dimension()));
}

}  // namespace

CommutativePolynomial::CommutativePolynomial(std::size_t n) : n_(n) {
  if (n == 0) throw WeylError("polynomial ring dimension must be at least 1");
}

CommutativePolynomial::CommutativePolynomial(std::size_t n, TermMap terms)
    : CommutativePolynomial(n) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.dimension() != n) throw DimensionMismatch(n, it->first.dimension());
    it->second.canonicalize();
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  terms_ = std::move(terms);
}

CommutativePolynomial CommutativePolynomial::monomial(const ExponentPair& m, const Rational& c) {
  TermMap terms;
  terms.emplace(m, c);
  return CommutativePolynomial(m.dimension(), std::move(terms));
}

CommutativePolynomial& CommutativePolynomial::operator+=(const CommutativePolynomial& other) {
  if (other.n_ != n_) throw DimensionMismatch(n_, other.n_);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, c);
  return *this;
}

CommutativePolynomial& CommutativePolynomial::operator-=(const CommutativePolynomial& other) {
  if (other.n_ != n_) throw DimensionMismatch(n_, other.n_);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, -c);
  return *this;
}

CommutativePolynomial operator+(CommutativePolynomial a, const CommutativePolynomial& b) {
  return a += b;
}

CommutativePolynomial operator-(CommutativePolynomial a, const CommutativePolynomial& b) {
  return a -= b;
}

CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  TermMap terms;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) add_term(terms, ea + eb, ca * cb);
  }
  return CommutativePolynomial(a.dimension(), std::move(terms));
}

CommutativePolynomial phi(const WeylElement& w) {
  return CommutativePolynomial(w.dimension(), w.terms());
}

WeylElement phi_inv(const CommutativePolynomial& p) { return WeylElement(p.dimension(), p.terms()); }

ExponentPair leading_monomial(const CommutativePolynomial& p, const OrderingSpec& ord) {
  if (p.is_zero()) throw WeylError("leading monomial of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (compare(ord, best->first, it->first) < 0) best = it;
  }
  return best->first;
}

CommutativePolynomial commutative_remainder(const CommutativePolynomial& p,
                                            std::span<const CommutativePolynomial> divisors,
                                            const OrderingSpec& ord) {
  CommutativePolynomial current = p;
  TermMap rest;
  while (!current.is_zero()) {
    const ExponentPair lm = leading_monomial(current, ord);
    const Rational lc = current.terms().at(lm);
    bool reduced = false;
    for (const auto& f : divisors) {
      if (f.is_zero()) continue;
      const ExponentPair lf = leading_monomial(f, ord);
      if (!monomial_divides(lf, lm)) continue;
      current -= scaled_shift(f, lc / leading_coefficient(f, ord), monomial_quotient(lm, lf));
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.emplace(lm, lc);
      current -= CommutativePolynomial::monomial(lm, lc);
    }
  }
  return CommutativePolynomial(p.dimension(), std::move(rest));
}

std::vector<CommutativePolynomial> commutative_buchberger(
    std::span<const CommutativePolynomial> generators, const OrderingSpec& ord) {
  std::vector<CommutativePolynomial> g;
  for (const auto& f : generators) {
    if (!f.is_zero()) g.push_back(monic(f, ord));
  }

  // Plain completion: every pair is checked until no new remainder appears.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    const ExponentPair li = leading_monomial(g[i], ord);
    const ExponentPair lj = leading_monomial(g[j], ord);
    const ExponentPair m = monomial_lcm(li, lj);
    const CommutativePolynomial s = scaled_shift(g[i], 1, monomial_quotient(m, li)) -
                                    scaled_shift(g[j], 1, monomial_quotient(m, lj));
    CommutativePolynomial r = commutative_remainder(s, g, ord);
    if (r.is_zero()) continue;
    g.push_back(monic(r, ord));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then tail-reduce.
  std::vector<CommutativePolynomial> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const ExponentPair lk = leading_monomial(g[k], ord);
    bool redundant = false;
    for (std::size_t o = 0; o < g.size() && !redundant; ++o) {
      if (o == k) continue;
      const ExponentPair lo = leading_monomial(g[o], ord);
      // Equal leading monomials: keep the earliest.
      if (monomial_divides(lo, lk) && (lo != lk || o < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  std::vector<CommutativePolynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    const ExponentPair lk = leading_monomial(minimal[k], ord);
    CommutativePolynomial tail = minimal[k] - CommutativePolynomial::monomial(lk, 1);
    std::vector<CommutativePolynomial> others;
    for (std::size_t o = 0; o < minimal.size(); ++o) {
      if (o != k) others.push_back(minimal[o]);
    }
    reduced.push_back(CommutativePolynomial::monomial(lk, 1) +
                      commutative_remainder(tail, others, ord));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&ord](const CommutativePolynomial& a, const CommutativePolynomial& b) {
              return compare(ord, leading_monomial(a, ord), leading_monomial(b, ord)) > 0;
            });
  return reduced;
}

}  // namespace weyl
