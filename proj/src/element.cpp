#include "weyl/element.hpp"

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

// Accumulates c * (xi^lambda d^mu)(xi^rho d^sigma) into terms.
void accumulate_product(const ExponentPair& a, const ExponentPair& b, const Rational& c,
                        TermMap& terms) {
  require_same_dimension(a, b);
  const std::size_t n = a.dimension();
  // k ranges over the box 0 <= k_i <= min(mu_i, rho_i).
  std::vector<Exponent> bound(n);
  bool commuting = true;
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = std::min(a.d(i), b.xi(i));
    if (bound[i] != 0) commuting = false;
  }
  if (commuting) {
    add_term(terms, a + b, c);
    return;
  }

  // Per-variable coefficient tables: C(mu_i,k) C(rho_i,k) k!.
  std::vector<std::vector<Integer>> factor(n);
  for (std::size_t i = 0; i < n; ++i) {
    factor[i].resize(bound[i] + 1);
    Integer fact = 1;
    for (Exponent k = 0; k <= bound[i]; ++k) {
      if (k > 0) fact *= k;
      Integer bm, br;
      mpz_bin_uiui(bm.get_mpz_t(), a.d(i), k);
      mpz_bin_uiui(br.get_mpz_t(), b.xi(i), k);
      factor[i][k] = bm * br * fact;
    }
  }

  std::vector<Exponent> k(n, 0);
  std::vector<Exponent> out(2 * n);
  while (true) {
    Integer coeff = 1;
    for (std::size_t i = 0; i < n; ++i) {
      coeff *= factor[i][k[i]];
      out[i] = a.xi(i) + b.xi(i) - k[i];
      out[n + i] = a.d(i) + b.d(i) - k[i];
    }
    add_term(terms, ExponentPair::from_flat(out), c * Rational(coeff));
    std::size_t i = 0;
    while (i < n && k[i] == bound[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
}

}  // namespace

WeylElement::WeylElement(std::size_t n) : n_(n) {
  if (n == 0) throw WeylError("Weyl algebra dimension must be at least 1");
}

WeylElement::WeylElement(std::size_t n, TermMap terms) : WeylElement(n) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.dimension() != n) throw DimensionMismatch(n, it->first.dimension());
    it->second.canonicalize();
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  terms_ = std::move(terms);
}

WeylElement WeylElement::constant(std::size_t n, const Rational& c) {
  return monomial(ExponentPair(n), c);
}

WeylElement WeylElement::monomial(const ExponentPair& m, const Rational& c) {
  WeylElement w(m.dimension());
  if (c != 0) w.terms_.emplace(m, canonical(c));
  return w;
}

WeylElement WeylElement::xi(std::size_t n, std::size_t i) {
  return monomial(ExponentPair::xi(n, i));
}

WeylElement WeylElement::d(std::size_t n, std::size_t i) {
  return monomial(ExponentPair::d(n, i));
}

Rational WeylElement::coefficient(const ExponentPair& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::require_dimension(std::size_t n) const {
  if (n != n_) throw DimensionMismatch(n_, n);
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  require_dimension(other.n_);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  require_dimension(other.n_);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    const Rational q = canonical(c);
    for (auto& [m, coeff] : terms_) coeff *= q;
  }
  return *this;
}

WeylElement operator+(WeylElement u, const WeylElement& v) { return u += v; }
WeylElement operator-(WeylElement u, const WeylElement& v) { return u -= v; }
WeylElement operator*(const Rational& c, WeylElement w) { return w *= c; }

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.dimension() != v.dimension()) throw DimensionMismatch(u.dimension(), v.dimension());
  TermMap terms;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) accumulate_product(a, b, ca * cb, terms);
  }
  return WeylElement(u.dimension(), std::move(terms));
}

WeylElement mul_normal_monomials(const ExponentPair& a, const ExponentPair& b) {
  TermMap terms;
  accumulate_product(a, b, 1, terms);
  return WeylElement(a.dimension(), std::move(terms));
}

WeylElement mul_term_left(const Rational& c, const ExponentPair& m, const WeylElement& v) {
  if (m.dimension() != v.dimension()) throw DimensionMismatch(v.dimension(), m.dimension());
  TermMap terms;
  if (c != 0) {
    const Rational q = canonical(c);
    for (const auto& [b, cb] : v.terms()) accumulate_product(m, b, q * cb, terms);
  }
  return WeylElement(v.dimension(), std::move(terms));
}

WeylElement commutator(const WeylElement& u, const WeylElement& v) { return u * v - v * u; }

MonomialSet support(const WeylElement& w) {
  MonomialSet s;
  for (const auto& [m, c] : w.terms()) s.insert(s.end(), m);
  return s;
}

}  // namespace weyl
