#pragma once

#include <cstddef>
#include <map>

#include "weyl/monomial.hpp"
#include "weyl/rational.hpp"

namespace weyl {

using TermMap = std::map<ExponentPair, Rational, GradedLexLess>;

/// An element of the nth Weyl algebra over Q in canonical form: a finite sum
/// of normal monomials xi^lambda d^mu with nonzero rational coefficients.
///
/// Invariants: every stored coefficient is nonzero and every key has
/// dimension n, so equality of elements is equality of term maps. Terms
/// iterate in GradedLexLess order.
class WeylElement {
 public:
  /// The zero element of the nth Weyl algebra. Throws WeylError if n == 0.
  explicit WeylElement(std::size_t n);
  /// Drops zero coefficients; throws DimensionMismatch on inconsistent keys.
  WeylElement(std::size_t n, TermMap terms);

  static WeylElement constant(std::size_t n, const Rational& c);
  static WeylElement monomial(const ExponentPair& m, const Rational& c = 1);
  static WeylElement xi(std::size_t n, std::size_t i);
  static WeylElement d(std::size_t n, std::size_t i);

  std::size_t dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  /// Zero when m is not in the support.
  Rational coefficient(const ExponentPair& m) const;

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const Rational& c);

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void require_dimension(std::size_t n) const;

  std::size_t n_;
  TermMap terms_;
};

WeylElement operator+(WeylElement u, const WeylElement& v);
WeylElement operator-(WeylElement u, const WeylElement& v);
WeylElement operator*(const WeylElement& u, const WeylElement& v);
WeylElement operator*(const Rational& c, WeylElement w);

inline WeylElement add(const WeylElement& u, const WeylElement& v) { return u + v; }
inline WeylElement mul(const WeylElement& u, const WeylElement& v) { return u * v; }

/// Canonical form of (xi^lambda d^mu)(xi^rho d^sigma), using
///   d^mu xi^rho = sum_{k <= min(mu, rho)} prod_i C(mu_i,k_i) C(rho_i,k_i) k_i!
///                 xi^(rho-k) d^(mu-k).
WeylElement mul_normal_monomials(const ExponentPair& a, const ExponentPair& b);

/// c * (xi^lambda d^mu) * v, the left multiplication used by division.
WeylElement mul_term_left(const Rational& c, const ExponentPair& m, const WeylElement& v);

/// uv - vu.
WeylElement commutator(const WeylElement& u, const WeylElement& v);

/// The key set of the canonical form; empty for 0.
MonomialSet support(const WeylElement& w);

}  // namespace weyl
