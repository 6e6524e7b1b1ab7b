#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/ordering.hpp"

namespace weyl {

/// Polynomial in Q[X_1..X_n, Y_1..Y_n], canonical form. The exponent pair
/// (lambda, mu) reads as X^lambda Y^mu. Used as an independent oracle for
/// the Weyl engine: only the product rule differs.
class CommutativePolynomial {
 public:
  explicit CommutativePolynomial(std::size_t n);
  CommutativePolynomial(std::size_t n, TermMap terms);

  static CommutativePolynomial monomial(const ExponentPair& m, const Rational& c = 1);

  std::size_t dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  CommutativePolynomial& operator+=(const CommutativePolynomial& other);
  CommutativePolynomial& operator-=(const CommutativePolynomial& other);

  friend bool operator==(const CommutativePolynomial& a, const CommutativePolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  TermMap terms_;
};

CommutativePolynomial operator+(CommutativePolynomial a, const CommutativePolynomial& b);
CommutativePolynomial operator-(CommutativePolynomial a, const CommutativePolynomial& b);
CommutativePolynomial operator*(const CommutativePolynomial& a, const CommutativePolynomial& b);

/// The Q-module isomorphism xi^lambda d^mu -> X^lambda Y^mu.
CommutativePolynomial phi(const WeylElement& w);
WeylElement phi_inv(const CommutativePolynomial& p);

/// The induced map on orderings. Both sides compare the same exponent data,
/// so this is the identity on specs.
inline OrderingSpec phi_ordering(const OrderingSpec& ord) { return ord; }

/// Greatest monomial of p under ord. Throws WeylError for p == 0.
ExponentPair leading_monomial(const CommutativePolynomial& p, const OrderingSpec& ord);

/// Reduced Gröbner basis in Q[X, Y]: monic, sorted by leading monomial
/// descending. Zero inputs are ignored; all-zero input gives {}.
std::vector<CommutativePolynomial> commutative_buchberger(
    std::span<const CommutativePolynomial> generators, const OrderingSpec& ord);

/// Full remainder of p modulo divisors (first-match reduction).
CommutativePolynomial commutative_remainder(const CommutativePolynomial& p,
                                            std::span<const CommutativePolynomial> divisors,
                                            const OrderingSpec& ord);

}  // namespace weyl
