#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace weyl {

using Exponent = std::uint32_t;

/// Exponent data (lambda, mu) of the normal monomial xi^lambda d^mu in the nth
/// Weyl algebra. The same data indexes the commutative monomial X^lambda Y^mu.
///
/// Stored flat: entries [0, n) are the xi exponents, [n, 2n) the d exponents.
class ExponentPair {
 public:
  /// The unit monomial 1 in dimension n. Throws WeylError for n == 0.
  explicit ExponentPair(std::size_t n);
  ExponentPair(std::vector<Exponent> xi_exps, std::vector<Exponent> d_exps);

  static ExponentPair from_flat(std::vector<Exponent> flat);
  static ExponentPair xi(std::size_t n, std::size_t i, Exponent power = 1);
  static ExponentPair d(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t dimension() const { return exps_.size() / 2; }
  Exponent xi(std::size_t i) const { return exps_[i]; }
  Exponent d(std::size_t i) const { return exps_[dimension() + i]; }
  std::span<const Exponent> xi_exps() const { return {exps_.data(), dimension()}; }
  std::span<const Exponent> d_exps() const { return {exps_.data() + dimension(), dimension()}; }
  /// All 2n exponents, xi block first.
  std::span<const Exponent> flat() const { return exps_; }

  std::uint64_t total_degree() const;
  bool is_unit() const;

  ExponentPair operator+(const ExponentPair& other) const;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
  /// Plain lexicographic comparison of the flat vector; a container order only.
  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;

 private:
  explicit ExponentPair(std::vector<Exponent> flat, int) : exps_(std::move(flat)) {}

  std::vector<Exponent> exps_;
};

/// Componentwise a <= b on both blocks, i.e. X^a Y^.. divides X^b Y^..
bool monomial_divides(const ExponentPair& a, const ExponentPair& b);

/// b - a componentwise. Requires monomial_divides(a, b).
ExponentPair monomial_quotient(const ExponentPair& b, const ExponentPair& a);

/// Componentwise maximum.
ExponentPair monomial_lcm(const ExponentPair& a, const ExponentPair& b);

bool coprime(const ExponentPair& a, const ExponentPair& b);

/// Storage order: total degree first, then lexicographic on (lambda, mu).
struct GradedLexLess {
  bool operator()(const ExponentPair& a, const ExponentPair& b) const;
};

using MonomialSet = std::set<ExponentPair, GradedLexLess>;

/// All exponent pairs in dimension n with total degree <= max_degree, in
/// GradedLexLess order.
std::vector<ExponentPair> monomials_up_to_degree(std::size_t n, std::uint64_t max_degree);

void require_same_dimension(const ExponentPair& a, const ExponentPair& b);

}  // namespace weyl
