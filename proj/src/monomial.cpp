#include "weyl/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "weyl/error.hpp"

namespace weyl {

ExponentPair::ExponentPair(std::size_t n) : exps_(2 * n, 0) {
  if (n == 0) throw WeylError("Weyl algebra dimension must be at least 1");
}

ExponentPair::ExponentPair(std::vector<Exponent> xi_exps, std::vector<Exponent> d_exps) {
  if (xi_exps.size() != d_exps.size()) throw DimensionMismatch(xi_exps.size(), d_exps.size());
  if (xi_exps.empty()) throw WeylError("Weyl algebra dimension must be at least 1");
  exps_ = std::move(xi_exps);
  exps_.insert(exps_.end(), d_exps.begin(), d_exps.end());
}

ExponentPair ExponentPair::from_flat(std::vector<Exponent> flat) {
  if (flat.empty() || flat.size() % 2 != 0) {
    throw WeylError("flat exponent vector must have positive even length");
  }
  return ExponentPair(std::move(flat), 0);
}

ExponentPair ExponentPair::xi(std::size_t n, std::size_t i, Exponent power) {
  ExponentPair m(n);
  if (i >= n) throw WeylError("variable index out of range");
  m.exps_[i] = power;
  return m;
}

ExponentPair ExponentPair::d(std::size_t n, std::size_t i, Exponent power) {
  ExponentPair m(n);
  if (i >= n) throw WeylError("variable index out of range");
  m.exps_[n + i] = power;
  return m;
}

std::uint64_t ExponentPair::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool ExponentPair::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

ExponentPair ExponentPair::operator+(const ExponentPair& other) const {
  require_same_dimension(*this, other);
  std::vector<Exponent> sum(exps_.size());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = exps_[k] + other.exps_[k];
  return ExponentPair(std::move(sum), 0);
}

void require_same_dimension(const ExponentPair& a, const ExponentPair& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
}

bool monomial_divides(const ExponentPair& a, const ExponentPair& b) {
  require_same_dimension(a, b);
  const auto fa = a.flat();
  const auto fb = b.flat();
  for (std::size_t k = 0; k < fa.size(); ++k) {
    if (fa[k] > fb[k]) return false;
  }
  return true;
}

ExponentPair monomial_quotient(const ExponentPair& b, const ExponentPair& a) {
  if (!monomial_divides(a, b)) throw WeylError("monomial quotient of non-divisible monomials");
  std::vector<Exponent> diff(b.flat().begin(), b.flat().end());
  const auto fa = a.flat();
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= fa[k];
  return ExponentPair::from_flat(std::move(diff));
}

ExponentPair monomial_lcm(const ExponentPair& a, const ExponentPair& b) {
  require_same_dimension(a, b);
  std::vector<Exponent> m(a.flat().begin(), a.flat().end());
  const auto fb = b.flat();
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::max(m[k], fb[k]);
  return ExponentPair::from_flat(std::move(m));
}

bool coprime(const ExponentPair& a, const ExponentPair& b) {
  require_same_dimension(a, b);
  const auto fa = a.flat();
  const auto fb = b.flat();
  for (std::size_t k = 0; k < fa.size(); ++k) {
    if (fa[k] != 0 && fb[k] != 0) return false;
  }
  return true;
}

bool GradedLexLess::operator()(const ExponentPair& a, const ExponentPair& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

namespace {

void extend(std::vector<Exponent>& prefix, std::size_t slots, std::uint64_t budget,
            std::vector<ExponentPair>& out) {
  if (prefix.size() == slots) {
    out.push_back(ExponentPair::from_flat(prefix));
    return;
  }
  for (std::uint64_t e = 0; e <= budget; ++e) {
    prefix.push_back(static_cast<Exponent>(e));
    extend(prefix, slots, budget - e, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ExponentPair> monomials_up_to_degree(std::size_t n, std::uint64_t max_degree) {
  if (n == 0) throw WeylError("Weyl algebra dimension must be at least 1");
  std::vector<ExponentPair> out;
  std::vector<Exponent> prefix;
  extend(prefix, 2 * n, max_degree, out);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

}  // namespace weyl
