#include "weyl/ordering.hpp"

#include <algorithm>

#include "weyl/error.hpp"

namespace weyl {

OrderingSpec OrderingSpec::matrix(std::vector<Row> rows) {
  if (rows.empty()) throw WeylError("matrix ordering needs at least one row");
  const std::size_t width = rows.front().size();
  if (width == 0 || width % 2 != 0) {
    throw WeylError("matrix ordering rows must have length 2n with n >= 1");
  }
  for (auto& row : rows) {
    if (row.size() != width) throw WeylError("matrix ordering rows have different lengths");
    for (auto& q : row) {
      q.canonicalize();
      if (q < 0) throw WeylError("matrix ordering rows must be componentwise nonnegative");
    }
  }
  return OrderingSpec(Kind::Matrix, std::move(rows));
}

std::strong_ordering compare_lex(const ExponentPair& a, const ExponentPair& b) {
  require_same_dimension(a, b);
  // Flat layout puts the xi block first, so this is exactly lex on (lambda, mu).
  const auto fa = a.flat();
  const auto fb = b.flat();
  for (std::size_t k = 0; k < fa.size(); ++k) {
    if (fa[k] != fb[k]) return fa[k] <=> fb[k];
  }
  return std::strong_ordering::equal;
}

namespace {

std::strong_ordering compare_row(const OrderingSpec::Row& row, const ExponentPair& a,
                                 const ExponentPair& b) {
  if (row.size() != a.flat().size()) throw DimensionMismatch(row.size() / 2, a.dimension());
  Rational diff = 0;
  const auto fa = a.flat();
  const auto fb = b.flat();
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (fa[k] != fb[k] && row[k] != 0) {
      diff += row[k] * (Rational(fb[k]) - Rational(fa[k]));
    }
  }
  const int s = sgn(diff);
  // diff is w.(b - a): positive means a is smaller.
  return s > 0 ? std::strong_ordering::less
               : (s < 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

std::strong_ordering compare(const OrderingSpec& ord, const ExponentPair& a,
                             const ExponentPair& b) {
  require_same_dimension(a, b);
  switch (ord.kind()) {
    case OrderingSpec::Kind::Lex:
      return compare_lex(a, b);
    case OrderingSpec::Kind::GradedLex: {
      const auto da = a.total_degree();
      const auto db = b.total_degree();
      if (da != db) return da <=> db;
      return compare_lex(a, b);
    }
    case OrderingSpec::Kind::Matrix:
      for (const auto& row : ord.rows()) {
        const auto c = compare_row(row, a, b);
        if (c != 0) return c;
      }
      return compare_lex(a, b);
  }
  throw InvariantViolation("unknown ordering kind");
}

bool agree_on(const OrderingSpec& ord1, const OrderingSpec& ord2,
              const std::vector<ExponentPair>& s) {
  // Both are total orders, so they agree on all pairs iff sorting by one
  // leaves the sequence strictly increasing under the other.
  std::vector<ExponentPair> sorted = s;
  std::sort(sorted.begin(), sorted.end(), OrderLess{&ord1});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (compare(ord2, sorted[k - 1], sorted[k]) >= 0) return false;
  }
  return true;
}

bool agree_on(const OrderingSpec& ord1, const OrderingSpec& ord2, const MonomialSet& s) {
  return agree_on(ord1, ord2, std::vector<ExponentPair>(s.begin(), s.end()));
}

Filtration Filtration::total_degree(std::size_t n) {
  if (n == 0) throw WeylError("Weyl algebra dimension must be at least 1");
  return Filtration([n](std::size_t i) -> std::vector<ExponentPair> {
    if (i == 0) return {};
    return monomials_up_to_degree(n, i - 1);
  });
}

Rational MetricValue::value() const {
  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, exponent);
  return Rational(Integer(1), denom);
}

MetricValue metric_d(const OrderingSpec& ord1, const OrderingSpec& ord2, const Filtration& filt,
                     std::size_t depth_cap) {
  if (depth_cap == 0) throw WeylError("metric depth cap must be at least 1");
  // S_0 is empty, so agreement at level 0 is automatic; the first level of
  // disagreement i gives r = i - 1.
  for (std::size_t i = 1; i <= depth_cap; ++i) {
    if (!agree_on(ord1, ord2, filt.level(i))) return {MetricValue::Kind::Exact, i - 1};
  }
  return {MetricValue::Kind::AtMost, depth_cap};
}

}  // namespace weyl
