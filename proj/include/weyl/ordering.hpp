#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "weyl/monomial.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Finite description of a normal ordering of the Weyl algebra (equivalently a
/// monomial ordering of Q[X, Y]; both compare the same exponent data).
///
///  - Lex: the xi block is compared first, by the first differing index, and
///    the larger exponent wins; ties fall to the d block the same way.
///  - GradedLex: total degree first, then Lex.
///  - Matrix: the first row whose dot product with (b - a) is nonzero decides;
///    if every row ties, Lex decides. Rows have length 2n and are
///    componentwise nonnegative, which makes the order well-founded.
class OrderingSpec {
 public:
  enum class Kind { Lex, GradedLex, Matrix };
  using Row = std::vector<Rational>;

  static OrderingSpec lex() { return OrderingSpec(Kind::Lex, {}); }
  static OrderingSpec graded_lex() { return OrderingSpec(Kind::GradedLex, {}); }
  /// Throws WeylError when rows are empty, ragged, of odd length or contain a
  /// negative entry.
  static OrderingSpec matrix(std::vector<Row> rows);
  /// Matrix ordering with a single weight row.
  static OrderingSpec weight(Row weights) { return matrix({std::move(weights)}); }

  Kind kind() const { return kind_; }
  const std::vector<Row>& rows() const { return rows_; }

  friend bool operator==(const OrderingSpec&, const OrderingSpec&) = default;

 private:
  OrderingSpec(Kind kind, std::vector<Row> rows) : kind_(kind), rows_(std::move(rows)) {}

  Kind kind_;
  std::vector<Row> rows_;
};

/// Total order on exponent pairs of equal dimension. Equal iff a == b.
std::strong_ordering compare(const OrderingSpec& ord, const ExponentPair& a,
                             const ExponentPair& b);

/// The lexicographic normal ordering on its own.
std::strong_ordering compare_lex(const ExponentPair& a, const ExponentPair& b);

/// Strict-weak-order adapter for std algorithms.
struct OrderLess {
  const OrderingSpec* ord;
  bool operator()(const ExponentPair& a, const ExponentPair& b) const {
    return compare(*ord, a, b) < 0;
  }
};

/// True iff both orderings compare every ordered pair of s identically.
bool agree_on(const OrderingSpec& ord1, const OrderingSpec& ord2, const MonomialSet& s);
bool agree_on(const OrderingSpec& ord1, const OrderingSpec& ord2,
              const std::vector<ExponentPair>& s);

/// An exhaustive increasing family of finite monomial sets with S_0 empty.
class Filtration {
 public:
  using Rule = std::function<std::vector<ExponentPair>(std::size_t level)>;

  explicit Filtration(Rule rule) : rule_(std::move(rule)) {}

  /// S_0 = {}, S_i = {(lambda, mu) : |lambda| + |mu| <= i - 1}.
  static Filtration total_degree(std::size_t n);

  std::vector<ExponentPair> level(std::size_t i) const { return rule_(i); }

 private:
  Rule rule_;
};

/// Finite-depth value of the filtration metric 2^-r, r the deepest level of
/// agreement. AtMost means agreement was seen on every level up to the cap,
/// so the true distance lies in [0, 2^-exponent].
struct MetricValue {
  enum class Kind { Exact, AtMost };
  Kind kind;
  std::size_t exponent;

  Rational value() const;
  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

/// Requires depth_cap >= 1.
MetricValue metric_d(const OrderingSpec& ord1, const OrderingSpec& ord2, const Filtration& filt,
                     std::size_t depth_cap);

}  // namespace weyl
