#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/error.hpp"
#include "weyl/ordering.hpp"
#include "weyl/universal.hpp"

namespace weyl {

class ParseError : public WeylError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : WeylError("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  /// Zero-based character offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace ignored):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ['^' digits]
///   atom   := digits ['/' digits] | 'x'k | 'd'k | '(' expr ')'     (1 <= k <= n)
/// Products are noncommutative and evaluated left to right.
WeylElement parse_element(std::string_view text, std::size_t n);

/// Terms in descending GradedLexLess order, "x" factors before "d" factors,
/// e.g. "x1*d1 + 1", "-1/2*x1^2", "0".
std::string format_element(const WeylElement& w);

/// "1" for the unit monomial, otherwise e.g. "x1^2*d2".
std::string format_monomial(const ExponentPair& m);

/// "lex", "grlex" or "matrix:[[q,...,q];...;[q,...,q]]" with q = p or p/q.
OrderingSpec parse_ordering(std::string_view text);
std::string format_ordering(const OrderingSpec& ord);

/// Line-oriented problem description:
///   n=<int>
///   order=<ordering>
///   gen=<expr>            (named g1, g2, ... by position)
///   gen.<name>=<expr>
/// Blank lines and lines starting with '#' are ignored.
struct ProblemFile {
  std::size_t dimension = 0;
  std::optional<OrderingSpec> ordering;
  std::vector<std::pair<std::string, WeylElement>> generators;
};

/// When the file has no n= line, fallback_dimension is used (0 = none).
ProblemFile parse_problem(std::istream& in, std::size_t fallback_dimension = 0);

/// Structured text form: one record per cone, bit-exact for equal inputs.
std::string format_certificate(const UniversalCertificate& cert);

}  // namespace weyl
