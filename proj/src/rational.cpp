#include "weyl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace weyl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace weyl
