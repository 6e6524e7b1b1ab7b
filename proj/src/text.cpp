#include "weyl/text.hpp"

#include <cctype>
#include <sstream>

namespace weyl {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  WeylElement parse() {
    WeylElement w = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  WeylElement expr() {
    WeylElement sum(n_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    while (true) {
      WeylElement t = term();
      if (negate) {
        sum -= t;
      } else {
        sum += t;
      }
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return sum;
      }
    }
  }

  WeylElement term() {
    WeylElement product = factor();
    while (accept('*')) product = product * factor();
    return product;
  }

  WeylElement factor() {
    if (accept('-')) return -factor();
    WeylElement base = atom();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const std::string e = digits();
    if (e.size() > 6) throw ParseError(at, "exponent too large");
    WeylElement result = WeylElement::constant(n_, 1);
    for (unsigned long k = std::stoul(e); k > 0; --k) result = result * base;
    return result;
  }

  WeylElement atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WeylElement inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const std::string den = digits();
        if (Integer(den) == 0) throw ParseError(at, "zero denominator");
        num += "/" + den;
      }
      return WeylElement::constant(n_, parse_rational(num));
    }
    if (c == 'x' || c == 'd') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a variable index");
      }
      const std::string idx = digits();
      const unsigned long i = idx.size() > 6 ? 0 : std::stoul(idx);
      if (i < 1 || i > n_) {
        throw ParseError(at, "variable " + std::string(1, c) + idx + " out of range for n=" +
                                 std::to_string(n_));
      }
      return c == 'x' ? WeylElement::xi(n_, i - 1) : WeylElement::d(n_, i - 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string format_weights(const std::vector<Rational>& weights) {
  std::string out = "[";
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (k > 0) out += ",";
    out += to_string(weights[k]);
  }
  return out + "]";
}

}  // namespace

WeylElement parse_element(std::string_view text, std::size_t n) {
  if (n == 0) throw WeylError("Weyl algebra dimension must be at least 1");
  return Parser(text, n).parse();
}

std::string format_monomial(const ExponentPair& m) {
  std::string out;
  auto emit = [&out](char var, std::size_t i, Exponent e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.dimension(); ++i) emit('x', i, m.xi(i));
  for (std::size_t i = 0; i < m.dimension(); ++i) emit('d', i, m.d(i));
  return out.empty() ? "1" : out;
}

std::string format_element(const WeylElement& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string body;
    if (m.is_unit()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = format_monomial(m);
    } else {
      body = to_string(mag) + "*" + format_monomial(m);
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

OrderingSpec parse_ordering(std::string_view text) {
  const std::string spec = trim(text);
  if (spec == "lex") return OrderingSpec::lex();
  if (spec == "grlex") return OrderingSpec::graded_lex();
  constexpr std::string_view prefix = "matrix:";
  if (spec.rfind(prefix, 0) != 0) {
    throw ParseError(0, "unknown ordering '" + spec + "' (expected lex, grlex or matrix:[...])");
  }
  std::string body;
  for (char c : spec.substr(prefix.size())) {
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  }
  const std::size_t offset = prefix.size();
  if (body.size() < 4 || body.front() != '[' || body.back() != ']') {
    throw ParseError(offset, "matrix ordering must look like [[q,...];[q,...]]");
  }
  std::vector<OrderingSpec::Row> rows;
  std::size_t pos = 1;
  while (pos < body.size() - 1) {
    if (body[pos] != '[') throw ParseError(offset + pos, "expected '['");
    const std::size_t close = body.find(']', pos);
    if (close == std::string::npos) throw ParseError(offset + pos, "unterminated row");
    OrderingSpec::Row row;
    std::stringstream entries(body.substr(pos + 1, close - pos - 1));
    std::string entry;
    while (std::getline(entries, entry, ',')) {
      try {
        row.push_back(parse_rational(entry));
      } catch (const std::invalid_argument& e) {
        throw ParseError(offset + pos, e.what());
      }
    }
    rows.push_back(std::move(row));
    pos = close + 1;
    if (pos < body.size() - 1) {
      if (body[pos] != ';') throw ParseError(offset + pos, "expected ';' between rows");
      ++pos;
    }
  }
  return OrderingSpec::matrix(std::move(rows));
}

std::string format_ordering(const OrderingSpec& ord) {
  switch (ord.kind()) {
    case OrderingSpec::Kind::Lex:
      return "lex";
    case OrderingSpec::Kind::GradedLex:
      return "grlex";
    case OrderingSpec::Kind::Matrix: {
      std::string out = "matrix:[";
      for (std::size_t r = 0; r < ord.rows().size(); ++r) {
        if (r > 0) out += ";";
        out += format_weights(ord.rows()[r]);
      }
      return out + "]";
    }
  }
  return {};
}

ProblemFile parse_problem(std::istream& in, std::size_t fallback_dimension) {
  ProblemFile problem;
  std::vector<std::pair<std::string, std::string>> pending;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw WeylError("problem file line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "n") {
      try {
        std::size_t used = 0;
        problem.dimension = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw WeylError("problem file line " + std::to_string(line_no) + ": bad dimension");
      }
      if (problem.dimension == 0) throw WeylError("Weyl algebra dimension must be at least 1");
    } else if (key == "order") {
      problem.ordering = parse_ordering(value);
    } else if (key == "gen") {
      pending.emplace_back("g" + std::to_string(pending.size() + 1), value);
    } else if (key.rfind("gen.", 0) == 0 && key.size() > 4) {
      pending.emplace_back(key.substr(4), value);
    } else {
      throw WeylError("problem file line " + std::to_string(line_no) + ": unknown key '" + key +
                      "'");
    }
  }
  if (problem.dimension == 0) problem.dimension = fallback_dimension;
  if (problem.dimension == 0) throw WeylError("problem file does not specify n");
  for (auto& [name, text] : pending) {
    problem.generators.emplace_back(std::move(name), parse_element(text, problem.dimension));
  }
  return problem;
}

std::string format_certificate(const UniversalCertificate& cert) {
  std::ostringstream out;
  const std::size_t n = cert.basis.empty() ? 0 : cert.basis.front().dimension();
  out << "universal-certificate v1\n";
  out << "# covers every normal ordering whose restriction to the support is realized\n";
  out << "# by a nonnegative weight vector with lex tie-break\n";
  out << "dimension: " << n << "\n";
  out << "iterations: " << cert.iterations << "\n";
  out << "basis: " << cert.basis.size() << "\n";
  for (const auto& b : cert.basis) out << "  " << format_element(b) << "\n";
  out << "support: " << cert.support.size() << "\n";
  for (const auto& m : cert.support) out << "  " << format_monomial(m) << "\n";
  out << "cones: " << cert.cones.size() << "\n";
  for (std::size_t k = 0; k < cert.cones.size(); ++k) {
    const Cone& cone = cert.cones[k];
    out << "cone " << (k + 1) << "\n";
    out << "  order:";
    for (std::size_t i = 0; i < cone.restriction.monomials.size(); ++i) {
      out << (i == 0 ? " " : " < ") << format_monomial(cone.restriction.monomials[i]);
    }
    out << "\n";
    out << "  weight: " << format_weights(cone.witness.weights) << "\n";
    out << "  verdict: " << (cone.passed ? "passed" : "failed") << "\n";
  }
  return out.str();
}

}  // namespace weyl
