#pragma once

// Test-only helpers: seeded random generators and the brute-force word
// rewriting oracle for products in the Weyl algebra.

#include <map>
#include <random>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/ordering.hpp"
#include "weyl/text.hpp"

namespace weyl::testing {

inline WeylElement E(const char* text, std::size_t n) { return parse_element(text, n); }

inline ExponentPair M(const char* text, std::size_t n) {
  const WeylElement w = parse_element(text, n);
  return w.terms().begin()->first;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  ExponentPair monomial(std::size_t n, unsigned max_degree) {
    std::vector<Exponent> flat(2 * n, 0);
    const unsigned degree = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    for (unsigned k = 0; k < degree; ++k) ++flat[static_cast<std::size_t>(uniform(0, static_cast<int>(2 * n - 1)))];
    return ExponentPair::from_flat(std::move(flat));
  }

  ExponentPair xi_monomial(std::size_t n, unsigned max_degree) {
    std::vector<Exponent> flat(2 * n, 0);
    const unsigned degree = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    for (unsigned k = 0; k < degree; ++k) ++flat[static_cast<std::size_t>(uniform(0, static_cast<int>(n - 1)))];
    return ExponentPair::from_flat(std::move(flat));
  }

  Rational coefficient() {
    int num = 0;
    while (num == 0) num = uniform(-5, 5);
    const int den = coin() ? 1 : uniform(1, 3);
    return canonical(Rational(num, den));
  }

  // Nonzero element with up to max_terms terms of degree <= max_degree.
  WeylElement element(std::size_t n, unsigned max_degree, int max_terms = 3,
                      bool xi_only = false) {
    while (true) {
      WeylElement w(n);
      const int terms = uniform(1, max_terms);
      for (int t = 0; t < terms; ++t) {
        const ExponentPair m = xi_only ? xi_monomial(n, max_degree) : monomial(n, max_degree);
        w += WeylElement::monomial(m, coefficient());
      }
      if (!w.is_zero()) return w;
    }
  }

  std::vector<Rational> weight_row(std::size_t n, bool positive = false) {
    std::vector<Rational> row(2 * n);
    for (auto& q : row) q = Rational(uniform(positive ? 1 : 0, 6), coin() ? 1 : 2);
    return row;
  }

  OrderingSpec ordering(std::size_t n) {
    switch (uniform(0, 3)) {
      case 0:
        return OrderingSpec::lex();
      case 1:
        return OrderingSpec::graded_lex();
      case 2:
        return OrderingSpec::weight(weight_row(n));
      default:
        return OrderingSpec::matrix({weight_row(n), weight_row(n)});
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Words over the letters x_i (kind 0) and d_i (kind 1), rewritten with the
// single relation d_i x_i = x_i d_i + 1 and the commutations of distinct
// letters. Independent of the closed-form product used by the library.
struct Letter {
  int kind;
  std::size_t index;
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

inline Word word_of(const ExponentPair& m) {
  Word w;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (Exponent e = 0; e < m.xi(i); ++e) w.push_back({0, i});
  }
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (Exponent e = 0; e < m.d(i); ++e) w.push_back({1, i});
  }
  return w;
}

inline WeylElement rewrite_to_normal_form(std::size_t n, std::map<Word, Integer> pending) {
  TermMap result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Integer c = node.mapped();
    std::size_t k = 0;
    while (k + 1 < w.size() && !(w[k].kind == 1 && w[k + 1].kind == 0)) ++k;
    if (k + 1 >= w.size()) {
      std::vector<Exponent> flat(2 * n, 0);
      for (const Letter& l : w) ++flat[l.kind * n + l.index];
      result[ExponentPair::from_flat(flat)] += Rational(c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    pending[swapped] += c;
    if (w[k].index == w[k + 1].index) {
      Word contracted;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j != k && j != k + 1) contracted.push_back(w[j]);
      }
      pending[contracted] += c;
    }
  }
  return WeylElement(n, std::move(result));
}

inline WeylElement brute_force_product(const ExponentPair& a, const ExponentPair& b) {
  Word w = word_of(a);
  const Word wb = word_of(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return rewrite_to_normal_form(a.dimension(), {{w, Integer(1)}});
}

}  // namespace weyl::testing
