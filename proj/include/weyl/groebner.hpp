#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weyl/division.hpp"
#include "weyl/element.hpp"
#include "weyl/ordering.hpp"

namespace weyl {

/// Gröbner basis of the left ideal sum W*g over the generators g.
///
/// When cofactors are tracked, elements[k] == sum_i cofactors[k][i] * generators[i]
/// holds exactly for every k, certifying ideal membership of each element.
struct GroebnerBasis {
  std::vector<WeylElement> elements;
  OrderingSpec ordering;
  std::vector<WeylElement> generators;
  std::vector<std::vector<WeylElement>> cofactors;  // empty when not tracked

  bool tracks_cofactors() const { return !cofactors.empty() || elements.empty(); }
};

struct BuchbergerOptions {
  bool reduce = true;
  bool track_cofactors = true;
};

/// Left S-pair: with m = lcm(lt(u), lt(v)),
///   (m / ls(u)) * u - (m / ls(v)) * v,
/// both cofactors multiplying on the left. Throws WeylError on zero input.
WeylElement s_pair(const WeylElement& u, const WeylElement& v, const OrderingSpec& ord);

/// Buchberger completion with the normal selection strategy: pending pairs
/// are processed by increasing lcm under ord. Zero generators are ignored.
/// With options.reduce the result is the reduced basis (see reduce_basis).
GroebnerBasis buchberger(std::span<const WeylElement> generators, const OrderingSpec& ord,
                         const BuchbergerOptions& options = {});

/// Minimal, monic, tail-reduced basis sorted by leading monomial descending.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// True iff every left S-pair of nonzero elements of B has normal form 0
/// modulo B under ord.
bool is_groebner(std::span<const WeylElement> basis, const OrderingSpec& ord);

/// agree_on(ord1, ord2, Supp(B)).
bool restriction_stable(std::span<const WeylElement> basis, const OrderingSpec& ord1,
                        const OrderingSpec& ord2);

bool ideal_member(const WeylElement& w, const GroebnerBasis& basis);

MonomialSet support(std::span<const WeylElement> elements);

}  // namespace weyl
