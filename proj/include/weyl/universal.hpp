#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/error.hpp"
#include "weyl/feasibility.hpp"
#include "weyl/ordering.hpp"

namespace weyl {

/// A total order on a finite monomial set, listed in ascending order.
struct Restriction {
  std::vector<ExponentPair> monomials;

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

/// A nonnegative weight vector of length 2n. The ordering it stands for is
/// Matrix[weights] with the Lex tie-break.
struct WeightWitness {
  std::vector<Rational> weights;

  OrderingSpec ordering() const { return OrderingSpec::weight(weights); }
  friend bool operator==(const WeightWitness&, const WeightWitness&) = default;
};

/// Infeasibility proof for a restriction: the constraint system
/// (w . (b - a) >= 1 for adjacent a < b, and w_j >= 0) plus multipliers
/// satisfying is_farkas_certificate.
struct FarkasWitness {
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> multipliers;
};

struct Realization {
  std::optional<WeightWitness> witness;
  std::optional<FarkasWitness> infeasibility;

  bool realizable() const { return witness.has_value(); }
};

/// The linear system whose solutions realize r strictly by weights.
std::vector<LinearConstraint> realization_constraints(const Restriction& r);

/// Finds nonnegative weights reproducing r exactly through compare(), or a
/// Farkas certificate that none exist. Throws WeylError for repeated or
/// mixed-dimension monomials.
Realization realize_restriction(const Restriction& r);

/// True iff compare(witness.ordering(), ., .) orders r.monomials as listed.
bool witness_reproduces(const WeightWitness& witness, const Restriction& r);

class SupportCapExceeded : public WeylError {
 public:
  SupportCapExceeded(std::size_t size, std::size_t cap, std::vector<WeylElement> partial = {},
                     std::size_t iterations = 0);

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }
  /// Candidate basis at the time of refusal (empty outside saturation).
  const std::vector<WeylElement>& partial_basis() const { return partial_; }
  std::size_t iterations() const { return iterations_; }

 private:
  std::size_t size_;
  std::size_t cap_;
  std::vector<WeylElement> partial_;
  std::size_t iterations_;
};

inline constexpr std::size_t kDefaultSupportCap = 9;

struct EnumerationOptions {
  std::size_t support_cap = kDefaultSupportCap;
  // Prefix pruning; the exhaustive variant filters all |support|! orders.
  bool pruned = true;
};

struct RealizedRestriction {
  Restriction restriction;
  WeightWitness witness;
};

/// All weight-realizable total orders of support, in lexicographic order of
/// their monomial sequences (GradedLexLess on entries). An empty support has
/// no dimension to build witnesses in and yields no restrictions.
std::vector<RealizedRestriction> enumerate_restrictions(const MonomialSet& support,
                                                        const EnumerationOptions& options = {});

struct Cone {
  Restriction restriction;
  WeightWitness witness;
  bool passed;
};

struct UniversalCertificate {
  std::vector<WeylElement> basis;
  std::vector<ExponentPair> support;  // GradedLexLess ascending
  std::vector<Cone> cones;
  std::size_t iterations = 0;  // saturation rounds; 0 for a direct certification
  std::vector<std::size_t> basis_sizes;  // |V| at the start of each round
};

struct CounterexampleOrdering {
  Restriction restriction;
  WeightWitness witness;
};

struct CertifyOptions {
  std::size_t support_cap = kDefaultSupportCap;
  // Optional generators of the intended ideal; each must reduce to zero
  // modulo the basis under every cone ordering.
  std::vector<WeylElement> ideal_generators;
};

using CertificationResult = std::variant<UniversalCertificate, CounterexampleOrdering>;

/// Runs is_groebner under the witness ordering of every realizable
/// restriction of Supp(B). Success certifies B for every normal ordering
/// whose restriction to Supp(B) is weight-realizable. Throws
/// SupportCapExceeded when |Supp(B)| exceeds the cap and WeylError for an
/// empty basis or a zero element.
CertificationResult certify_universal(std::span<const WeylElement> basis,
                                      const CertifyOptions& options = {});

struct SaturationOptions {
  OrderingSpec initial_ordering = OrderingSpec::graded_lex();
  std::size_t support_cap = kDefaultSupportCap;
  std::size_t max_iterations = 32;
};

/// Saturation loop: V = reduced GB under the initial ordering; while some
/// cone ordering w fails, V = V u reduced GB(F, w). Throws
/// SupportCapExceeded carrying V when the support outgrows the cap, and
/// InvariantViolation if the iteration budget runs out or a round adds
/// nothing.
UniversalCertificate universal_groebner(std::span<const WeylElement> generators,
                                        const SaturationOptions& options = {});

}  // namespace weyl
