#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vca/covers.hpp"

namespace vca {

/// The monomial x^b t^k of A(Γ, ω).
struct AlgebraMonomial {
  CoverVector exponents;
  std::uint64_t degree = 0;

  friend auto operator<=>(const AlgebraMonomial&, const AlgebraMonomial&) = default;
  friend bool operator==(const AlgebraMonomial&, const AlgebraMonomial&) = default;
};

/// x^b t^k lies in A_k.
bool is_valid(const WeightedMulticomplex& w, const AlgebraMonomial& m);

/// Minimal k-covers for every degree 1..horizon.
class GeneratorTable {
public:
  GeneratorTable(WeightedMulticomplex complex, std::vector<MinimalCoverSet> per_degree);

  const WeightedMulticomplex& complex() const { return complex_; }
  std::uint64_t horizon() const { return per_degree_.size(); }
  /// Minimal covers of degree k, 1 ≤ k ≤ horizon.
  const MinimalCoverSet& at(std::uint64_t k) const;

private:
  WeightedMulticomplex complex_;
  std::vector<MinimalCoverSet> per_degree_;
};

GeneratorTable module_generator_table(const WeightedMulticomplex& w, std::uint64_t horizon);

/// Witness that x^b t^k is a product of two elements of positive t-degree
/// (times a monomial of S): left.exponents + right.exponents ≤ b.
struct DecompositionCertificate {
  AlgebraMonomial left;
  AlgebraMonomial right;
  friend bool operator==(const DecompositionCertificate&, const DecompositionCertificate&) = default;
};

/// Re-checks a certificate for `m` from scratch against cover_order.
bool certificate_holds(const WeightedMulticomplex& w, const AlgebraMonomial& m,
                       const DecompositionCertificate& cert);

/// Looks for a split of m = x^b t^k through a lower-degree module generator
/// g ∈ table[k'] with g ≤ b and b − g of order ≥ k − k'. Splits are tried in
/// increasing k', then lexicographic g; the first one found is returned.
/// Returns nullopt when m is a new algebra generator.
/// Throws DegreeError for degree 0, PreconditionError if m ∉ A_k or the table
/// is too short.
std::optional<DecompositionCertificate> is_decomposable(const GeneratorTable& table,
                                                        const AlgebraMonomial& m);

struct ClassifiedCover {
  AlgebraMonomial monomial;
  /// Empty for a new algebra generator.
  std::optional<DecompositionCertificate> certificate;
};

struct GenerationReport {
  std::uint64_t horizon = 0;
  /// Every minimal cover of degree 1..horizon, by degree then lexicographically.
  std::vector<ClassifiedCover> classified;
  std::vector<AlgebraMonomial> new_generators;
  /// Set when finite generation is certified: no new generator beyond this degree.
  std::optional<std::uint64_t> certified_bound;

  /// Largest degree carrying a new generator, if any.
  std::optional<std::uint64_t> max_generator_degree() const;
};

/// Degree beyond which the single-facet algebra needs no further generators.
/// `std::nullopt` when none is known: multi-facet complexes, and single facets
/// with an infinite entry (x_j t^k is then a new generator for every k).
std::optional<std::uint64_t> generation_bound(const WeightedMulticomplex& w);

GenerationReport algebra_generators(const WeightedMulticomplex& w, std::uint64_t horizon);

/// (Σ a(i) + 1)·ω − 1. Every entry of `a` must be finite and positive.
std::uint64_t theorem16_bound(const Facet& a, std::uint64_t weight);

/// How the t-degree of a high-degree cover is distributed between the factors.
enum class SplitRule {
  /// k'' = Σ_{i∈I} a(i), which keeps both factors valid.
  kWeightedIndexSum,
  /// k'' = |I|. Kept for comparison; the left factor can fall short of its degree.
  kIndexCount,
};

struct HighDegreeSplit {
  AlgebraMonomial left;   // (b', k')
  AlgebraMonomial right;  // (b'', k'')
};

/// Splits a k-cover b of Γ(a) with k above the generation bound. With
/// I = { i : b(i) > ω }, the right factor takes ω on I; the left factor is the rest.
/// Throws PreconditionError if a is not finite positive, b is not a k-cover, or
/// k ≤ theorem16_bound(a, ω).
HighDegreeSplit split_high_degree(const Facet& a, std::uint64_t weight, const CoverVector& b,
                                  std::uint64_t k, SplitRule rule = SplitRule::kWeightedIndexSum);

/// Both factors have positive degree, exponents sum to b, degrees sum to k,
/// and each factor's cover order (recomputed) reaches its degree.
bool split_holds(const Facet& a, std::uint64_t weight, const CoverVector& b, std::uint64_t k,
                 const HighDegreeSplit& split);

}  // namespace vca
