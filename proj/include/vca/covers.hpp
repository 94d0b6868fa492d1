#pragma once

#include <cstdint>
#include <vector>

#include "vca/core.hpp"

namespace vca {

/// Cover order of a vector: the largest k (possibly ∞) for which it is a k-cover.
using CoverDegree = ExtendedNatural;

/// The minimal k-covers, i.e. the monomial generators of A_k as an S-module.
struct MinimalCoverSet {
  std::uint64_t degree = 0;
  /// Antichain, in lexicographic order.
  std::vector<CoverVector> covers;

  bool empty() const { return covers.empty(); }
  friend bool operator==(const MinimalCoverSet&, const MinimalCoverSet&) = default;
};

/// Σ b(i)·m(i) with 0·∞ = 0.
ExtendedNatural weighted_sum(const Facet& m, const CoverVector& b);

/// min over maximal facets m of ⌊weighted_sum(m, b) / ω_m⌋; ∞ if every sum is ∞.
CoverDegree cover_order(const WeightedMulticomplex& w, const CoverVector& b);

/// b is a vertex cover of order k. Every b is a 0-cover.
bool is_cover(const WeightedMulticomplex& w, const CoverVector& b, std::uint64_t k);

/// Coordinatewise box [0, B] containing every minimal k-cover. A coordinate
/// raised to B(i) satisfies on its own each facet with m(i) ≥ 1, so clipping a
/// cover to the box keeps it a cover. Throws DegreeError for k = 0.
CoverVector cover_box_bound(const WeightedMulticomplex& w, std::uint64_t k);

/// Depth-first enumeration of the minimal k-covers inside the box bound.
MinimalCoverSet minimal_covers(const WeightedMulticomplex& w, std::uint64_t k);

/// Reference implementation: scans the whole box, keeps covers, filters minimal ones.
MinimalCoverSet minimal_covers_oracle(const WeightedMulticomplex& w, std::uint64_t k);

}  // namespace vca
