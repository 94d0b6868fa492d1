#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vca/covers.hpp"

namespace vca {

/// Partition of the coordinates of a single facet a by the kind of entry.
/// Indices are 0-based and keep their original positions; no renumbering.
struct CoordinateClassification {
  std::vector<std::size_t> positive_finite;  // P: 0 < a(i) < ∞
  std::vector<std::size_t> zero;             // Z: a(i) = 0
  std::vector<std::size_t> infinite;         // F: a(i) = ∞

  friend bool operator==(const CoordinateClassification&,
                         const CoordinateClassification&) = default;
};

CoordinateClassification classify_coordinates(const Facet& a);

enum class DecompositionKind {
  kBaseRing,                 // a = 0: A = S
  kFullPolynomialExtension,  // a = (∞,…,∞): A = S ⊕ t(x_1,…,x_n)S[t]
  kComposite,
};

/// Structural form of A(Γ(a), ω):
///
///     S ⊕ t( A(Γ(ā), ω)[x_Z] ⊕ (x_F) S[t] )
///
/// where ā is a restricted to P.
struct SingleFacetDecomposition {
  DecompositionKind kind = DecompositionKind::kComposite;
  std::size_t dimension = 0;
  std::uint64_t weight = 1;
  CoordinateClassification coordinates;
  /// a restricted to P, in the order of coordinates.positive_finite. Empty when P = ∅.
  Facet reduced_facet;
};

SingleFacetDecomposition decompose_single_facet(const Facet& a, std::uint64_t weight);

/// Number of b ∈ N^n with |b| ≤ d and cover_order(w, b) ≥ k, by exhaustive scan.
std::uint64_t graded_count_direct(const WeightedMulticomplex& w, std::uint64_t k, std::uint64_t d);

/// Same count through the decomposition's membership rule: b qualifies iff it
/// is positive somewhere on F, or it vanishes on F and its restriction to P is
/// a k-cover of (Γ(ā), ω). Never evaluates the original facet.
std::uint64_t graded_count_via_decomposition(const SingleFacetDecomposition& dec,
                                             std::uint64_t k, std::uint64_t d);

/// Calls `visit(b)` for every b ∈ N^n with |b| ≤ d, in lexicographic order.
template <typename Visit>
void for_each_up_to_degree(std::size_t n, std::uint64_t d, Visit&& visit) {
  CoverVector b(n);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i == n) {
      visit(static_cast<const CoverVector&>(b));
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      b[i] = v;
      self(self, i + 1, left - v);
    }
    b[i] = 0;
  };
  rec(rec, 0, d);
}

}  // namespace vca
