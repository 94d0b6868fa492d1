#include "vca/structure.hpp"

#include <algorithm>
#include <optional>

namespace vca {

CoordinateClassification classify_coordinates(const Facet& a) {
  CoordinateClassification c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_infinite())
      c.infinite.push_back(i);
    else if (a[i].is_zero())
      c.zero.push_back(i);
    else
      c.positive_finite.push_back(i);
  }
  return c;
}

SingleFacetDecomposition decompose_single_facet(const Facet& a, std::uint64_t weight) {
  if (weight == 0) throw WeightError("weight must be >= 1");
  SingleFacetDecomposition dec;
  dec.dimension = a.size();
  dec.weight = weight;
  dec.coordinates = classify_coordinates(a);

  const auto& c = dec.coordinates;
  if (c.zero.size() == a.size())
    dec.kind = DecompositionKind::kBaseRing;
  else if (c.infinite.size() == a.size())
    dec.kind = DecompositionKind::kFullPolynomialExtension;
  else
    dec.kind = DecompositionKind::kComposite;

  std::vector<ExtendedNatural> reduced;
  for (std::size_t i : c.positive_finite) reduced.push_back(a[i]);
  dec.reduced_facet = Facet(std::move(reduced));
  return dec;
}

std::uint64_t graded_count_direct(const WeightedMulticomplex& w, std::uint64_t k,
                                  std::uint64_t d) {
  if (k == 0) throw DegreeError("graded counts are defined for k >= 1");
  std::uint64_t count = 0;
  for_each_up_to_degree(w.dimension(), d, [&](const CoverVector& b) {
    if (is_cover(w, b, k)) ++count;
  });
  return count;
}

std::uint64_t graded_count_via_decomposition(const SingleFacetDecomposition& dec,
                                             std::uint64_t k, std::uint64_t d) {
  if (k == 0) throw DegreeError("graded counts are defined for k >= 1");
  if (dec.kind == DecompositionKind::kBaseRing) return 0;

  const auto& c = dec.coordinates;
  // Γ(ā) only exists when P is nonempty; otherwise no restriction reaches k ≥ 1.
  std::optional<WeightedMulticomplex> reduced;
  if (!c.positive_finite.empty()) {
    const std::uint64_t w[] = {dec.weight};
    reduced.emplace(gamma_of(dec.reduced_facet), w);
  }

  std::uint64_t count = 0;
  for_each_up_to_degree(dec.dimension, d, [&](const CoverVector& b) {
    const bool hits_infinite =
        std::any_of(c.infinite.begin(), c.infinite.end(), [&](std::size_t j) { return b[j] > 0; });
    if (hits_infinite) {
      ++count;
      return;
    }
    if (!reduced) return;
    CoverVector restricted(c.positive_finite.size());
    for (std::size_t i = 0; i < c.positive_finite.size(); ++i)
      restricted[i] = b[c.positive_finite[i]];
    if (is_cover(*reduced, restricted, k)) ++count;
  });
  return count;
}

}  // namespace vca
