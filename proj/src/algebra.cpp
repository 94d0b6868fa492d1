#include "vca/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "vca/structure.hpp"

namespace vca {

bool is_valid(const WeightedMulticomplex& w, const AlgebraMonomial& m) {
  return is_cover(w, m.exponents, m.degree);
}

GeneratorTable::GeneratorTable(WeightedMulticomplex complex, std::vector<MinimalCoverSet> per_degree)
    : complex_{std::move(complex)}, per_degree_{std::move(per_degree)} {
  for (std::size_t i = 0; i < per_degree_.size(); ++i)
    if (per_degree_[i].degree != i + 1)
      throw PreconditionError("generator table entries must cover degrees 1..horizon in order");
}

const MinimalCoverSet& GeneratorTable::at(std::uint64_t k) const {
  if (k == 0 || k > per_degree_.size())
    throw PreconditionError("degree " + std::to_string(k) + " outside table horizon " +
                            std::to_string(per_degree_.size()));
  return per_degree_[k - 1];
}

GeneratorTable module_generator_table(const WeightedMulticomplex& w, std::uint64_t horizon) {
  if (horizon == 0) throw DegreeError("horizon must be >= 1");
  std::vector<MinimalCoverSet> per_degree;
  per_degree.reserve(horizon);
  for (std::uint64_t k = 1; k <= horizon; ++k) per_degree.push_back(minimal_covers(w, k));
  return GeneratorTable(w, std::move(per_degree));
}

bool certificate_holds(const WeightedMulticomplex& w, const AlgebraMonomial& m,
                       const DecompositionCertificate& cert) {
  const auto& [left, right] = cert;
  if (left.degree == 0 || right.degree == 0) return false;
  if (left.degree + right.degree != m.degree) return false;
  if (left.exponents.size() != m.exponents.size() || right.exponents.size() != m.exponents.size())
    return false;
  if (!leq(left.exponents + right.exponents, m.exponents)) return false;
  return is_valid(w, left) && is_valid(w, right);
}

std::optional<DecompositionCertificate> is_decomposable(const GeneratorTable& table,
                                                        const AlgebraMonomial& m) {
  const std::uint64_t k = m.degree;
  if (k == 0) throw DegreeError("decomposability is defined for t-degree >= 1");
  const auto& w = table.complex();
  if (!is_valid(w, m))
    throw PreconditionError("x^b t^k with b = " + m.exponents.join(",") + " is not in A_" +
                            std::to_string(k));
  if (table.horizon() + 1 < k)
    throw PreconditionError("generator table horizon too short for degree " + std::to_string(k));

  for (std::uint64_t low = 1; low < k; ++low) {
    for (const CoverVector& g : table.at(low).covers) {
      if (!leq(g, m.exponents)) continue;
      const CoverVector rest = m.exponents - g;
      if (is_cover(w, rest, k - low)) return DecompositionCertificate{{g, low}, {rest, k - low}};
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> GenerationReport::max_generator_degree() const {
  if (new_generators.empty()) return std::nullopt;
  std::uint64_t best = 0;
  for (const auto& g : new_generators) best = std::max(best, g.degree);
  return best;
}

std::optional<std::uint64_t> generation_bound(const WeightedMulticomplex& w) {
  if (!w.single_facet()) return std::nullopt;
  const auto& row = w.rows().front();
  const auto dec = decompose_single_facet(row.facet, row.weight);
  if (dec.kind == DecompositionKind::kBaseRing) return 0;
  if (!dec.coordinates.infinite.empty()) return std::nullopt;
  return theorem16_bound(dec.reduced_facet, dec.weight);
}

GenerationReport algebra_generators(const WeightedMulticomplex& w, std::uint64_t horizon) {
  const GeneratorTable table = module_generator_table(w, horizon);
  GenerationReport report;
  report.horizon = horizon;
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    for (const CoverVector& b : table.at(k).covers) {
      AlgebraMonomial m{b, k};
      auto cert = is_decomposable(table, m);
      if (!cert) report.new_generators.push_back(m);
      report.classified.push_back({std::move(m), std::move(cert)});
    }
  }
  if (const auto bound = generation_bound(w); bound && horizon >= *bound)
    report.certified_bound = *bound;
  return report;
}

namespace {

void require_finite_positive(const Facet& a) {
  if (a.size() == 0) throw PreconditionError("facet must be nonempty");
  for (const auto& e : a)
    if (e.is_infinite() || e.is_zero())
      throw PreconditionError("facet " + a.to_string() +
                              " must have finite positive entries; reduce it first");
}

}  // namespace

std::uint64_t theorem16_bound(const Facet& a, std::uint64_t weight) {
  require_finite_positive(a);
  if (weight == 0) throw WeightError("weight must be >= 1");
  ExtendedNatural total = 1;
  for (const auto& e : a) total = ext_add(total, e);
  return ext_mul(total, weight).value() - 1;
}

HighDegreeSplit split_high_degree(const Facet& a, std::uint64_t weight, const CoverVector& b,
                                  std::uint64_t k, SplitRule rule) {
  const std::uint64_t bound = theorem16_bound(a, weight);
  if (b.size() != a.size()) throw DimensionError("split_high_degree: length mismatch");
  if (k <= bound)
    throw PreconditionError("degree " + std::to_string(k) + " is not above the bound " +
                            std::to_string(bound));
  const std::uint64_t w_arr[] = {weight};
  const WeightedMulticomplex w(gamma_of(a), w_arr);
  if (!is_cover(w, b, k))
    throw PreconditionError("b = " + b.join(",") + " is not a " + std::to_string(k) + "-cover");

  CoverVector right(b.size());
  std::uint64_t index_count = 0;
  std::uint64_t index_weight = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] > weight) {
      right[i] = weight;
      ++index_count;
      index_weight += a[i].value();
    }
  }
  // Σ a(i) b(i) ≥ kω > ω Σ a(i) forces some b(i) > ω.
  if (index_count == 0) throw std::logic_error("split_high_degree: empty index set");

  std::uint64_t right_degree =
      rule == SplitRule::kWeightedIndexSum ? std::min(index_weight, k - 1) : index_count;
  return {{b - right, k - right_degree}, {right, right_degree}};
}

bool split_holds(const Facet& a, std::uint64_t weight, const CoverVector& b, std::uint64_t k,
                 const HighDegreeSplit& split) {
  const auto& [left, right] = split;
  if (left.degree == 0 || right.degree == 0 || left.degree + right.degree != k) return false;
  if (left.exponents + right.exponents != b) return false;
  const std::uint64_t w_arr[] = {weight};
  const WeightedMulticomplex w(gamma_of(a), w_arr);
  return is_valid(w, left) && is_valid(w, right);
}

}  // namespace vca
