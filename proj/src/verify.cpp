#include "vca/verify.hpp"

#include <sstream>

#include "vca/algebra.hpp"
#include "vca/covers.hpp"
#include "vca/structure.hpp"

namespace vca {

namespace {

// Degrees past the generation bound that the split suite inspects.
constexpr std::uint64_t kSplitWindow = 3;

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void fail(SuiteResult& r, std::string detail) {
  if (r.passed) r.detail = std::move(detail);
  r.passed = false;
}

SuiteResult oracle_suite(const WeightedMulticomplex& w, std::uint64_t horizon) {
  SuiteResult r = named("oracle");
  for (std::uint64_t k = 0; k <= horizon; ++k) {
    ++r.checks;
    if (minimal_covers(w, k) != minimal_covers_oracle(w, k))
      fail(r, describe("minimal covers differ from the box scan at k=", k));
  }
  return r;
}

SuiteResult antichain_suite(const WeightedMulticomplex& w, std::uint64_t horizon) {
  SuiteResult r = named("antichain");
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    const auto set = minimal_covers(w, k);
    for (std::size_t i = 0; i < set.covers.size(); ++i) {
      ++r.checks;
      if (!is_cover(w, set.covers[i], k)) fail(r, describe(set.covers[i], " is not a ", k, "-cover"));
      for (std::size_t j = 0; j < set.covers.size(); ++j)
        if (i != j && leq(set.covers[i], set.covers[j]))
          fail(r, describe(set.covers[i], " <= ", set.covers[j], " at k=", k));
    }
    const CoverVector box = cover_box_bound(w, k);
    CoverVector b(w.dimension());
    while (true) {
      if (is_cover(w, b, k)) {
        ++r.checks;
        bool covered = false;
        for (const auto& g : set.covers) covered = covered || leq(g, b);
        if (!covered) fail(r, describe(k, "-cover ", b, " dominates no minimal cover"));
      }
      std::size_t i = b.size();
      while (i > 0 && b[i - 1] == box[i - 1]) b[--i] = 0;
      if (i == 0) break;
      ++b[i - 1];
    }
  }
  return r;
}

SuiteResult order_suite(const WeightedMulticomplex& w, std::uint64_t horizon,
                        std::uint64_t max_degree) {
  SuiteResult r = named("order");
  std::vector<CoverVector> vectors;
  for_each_up_to_degree(w.dimension(), max_degree,
                        [&](const CoverVector& b) { vectors.push_back(b); });
  std::vector<CoverDegree> orders;
  for (const auto& b : vectors) orders.push_back(cover_order(w, b));

  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& b = vectors[i];
    for (std::size_t c = 0; c < b.size(); ++c) {
      CoverVector up = b;
      ++up[c];
      ++r.checks;
      if (cover_order(w, up) < orders[i]) fail(r, describe("monotonicity fails at ", b));
    }
    for (std::uint64_t k = 0; k < horizon; ++k) {
      ++r.checks;
      if (is_cover(w, b, k + 1) && !is_cover(w, b, k))
        fail(r, describe("filtration fails at ", b, " k=", k));
    }
    for (std::size_t j = i; j < vectors.size(); ++j) {
      ++r.checks;
      const CoverDegree sum = ext_add(orders[i], orders[j]);
      if (cover_order(w, b + vectors[j]) < sum)
        fail(r, describe("superadditivity fails at ", b, " + ", vectors[j]));
    }
  }
  return r;
}

SuiteResult certificate_suite(const WeightedMulticomplex& w, std::uint64_t horizon) {
  SuiteResult r = named("certificates");
  const auto report = algebra_generators(w, horizon);
  for (const auto& c : report.classified) {
    if (!c.certificate) continue;
    ++r.checks;
    if (!certificate_holds(w, c.monomial, *c.certificate))
      fail(r, describe("certificate for ", c.monomial.exponents, " at degree ",
                       c.monomial.degree, " does not hold"));
  }
  return r;
}

SuiteResult counting_suite(const WeightedMulticomplex& w, std::uint64_t horizon,
                           std::uint64_t max_degree) {
  SuiteResult r = named("counting");
  if (!w.single_facet()) {
    r.detail = "not applicable: more than one maximal facet";
    return r;
  }
  const auto& row = w.rows().front();
  const auto dec = decompose_single_facet(row.facet, row.weight);
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    for (std::uint64_t d = 0; d <= max_degree; ++d) {
      ++r.checks;
      const auto direct = graded_count_direct(w, k, d);
      const auto via = graded_count_via_decomposition(dec, k, d);
      if (direct != via)
        fail(r, describe("k=", k, " d=", d, ": direct ", direct, " vs decomposition ", via));
    }
  }
  return r;
}

SuiteResult split_suite(const WeightedMulticomplex& w) {
  SuiteResult r = named("split");
  if (!w.single_facet()) {
    r.detail = "not applicable: more than one maximal facet";
    return r;
  }
  const auto& row = w.rows().front();
  const auto dec = decompose_single_facet(row.facet, row.weight);
  if (dec.coordinates.positive_finite.empty()) {
    r.detail = "not applicable: no finite positive coordinates";
    return r;
  }
  const Facet& reduced = dec.reduced_facet;
  const std::uint64_t weights[] = {dec.weight};
  const WeightedMulticomplex reduced_complex(gamma_of(reduced), weights);
  const std::uint64_t bound = theorem16_bound(reduced, dec.weight);
  const auto table = module_generator_table(reduced_complex, bound + kSplitWindow);

  for (std::uint64_t k = bound + 1; k <= bound + kSplitWindow; ++k) {
    for (const auto& b : table.at(k).covers) {
      r.checks += 2;
      const auto split = split_high_degree(reduced, dec.weight, b, k);
      if (!split_holds(reduced, dec.weight, b, k, split))
        fail(r, describe("split of ", b, " at degree ", k, " does not re-verify"));
      if (!is_decomposable(table, {b, k}))
        fail(r, describe("new generator ", b, " at degree ", k, " beyond bound ", bound));
    }
  }
  if (r.passed)
    r.detail = describe("reduced facet ", reduced, ", bound ", bound, ", degrees ", bound + 1, "..",
                        bound + kSplitWindow);
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verification(const WeightedMulticomplex& w, std::uint64_t horizon,
                                          std::uint64_t max_degree) {
  if (horizon == 0) throw DegreeError("verification horizon must be >= 1");
  return {oracle_suite(w, horizon),
          antichain_suite(w, horizon),
          order_suite(w, horizon, max_degree),
          certificate_suite(w, horizon),
          counting_suite(w, horizon, max_degree),
          split_suite(w)};
}

}  // namespace vca
