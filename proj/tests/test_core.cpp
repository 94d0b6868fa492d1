#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vca/core.hpp"

using namespace vca;

namespace {

const ExtendedNatural inf = kInfinity;

Multicomplex example_two_facets() { return Multicomplex(2, {Facet{0, inf}, Facet{2, 0}}); }

Facet random_facet(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, 4);
  std::vector<ExtendedNatural> e;
  for (std::size_t i = 0; i < n; ++i) {
    const int v = pick(rng);
    e.push_back(v == 4 ? inf : ExtendedNatural(std::uint64_t(v)));
  }
  return Facet(std::move(e));
}

}  // namespace

TEST_CASE("extended arithmetic conventions") {
  CHECK(ext_mul(0, inf) == ExtendedNatural(0));
  CHECK(ext_mul(inf, 0) == ExtendedNatural(0));
  CHECK(ext_mul(3, inf) == inf);
  CHECK(ext_mul(inf, inf) == inf);
  CHECK(ext_mul(4, 5) == ExtendedNatural(20));
  CHECK(ext_add(inf, 7) == inf);
  CHECK(ext_add(2, 7) == ExtendedNatural(9));
  CHECK(ExtendedNatural(1000000) < inf);
  CHECK_FALSE(inf < inf);
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS_AS(inf.value(), std::logic_error);
  CHECK_THROWS_AS(ext_mul(std::uint64_t(1) << 40, std::uint64_t(1) << 40), std::overflow_error);
}

TEST_CASE("parse_extended") {
  CHECK(parse_extended("inf") == inf);
  CHECK(parse_extended("INF") == inf);
  CHECK(parse_extended("Inf") == inf);
  CHECK(parse_extended("17") == ExtendedNatural(17));
  CHECK_THROWS_AS(parse_extended("-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended("infinity"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended("3x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extended(""), std::invalid_argument);
}

TEST_CASE("leq_ext examples") {
  CHECK(leq_ext(Facet{0, 3}, Facet{0, inf}));
  CHECK_FALSE(leq_ext(Facet{2, 0}, Facet{0, inf}));
  CHECK_FALSE(leq_ext(Facet{0, inf}, Facet{2, 0}));
  CHECK(leq_ext(Facet{1, 1}, Facet{1, 1}));
  CHECK_THROWS_AS(leq_ext(Facet{1}, Facet{1, 1}), DimensionError);
}

TEST_CASE("leq_ext is a partial order on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Facet a = random_facet(rng, 3), b = random_facet(rng, 3), c = random_facet(rng, 3);
    CHECK(leq_ext(a, a));
    if (leq_ext(a, b) && leq_ext(b, a)) CHECK(a == b);
    if (leq_ext(a, b) && leq_ext(b, c)) CHECK(leq_ext(a, c));
  }
}

TEST_CASE("normalize_facets") {
  const std::vector<Facet> ex{{0, inf}, {2, 0}};
  CHECK(normalize_facets(ex) == std::vector<Facet>{{0, inf}, {2, 0}});

  const std::vector<Facet> dominated{{1, 1}, {1, 0}};
  CHECK(normalize_facets(dominated) == std::vector<Facet>{{1, 1}});

  const std::vector<Facet> dup{{2, 0}, {2, 0}};
  CHECK(normalize_facets(dup) == std::vector<Facet>{{2, 0}});

  CHECK_THROWS_AS(normalize_facets(std::vector<Facet>{}), EmptyComplexError);
  CHECK_THROWS_AS(normalize_facets(std::vector<Facet>{{1}, {1, 2}}), DimensionError);
}

TEST_CASE("normalize_facets yields a dominating antichain") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Facet> in;
    for (int i = 0; i < 5; ++i) in.push_back(random_facet(rng, 3));
    const auto out = normalize_facets(in);
    REQUIRE_FALSE(out.empty());
    CHECK(std::is_sorted(out.begin(), out.end()));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < out.size(); ++j)
        if (i != j) CHECK_FALSE(leq_ext(out[i], out[j]));
    for (const auto& f : in)
      CHECK(std::any_of(out.begin(), out.end(), [&](const Facet& m) { return leq_ext(f, m); }));
  }
}

TEST_CASE("Multicomplex rejects non-antichains") {
  CHECK_THROWS_AS(Multicomplex(2, {Facet{1, 1}, Facet{1, 0}}), AntichainError);
  CHECK_THROWS_AS(Multicomplex(2, {Facet{2, 0}, Facet{2, 0}}), AntichainError);
  CHECK_THROWS_AS(Multicomplex(2, {}), EmptyComplexError);
  CHECK_THROWS_AS(Multicomplex(2, {Facet{1, 1, 1}}), DimensionError);
}

TEST_CASE("contains and in_ideal") {
  const auto c = example_two_facets();
  CHECK(c.contains(Facet{1, 0}));
  CHECK_FALSE(c.contains(Facet{1, 1}));
  CHECK(c.contains(Facet{0, 0}));
  CHECK(c.contains(Facet{0, inf}));
  CHECK_THROWS_AS(c.contains(Facet{0}), DimensionError);

  CHECK(c.in_ideal(CoverVector{1, 1}));
  CHECK_FALSE(c.in_ideal(CoverVector{2, 0}));
  CHECK_THROWS_AS(c.in_ideal(CoverVector{1, 1, 1}), DimensionError);

  const auto everything = gamma_of(Facet{inf, inf, inf});
  CHECK_FALSE(everything.in_ideal(CoverVector{0, 0, 0}));
  CHECK_FALSE(everything.in_ideal(CoverVector{9, 1, 4000}));
}

TEST_CASE("contains is downward closed and the ideal upward closed") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Facet> facets{random_facet(rng, 3), random_facet(rng, 3)};
    const auto c = Multicomplex::from_facets(facets);
    oracle::for_each_in_cube(3, 3, [&](const oracle::Vec& v) {
      const CoverVector a(std::vector<std::uint64_t>(v.begin(), v.end()));
      for (std::size_t i = 0; i < 3; ++i) {
        CoverVector up = a;
        ++up[i];
        if (c.contains(to_facet(up))) CHECK(c.contains(to_facet(a)));
        if (c.in_ideal(a)) CHECK(c.in_ideal(up));
      }
    });
  }
}

TEST_CASE("gamma_of and canonical_weights") {
  CHECK(gamma_of(Facet{1, 1}).maximal_facets() == std::vector<Facet>{{1, 1}});
  CHECK(gamma_of(Facet{inf, inf}).maximal_facets() == std::vector<Facet>{{inf, inf}});
  CHECK(gamma_of(Facet{0, 0}).maximal_facets() == std::vector<Facet>{{0, 0}});
  CHECK_THROWS_AS(gamma_of(Facet{}), DimensionError);

  const auto w = canonical_weights(example_two_facets());
  CHECK(w.weight_of(Facet{0, inf}) == 1);
  CHECK(w.weight_of(Facet{2, 0}) == 1);
  CHECK_THROWS_AS(w.weight_of(Facet{1, 0}), WeightError);

  CHECK(canonical_weights(gamma_of(Facet{1, 1})).rows().front().weight == 1);

  const auto three = canonical_weights(Multicomplex(3, {Facet{1, 0, 0}, Facet{0, 1, 0}, Facet{0, 0, 1}}));
  for (const auto& r : three.rows()) CHECK(r.weight == 1);
}

TEST_CASE("weighted rows are validated") {
  using Row = WeightedMulticomplex::Row;
  CHECK_THROWS_AS(WeightedMulticomplex({Row{{1, 1}, 0}}), WeightError);
  CHECK_THROWS_AS(WeightedMulticomplex({Row{{1, 1}, 1}, Row{{1, 0}, 2}}), AntichainError);
  CHECK_THROWS_AS(WeightedMulticomplex({Row{{1, 1}, 1}, Row{{1, 1}, 1}}), AntichainError);
  const std::uint64_t two[] = {1, 2};
  CHECK_THROWS_AS(WeightedMulticomplex(gamma_of(Facet{1, 1}), two), WeightError);

  const WeightedMulticomplex w({Row{{2, 0}, 3}, Row{{0, inf}, 5}});
  CHECK(w.rows().front().facet == Facet{0, inf});
  CHECK(w.weight_of(Facet{2, 0}) == 3);
}
