#include "vca/core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace vca {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": length mismatch (" << a << " vs " << b << ")";
    throw DimensionError(msg.str());
  }
}

}  // namespace

std::string Facet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::uint64_t CoverVector::total_degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool CoverVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v == 0; });
}

CoverVector operator+(const CoverVector& a, const CoverVector& b) {
  require_same_length(a.size(), b.size(), "vector sum");
  CoverVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CoverVector operator-(const CoverVector& a, const CoverVector& b) {
  require_same_length(a.size(), b.size(), "vector difference");
  CoverVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw PreconditionError("vector difference would be negative");
    out[i] = a[i] - b[i];
  }
  return out;
}

std::string CoverVector::join(const char* sep) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << sep;
    os << entries_[i];
  }
  return os.str();
}

bool leq_ext(std::span<const ExtendedNatural> a, std::span<const ExtendedNatural> b) {
  require_same_length(a.size(), b.size(), "leq_ext");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

bool leq_ext(const Facet& a, const Facet& b) { return leq_ext(a.entries(), b.entries()); }

bool leq(const CoverVector& a, const CoverVector& b) {
  require_same_length(a.size(), b.size(), "leq");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Facet to_facet(const CoverVector& b) {
  std::vector<ExtendedNatural> e(b.begin(), b.end());
  return Facet(std::move(e));
}

std::vector<Facet> normalize_facets(std::span<const Facet> candidates) {
  if (candidates.empty()) throw EmptyComplexError("multicomplex needs at least one facet");
  const std::size_t n = candidates.front().size();
  for (const auto& f : candidates) require_same_length(f.size(), n, "normalize_facets");

  std::vector<Facet> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // A dominator of f is never lexicographically smaller than f, so scanning
  // in reverse order sees every potential dominator first.
  std::vector<Facet> maximal;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                       [&](const Facet& m) { return leq_ext(*it, m); });
    if (!dominated) maximal.push_back(*it);
  }
  std::reverse(maximal.begin(), maximal.end());
  return maximal;
}

Multicomplex::Multicomplex(std::size_t dimension, std::vector<Facet> maximal_facets)
    : dimension_{dimension}, facets_{std::move(maximal_facets)} {
  if (facets_.empty()) throw EmptyComplexError("multicomplex needs at least one maximal facet");
  if (dimension_ == 0) throw DimensionError("multicomplex dimension must be positive");
  for (const auto& f : facets_) require_same_length(f.size(), dimension_, "facet");
  std::sort(facets_.begin(), facets_.end());
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && leq_ext(facets_[i], facets_[j])) {
        const char* why = facets_[i] == facets_[j] ? "duplicate" : "dominated";
        throw AntichainError(std::string(why) + " facet " + facets_[i].to_string() +
                             " (below " + facets_[j].to_string() + ")");
      }
    }
  }
}

Multicomplex Multicomplex::from_facets(std::span<const Facet> candidates) {
  auto maximal = normalize_facets(candidates);
  const std::size_t n = maximal.front().size();
  return Multicomplex(n, std::move(maximal));
}

bool Multicomplex::contains(std::span<const ExtendedNatural> a) const {
  require_same_length(a.size(), dimension_, "contains");
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Facet& m) { return leq_ext(a, m.entries()); });
}

bool Multicomplex::in_ideal(const CoverVector& a) const {
  require_same_length(a.size(), dimension_, "in_ideal");
  return !contains(to_facet(a));
}

Multicomplex gamma_of(const Facet& a) {
  if (a.size() == 0) throw DimensionError("gamma_of needs a nonempty vector");
  return Multicomplex(a.size(), {a});
}

namespace {

std::vector<Facet> facets_of(const std::vector<WeightedMulticomplex::Row>& rows) {
  std::vector<Facet> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.facet);
  return out;
}

std::size_t dimension_of(const std::vector<WeightedMulticomplex::Row>& rows) {
  if (rows.empty()) throw EmptyComplexError("weighted multicomplex needs at least one row");
  return rows.front().facet.size();
}

}  // namespace

WeightedMulticomplex::WeightedMulticomplex(std::vector<Row> rows)
    : complex_{dimension_of(rows), facets_of(rows)}, rows_{std::move(rows)} {
  for (const auto& r : rows_)
    if (r.weight == 0) throw WeightError("weight of facet " + r.facet.to_string() + " must be >= 1");
  std::sort(rows_.begin(), rows_.end(),
            [](const Row& a, const Row& b) { return a.facet < b.facet; });
}

namespace {

std::vector<WeightedMulticomplex::Row> zip_rows(const Multicomplex& c,
                                                std::span<const std::uint64_t> weights) {
  if (weights.size() != c.maximal_facets().size())
    throw WeightError("every maximal facet needs exactly one weight");
  std::vector<WeightedMulticomplex::Row> rows;
  for (std::size_t i = 0; i < weights.size(); ++i)
    rows.push_back({c.maximal_facets()[i], weights[i]});
  return rows;
}

}  // namespace

WeightedMulticomplex::WeightedMulticomplex(Multicomplex complex,
                                           std::span<const std::uint64_t> weights)
    : WeightedMulticomplex(zip_rows(complex, weights)) {}

std::uint64_t WeightedMulticomplex::weight_of(const Facet& m) const {
  for (const auto& r : rows_)
    if (r.facet == m) return r.weight;
  throw WeightError("not a maximal facet: " + m.to_string());
}

WeightedMulticomplex canonical_weights(const Multicomplex& c) {
  std::vector<std::uint64_t> ones(c.maximal_facets().size(), 1);
  return WeightedMulticomplex(c, ones);
}

std::ostream& operator<<(std::ostream& os, const Facet& f) {
  os << '(';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const CoverVector& b) {
  return os << '(' << b.join(",") << ')';
}

}  // namespace vca
