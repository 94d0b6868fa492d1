#include "vca/covers.hpp"

#include <algorithm>

namespace vca {

namespace {

void require_dimension(const WeightedMulticomplex& w, const CoverVector& b) {
  if (b.size() != w.dimension())
    throw DimensionError("vector of length " + std::to_string(b.size()) +
                         " for a complex of dimension " + std::to_string(w.dimension()));
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

// Search state for minimal_covers. Covers are produced in lexicographic order,
// so any cover strictly below a candidate has already been recorded.
class CoverSearch {
public:
  CoverSearch(const WeightedMulticomplex& w, std::uint64_t k)
      : rows_{w.rows()}, n_{w.dimension()}, box_{cover_box_bound(w, k)}, current_(n_) {
    for (const auto& r : rows_) targets_.push_back(ext_mul(k, r.weight));
    // suffix_[i][f] = best contribution of coordinates i.. to facet f.
    suffix_.assign(n_ + 1, std::vector<ExtendedNatural>(rows_.size(), 0));
    for (std::size_t i = n_; i-- > 0;)
      for (std::size_t f = 0; f < rows_.size(); ++f)
        suffix_[i][f] = ext_add(suffix_[i + 1][f], ext_mul(box_[i], rows_[f].facet[i]));
  }

  std::vector<CoverVector> run() {
    std::vector<ExtendedNatural> sums(rows_.size(), 0);
    if (reachable(sums, 0)) descend(0, sums);
    return std::move(found_);
  }

private:
  bool reachable(const std::vector<ExtendedNatural>& sums, std::size_t from) const {
    for (std::size_t f = 0; f < rows_.size(); ++f)
      if (ext_add(sums[f], suffix_[from][f]) < targets_[f]) return false;
    return true;
  }

  bool satisfied(const std::vector<ExtendedNatural>& sums) const {
    for (std::size_t f = 0; f < rows_.size(); ++f)
      if (sums[f] < targets_[f]) return false;
    return true;
  }

  bool dominates_found() const {
    return std::any_of(found_.begin(), found_.end(),
                       [&](const CoverVector& g) { return leq(g, current_); });
  }

  void descend(std::size_t i, const std::vector<ExtendedNatural>& sums) {
    std::vector<ExtendedNatural> next(sums.size());
    for (std::uint64_t v = 0; v <= box_[i]; ++v) {
      current_[i] = v;
      for (std::size_t f = 0; f < rows_.size(); ++f)
        next[f] = ext_add(sums[f], ext_mul(v, rows_[f].facet[i]));
      // Every completion, and every larger value here, dominates the zero completion.
      if (dominates_found()) break;
      if (satisfied(next)) {
        found_.push_back(current_);
        break;
      }
      if (i + 1 < n_ && reachable(next, i + 1)) descend(i + 1, next);
    }
    current_[i] = 0;
  }

  const std::vector<WeightedMulticomplex::Row>& rows_;
  std::size_t n_;
  CoverVector box_;
  CoverVector current_;
  std::vector<ExtendedNatural> targets_;
  std::vector<std::vector<ExtendedNatural>> suffix_;
  std::vector<CoverVector> found_;
};

}  // namespace

ExtendedNatural weighted_sum(const Facet& m, const CoverVector& b) {
  if (m.size() != b.size()) throw DimensionError("weighted_sum: length mismatch");
  ExtendedNatural sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i) sum = ext_add(sum, ext_mul(m[i], b[i]));
  return sum;
}

CoverDegree cover_order(const WeightedMulticomplex& w, const CoverVector& b) {
  require_dimension(w, b);
  CoverDegree order = kInfinity;
  for (const auto& r : w.rows()) {
    const ExtendedNatural s = weighted_sum(r.facet, b);
    if (s.is_infinite()) continue;
    order = std::min(order, CoverDegree{s.value() / r.weight});
  }
  return order;
}

bool is_cover(const WeightedMulticomplex& w, const CoverVector& b, std::uint64_t k) {
  return cover_order(w, b) >= CoverDegree{k};
}

CoverVector cover_box_bound(const WeightedMulticomplex& w, std::uint64_t k) {
  if (k == 0) throw DegreeError("cover_box_bound needs k >= 1; the only minimal 0-cover is 0");
  CoverVector box(w.dimension());
  for (const auto& r : w.rows()) {
    const std::uint64_t target = ext_mul(k, r.weight).value();
    for (std::size_t i = 0; i < box.size(); ++i) {
      const ExtendedNatural& m = r.facet[i];
      std::uint64_t need = 0;
      if (m.is_infinite())
        need = 1;
      else if (!m.is_zero())
        need = ceil_div(target, m.value());
      box[i] = std::max(box[i], need);
    }
  }
  return box;
}

MinimalCoverSet minimal_covers(const WeightedMulticomplex& w, std::uint64_t k) {
  if (k == 0) return {0, {CoverVector(w.dimension())}};
  return {k, CoverSearch(w, k).run()};
}

MinimalCoverSet minimal_covers_oracle(const WeightedMulticomplex& w, std::uint64_t k) {
  const std::size_t n = w.dimension();
  if (k == 0) return {0, {CoverVector(n)}};
  const CoverVector box = cover_box_bound(w, k);

  MinimalCoverSet out{k, {}};
  CoverVector b(n);
  while (true) {
    if (is_cover(w, b, k)) {
      // Covers are upward closed, so b is minimal iff no b - e_i is a cover.
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if (b[i] == 0) continue;
        CoverVector below = b;
        --below[i];
        minimal = !is_cover(w, below, k);
      }
      if (minimal) out.covers.push_back(b);
    }
    std::size_t i = n;
    while (i > 0 && b[i - 1] == box[i - 1]) b[--i] = 0;
    if (i == 0) break;
    ++b[i - 1];
  }
  return out;
}

}  // namespace vca
