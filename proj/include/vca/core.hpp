#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vca/errors.hpp"
#include "vca/extended_natural.hpp"

namespace vca {

/// A point of (N ∪ {∞})^n; the maximal facets of a multicomplex are stored as these.
class Facet {
public:
  Facet() = default;
  explicit Facet(std::vector<ExtendedNatural> entries) : entries_{std::move(entries)} {}
  Facet(std::initializer_list<ExtendedNatural> entries) : entries_{entries} {}

  std::size_t size() const { return entries_.size(); }
  const ExtendedNatural& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const ExtendedNatural> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Lexicographic, with ∞ after every finite value.
  friend auto operator<=>(const Facet&, const Facet&) = default;
  friend bool operator==(const Facet&, const Facet&) = default;

  std::string to_string() const;

private:
  std::vector<ExtendedNatural> entries_;
};

/// An exponent vector b ∈ N^n; the candidate vertex covers.
class CoverVector {
public:
  CoverVector() = default;
  explicit CoverVector(std::size_t n) : entries_(n, 0) {}
  explicit CoverVector(std::vector<std::uint64_t> entries) : entries_{std::move(entries)} {}
  CoverVector(std::initializer_list<std::uint64_t> entries) : entries_{entries} {}

  std::size_t size() const { return entries_.size(); }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  std::uint64_t& operator[](std::size_t i) { return entries_[i]; }
  std::span<const std::uint64_t> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::uint64_t total_degree() const;
  bool is_zero() const;

  friend auto operator<=>(const CoverVector&, const CoverVector&) = default;
  friend bool operator==(const CoverVector&, const CoverVector&) = default;

  /// Componentwise sum. Throws DimensionError on length mismatch.
  friend CoverVector operator+(const CoverVector& a, const CoverVector& b);
  /// Componentwise difference; requires b ≤ a.
  friend CoverVector operator-(const CoverVector& a, const CoverVector& b);

  /// Entries joined by `sep`, e.g. "2 0" or "2,0".
  std::string join(const char* sep) const;

private:
  std::vector<std::uint64_t> entries_;
};

/// Componentwise ≤ on extended vectors. Throws DimensionError on length mismatch.
bool leq_ext(std::span<const ExtendedNatural> a, std::span<const ExtendedNatural> b);
bool leq_ext(const Facet& a, const Facet& b);

/// Componentwise ≤ on finite vectors.
bool leq(const CoverVector& a, const CoverVector& b);

Facet to_facet(const CoverVector& b);

/// Maximal elements of `candidates`, duplicates collapsed, in lexicographic order.
/// Throws EmptyComplexError on empty input, DimensionError on ragged input.
std::vector<Facet> normalize_facets(std::span<const Facet> candidates);

/// A multicomplex Γ ⊂ (N ∪ {∞})^n, stored as its antichain of maximal facets.
/// Γ itself is the downset of those facets.
class Multicomplex {
public:
  /// Validates that `maximal_facets` is a nonempty antichain of n-vectors.
  /// Throws EmptyComplexError, DimensionError, or AntichainError.
  Multicomplex(std::size_t dimension, std::vector<Facet> maximal_facets);

  /// Normalizes an arbitrary nonempty list of facets first.
  static Multicomplex from_facets(std::span<const Facet> candidates);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Facet>& maximal_facets() const { return facets_; }

  /// a ∈ Γ, i.e. a ≤ m for some maximal facet m.
  bool contains(std::span<const ExtendedNatural> a) const;
  bool contains(const Facet& a) const { return contains(a.entries()); }

  /// x^a ∈ I(Γ), i.e. a ∉ Γ.
  bool in_ideal(const CoverVector& a) const;

  friend bool operator==(const Multicomplex&, const Multicomplex&) = default;

private:
  std::size_t dimension_;
  std::vector<Facet> facets_;
};

/// Γ(a) = { b : b ≤ a }.
Multicomplex gamma_of(const Facet& a);

/// (Γ, ω): each maximal facet carries a positive integer weight.
class WeightedMulticomplex {
public:
  struct Row {
    Facet facet;
    std::uint64_t weight;
    friend bool operator==(const Row&, const Row&) = default;
  };

  /// Rows must already form an antichain; duplicates or dominated rows raise
  /// AntichainError and weight 0 raises WeightError.
  explicit WeightedMulticomplex(std::vector<Row> rows);
  WeightedMulticomplex(Multicomplex complex, std::span<const std::uint64_t> weights);

  const Multicomplex& complex() const { return complex_; }
  std::size_t dimension() const { return complex_.dimension(); }
  /// Rows in lexicographic facet order.
  const std::vector<Row>& rows() const { return rows_; }
  std::uint64_t weight_of(const Facet& m) const;
  bool single_facet() const { return rows_.size() == 1; }

  friend bool operator==(const WeightedMulticomplex& a, const WeightedMulticomplex& b) {
    return a.rows_ == b.rows_;
  }

private:
  Multicomplex complex_;
  std::vector<Row> rows_;
};

/// ω₀ ≡ 1.
WeightedMulticomplex canonical_weights(const Multicomplex& c);

std::ostream& operator<<(std::ostream& os, const Facet& f);
std::ostream& operator<<(std::ostream& os, const CoverVector& b);

}  // namespace vca
