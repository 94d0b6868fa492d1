#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace vca {

/// An element of N ∪ {∞}.
///
/// Infinity is a distinct state, not a large integer. All arithmetic on
/// extended naturals goes through `ext_add` / `ext_mul`, which implement the
/// conventions
///
///     0 · ∞ = 0,   x · ∞ = ∞ (x ≥ 1),   x + ∞ = ∞,
///
/// and the total order k < ∞ for every finite k.
class ExtendedNatural {
public:
  constexpr ExtendedNatural() = default;
  constexpr ExtendedNatural(std::uint64_t v) : value_{v} {}  // NOLINT: implicit by intent

  static constexpr ExtendedNatural infinity() {
    ExtendedNatural e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

  /// Finite payload. Throws std::logic_error on ∞.
  std::uint64_t value() const;

  friend constexpr bool operator==(const ExtendedNatural& a, const ExtendedNatural& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedNatural& a,
                                                    const ExtendedNatural& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtendedNatural kInfinity = ExtendedNatural::infinity();

/// Sum with ∞ absorbing. Throws std::overflow_error if a finite sum overflows.
ExtendedNatural ext_add(ExtendedNatural a, ExtendedNatural b);

/// Product with 0 · ∞ = 0. Throws std::overflow_error on finite overflow.
ExtendedNatural ext_mul(ExtendedNatural a, ExtendedNatural b);

/// Parses a nonnegative decimal integer or `inf` (any case).
/// Throws std::invalid_argument on anything else.
ExtendedNatural parse_extended(const std::string& token);

std::ostream& operator<<(std::ostream& os, const ExtendedNatural& e);

}  // namespace vca
