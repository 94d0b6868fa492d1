#include "vca/extended_natural.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace vca {

std::uint64_t ExtendedNatural::value() const {
  if (infinite_) throw std::logic_error("value() called on infinity");
  return value_;
}

std::string ExtendedNatural::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

ExtendedNatural ext_add(ExtendedNatural a, ExtendedNatural b) {
  if (a.is_infinite() || b.is_infinite()) return kInfinity;
  const std::uint64_t x = a.value();
  const std::uint64_t y = b.value();
  if (x > std::numeric_limits<std::uint64_t>::max() - y)
    throw std::overflow_error("extended natural addition overflow");
  return x + y;
}

ExtendedNatural ext_mul(ExtendedNatural a, ExtendedNatural b) {
  // 0 · ∞ = 0 must be checked before infinity absorbs.
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.is_infinite() || b.is_infinite()) return kInfinity;
  const std::uint64_t x = a.value();
  const std::uint64_t y = b.value();
  if (x > std::numeric_limits<std::uint64_t>::max() / y)
    throw std::overflow_error("extended natural multiplication overflow");
  return x * y;
}

ExtendedNatural parse_extended(const std::string& token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf") return kInfinity;

  std::uint64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (token.empty() || !std::isdigit(static_cast<unsigned char>(token.front())))
    throw std::invalid_argument("not a nonnegative integer or 'inf': '" + token + "'");
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("not a nonnegative integer or 'inf': '" + token + "'");
  return v;
}

std::ostream& operator<<(std::ostream& os, const ExtendedNatural& e) {
  return os << e.to_string();
}

}  // namespace vca
