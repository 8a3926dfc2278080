#pragma once

#include <compare>
#include <string>

namespace ionraman {

// Angular-momentum quantum number stored as 2j, so half-integer values like
// 1/2 and 3/2 stay exact.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

  static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
  static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }

  constexpr double value() const { return twice / 2.0; }
  constexpr bool is_integer() const { return twice % 2 == 0; }

  friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
};

// "1/2", "3/2", "2", ...
std::string to_string(HalfInt j);

// Accepts "3/2" and plain integers like "2". Throws std::invalid_argument on
// anything else.
HalfInt parse_half_int(const std::string& text);

}  // namespace ionraman
