#include "ionraman/halfint.hpp"

#include <stdexcept>

namespace ionraman {

std::string to_string(HalfInt j) {
  if (j.is_integer()) return std::to_string(j.twice / 2);
  return std::to_string(j.twice) + "/2";
}

HalfInt parse_half_int(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      size_t used = 0;
      const int whole = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return HalfInt::from_int(whole);
    }
    size_t used = 0;
    const int numer = std::stoi(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const std::string denom = text.substr(slash + 1);
    if (denom != "2") throw std::invalid_argument(text);
    return HalfInt::from_twice(numer);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a half-integer: '" + text + "'");
  }
}

}  // namespace ionraman
