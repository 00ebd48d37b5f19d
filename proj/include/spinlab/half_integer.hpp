#ifndef SPINLAB_HALF_INTEGER_HPP
#define SPINLAB_HALF_INTEGER_HPP

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace spinlab {

/// Exact half-integer quantum number (spin magnitudes, S_z eigenvalues).
/// Stored as twice the value so that 1/2, 1, 3/2, ... are all exact integers.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

  /// Accepts 0.5, 1.0, 1.5, ...; anything off the half-integer lattice is rejected.
  static HalfInteger from_double(double value) {
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (!std::isfinite(twice) || std::abs(twice - rounded) > 1e-9) {
      throw std::invalid_argument("value " + std::to_string(value) +
                                  " is not a half-integer");
    }
    return HalfInteger(static_cast<int>(rounded));
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace spinlab

#endif  // SPINLAB_HALF_INTEGER_HPP
