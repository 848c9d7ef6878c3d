#pragma once

namespace nracover {

/// Sign of an exact quantity.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of_int(int s) {
  if (s < 0) return Sign::Negative;
  if (s > 0) return Sign::Positive;
  return Sign::Zero;
}

inline Sign operator*(Sign a, Sign b) {
  return sign_of_int(static_cast<int>(a) * static_cast<int>(b));
}

inline Sign negate(Sign a) { return sign_of_int(-static_cast<int>(a)); }

}  // namespace nracover
