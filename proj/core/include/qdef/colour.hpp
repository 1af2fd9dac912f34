#pragma once

#include <stdexcept>
#include <string>

namespace qdef {

/// A colour label: +1 or -1. Tags which side of the singular point (q-1)^{-1}
/// a representation lives on, and decorates each slot of the coloured Hopf
/// maps.
class ColourLabel {
public:
  constexpr ColourLabel() = default;
  constexpr explicit ColourLabel(int value) : value_(value) {
    if (value != 1 && value != -1)
      throw std::invalid_argument("colour label must be +1 or -1, got " +
                                  std::to_string(value));
  }

  static constexpr ColourLabel plus() { return ColourLabel(1); }
  static constexpr ColourLabel minus() { return ColourLabel(-1); }

  constexpr int value() const { return value_; }
  constexpr double sign() const { return static_cast<double>(value_); }

  friend constexpr ColourLabel operator*(ColourLabel a, ColourLabel b) {
    return ColourLabel(a.value_ * b.value_);
  }
  constexpr ColourLabel operator-() const { return ColourLabel(-value_); }
  friend constexpr bool operator==(ColourLabel, ColourLabel) = default;

  std::string str() const { return value_ > 0 ? "+1" : "-1"; }

private:
  int value_ = 1;
};

inline constexpr ColourLabel kColours[2] = {ColourLabel::plus(),
                                            ColourLabel::minus()};

} // namespace qdef
