#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "ew/rational.hpp"

namespace ew {

/// An affine-linear function slope*s + intercept of the Eisenstein
/// parameter s, with exact rational coefficients.
struct AffineArg {
  Rational slope;
  Rational intercept;

  static AffineArg constant(Rational c) { return {Rational(0), c}; }
  static AffineArg parse(std::string_view text);

  bool is_constant() const { return slope.is_zero(); }
  Rational at(const Rational& s) const { return slope * s + intercept; }
  double at(double s) const { return slope.to_double() * s + intercept.to_double(); }

  /// Sign of the function as s -> +infinity (slope first, then intercept).
  int eventual_sign() const { return slope.sign() != 0 ? slope.sign() : intercept.sign(); }

  /// Renders "2s-4", "5/2-s", "s", "-3/2". Negative slopes put the constant first.
  std::string str() const;
  /// Same as str() but with \tfrac for non-integer rationals.
  std::string latex() const;

  friend AffineArg operator+(const AffineArg& a, const AffineArg& b) {
    return {a.slope + b.slope, a.intercept + b.intercept};
  }
  friend AffineArg operator-(const AffineArg& a, const AffineArg& b) {
    return {a.slope - b.slope, a.intercept - b.intercept};
  }
  friend AffineArg operator+(const AffineArg& a, const Rational& c) { return {a.slope, a.intercept + c}; }
  friend AffineArg operator-(const AffineArg& a, const Rational& c) { return {a.slope, a.intercept - c}; }
  friend AffineArg operator*(const Rational& c, const AffineArg& a) { return {c * a.slope, c * a.intercept}; }
  AffineArg operator-() const { return {-slope, -intercept}; }

  friend bool operator==(const AffineArg&, const AffineArg&) = default;
  friend auto operator<=>(const AffineArg&, const AffineArg&) = default;
};

}  // namespace ew
