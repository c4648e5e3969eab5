#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "fairicl/errors.hpp"

namespace fairicl {

// A rate or ratio that may be infinite (x/0, x>0) or undefined (0/0).
// Arithmetic on the sentinels follows the conventions used when tabulating
// group ratios: anything built from an undefined operand is undefined, and a
// positive quantity divided by zero is infinite.
class MetricValue {
 public:
  enum class Kind { Finite, Infinite, Undefined };

  MetricValue() : kind_(Kind::Undefined), value_(0.0) {}
  explicit MetricValue(double v) : kind_(Kind::Finite), value_(v) {}

  static MetricValue finite(double v) { return MetricValue(v); }
  static MetricValue infinite() { return MetricValue(Kind::Infinite); }
  static MetricValue undefined() { return MetricValue(Kind::Undefined); }

  // numer/denom with sentinel handling.
  static MetricValue rate(double numer, double denom) {
    if (denom != 0.0) return MetricValue(numer / denom);
    if (numer != 0.0) return infinite();
    return undefined();
  }

  static MetricValue ratio_of(const MetricValue& numer, const MetricValue& denom) {
    if (numer.is_undefined() || denom.is_undefined()) return undefined();
    if (numer.is_infinite() && denom.is_infinite()) return undefined();
    if (numer.is_infinite()) return infinite();
    if (denom.is_infinite()) return MetricValue(0.0);
    return rate(numer.value_, denom.value_);
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_undefined() const { return kind_ == Kind::Undefined; }

  // Value of a finite metric. Throws on sentinels.
  double value() const {
    if (!is_finite()) throw Error("metric value is not finite");
    return value_;
  }

  // |1 - x|, the distance of a ratio from parity. Infinite ratios deviate
  // infinitely; undefined ratios have undefined deviation.
  MetricValue deviation() const {
    switch (kind_) {
      case Kind::Finite:
        return MetricValue(std::fabs(1.0 - value_));
      case Kind::Infinite:
        return infinite();
      case Kind::Undefined:
        return undefined();
    }
    return undefined();
  }

  bool operator==(const MetricValue& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ != Kind::Finite || value_ == o.value_;
  }
  bool operator!=(const MetricValue& o) const { return !(*this == o); }

 private:
  explicit MetricValue(Kind k) : kind_(k), value_(0.0) {}

  Kind kind_;
  double value_;
};

}  // namespace fairicl
