// Copyright (c) the bqs contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

namespace bqs {

/// A nonnegative quantity carried as its natural log. Every quantity in this
/// library (norms, shift weights, intertwiner coefficients) is strictly
/// positive, so no sign is tracked; the zero flag exists only so that an
/// exact zero round-trips.
class LogValue {
  public:
    static LogValue from_log(double log_magnitude) {
        return LogValue(log_magnitude, false);
    }
    static LogValue from_value(double v) {
        if (v < 0.0) throw std::domain_error("LogValue requires a nonnegative value");
        if (v == 0.0) return zero();
        return LogValue(std::log(v), false);
    }
    static LogValue zero() { return LogValue(0.0, true); }

    bool is_zero() const { return zero_; }
    double log() const {
        if (zero_) throw std::domain_error("log of zero LogValue");
        return log_magnitude_;
    }
    double value() const { return zero_ ? 0.0 : std::exp(log_magnitude_); }

    LogValue operator*(const LogValue& o) const {
        if (zero_ || o.zero_) return zero();
        return from_log(log_magnitude_ + o.log_magnitude_);
    }
    LogValue operator/(const LogValue& o) const {
        if (o.zero_) throw std::domain_error("division by zero LogValue");
        if (zero_) return zero();
        return from_log(log_magnitude_ - o.log_magnitude_);
    }
    LogValue pow(double e) const {
        if (zero_) return zero();
        return from_log(e * log_magnitude_);
    }

  private:
    LogValue(double lm, bool z) : log_magnitude_(lm), zero_(z) {}
    double log_magnitude_;
    bool zero_;
};

}  // namespace bqs
