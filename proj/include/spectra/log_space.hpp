#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace spectra {

// A real number stored as (log of magnitude, sign).  sign == 0 encodes an
// exact zero (log is then -inf by convention).
struct LogValue {
    double log = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogValue zero() { return {}; }
    static LogValue one() { return {0.0, 1}; }

    static LogValue from_double(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
    }
    static LogValue from_log(double lg, int sg = 1) {
        if (sg == 0) return zero();
        return {lg, sg};
    }

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log); }

    LogValue operator*(const LogValue& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {log + o.log, sign * o.sign};
    }
    LogValue operator/(const LogValue& o) const {
        if (sign == 0) return zero();
        return {log - o.log, sign * o.sign};
    }
};

// Accumulates sum of signed log-space terms.  Terms are rescaled to the
// running maximum exponent and added with Kahan compensation; exponent
// spans of several hundred orders of magnitude stay exact to double
// precision of the dominant scale.
class LogSum {
public:
    void add(const LogValue& t) {
        if (t.sign == 0) return;
        if (t.log > max_log_) rescale(t.log);
        kahan_add(t.sign * std::exp(t.log - max_log_));
    }
    void add_log(double lg, int sg) { add(LogValue::from_log(lg, sg)); }

    LogValue result() const {
        if (max_log_ == -std::numeric_limits<double>::infinity() || sum_ == 0.0)
            return LogValue::zero();
        return {max_log_ + std::log(std::fabs(sum_)), sum_ > 0 ? 1 : -1};
    }

private:
    void rescale(double new_max) {
        if (max_log_ != -std::numeric_limits<double>::infinity()) {
            double f = std::exp(max_log_ - new_max);
            sum_ *= f;
            comp_ *= f;
        }
        max_log_ = new_max;
    }
    void kahan_add(double v) {
        double y = v - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }

    double max_log_ = -std::numeric_limits<double>::infinity();
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace spectra
