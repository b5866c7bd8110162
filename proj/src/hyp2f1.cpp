#include "spectra/hyp2f1.hpp"

#include <cmath>
#include <stdexcept>

#include "spectra/gamma.hpp"
#include "spectra/log_space.hpp"

namespace spectra {

namespace {

// plain Gauss series; converges for |z| < 1
double series_2f1(double a, double b, double c, double z, int max_terms = 2000000) {
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) return sum;
    }
    throw std::runtime_error("gauss_2f1: series did not converge");
}

// 2F1 via DLMF 15.8.2 in powers of 1/z; valid z < 0, b - a not an integer
double inverse_arg_2f1(double a, double b, double c, double z) {
    const double w = 1.0 / z;
    const double lmz = std::log(-z);
    LogValue g1 = log_gamma_signed(c) * log_gamma_signed(b - a)
                / (log_gamma_signed(b) * log_gamma_signed(c - a));
    LogValue g2 = log_gamma_signed(c) * log_gamma_signed(a - b)
                / (log_gamma_signed(a) * log_gamma_signed(c - b));
    double f1 = series_2f1(a, a - c + 1.0, a - b + 1.0, w);
    double f2 = series_2f1(b, b - c + 1.0, b - a + 1.0, w);
    LogSum s;
    s.add(g1 * LogValue::from_log(-a * lmz, 1) * LogValue::from_double(f1));
    s.add(g2 * LogValue::from_log(-b * lmz, 1) * LogValue::from_double(f2));
    return s.result().value();
}

bool near_integer(double x, double tol = 1e-8) {
    return std::fabs(x - std::round(x)) < tol;
}

} // namespace

double gauss_2f1(double a, double b, double c, double z) {
    if (z >= 1.0) throw std::domain_error("gauss_2f1: z must be < 1");
    if (c <= 0.0 && near_integer(c)) throw std::domain_error("gauss_2f1: c at a pole");
    if (z == 0.0) return 1.0;
    if (z > -0.7) return series_2f1(a, b, c, z);
    if (z > -8.0 || near_integer(b - a)) {
        // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); the transformed series
        // has all-positive terms for the parameter families used here
        const double w = z / (z - 1.0);
        return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);
    }
    return inverse_arg_2f1(a, b, c, z);
}

} // namespace spectra
