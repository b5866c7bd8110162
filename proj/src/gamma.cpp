#include "spectra/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace spectra {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
const double kHalfLog2Pi = 0.5 * std::log(2.0 * M_PI);

double lanczos_log_gamma(double x) {
    // valid for x > 0.5; callers shift smaller arguments up by recurrence
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    double t = x + kLanczosG - 0.5;
    return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    if (x >= 0.5) return lanczos_log_gamma(x);
    // Gamma(x) = Gamma(x+1)/x
    return lanczos_log_gamma(x + 1.0) - std::log(x);
}

LogValue log_gamma_signed(double x) {
    if (x > 0.0) return LogValue::from_log(log_gamma(x), 1);
    if (x == std::floor(x)) throw std::domain_error("log_gamma_signed: pole at non-positive integer");
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    double s = std::sin(M_PI * x);
    double lg = std::log(M_PI) - std::log(std::fabs(s)) - log_gamma(1.0 - x);
    return LogValue::from_log(lg, s > 0 ? 1 : -1);
}

double log_beta(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_double_factorial_odd(int m) {
    // (2m+1)!! = (2m+1)! / (2^m m!)
    double n = 2.0 * m + 1.0;
    return log_gamma(n + 1.0) - m * std::log(2.0) - log_gamma(m + 1.0);
}

} // namespace spectra
