#include "spectra/ensemble.hpp"

#include <cmath>

#include "spectra/gamma.hpp"

namespace spectra {

double log_norm_wl(const EnsembleParams& p) {
    const double hb = 0.5 * p.beta;
    const int n = p.n_dim, m = p.m_dim;
    double lg = hb * n * m * std::log(hb);
    for (int j = 1; j <= n; ++j) {
        lg += log_gamma(1.0 + hb);
        lg -= log_gamma(1.0 + hb * j);
        lg -= log_gamma(hb * (m - n + j));
    }
    return lg;
}

double log_norm_ft(const EnsembleParams& p) {
    const double hb = 0.5 * p.beta;
    const int n = p.n_dim, m = p.m_dim;
    double lg = log_gamma(m * n * hb) + n * log_gamma(1.0 + hb);
    for (int j = 0; j < n; ++j) {
        lg -= log_gamma((m - j) * hb);
        lg -= log_gamma(1.0 + (n - j) * hb);
    }
    return lg;
}

} // namespace spectra
