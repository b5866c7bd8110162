#pragma once

#include <stdexcept>

namespace spectra {

enum class EnsembleKind { WL, FT };

// Parameters of a (fixed-trace) Wishart-Laguerre ensemble.  Single source
// of truth for every formula in the library: N eigenvalues, data dimension
// M >= N, rectangularity nu = M - N, Dyson index beta in {1,2}, and the
// trace t (meaningful for the FT kind only, default 1).
struct EnsembleParams {
    int n_dim;
    int m_dim;
    int beta;
    EnsembleKind kind;
    double trace = 1.0;

    EnsembleParams(int n, int m, int b, EnsembleKind k, double t = 1.0)
        : n_dim(n), m_dim(m), beta(b), kind(k), trace(t) {
        if (n_dim < 1) throw std::invalid_argument("EnsembleParams: N must be >= 1");
        if (m_dim < n_dim) throw std::invalid_argument("EnsembleParams: M must be >= N");
        if (beta != 1 && beta != 2) throw std::invalid_argument("EnsembleParams: beta must be 1 or 2");
        if (!(trace > 0.0)) throw std::invalid_argument("EnsembleParams: trace must be positive");
    }

    int nu() const { return m_dim - n_dim; }

    // m-index of the matrix-argument representation; an integer exactly
    // when beta == 2, or beta == 1 with nu odd.
    double m_index() const { return 0.5 * beta * (nu() + 1) - 1.0; }
    bool m_index_is_integer() const { return beta == 2 || (nu() % 2 == 1); }

    static EnsembleParams wl(int n, int m, int b) { return {n, m, b, EnsembleKind::WL}; }
    static EnsembleParams ft(int n, int m, int b, double t = 1.0) {
        return {n, m, b, EnsembleKind::FT, t};
    }
};

// ln K: normalization of the unconstrained WL eigenvalue density.
double log_norm_wl(const EnsembleParams& p);

// ln C at t = 1: normalization of the fixed-trace WL eigenvalue density.
double log_norm_ft(const EnsembleParams& p);

} // namespace spectra
