#pragma once

#include <string>
#include <vector>

#include "spectra/edelman.hpp"
#include "spectra/ensemble.hpp"
#include "spectra/log_space.hpp"

namespace spectra {

// Sampled density: sorted abscissas, non-negative values, and provenance
// (which ensemble / backend / formula produced it).
struct DensityCurve {
    std::vector<double> abscissas;
    std::vector<double> values;
    EnsembleParams params;
    std::string backend;
    std::string formula;
};

// Smallest-eigenvalue density of the fixed-trace ensemble at beta = 1,
// t = 1, assembled from the coefficient sets (general backend).  Zero for
// x >= 1/N, domain error for x <= 0.  Requires N >= 2 (at N = 1 the trace
// constraint pins the single eigenvalue and the density degenerates to a
// point mass).
double ftwl_density(const EnsembleParams& p, double x,
                    const CoefficientProvider& provider = coefficients);
LogValue ftwl_density_log(const EnsembleParams& p, double x,
                          const CoefficientProvider& provider = coefficients);

double ftwl_density_odd(const EnsembleParams& p, double x,
                        const CoefficientProvider& provider = coefficients);
double ftwl_density_even(const EnsembleParams& p, double x,
                         const CoefficientProvider& provider = coefficients);

// Theta_k / Xi_k building blocks of the even-nu density, evaluated from
// their truncated tau-integral representations (production path).
double theta_integral(const EnsembleParams& p, int k, double x);
double xi_integral(const EnsembleParams& p, int k, double x);

// Closed hypergeometric forms of the same quantities; series-convergence
// limited, intended as small-N cross-checks of the integral path.
double theta_integral_closed(const EnsembleParams& p, int k, double x);
double xi_integral_closed(const EnsembleParams& p, int k, double x);

// Specialized formulas for nu in {0,1,2,3}; independent code path from the
// general assembler.
double ftwl_density_explicit(const EnsembleParams& p, double x);

// Gap probability q(x) = 1 - int_0^x p; q(0) = 1, q(1/N) = 0.
double ftwl_cdf(const EnsembleParams& p, double x,
                const CoefficientProvider& provider = coefficients);

// ell-th moment of the smallest eigenvalue at t = 1.  Odd nu uses the
// closed Beta-function sum; even nu integrates the density.
double ftwl_moment(const EnsembleParams& p, int ell,
                   const CoefficientProvider& provider = coefficients);

// Trace-homogeneity helpers: an abscissa at t = 1 maps to t * x, and
// p(x; t) = (1/t) p(x/t; 1).
double rescale_trace(double x_at_t1, double t);
double density_at_t(const EnsembleParams& p, double x, double t,
                    const CoefficientProvider& provider = coefficients);

struct LaplaceCheck {
    double lhs;
    double rhs;
    double abs_diff;
};

// Numerically verifies the Laplace transform relation tying the fixed-trace
// density (as a function of the trace) to the unconstrained WL density.
LaplaceCheck laplace_relation_check(const EnsembleParams& p, double x, double s);

} // namespace spectra
