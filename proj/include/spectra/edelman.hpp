#pragma once

#include <functional>

#include "spectra/ensemble.hpp"
#include "spectra/log_space.hpp"
#include "spectra/rational.hpp"

namespace spectra {

// Generalized Laguerre polynomial L_n^{(alpha)}(x) with exact rational
// coefficients, built from the three-term recurrence
//   (k+1) L_{k+1} = (2k+1+alpha - x) L_k - (k+alpha) L_{k-1}.
// With negate_arg set, returns L_n^{(alpha)}(-x) (all coefficients positive
// for alpha >= 0).
RationalPoly laguerre_poly(int n, int alpha, bool negate_arg = false);

enum class CoefficientKind { OddH, EvenFG };

// Exact coefficient data of the smallest-eigenvalue polynomials for the
// beta = 1 WL ensemble: a single polynomial h for odd nu, a pair (f, g)
// for even nu.  Gamma-product prefactors that mix sqrt(pi) and 2^N are kept
// apart from the rational polynomial as a signed log-space scale, so the
// polynomial arithmetic stays exact.
struct CoefficientSet {
    int n_dim = 0;
    int nu = 0;
    CoefficientKind kind = CoefficientKind::OddH;

    RationalPoly h;          // OddH
    LogValue h_scale;

    RationalPoly f, g;       // EvenFG
    LogValue f_scale, g_scale;

    int max_degree_bound() const {
        return kind == CoefficientKind::OddH ? (n_dim - 1) * (nu - 1) / 2
                                             : nu * (n_dim - 1) / 2;
    }
};

// Provider interface: maps (N, nu) to a coefficient set.  The library ships
// closed forms for nu in {0,1,2,3}; higher nu needs the recursive
// construction (external) plugged in through this hook.
using CoefficientProvider = std::function<CoefficientSet(int n_dim, int nu)>;

// Built-in provider, nu in {0,1,2,3}.  Throws unsupported_error for other
// nu, naming the provider hook.
CoefficientSet coefficients(int n_dim, int nu);

// ln c_{N,nu}: the overall constant of the finite-N beta = 1 WL density.
double c_constant_log(int n_dim, int nu);

// Tricomi confluent hypergeometric function U(a, b, z) by adaptive
// quadrature of its Laplace-type integral representation; a >= 0, z > 0.
double tricomi_u(double a, double b, double z);

// The two auxiliary functions entering the even-nu density:
//   U1(x) = U((N-1)/2, -1/2, x/2),   U2(x) = -((N-1)/4) U((N+1)/2, 1/2, x/2)
// (U2 is the derivative of U1).
double tricomi_u1(int n_dim, double x);
double tricomi_u2(int n_dim, double x);

// Smallest-eigenvalue density of the unconstrained WL ensemble at beta = 1,
// assembled in log space from the coefficient set.  x > 0.
double wl_density(const EnsembleParams& p, double x,
                  const CoefficientProvider& provider = coefficients);

// log-space variant used by the scaled-limit probes
LogValue wl_density_log(const EnsembleParams& p, double x,
                        const CoefficientProvider& provider = coefficients);

} // namespace spectra
