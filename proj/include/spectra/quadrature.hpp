#pragma once

#include <functional>

namespace spectra {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval.  Splits the worst
// interval until |K15 - G7| estimates drop below max(abs_tol, rel_tol*|I|).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_intervals = 4000);

// Integral over [a, inf) via the substitution t = a + u/(1-u).
QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double rel_tol = 1e-10, double abs_tol = 0.0);

// ln of integral of exp(log_f(t)) over [a, b].  The exponent is presampled
// on a coarse grid to find its scale, then the rescaled integrand is
// integrated adaptively.  Robust when log_f spans hundreds of units.
// Returns -inf when the integral underflows to zero.
double integrate_log(const std::function<double(double)>& log_f, double a, double b,
                     double rel_tol = 1e-10);

} // namespace spectra
