#pragma once

#include <vector>

#include "spectra/edelman.hpp"
#include "spectra/ensemble.hpp"

namespace spectra {

// Modified Bessel function I_order(z), z >= 0.  Integer orders are the
// production path (power series); half-integer orders go through the closed
// sinh/cosh forms.  Other fractional orders are rejected.
double bessel_i(double order, double z);

// Independent backend: periodic-trapezoid evaluation of the cosine integral
// representation (integer order only).  Cross-checks the series.
double bessel_i_trapezoid(int order, double z, int nodes = 64);

// Square antisymmetric matrix of even order; entries set through the upper
// triangle so A[j][i] == -A[i][j] holds exactly.
class SkewMatrix {
public:
    explicit SkewMatrix(int order);
    int order() const { return n_; }
    void set_upper(int i, int j, double v);  // i < j
    double at(int i, int j) const { return a_[i * n_ + j]; }
    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

// Pfaffian by Parlett-Reid skew tridiagonalization with pivoting.
double pfaffian(const SkewMatrix& a);

// determinant of a dense matrix by LU with partial pivoting (row-major)
double determinant(std::vector<double> m, int n);

enum class Picture { WishartScale, DiracScale };

// Universal microscopic laws P(y), Q(y) of the scaled smallest eigenvalue:
// Bessel determinants for beta = 2 (any integer nu >= 0), Bessel Pfaffians
// for beta = 1 with odd nu, closed forms for beta = 1 with nu in {0, 2}.
double micro_q(int beta, int nu, double y);
double micro_p(int beta, int nu, double y);

// Dirac picture: s = sqrt(y), density 2 s P(s^2), cumulative Q(s^2).
double dirac_p(int beta, int nu, double s);
double dirac_q(int beta, int nu, double s);

// Universal moment coefficient: int_0^inf s^{2 ell} dirac_p ds.
double kappa(int ell, int nu, int beta);

struct ConvergenceRow {
    int n_dim;
    double sup_gap_ft;
    double sup_gap_wl;
};

// Finite-N scaled densities against the universal law for beta = 1,
// nu in {0, 2}: FT route (1/(4N^3)) p_ft(y/(4N^3)) and WL route
// (1/(4N)) p_wl(y/(4N)), sup-norm gap over the given y grid.  The FT route
// is skipped (NaN) for nu = 2 where no closed finite-N reference exists in
// scope at large N within budget; both routes run for nu = 0.
std::vector<ConvergenceRow> convergence_probe(int beta, int nu,
                                              const std::vector<int>& n_list,
                                              const std::vector<double>& y_grid,
                                              bool include_ft = true);

} // namespace spectra
