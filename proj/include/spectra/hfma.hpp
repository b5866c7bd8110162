#pragma once

#include <vector>

namespace spectra {

// Integer partition: weakly decreasing positive parts; empty == weight 0.
struct Partition {
    std::vector<int> parts;

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int length() const { return static_cast<int>(parts.size()); }
};

// All partitions of k with at most max_parts parts.
std::vector<Partition> partitions_of(int k, int max_parts);

// Generalized Pochhammer symbol: product over Young-diagram cells (i, j) of
// (a - (i-1)/beta + j - 1).
double gen_pochhammer(double a, const Partition& kappa, double beta);

// Jack polynomial in C normalization evaluated at the m x m identity.
double jack_c_identity(double alpha, const Partition& kappa, int m);

// 0F1 of matrix argument x * I_m via the m-fold angular integral
// representation (integer lambda and c); periodic trapezoid, node count
// doubled until two passes agree to 1e-10.  The HFMA series parameter is
// 2/lambda and the lower index is c + (lambda/2)(m-1).
double hfma_0f1_quadrature(int lambda, int c, double x, int m);

struct SeriesResult {
    double value = 1.0;
    double remainder = 0.0;  // magnitude of the last complete degree layer
    int layers = 0;
    bool converged = true;
};

// Partition-series backend of the same 0F1 (beta here is the HFMA series
// parameter, i.e. half the Dyson index); table-driven via jack_c_identity,
// truncated at kmax layers.
SeriesResult hfma_0f1_series(double beta, double b, double x, int m, int kmax = 200);

enum class HfmaBackend { Quadrature, Series };
enum class DistKind { Q, P };

// Microscopic smallest-eigenvalue laws through the matrix-argument route;
// beta is the Dyson index, m = (beta/2)(nu+1) - 1 must be a non-negative
// integer (for beta = 1 this forces odd nu).
double micro_via_hfma(int beta, int nu, double y, DistKind which,
                      HfmaBackend backend = HfmaBackend::Quadrature);

struct EquivalenceRow {
    double y;
    double q_hfma, q_bessel;
    double p_hfma, p_bessel;
    double dq, dp;
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;
    double max_diff = 0.0;
};

// Side-by-side evaluation of the matrix-argument route against the Bessel
// determinant/Pfaffian route over a y grid.
EquivalenceReport equivalence_report(int beta, int nu, const std::vector<double>& y_grid);

} // namespace spectra
