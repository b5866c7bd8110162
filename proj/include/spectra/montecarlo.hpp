#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "spectra/ensemble.hpp"

namespace spectra {

// Dense row-major real matrix, just big enough for the sampling harness.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// M x N Gaussian data matrix.  beta = 1: iid standard normals.  beta = 2:
// complex entries, real and imaginary parts each N(0, 1/2), so that the
// eigenvalue density of X^dagger X carries the exp(-(beta/2) tr W) weight.
struct GaussMatrix {
    Matrix re;
    Matrix im;  // empty for beta = 1
    bool complex_entries = false;
};

GaussMatrix gaussian_matrix(const EnsembleParams& p, std::mt19937_64& rng);

// W = X^T X (real) or the 2N x 2N real-symmetric embedding of X^dagger X
// (complex; eigenvalues doubled, extremes unchanged).
Matrix wishart_matrix(const GaussMatrix& x);

// tr(X^dagger X) = sum |X_ij|^2, accumulated directly from the entries.
double wishart_trace(const GaussMatrix& x);

// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations,
// iterated until the off-diagonal Frobenius norm drops below 1e-12 of the
// input norm.  Values within 1e-10 below zero are clamped to zero.
double smallest_eig(const Matrix& w);

struct SampleBatch {
    EnsembleParams params;
    std::uint64_t seed = 0;
    std::vector<double> values;
};

// n draws of lambda_min (WL kind) or mu_1 = lambda_min / tr W (FT kind).
// Deterministic for fixed (params, seed, n) and independent of the worker
// count: work is cut into fixed-size chunks, each with its own seeded
// stream, merged in chunk order.
SampleBatch sample_min(const EnsembleParams& p, int n_samples, std::uint64_t seed,
                       int workers = 1);

// Kolmogorov-Smirnov sup-distance between the batch empirical CDF and an
// analytic CDF.
double ks_distance(const SampleBatch& batch, const std::function<double(double)>& cdf);

} // namespace spectra
