#include "spectra/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace spectra {

GaussMatrix gaussian_matrix(const EnsembleParams& p, std::mt19937_64& rng) {
    GaussMatrix x;
    x.re = Matrix(p.m_dim, p.n_dim);
    x.complex_entries = (p.beta == 2);
    if (x.complex_entries) {
        x.im = Matrix(p.m_dim, p.n_dim);
        std::normal_distribution<double> g(0.0, std::sqrt(0.5));
        for (int i = 0; i < p.m_dim; ++i)
            for (int j = 0; j < p.n_dim; ++j) {
                x.re.at(i, j) = g(rng);
                x.im.at(i, j) = g(rng);
            }
    } else {
        std::normal_distribution<double> g(0.0, 1.0);
        for (int i = 0; i < p.m_dim; ++i)
            for (int j = 0; j < p.n_dim; ++j) x.re.at(i, j) = g(rng);
    }
    return x;
}

Matrix wishart_matrix(const GaussMatrix& x) {
    const int m = x.re.rows, n = x.re.cols;
    if (!x.complex_entries) {
        Matrix w(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < m; ++k) s += x.re.at(k, i) * x.re.at(k, j);
                w.at(i, j) = s;
                w.at(j, i) = s;
            }
        return w;
    }
    // A + iB Hermitian -> [[A, -B], [B, A]] symmetric
    Matrix w(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double a = 0.0, b = 0.0;
            for (int k = 0; k < m; ++k) {
                // (X^dagger X)_{ij} = sum_k conj(X_ki) X_kj
                a += x.re.at(k, i) * x.re.at(k, j) + x.im.at(k, i) * x.im.at(k, j);
                b += x.re.at(k, i) * x.im.at(k, j) - x.im.at(k, i) * x.re.at(k, j);
            }
            w.at(i, j) = a;
            w.at(n + i, n + j) = a;
            w.at(i, n + j) = -b;
            w.at(n + i, j) = b;
        }
    return w;
}

double wishart_trace(const GaussMatrix& x) {
    double t = 0.0;
    for (double v : x.re.a) t += v * v;
    for (double v : x.im.a) t += v * v;
    return t;
}

double smallest_eig(const Matrix& w_in) {
    if (w_in.rows != w_in.cols) throw std::invalid_argument("smallest_eig: matrix must be square");
    const int n = w_in.rows;
    Matrix a = w_in;
    if (n == 1) return a.at(0, 0);

    double norm = 0.0;
    for (double v : a.a) norm += v * v;
    norm = std::sqrt(norm);
    const double target = 1e-12 * norm;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * a.at(p, q) * a.at(p, q);
        if (std::sqrt(off) < target) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = 0.5 * (a.at(q, q) - a.at(p, p)) / apq;
                const double t = (theta >= 0 ? 1.0 : -1.0)
                               / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double lmin = a.at(0, 0);
    for (int i = 1; i < n; ++i) lmin = std::min(lmin, a.at(i, i));
    if (lmin < 0.0 && lmin > -1e-10) lmin = 0.0;
    return lmin;
}

namespace {

constexpr int kChunk = 4096;

std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), 0x9e3779b9u};
    return std::mt19937_64(seq);
}

void run_chunk(const EnsembleParams& p, std::uint64_t seed, int chunk_idx, int count,
               double* out) {
    std::mt19937_64 rng = chunk_engine(seed, static_cast<std::uint64_t>(chunk_idx));
    for (int i = 0; i < count; ++i) {
        const GaussMatrix x = gaussian_matrix(p, rng);
        const double lmin = smallest_eig(wishart_matrix(x));
        out[i] = (p.kind == EnsembleKind::FT) ? lmin / wishart_trace(x) : lmin;
    }
}

} // namespace

SampleBatch sample_min(const EnsembleParams& p, int n_samples, std::uint64_t seed, int workers) {
    if (n_samples < 1) throw std::invalid_argument("sample_min: n_samples must be >= 1");
    SampleBatch batch{p, seed, std::vector<double>(n_samples)};
    const int n_chunks = (n_samples + kChunk - 1) / kChunk;
    workers = std::max(1, std::min(workers, n_chunks));

    if (workers == 1) {
        for (int c = 0; c < n_chunks; ++c) {
            const int begin = c * kChunk;
            run_chunk(p, seed, c, std::min(kChunk, n_samples - begin), batch.values.data() + begin);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int c = w; c < n_chunks; c += workers) {
                    const int begin = c * kChunk;
                    run_chunk(p, seed, c, std::min(kChunk, n_samples - begin),
                              batch.values.data() + begin);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    return batch;
}

double ks_distance(const SampleBatch& batch, const std::function<double(double)>& cdf) {
    if (batch.values.empty()) throw std::invalid_argument("ks_distance: empty batch");
    std::vector<double> s = batch.values;
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

} // namespace spectra
