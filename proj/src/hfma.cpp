#include "spectra/hfma.hpp"

#include <cmath>
#include <stdexcept>

#include "spectra/errors.hpp"
#include "spectra/gamma.hpp"
#include "spectra/log_space.hpp"
#include "spectra/micro.hpp"

namespace spectra {

namespace {

void enumerate_parts(int remaining, int max_part, int max_parts,
                     std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back({acc});
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_parts(remaining - p, p, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<int> conjugate(const Partition& k) {
    if (k.parts.empty()) return {};
    std::vector<int> c(k.parts[0], 0);
    for (int row : k.parts)
        for (int j = 0; j < row; ++j) ++c[j];
    return c;
}

LogValue gen_pochhammer_log(double a, const Partition& kappa, double beta) {
    LogValue r = LogValue::one();
    for (std::size_t i = 0; i < kappa.parts.size(); ++i)
        for (int j = 1; j <= kappa.parts[i]; ++j)
            r = r * LogValue::from_double(a - static_cast<double>(i) / beta + (j - 1.0));
    return r;
}

// log of C_kappa^{(alpha)}(I_m); -inf when more parts than m
double jack_c_identity_log(double alpha, const Partition& kappa, int m) {
    if (kappa.length() > m) return -std::numeric_limits<double>::infinity();
    const int k = kappa.weight();
    if (k == 0) return 0.0;
    const std::vector<int> conj = conjugate(kappa);
    // C = alpha^k k! J / (upper hooks * lower hooks);
    // J(I_m) = prod over cells of (m - (i-1) + alpha (j-1))
    double lg = k * std::log(alpha) + log_gamma(k + 1.0);
    for (std::size_t i0 = 0; i0 < kappa.parts.size(); ++i0) {
        const double i = static_cast<double>(i0) + 1.0;
        for (int j = 1; j <= kappa.parts[i0]; ++j) {
            lg += std::log(m - (i - 1.0) + alpha * (j - 1.0));
            const double arm = kappa.parts[i0] - j;
            const double leg = conj[j - 1] - i;
            lg -= std::log(leg + alpha * (arm + 1.0));  // upper hook
            lg -= std::log(leg + 1.0 + alpha * arm);    // lower hook
        }
    }
    return lg;
}

} // namespace

std::vector<Partition> partitions_of(int k, int max_parts) {
    if (k < 0) throw std::invalid_argument("partitions_of: k must be >= 0");
    if (max_parts < 1) throw std::invalid_argument("partitions_of: max_parts must be >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_parts(k, k, max_parts, acc, out);
    return out;
}

double gen_pochhammer(double a, const Partition& kappa, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("gen_pochhammer: beta must be positive");
    return gen_pochhammer_log(a, kappa, beta).value();
}

double jack_c_identity(double alpha, const Partition& kappa, int m) {
    const double lg = jack_c_identity_log(alpha, kappa, m);
    return std::isinf(lg) ? 0.0 : std::exp(lg);
}

double hfma_0f1_quadrature(int lambda, int c, double x, int m) {
    if (lambda < 1 || c < 1)
        throw std::invalid_argument("hfma_0f1_quadrature: need integer lambda, c >= 1");
    if (x < 0.0) throw std::domain_error("hfma_0f1_quadrature: x must be >= 0");
    if (m < 0) throw std::invalid_argument("hfma_0f1_quadrature: m must be >= 0");
    if (m > 3)
        throw unsupported_error("hfma_0f1_quadrature: m > 3 not practical; use the series backend");
    if (m == 0 || x == 0.0) return 1.0;

    double lbhat = 0.0;
    for (int j = 1; j <= m; ++j)
        lbhat += log_gamma(1.0 + 0.5 * lambda) + log_gamma(c + 0.5 * lambda * (j - 1.0))
               - log_gamma(1.0 + 0.5 * lambda * j);
    const double lpref = lbhat - 0.5 * (c - 1.0) * m * std::log(x) - m * std::log(2.0 * M_PI);
    const double amp = 2.0 * std::sqrt(x);
    const double half_lambda = 0.5 * lambda;

    auto pass = [&](int nodes) {
        std::vector<double> theta(nodes), expc(nodes);
        for (int i = 0; i < nodes; ++i) {
            theta[i] = -M_PI + 2.0 * M_PI * (i + 0.5) / nodes;
            expc[i] = std::exp(amp * std::cos(theta[i]));
        }
        double re = 0.0, im = 0.0;
        std::vector<int> idx(m, 0);
        for (;;) {
            double w = 1.0, phase = 0.0;
            for (int d = 0; d < m; ++d) {
                w *= expc[idx[d]];
                phase += theta[idx[d]];
            }
            double vdm = 1.0;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    vdm *= std::pow(2.0 - 2.0 * std::cos(theta[idx[a]] - theta[idx[b]]),
                                    half_lambda);
            const double f = w * vdm;
            const double ph = (c - 1.0) * phase;
            re += f * std::cos(ph);
            im += f * std::sin(ph);
            int d = 0;
            while (d < m && ++idx[d] == nodes) idx[d++] = 0;
            if (d == m) break;
        }
        const double cell = std::pow(2.0 * M_PI / nodes, m);
        re *= cell;
        im *= cell;
        if (std::fabs(im) > 1e-10 * (std::fabs(re) + 1e-300))
            throw std::runtime_error("hfma_0f1_quadrature: imaginary residual above tolerance");
        return re;
    };

    int nodes = 64;
    double prev = pass(nodes);
    while (nodes < 2048) {
        nodes *= 2;
        const double cur = pass(nodes);
        if (std::fabs(cur - prev) <= 1e-10 * std::fabs(cur)) {
            prev = cur;
            break;
        }
        prev = cur;
    }
    return std::exp(lpref) * prev;
}

SeriesResult hfma_0f1_series(double beta, double b, double x, int m, int kmax) {
    if (!(beta > 0.0)) throw std::invalid_argument("hfma_0f1_series: beta must be positive");
    if (x < 0.0) throw std::domain_error("hfma_0f1_series: x must be >= 0");
    if (m < 1) throw std::invalid_argument("hfma_0f1_series: m must be >= 1");

    SeriesResult res;
    res.value = 1.0;  // k = 0 layer
    if (x == 0.0) return res;
    const double lx = std::log(x);
    for (int k = 1; k <= kmax; ++k) {
        double layer = 0.0;
        for (const Partition& kp : partitions_of(k, m)) {
            const LogValue denom = gen_pochhammer_log(b, kp, beta);
            if (denom.sign == 0)
                throw std::domain_error("hfma_0f1_series: vanishing Pochhammer denominator");
            const double lg = k * lx + jack_c_identity_log(beta, kp, m)
                            - log_gamma(k + 1.0) - denom.log;
            layer += denom.sign * std::exp(lg);
        }
        res.value += layer;
        res.layers = k;
        res.remainder = std::fabs(layer);
        if (res.remainder < 1e-14 * std::fabs(res.value)) return res;
    }
    res.converged = false;
    return res;
}

namespace {

double a_constant_log(int m, int beta) {
    return -(m + 1.0) * std::log(4.0) + (2.0 * m + 1.0) * std::log(0.5 * beta)
         + log_gamma(0.5 * beta + 1.0) - log_gamma(m + 1.0) - log_gamma(m + 1.0 + 0.5 * beta);
}

} // namespace

double micro_via_hfma(int beta, int nu, double y, DistKind which, HfmaBackend backend) {
    if (beta != 1 && beta != 2) throw std::invalid_argument("micro_via_hfma: beta must be 1 or 2");
    if (y < 0.0) throw std::domain_error("micro_via_hfma: y must be >= 0");
    const int m2 = beta * (nu + 1) - 2;  // twice the m-index
    if (m2 % 2 != 0 || m2 < 0)
        throw unsupported_error("micro_via_hfma: m = (beta/2)(nu+1)-1 must be a non-negative "
                                "integer (beta = 1 needs odd nu)");
    const int m = m2 / 2;
    const double env = std::exp(-beta * y / 8.0);

    auto eval_0f1 = [&](int c_param) {
        if (m == 0) return 1.0;
        if (backend == HfmaBackend::Quadrature)
            return hfma_0f1_quadrature(4 / beta, c_param, 0.25 * y, m);
        const double alpha = 0.5 * beta;
        const double b = c_param + (2.0 / beta) * (m - 1.0);
        SeriesResult r = hfma_0f1_series(alpha, b, 0.25 * y, m);
        if (!r.converged) throw std::runtime_error("micro_via_hfma: series truncation too small");
        return r.value;
    };

    if (which == DistKind::Q) return env * eval_0f1(2 / beta);
    const double a = std::exp(a_constant_log(m, beta));
    return a * std::pow(y, m) * env * eval_0f1(2 + 2 / beta);
}

EquivalenceReport equivalence_report(int beta, int nu, const std::vector<double>& y_grid) {
    EquivalenceReport rep;
    rep.rows.reserve(y_grid.size());
    for (double y : y_grid) {
        EquivalenceRow r;
        r.y = y;
        r.q_hfma = micro_via_hfma(beta, nu, y, DistKind::Q);
        r.p_hfma = micro_via_hfma(beta, nu, y, DistKind::P);
        r.q_bessel = micro_q(beta, nu, y);
        r.p_bessel = micro_p(beta, nu, y);
        r.dq = std::fabs(r.q_hfma - r.q_bessel);
        r.dp = std::fabs(r.p_hfma - r.p_bessel);
        rep.max_diff = std::max({rep.max_diff, r.dq, r.dp});
        rep.rows.push_back(r);
    }
    return rep;
}

} // namespace spectra
