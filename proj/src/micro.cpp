#include "spectra/micro.hpp"

#include <cmath>
#include <stdexcept>

#include "spectra/errors.hpp"
#include "spectra/ftwl.hpp"
#include "spectra/gamma.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

namespace {

double bessel_i_series(int n, double z) {
    if (n < 0) n = -n;
    if (z == 0.0) return n == 0 ? 1.0 : 0.0;
    const double h = 0.5 * z;
    // leading term h^n / n!
    double term = std::exp(n * std::log(h) - log_gamma(n + 1.0));
    double sum = term;
    for (int k = 1; k < 600; ++k) {
        term *= h * h / (k * (n + static_cast<double>(k)));
        sum += term;
        if (term <= 1e-17 * sum) break;
    }
    return sum;
}

double bessel_i_half(int twice_order, double z) {
    // order = twice_order / 2, twice_order odd
    if (z == 0.0) throw std::domain_error("bessel_i: half-integer order diverges at z = 0");
    const double pref = std::sqrt(2.0 / (M_PI * z));
    double below = pref * std::cosh(z);  // I_{-1/2}
    double at = pref * std::sinh(z);     // I_{+1/2}
    if (twice_order == -1) return below;
    if (twice_order == 1) return at;
    if (twice_order > 1) {
        // upward from nu = 1/2
        double nu = 0.5;
        for (int t = 1; t < twice_order; t += 2) {
            const double next = below - (2.0 * nu / z) * at;
            below = at;
            at = next;
            nu += 1.0;
        }
        return at;
    }
    // downward from nu = -1/2
    double nu = -0.5;
    double above = at;   // I_{nu+1}
    double cur = below;  // I_{nu}
    for (int t = -1; t > twice_order; t -= 2) {
        const double next = above + (2.0 * nu / z) * cur;  // I_{nu-1}
        above = cur;
        cur = next;
        nu -= 1.0;
    }
    return cur;
}

} // namespace

double bessel_i(double order, double z) {
    if (z < 0.0) throw std::domain_error("bessel_i: z must be >= 0");
    const double r = std::round(order);
    if (std::fabs(order - r) < 1e-12)
        return bessel_i_series(static_cast<int>(r), z);
    const double r2 = std::round(2.0 * order);
    if (std::fabs(2.0 * order - r2) < 1e-12)
        return bessel_i_half(static_cast<int>(r2), z);
    throw unsupported_error("bessel_i: order must be integer or half-integer");
}

double bessel_i_trapezoid(int order, double z, int nodes) {
    if (z < 0.0) throw std::domain_error("bessel_i: z must be >= 0");
    if (order < 0) order = -order;
    // midpoint rule on the periodic integrand; spectrally convergent
    double s = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double t = M_PI * (i + 0.5) / nodes;
        s += std::exp(z * std::cos(t)) * std::cos(order * t);
    }
    return s / nodes;
}

SkewMatrix::SkewMatrix(int order) : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {
    if (order <= 0 || order % 2 != 0)
        throw std::invalid_argument("SkewMatrix: order must be positive and even");
}

void SkewMatrix::set_upper(int i, int j, double v) {
    if (!(0 <= i && i < j && j < n_)) throw std::invalid_argument("SkewMatrix: need 0 <= i < j < n");
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = -v;
}

double pfaffian(const SkewMatrix& skew) {
    const int n = skew.order();
    std::vector<double> a = skew.data();
    double pf = 1.0;

    for (int k = 0; k + 1 < n; k += 2) {
        // pivot: largest |a[i][k]| over i > k
        int kp = k + 1;
        for (int i = k + 2; i < n; ++i)
            if (std::fabs(a[i * n + k]) > std::fabs(a[kp * n + k])) kp = i;
        if (kp != k + 1) {
            for (int i = 0; i < n; ++i) std::swap(a[(k + 1) * n + i], a[kp * n + i]);
            for (int i = 0; i < n; ++i) std::swap(a[i * n + k + 1], a[i * n + kp]);
            pf = -pf;
        }
        const double piv = a[k * n + k + 1];
        if (piv == 0.0) return 0.0;
        pf *= piv;
        for (int i = k + 2; i < n; ++i) {
            const double ti = a[k * n + i] / piv;
            for (int j = k + 2; j < n; ++j) {
                const double tj = a[k * n + j] / piv;
                a[i * n + j] += ti * a[j * n + k + 1] - tj * a[i * n + k + 1];
            }
        }
    }
    return pf;
}

double determinant(std::vector<double> m, int n) {
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(m[i * n + k]) > std::fabs(m[piv * n + k])) piv = i;
        if (m[piv * n + k] == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            det = -det;
        }
        det *= m[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            const double f = m[i * n + k] / m[k * n + k];
            for (int j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
        }
    }
    return det;
}

namespace {

void check_supported(int beta, int nu) {
    if (beta != 1 && beta != 2) throw std::invalid_argument("micro: beta must be 1 or 2");
    if (nu < 0) throw std::invalid_argument("micro: nu must be >= 0");
    if (beta == 1 && nu % 2 == 0 && nu > 2)
        throw unsupported_error(
            "micro: no closed universal form is known for beta = 1 with even nu >= 4");
}

double det_bessel_shifted(int nu, double s, int shift) {
    std::vector<double> m(static_cast<std::size_t>(nu) * nu);
    for (int i = 1; i <= nu; ++i)
        for (int j = 1; j <= nu; ++j)
            m[(i - 1) * nu + (j - 1)] = bessel_i(i - j + shift, s);
    return determinant(std::move(m), nu);
}

// Pf[(r_a - r_b) I_{shift + r_a + r_b}(s)] over the half-integer grid
// r = -m+1/2, ..., m-1/2; ascending order, so the overall (-1)^m below
// matches the convention with Q(0+) -> 1.
double pf_bessel(int m, double s, int shift) {
    SkewMatrix a(2 * m);
    for (int ia = 0; ia < 2 * m; ++ia) {
        const double ra = ia - m + 0.5;
        for (int ib = ia + 1; ib < 2 * m; ++ib) {
            const double rb = ib - m + 0.5;
            a.set_upper(ia, ib, (ra - rb) * bessel_i(shift + ia + ib + 1 - 2 * m, s));
        }
    }
    return pfaffian(a);
}

int parity_sign(int m) { return m % 2 == 0 ? 1 : -1; }

double micro_p_beta1_even(int nu, double y) {
    const double sy = std::sqrt(y);
    const double envelope = std::exp(-y / 8.0 - sy / 2.0);
    if (nu == 0) return 0.125 * (1.0 + 2.0 / sy) * envelope;
    return 0.125 * ((1.0 + 2.0 / sy) * bessel_i(2, sy) + bessel_i(3, sy)) * envelope;
}

} // namespace

double micro_p(int beta, int nu, double y) {
    check_supported(beta, nu);
    if (y < 0.0) throw std::domain_error("micro_p: y must be >= 0");

    if (beta == 2) {
        if (nu == 0) return 0.25 * std::exp(-y / 4.0);
        if (y == 0.0) return 0.0;
        return 0.25 * std::exp(-y / 4.0) * det_bessel_shifted(nu, std::sqrt(y), 2);
    }
    if (nu % 2 == 1) {
        const int m = (nu - 1) / 2;
        const double cm = std::exp(0.5 * std::log(M_PI) + log_double_factorial_odd(m)
                                   - std::log(16.0) - log_gamma(m + 1.5));
        if (m == 0) return cm * std::exp(-y / 8.0);
        if (y < 1e-12) return 0.0;  // P ~ y^m near the origin
        return parity_sign(m) * cm * std::pow(y, -0.5 * m) * std::exp(-y / 8.0)
             * pf_bessel(m, std::sqrt(y), 3);
    }
    if (y == 0.0) {
        if (nu == 0) throw std::domain_error("micro_p: beta=1 nu=0 density diverges at y = 0");
        return 0.0;
    }
    return micro_p_beta1_even(nu, y);
}

double micro_q(int beta, int nu, double y) {
    check_supported(beta, nu);
    if (y < 0.0) throw std::domain_error("micro_q: y must be >= 0");
    if (y == 0.0) return 1.0;

    if (beta == 2) {
        if (nu == 0) return std::exp(-y / 4.0);
        return std::exp(-y / 4.0) * det_bessel_shifted(nu, std::sqrt(y), 0);
    }
    if (nu % 2 == 1) {
        const int m = (nu - 1) / 2;
        if (m == 0) return std::exp(-y / 8.0);
        if (y < 1e-12) return 1.0;
        return parity_sign(m) * std::pow(2.0, m) * std::pow(y, -0.5 * m)
             * std::exp(-y / 8.0) * pf_bessel(m, std::sqrt(y), 1);
    }
    if (nu == 0) return std::exp(-y / 8.0 - 0.5 * std::sqrt(y));
    // nu = 2: integrate the density in the Dirac variable
    auto f = [&](double s) { return 2.0 * s * micro_p_beta1_even(2, s * s); };
    return 1.0 - integrate(f, 0.0, std::sqrt(y), 1e-11, 1e-14).value;
}

double dirac_p(int beta, int nu, double s) {
    if (s < 0.0) throw std::domain_error("dirac_p: s must be >= 0");
    if (s == 0.0) {
        check_supported(beta, nu);
        return (beta == 1 && nu == 0) ? 0.5 : 0.0;
    }
    return 2.0 * s * micro_p(beta, nu, s * s);
}

double dirac_q(int beta, int nu, double s) {
    if (s < 0.0) throw std::domain_error("dirac_q: s must be >= 0");
    return micro_q(beta, nu, s * s);
}

double kappa(int ell, int nu, int beta) {
    if (ell < 0) throw std::invalid_argument("kappa: ell must be >= 0");
    check_supported(beta, nu);
    // Gaussian envelope exp(-beta s^2/8): the integrand is below 1e-18 of
    // its peak well before s = 45 for every supported case
    auto f = [&](double s) { return std::pow(s, 2.0 * ell) * dirac_p(beta, nu, s); };
    return integrate(f, 0.0, 45.0, 1e-11, 1e-16).value;
}

std::vector<ConvergenceRow> convergence_probe(int beta, int nu,
                                              const std::vector<int>& n_list,
                                              const std::vector<double>& y_grid,
                                              bool include_ft) {
    if (beta != 1 || (nu != 0 && nu != 2))
        throw unsupported_error("convergence_probe: implemented for beta = 1, nu in {0, 2}");
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        const EnsembleParams pft = EnsembleParams::ft(n, n + nu, 1);
        const EnsembleParams pwl = EnsembleParams::wl(n, n + nu, 1);
        const double ft_scale = 4.0 * std::pow(static_cast<double>(n), 3);
        const double wl_scale = 4.0 * n;
        double gap_ft = 0.0, gap_wl = 0.0;
        for (double y : y_grid) {
            const double target = micro_p(beta, nu, y);
            if (include_ft)
                gap_ft = std::max(gap_ft,
                                  std::fabs(ftwl_density(pft, y / ft_scale) / ft_scale - target));
            gap_wl = std::max(gap_wl,
                              std::fabs(wl_density(pwl, y / wl_scale) / wl_scale - target));
        }
        rows.push_back({n, include_ft ? gap_ft : std::nan(""), gap_wl});
    }
    return rows;
}

} // namespace spectra
