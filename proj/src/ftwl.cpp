#include "spectra/ftwl.hpp"

#include <cmath>
#include <stdexcept>

#include "spectra/errors.hpp"
#include "spectra/gamma.hpp"
#include "spectra/hyp2f1.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

namespace {

void check_ft_args(const EnsembleParams& p, double x) {
    if (p.beta != 1) throw unsupported_error("ftwl_density: only beta = 1 is implemented");
    if (p.n_dim < 2)
        throw std::invalid_argument("ftwl_density: N >= 2 required (N = 1 is a point mass)");
    if (x <= 0.0) throw std::domain_error("ftwl_density: x must be positive");
}

// ln of int_a^b exp(log_f), split into geometric segments so each piece has
// a bounded dynamic range before the adaptive pass.
double integrate_log_geom(const std::function<double(double)>& log_f, double a, double b,
                          double rel_tol = 1e-10) {
    if (!(b > a)) return -std::numeric_limits<double>::infinity();
    std::vector<double> cuts{a};
    double step = std::max(1.0, a);
    while (cuts.back() + step < b) {
        cuts.push_back(cuts.back() + step);
        step *= 4.0;
    }
    cuts.push_back(b);
    LogSum total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total.add_log(integrate_log(log_f, cuts[i], cuts[i + 1], rel_tol), 1);
    LogValue r = total.result();
    return r.sign == 0 ? -std::numeric_limits<double>::infinity() : r.log;
}

// shared tau-integral of Theta/Xi: ln of
//   int_0^{1/x-N} tau^pw (1+tau)^{-N/2-1} (1 - x(N+tau))^P dtau
// the huge power is exponentiated via P*log1p; for pw < 0 (N = 2 Theta) the
// endpoint is regularized by tau = u^2
double tau_integral_log(int n_dim, double pw2 /* 2*pw, integer */, double x, double big_p) {
    const double upper = 1.0 / x - n_dim;
    if (upper <= 0.0) return -std::numeric_limits<double>::infinity();
    const double pw = 0.5 * pw2;
    const double hn1 = 0.5 * n_dim + 1.0;
    if (pw < 0.0) {
        auto lf = [&](double u) {
            const double tau = u * u;
            const double arg = 1.0 - x * (n_dim + tau);
            if (arg <= 0.0 || u <= 0.0) return -std::numeric_limits<double>::infinity();
            return std::log(2.0) + (2.0 * pw + 1.0) * std::log(u) - hn1 * std::log1p(tau)
                 + big_p * std::log(arg);
        };
        return integrate_log_geom(lf, 0.0, std::sqrt(upper));
    }
    auto lf = [&](double tau) {
        const double arg = 1.0 - x * (n_dim + tau);
        if (arg <= 0.0) return -std::numeric_limits<double>::infinity();
        double lt = (pw == 0.0) ? 0.0 : pw * std::log(tau);
        if (tau == 0.0 && pw > 0.0) return -std::numeric_limits<double>::infinity();
        return lt - hn1 * std::log1p(tau) + big_p * std::log(arg);
    };
    return integrate_log_geom(lf, 0.0, upper);
}

double theta_integral_log(const EnsembleParams& p, int k, double x) {
    const int n = p.n_dim, nu = p.nu();
    const double big_p = 0.5 * (n * (n + nu) - nu - 3.0 - 2.0 * k);
    const double j = tau_integral_log(n, n - 3, x, big_p);
    return (k + 0.5 * (nu - 1.0)) * std::log(x) - log_gamma(0.5 * (n - 1.0)) + j;
}

double xi_integral_log(const EnsembleParams& p, int k, double x) {
    const int n = p.n_dim, nu = p.nu();
    if (n == 1) return -std::numeric_limits<double>::infinity();
    const double big_p = 0.5 * (n * (n + nu) - nu - 3.0 - 2.0 * k);
    const double j = tau_integral_log(n, n - 1, x, big_p);
    return std::log(0.25 * (n - 1.0)) + (k + 0.5 * (nu - 1.0)) * std::log(x)
         - log_gamma(0.5 * (n + 1.0)) + j;
}

LogValue ftwl_density_odd_log(const EnsembleParams& p, double x,
                              const CoefficientProvider& provider) {
    const int n = p.n_dim, nu = p.nu();
    const CoefficientSet cs = provider(n, nu);
    const double nn = static_cast<double>(n) * (n + nu);

    const double base = log_norm_ft(p) - log_norm_wl(p) + (0.5 * n - 1.0) * std::log(2.0)
                      + c_constant_log(n, nu) + cs.h_scale.log;
    const double lx = std::log(x);
    const double l1nx = std::log1p(-n * x);

    LogSum sum;
    for (int k = 0; k <= cs.h.degree(); ++k) {
        const Rational& qk = cs.h.coeffs()[k];
        if (qk.is_zero()) continue;
        const double xi = 0.5 * (nn - 2.0 * k - nu - 1.0);
        const double lg = base + std::log(std::fabs(qk.to_double()))
                        + 0.5 * (2.0 * k + nu + 1.0 - nn) * std::log(2.0) - log_gamma(xi)
                        + (k + 0.5 * (nu - 1.0)) * lx + (xi - 1.0) * l1nx;
        sum.add_log(lg, qk.sign() * cs.h_scale.sign);
    }
    return sum.result();
}

LogValue ftwl_density_even_log(const EnsembleParams& p, double x,
                               const CoefficientProvider& provider) {
    const int n = p.n_dim, nu = p.nu();
    const CoefficientSet cs = provider(n, nu);
    const double nn = static_cast<double>(n) * (n + nu);

    const double base = log_norm_ft(p) - log_norm_wl(p) - 0.5 * std::log(2.0)
                      + c_constant_log(n, nu);
    const int kmax = std::max(cs.f.degree(), cs.g.degree());

    LogSum sum;
    for (int k = 0; k <= kmax; ++k) {
        const double bk = 0.5 * (nn - nu - 1.0 - 2.0 * k);
        const double factor = base + 0.5 * (nu + 1.0 + 2.0 * k - nn) * std::log(2.0)
                            - log_gamma(bk);
        const Rational fk = cs.f.coeff(k);
        if (!fk.is_zero()) {
            sum.add_log(factor + cs.f_scale.log + std::log(std::fabs(fk.to_double()))
                            + theta_integral_log(p, k, x),
                        fk.sign() * cs.f_scale.sign);
        }
        const Rational gk = cs.g.coeff(k);
        if (!gk.is_zero()) {
            sum.add_log(factor + cs.g_scale.log + std::log(std::fabs(gk.to_double()))
                            + xi_integral_log(p, k, x),
                        -gk.sign() * cs.g_scale.sign);
        }
    }
    return sum.result();
}

} // namespace

LogValue ftwl_density_log(const EnsembleParams& p, double x,
                          const CoefficientProvider& provider) {
    check_ft_args(p, x);
    if (x >= 1.0 / p.n_dim) return LogValue::zero();
    return p.nu() % 2 == 1 ? ftwl_density_odd_log(p, x, provider)
                           : ftwl_density_even_log(p, x, provider);
}

double ftwl_density(const EnsembleParams& p, double x, const CoefficientProvider& provider) {
    return ftwl_density_log(p, x, provider).value();
}

double ftwl_density_odd(const EnsembleParams& p, double x,
                        const CoefficientProvider& provider) {
    check_ft_args(p, x);
    if (p.nu() % 2 != 1) throw std::invalid_argument("ftwl_density_odd: nu must be odd");
    if (x >= 1.0 / p.n_dim) return 0.0;
    return ftwl_density_odd_log(p, x, provider).value();
}

double ftwl_density_even(const EnsembleParams& p, double x,
                         const CoefficientProvider& provider) {
    check_ft_args(p, x);
    if (p.nu() % 2 != 0) throw std::invalid_argument("ftwl_density_even: nu must be even");
    if (x >= 1.0 / p.n_dim) return 0.0;
    return ftwl_density_even_log(p, x, provider).value();
}

double theta_integral(const EnsembleParams& p, int k, double x) {
    check_ft_args(p, x);
    if (x >= 1.0 / p.n_dim) return 0.0;
    return std::exp(theta_integral_log(p, k, x));
}

double xi_integral(const EnsembleParams& p, int k, double x) {
    check_ft_args(p, x);
    if (x >= 1.0 / p.n_dim) return 0.0;
    if (p.n_dim == 1) return 0.0;
    return std::exp(xi_integral_log(p, k, x));
}

double theta_integral_closed(const EnsembleParams& p, int k, double x) {
    check_ft_args(p, x);
    if (x >= 1.0 / p.n_dim) return 0.0;
    const double n = p.n_dim, nu = p.nu();
    const double nn = n * (n + nu);
    const double lg = log_gamma(0.5 * (nn - nu - 1.0 - 2.0 * k))
                    - log_gamma(0.5 * (nn + n - nu - 2.0 - 2.0 * k))
                    + (k + 0.5 * (nu - n)) * std::log(x)
                    + 0.5 * (nn - nu + n - 4.0 - 2.0 * k) * std::log1p(-n * x);
    const double f = gauss_2f1(0.5 * (n - 1.0), 0.5 * n + 1.0,
                               0.5 * ((n - 1.0) * (n + nu + 2.0) - 2.0 * k), n - 1.0 / x);
    return std::exp(lg) * f;
}

double xi_integral_closed(const EnsembleParams& p, int k, double x) {
    check_ft_args(p, x);
    if (x >= 1.0 / p.n_dim) return 0.0;
    const double n = p.n_dim, nu = p.nu();
    if (p.n_dim == 1) return 0.0;
    const double nn = n * (n + nu);
    const double lg = std::log(0.25 * (n - 1.0))
                    + log_gamma(0.5 * (nn - nu - 1.0 - 2.0 * k))
                    - log_gamma(0.5 * (nn + n - nu - 2.0 * k))
                    + (k - 1.0 + 0.5 * (nu - n)) * std::log(x)
                    + (0.5 * (n - 1.0) * (n + nu + 2.0) - k) * std::log1p(-n * x);
    const double f = gauss_2f1(0.5 * (n + 1.0), 0.5 * n + 1.0,
                               0.5 * (n * (1.0 + n + nu) - nu) - k, n - 1.0 / x);
    return std::exp(lg) * f;
}

namespace {

double explicit_nu0(const EnsembleParams& p, double x) {
    const double n = p.n_dim;
    const double lpref = std::log(n) + log_gamma(n) + log_gamma(0.5 * n * n)
                       - (n - 1.0) * std::log(2.0) - log_gamma(0.5 * n)
                       - log_gamma(0.5 * (n * n + n - 2.0));
    const double f = gauss_2f1(0.5 * (n + 2.0), 0.5 * (n - 1.0),
                               0.5 * (n * n + n - 2.0), n - 1.0 / x);
    return std::exp(lpref - 0.5 * n * std::log(x)
                    + 0.5 * (n * n + n - 4.0) * std::log1p(-n * x) + std::log(f));
}

double explicit_nu1(const EnsembleParams& p, double x) {
    const double n = p.n_dim;
    const double e = 0.5 * n * (n + 1.0);
    const double lg = log_norm_ft(p) - log_norm_wl(p) + std::log(n) - e * std::log(2.0)
                    + (e - 2.0) * std::log1p(-n * x) - log_gamma(e - 1.0);
    return std::exp(lg);
}

double explicit_nu3(const EnsembleParams& p, double x) {
    const double n = p.n_dim;
    const double e = 0.5 * n * (n + 3.0);
    const double base = log_norm_ft(p) - log_norm_wl(p) + log_gamma(n + 3.0)
                      - std::log(2.0) - std::log(n + 1.0) - log_gamma(n);
    const double lx = std::log(x), l1nx = std::log1p(-n * x);
    LogSum sum;
    for (int k = 0; k <= p.n_dim - 1; ++k) {
        // (1-N)_k (-1)^k = (N-1)!/(N-1-k)!  -- all terms positive
        const double lg = base + log_gamma(n) - log_gamma(n - k)
                        - log_gamma(4.0 + k) - log_gamma(k + 1.0)
                        + (2.0 + k - e) * std::log(2.0) - log_gamma(e - 2.0 - k)
                        + (1.0 + k) * lx + (e - 3.0 - k) * l1nx;
        sum.add_log(lg, 1);
    }
    return sum.result().value();
}

double explicit_nu2(const EnsembleParams& p, double x) {
    const double n = p.n_dim;
    const double z = n - 1.0 / x;
    const double lcommon = log_norm_ft(p) - log_norm_wl(p) + log_gamma(0.5 * (n + 1.0))
                         - 0.5 * std::log(2.0 * M_PI) + 0.5 * std::log(x)
                         + 0.5 * (3.0 - n * (n + 2.0)) * std::log(2.0)
                         + 0.5 * (1.0 - n) * std::log(x)
                         + (0.5 * n * n + 1.5 * n - 3.0) * std::log1p(-n * x);
    const double lrat = std::log(x) - std::log1p(-n * x);
    LogSum sum;
    for (int k = 0; k <= p.n_dim - 1; ++k) {
        const double f = gauss_2f1(0.5 * (n - 1.0), 1.0 + 0.5 * n,
                                   0.5 * n * n + 1.5 * n - 2.0 - k, z);
        const double lg = lcommon + k * std::log(2.0) + log_gamma(n + 2.0)
                        - log_gamma(k + 1.0) - log_gamma(n - k) - log_gamma(k + 3.0)
                        + k * lrat + std::log(f);
        sum.add_log(lg, 1);
    }
    for (int k = 0; k <= p.n_dim - 2; ++k) {
        const double f = gauss_2f1(0.5 * (n + 1.0), 1.0 + 0.5 * n,
                                   0.5 * n * n + 1.5 * n - 2.0 - k, z);
        const double lg = lcommon + k * std::log(2.0) + log_gamma(n + 2.0)
                        - log_gamma(k + 1.0) - log_gamma(n - 1.0 - k) - log_gamma(k + 4.0)
                        + k * lrat + std::log(f);
        sum.add_log(lg, 1);
    }
    return sum.result().value();
}

} // namespace

double ftwl_density_explicit(const EnsembleParams& p, double x) {
    check_ft_args(p, x);
    if (x >= 1.0 / p.n_dim) return 0.0;
    switch (p.nu()) {
    case 0: return explicit_nu0(p, x);
    case 1: return explicit_nu1(p, x);
    case 2: return explicit_nu2(p, x);
    case 3: return explicit_nu3(p, x);
    default:
        throw unsupported_error("ftwl_density_explicit: specialized formulas cover nu in {0,1,2,3}");
    }
}

double ftwl_cdf(const EnsembleParams& p, double x, const CoefficientProvider& provider) {
    if (x < 0.0) throw std::domain_error("ftwl_cdf: x must be in [0, 1/N]");
    if (x == 0.0) return 1.0;
    const double xc = std::min(x, 1.0 / p.n_dim);
    // u = v^2 regularizes the x^{(nu-1)/2} origin behavior at nu = 0
    auto f = [&](double v) { return 2.0 * v * ftwl_density(p, v * v, provider); };
    const double mass = integrate(f, 0.0, std::sqrt(xc), 1e-10, 1e-12).value;
    return 1.0 - mass;
}

double ftwl_moment(const EnsembleParams& p, int ell, const CoefficientProvider& provider) {
    if (ell < 0) throw std::invalid_argument("ftwl_moment: ell must be >= 0");
    if (ell == 0) return 1.0;
    if (p.beta != 1) throw unsupported_error("ftwl_moment: only beta = 1 is implemented");
    const int n = p.n_dim, nu = p.nu();

    if (nu % 2 == 1) {
        // closed Beta-function sum; the Beta integral carries N^{-omega}
        const int m = (nu - 1) / 2;
        const CoefficientSet cs = provider(n, nu);
        const double nn = static_cast<double>(n) * (n + nu);
        const double base = log_norm_ft(p) - log_norm_wl(p) + (0.5 * n - 1.0) * std::log(2.0)
                          + c_constant_log(n, nu) + cs.h_scale.log;
        LogSum sum;
        for (int k = 0; k <= cs.h.degree(); ++k) {
            const Rational& qk = cs.h.coeffs()[k];
            if (qk.is_zero()) continue;
            const double d = 0.5 * n * (n + 2.0 * m + 1.0) - k - m - 1.0;
            const double omega = ell + k + m + 1.0;
            const double lg = base + std::log(std::fabs(qk.to_double()))
                            + (m + 1.0 + k - 0.5 * nn) * std::log(2.0) - log_gamma(d)
                            + log_beta(omega, d) - omega * std::log(static_cast<double>(n));
            sum.add_log(lg, qk.sign() * cs.h_scale.sign);
        }
        return sum.result().value();
    }

    auto f = [&](double v) {
        return 2.0 * std::pow(v, 2.0 * ell + 1.0) * ftwl_density(p, v * v, provider);
    };
    return integrate(f, 0.0, 1.0 / std::sqrt(static_cast<double>(n)), 1e-10, 1e-14).value;
}

double rescale_trace(double x_at_t1, double t) {
    if (!(t > 0.0)) throw std::domain_error("rescale_trace: t must be positive");
    return t * x_at_t1;
}

double density_at_t(const EnsembleParams& p, double x, double t,
                    const CoefficientProvider& provider) {
    if (!(t > 0.0)) throw std::domain_error("density_at_t: t must be positive");
    return ftwl_density(p, x / t, provider) / t;
}

LaplaceCheck laplace_relation_check(const EnsembleParams& p, double x, double s) {
    const int n = p.n_dim;
    auto integrand = [&](double t) {
        return t > n * x ? std::exp(-s * t) * density_at_t(p, x, t) : 0.0;
    };
    const double lhs = integrate_to_inf(integrand, n * x, 1e-10).value;

    const double expo = -1.0 + 0.5 * p.m_dim * n * p.beta
                      + 0.5 * (1.0 - p.beta) * n * (n - 1.0);
    const EnsembleParams wl = EnsembleParams::wl(p.n_dim, p.m_dim, p.beta);
    const double rhs = std::exp(log_norm_ft(p) - log_norm_wl(p) - expo * std::log(2.0 * s))
                     * wl_density(wl, 2.0 * s * x);
    return {lhs, rhs, std::fabs(lhs - rhs)};
}

} // namespace spectra
