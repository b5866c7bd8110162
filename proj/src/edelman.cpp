#include "spectra/edelman.hpp"

#include <cmath>
#include <stdexcept>

#include "spectra/errors.hpp"
#include "spectra/gamma.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

RationalPoly laguerre_poly(int n, int alpha, bool negate_arg) {
    if (n < 0) throw std::invalid_argument("laguerre_poly: n must be >= 0");
    RationalPoly prev = RationalPoly::constant(Rational(1));  // L_0
    if (n == 0) return prev;
    // L_1 = 1 + alpha - x
    RationalPoly cur({Rational(1 + alpha), Rational(-1)});
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+alpha) L_k - x L_k - (k+alpha) L_{k-1}
        RationalPoly next = cur.scaled(Rational(2 * k + 1 + alpha))
                          - cur.shifted_up()
                          - prev.scaled(Rational(k + alpha));
        next = next.scaled(Rational(1, k + 1));
        prev = cur;
        cur = next;
    }
    return negate_arg ? cur.negated_arg() : cur;
}

double c_constant_log(int n_dim, int nu) {
    if (n_dim < 1 || nu < 0) throw std::invalid_argument("c_constant_log: bad (N, nu)");
    const double n = n_dim;
    double lg = std::log(n) - 0.5 * n * nu * std::log(2.0)
              + log_gamma(0.5 * (n + 1.0)) - 0.5 * std::log(M_PI);
    for (int j = 1; j <= nu; ++j)
        lg += log_gamma(0.5 * j) - log_gamma(0.5 * (n + j));
    return lg;
}

CoefficientSet coefficients(int n_dim, int nu) {
    if (n_dim < 1) throw std::invalid_argument("coefficients: N must be >= 1");
    CoefficientSet cs;
    cs.n_dim = n_dim;
    cs.nu = nu;
    const double n = n_dim;

    switch (nu) {
    case 1:
        cs.kind = CoefficientKind::OddH;
        cs.h = RationalPoly::constant(Rational(1));
        cs.h_scale = LogValue::one();
        return cs;
    case 3: {
        cs.kind = CoefficientKind::OddH;
        cs.h = laguerre_poly(n_dim - 1, 3, /*negate_arg=*/true);
        double lg = n * std::log(2.0) + log_gamma(0.5 * n + 1.0) + log_gamma(0.5 * (n + 3.0))
                  - std::log(n * (n + 1.0)) - log_gamma(1.5);
        cs.h_scale = LogValue::from_log(lg, 1);
        return cs;
    }
    case 0: {
        cs.kind = CoefficientKind::EvenFG;
        cs.f = RationalPoly::constant(Rational(1));
        double lg = log_gamma(n) + 0.5 * std::log(M_PI) - (n - 1.0) * std::log(2.0)
                  - log_gamma(0.5 * n) - log_gamma(0.5 * (n + 1.0));
        cs.f_scale = LogValue::from_log(lg, 1);
        cs.g = RationalPoly::zero();
        cs.g_scale = LogValue::zero();
        return cs;
    }
    case 2: {
        cs.kind = CoefficientKind::EvenFG;
        cs.f = laguerre_poly(n_dim - 1, 2, true);
        double lf = n * std::log(2.0) + log_gamma(0.5 * (n + 1.0)) + log_gamma(0.5 * (n + 2.0))
                  - std::log(n) - 0.5 * std::log(M_PI);
        cs.f_scale = LogValue::from_log(lf, 1);
        if (n_dim == 1) {
            // the U2 companion carries a vanishing (N-1) prefactor; the pair
            // (g, U2) contributes nothing at N = 1
            cs.g = RationalPoly::zero();
            cs.g_scale = LogValue::zero();
        } else {
            cs.g = laguerre_poly(n_dim - 2, 3, true).shifted_up();
            double lg = (n + 1.0) * std::log(2.0) + log_gamma(0.5 * (n + 1.0))
                      + log_gamma(0.5 * (n + 2.0)) - std::log(n * (n - 1.0))
                      - 0.5 * std::log(M_PI);
            cs.g_scale = LogValue::from_log(lg, -1);
        }
        return cs;
    }
    default:
        throw unsupported_error(
            "coefficients: nu = " + std::to_string(nu) +
            " is outside the built-in set {0,1,2,3}; supply a CoefficientProvider "
            "implementing the recursive construction for higher orders");
    }
}

double tricomi_u(double a, double b, double z) {
    if (a < 0.0) throw std::domain_error("tricomi_u: a must be >= 0");
    if (!(z > 0.0)) throw std::domain_error("tricomi_u: z must be positive");
    if (a == 0.0) return 1.0;

    const double lpref = -log_gamma(a);
    // split [0,1] and [1,inf); substitute tau = v^2 on the first piece when
    // a < 1 (integrable endpoint singularity tau^{a-1})
    double head;
    if (a < 1.0) {
        auto fh = [&](double v) {
            const double tau = v * v;
            return 2.0 * std::pow(v, 2.0 * a - 1.0) * std::exp(-z * tau)
                   * std::pow(tau + 1.0, b - a - 1.0);
        };
        head = integrate(fh, 0.0, 1.0, 1e-12).value;
    } else {
        auto fh = [&](double tau) {
            return std::exp(-z * tau + (a - 1.0) * std::log(tau)) * std::pow(tau + 1.0, b - a - 1.0);
        };
        head = integrate(fh, 0.0, 1.0, 1e-12).value;
    }
    // tau = 1/u on the tail
    auto ft = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double e = -z / u - b * std::log(u) + (b - a - 1.0) * std::log1p(u);
        return e < -745.0 ? 0.0 : std::exp(e);
    };
    double tail = integrate(ft, 0.0, 1.0, 1e-12).value;
    return std::exp(lpref) * (head + tail);
}

double tricomi_u1(int n_dim, double x) {
    return tricomi_u(0.5 * (n_dim - 1.0), -0.5, 0.5 * x);
}

double tricomi_u2(int n_dim, double x) {
    if (n_dim == 1) return 0.0;
    return -0.25 * (n_dim - 1.0) * tricomi_u(0.5 * (n_dim + 1.0), 0.5, 0.5 * x);
}

LogValue wl_density_log(const EnsembleParams& p, double x,
                        const CoefficientProvider& provider) {
    if (p.beta != 1) throw unsupported_error("wl_density: only beta = 1 is implemented");
    if (!(x > 0.0)) throw std::domain_error("wl_density: x must be positive");
    const int n = p.n_dim, nu = p.nu();
    const CoefficientSet cs = provider(n, nu);

    const double lc = c_constant_log(n, nu);
    const double lx = std::log(x);
    const double common = lc + 0.5 * (nu - 1.0) * lx - 0.5 * n * x;

    if (cs.kind == CoefficientKind::OddH) {
        const double hv = cs.h.eval(x);
        if (hv == 0.0) return LogValue::zero();
        LogValue poly = LogValue::from_double(hv) * cs.h_scale;
        return LogValue::from_log((0.5 * n - 1.0) * std::log(2.0) + common + poly.log,
                                  poly.sign);
    }

    // even nu: f(x) U1(x) + g(x) U2(x); with the shipped sets both products
    // are non-negative, but the assembly keeps signs for plugged providers
    LogSum bracket;
    if (!cs.f.is_zero()) {
        LogValue fv = LogValue::from_double(cs.f.eval(x)) * cs.f_scale;
        bracket.add(fv * LogValue::from_double(tricomi_u1(n, x)));
    }
    if (!cs.g.is_zero()) {
        LogValue gv = LogValue::from_double(cs.g.eval(x)) * cs.g_scale;
        bracket.add(gv * LogValue::from_double(tricomi_u2(n, x)));
    }
    LogValue br = bracket.result();
    if (br.sign == 0) return LogValue::zero();
    return LogValue::from_log(-0.5 * std::log(2.0) + common + br.log, br.sign);
}

double wl_density(const EnsembleParams& p, double x, const CoefficientProvider& provider) {
    return wl_density_log(p, x, provider).value();
}

} // namespace spectra
