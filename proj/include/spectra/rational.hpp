#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectra {

// Exact rational with arbitrary-precision integer numerator/denominator,
// always kept in canonical reduced form with a positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(std::int64_t n) : q_(static_cast<long>(n)) {}
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(static_cast<long>(n), static_cast<long>(d));
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return q_ == 0; }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

// Dense polynomial with exact rational coefficients; index == power of x.
// Trailing zero coefficients are stripped so degree() == coeffs().size()-1.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(const Rational& r) {
        return r.is_zero() ? RationalPoly() : RationalPoly({r});
    }
    static RationalPoly zero() { return RationalPoly(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    RationalPoly operator+(const RationalPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RationalPoly(std::move(r));
    }
    RationalPoly operator-(const RationalPoly& o) const { return *this + o.scaled(Rational(-1)); }
    RationalPoly operator*(const RationalPoly& o) const {
        if (is_zero() || o.is_zero()) return RationalPoly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RationalPoly(std::move(r));
    }
    RationalPoly scaled(const Rational& s) const {
        std::vector<Rational> r = c_;
        for (auto& x : r) x = x * s;
        return RationalPoly(std::move(r));
    }
    RationalPoly shifted_up() const {  // multiply by x
        if (is_zero()) return RationalPoly();
        std::vector<Rational> r;
        r.reserve(c_.size() + 1);
        r.emplace_back(0);
        r.insert(r.end(), c_.begin(), c_.end());
        return RationalPoly(std::move(r));
    }
    // substitute x -> -x
    RationalPoly negated_arg() const {
        std::vector<Rational> r = c_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return RationalPoly(std::move(r));
    }

    double eval(double x) const {
        double v = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i].to_double();
        return v;
    }
    Rational eval_exact(const Rational& x) const {
        Rational v(0);
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace spectra
