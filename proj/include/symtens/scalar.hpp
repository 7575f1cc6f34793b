#pragma once

#include <symtens/common.hpp>

#include <cmath>
#include <cstdint>
#include <iosfwd>

namespace symtens {

// Exact scalar a + b*sqrt(d) with a, b rational and d a small square-free
// integer (0 when the value is plain rational).  A single extension is
// supported per value; mixing two different radicals is an internal error,
// because no construction in this library ever needs it.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long v) : a_(v, 1), b_(0), d_(0) {}
    Scalar(const Rational& v) : a_(v), b_(0), d_(0) {}
    Scalar(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        normalize();
    }

    static Scalar sqrt_of(int d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    int radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return d_ == 0; }

    // The exact rational value; requires is_rational().
    const Rational& rational() const {
        if (!is_rational()) throw internal_error("Scalar: radical part where a rational was required");
        return a_;
    }

    double to_double() const {
        double v = a_.get_d();
        if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
        return v;
    }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }

    Scalar& operator+=(const Scalar& o) {
        int d = join(d_, o.d_);
        a_ += o.a_;
        b_ += o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        int d = join(d_, o.d_);
        a_ -= o.a_;
        b_ -= o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        int d = join(d_, o.d_);
        if (d == 0) {
            a_ *= o.a_;
        } else {
            Rational a = a_ * o.a_ + b_ * o.b_ * d;
            Rational b = a_ * o.b_ + b_ * o.a_;
            a_ = std::move(a);
            b_ = std::move(b);
            d_ = d;
            normalize();
        }
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    Scalar inverse() const {
        if (is_zero()) throw internal_error("Scalar: division by zero");
        if (d_ == 0) return Scalar(Rational(1) / a_);
        // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm is
        // nonzero because sqrt(d) is irrational.
        Rational n = a_ * a_ - b_ * b_ * d_;
        return Scalar(a_ / n, -b_ / n, d_);
    }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::string str() const;

private:
    void normalize() {
        if (sgn(b_) == 0) d_ = 0;
        else if (d_ == 0) throw internal_error("Scalar: radical part with no radicand");
    }
    static int join(int d1, int d2) {
        if (d1 == 0) return d2;
        if (d2 == 0 || d1 == d2) return d1;
        throw internal_error("Scalar: mixed radicals are not supported");
    }

    Rational a_, b_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Value c0 + c1*pi.  Carrier for partially evaluated rotation averages; a
// completed average must end with c1 = 0, which callers assert.
struct PiLinear {
    Scalar c0, c1;

    PiLinear() = default;
    PiLinear(Scalar r, Scalar p) : c0(std::move(r)), c1(std::move(p)) {}

    PiLinear& operator+=(const PiLinear& o) {
        c0 += o.c0;
        c1 += o.c1;
        return *this;
    }
    friend PiLinear operator+(PiLinear x, const PiLinear& y) { return x += y; }

    // Scaling by an exact scalar keeps the space closed; multiplying two
    // general PiLinear values would not, and is deliberately not provided.
    friend PiLinear operator*(const Scalar& s, const PiLinear& x) {
        return PiLinear(s * x.c0, s * x.c1);
    }

    bool pi_free() const { return c1.is_zero(); }
    double to_double() const { return c0.to_double() + c1.to_double() * 3.14159265358979323846; }
};

}  // namespace symtens
