#pragma once

// Fraction field Q(x) of the univariate rational polynomial ring; used to run
// field algorithms (Krylov minimal polynomials) on matrices with polynomial
// entries in one remaining parameter.

#include <string>
#include <utility>

#include "pcalg/errors.hpp"
#include "pcalg/rational.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(const Rational& q) : num_(q), den_(Rational(1)) {}
    explicit RationalFunction(QPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, nocheck{}); }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str() const;  // defined in poly_io.hpp context via declared printer

private:
    struct nocheck {};
    RationalFunction(QPoly num, QPoly den, nocheck) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = QPoly(Rational(1));
            return;
        }
        QPoly g = gcd_q(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rational linv = den_.lead().inverse();
        num_ = num_.scale(linv);
        den_ = den_.scale(linv);
    }

    QPoly num_;
    QPoly den_;
};

}  // namespace pcalg
