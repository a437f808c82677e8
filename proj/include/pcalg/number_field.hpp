#pragma once

// Simple number fields Q[t]/(f) with f monic irreducible, and real algebraic
// numbers given by a minimal polynomial plus an isolating interval.

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcalg/errors.hpp"
#include "pcalg/factor.hpp"
#include "pcalg/rational.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

class NumberField {
public:
    // certify = false skips the irreducibility proof (for internal reuse when the
    // caller already certified the polynomial)
    static std::shared_ptr<const NumberField> create(QPoly f, bool certify = true) {
        if (f.degree() < 1) throw Error("number field needs degree >= 1");
        f = f.scale(f.lead().inverse());
        if (certify && !is_irreducible_q(f)) {
            throw ReducibleMinpoly("defining polynomial factors over Q");
        }
        return std::shared_ptr<const NumberField>(new NumberField(std::move(f)));
    }

    const QPoly& minpoly() const { return f_; }
    int degree() const { return f_.degree(); }

    // reduction of t^(deg+k) as coordinate vector, k = 0..deg-2
    const std::vector<Rational>& power_reduction(int k) const { return reductions_[k]; }

private:
    explicit NumberField(QPoly f) : f_(std::move(f)) {
        int n = f_.degree();
        // t^n = -(f - t^n)
        std::vector<Rational> tn(n, Rational(0));
        for (int i = 0; i < n; ++i) tn[i] = -f_[i];
        reductions_.push_back(tn);
        for (int k = 1; k <= n - 2; ++k) {
            // t^(n+k) = t * t^(n+k-1)
            const auto& prev = reductions_.back();
            std::vector<Rational> cur(n, Rational(0));
            for (int i = 0; i < n - 1; ++i) cur[i + 1] = prev[i];
            if (!prev[n - 1].is_zero()) {
                for (int i = 0; i < n; ++i) cur[i] += prev[n - 1] * tn[i];
            }
            reductions_.push_back(std::move(cur));
        }
    }

    QPoly f_;
    std::vector<std::vector<Rational>> reductions_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NumberFieldElem {
public:
    NumberFieldElem() = default;
    NumberFieldElem(NumberFieldPtr K, std::vector<Rational> coords) : K_(std::move(K)), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != K_->degree()) {
            throw Error("coordinate vector length must equal field degree");
        }
    }

    static NumberFieldElem from_rational(const NumberFieldPtr& K, const Rational& q) {
        std::vector<Rational> c(K->degree(), Rational(0));
        c[0] = q;
        return NumberFieldElem(K, std::move(c));
    }

    static NumberFieldElem generator(const NumberFieldPtr& K) {
        std::vector<Rational> c(K->degree(), Rational(0));
        if (K->degree() == 1) {
            // t is a rational number then; reduce
            c[0] = -K->minpoly()[0];
        } else {
            c[1] = Rational(1);
        }
        return NumberFieldElem(K, std::move(c));
    }

    const NumberFieldPtr& field() const { return K_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }
    bool is_one() const {
        if (c_.empty() || !c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) return false;
        }
        return true;
    }

    NumberFieldElem operator-() const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return NumberFieldElem(K_, std::move(r));
    }
    NumberFieldElem operator+(const NumberFieldElem& o) const {
        check(o);
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
        return NumberFieldElem(K_, std::move(r));
    }
    NumberFieldElem operator-(const NumberFieldElem& o) const {
        check(o);
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
        return NumberFieldElem(K_, std::move(r));
    }
    NumberFieldElem operator*(const NumberFieldElem& o) const {
        check(o);
        int n = K_->degree();
        std::vector<Rational> prod(2 * n - 1, Rational(0));
        for (int i = 0; i < n; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (o.c_[j].is_zero()) continue;
                prod[i + j] += c_[i] * o.c_[j];
            }
        }
        std::vector<Rational> r(prod.begin(), prod.begin() + n);
        for (int k = 0; k <= n - 2; ++k) {
            const Rational& hi = prod[n + k];
            if (hi.is_zero()) continue;
            const auto& red = K_->power_reduction(k);
            for (int i = 0; i < n; ++i) r[i] += hi * red[i];
        }
        return NumberFieldElem(K_, std::move(r));
    }
    NumberFieldElem operator/(const NumberFieldElem& o) const { return *this * o.inverse(); }
    NumberFieldElem& operator+=(const NumberFieldElem& o) { return *this = *this + o; }
    NumberFieldElem& operator-=(const NumberFieldElem& o) { return *this = *this - o; }
    NumberFieldElem& operator*=(const NumberFieldElem& o) { return *this = *this * o; }
    NumberFieldElem& operator/=(const NumberFieldElem& o) { return *this = *this / o; }

    NumberFieldElem inverse() const {
        if (is_zero()) throw DivisionByZero();
        QPoly rep{std::vector<Rational>(c_)};
        auto [g, s, t] = gcdext_field(rep, K_->minpoly());
        (void)t;
        if (g.degree() != 0) {
            throw NonInvertible("gcd with defining polynomial is nonconstant (reducible field?)");
        }
        // g is monic constant 1 after normalization in gcdext_field
        QPoly inv = divmod(s, K_->minpoly()).second;
        std::vector<Rational> r(K_->degree(), Rational(0));
        for (int i = 0; i <= inv.degree(); ++i) r[i] = inv[i];
        return NumberFieldElem(K_, std::move(r));
    }

    bool operator==(const NumberFieldElem& o) const {
        check(o);
        return c_ == o.c_;
    }
    bool operator!=(const NumberFieldElem& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            Rational a = c_[i];
            if (first) {
                if (a.sign() < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            if (i == 0) {
                os << a.str();
            } else {
                if (!a.is_one()) os << a.str() << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void check(const NumberFieldElem& o) const {
        if (K_ == o.K_) return;
        if (K_ && o.K_ && K_->minpoly() == o.K_->minpoly()) return;
        throw MixedDomains("number field elements from different fields");
    }

    NumberFieldPtr K_;
    std::vector<Rational> c_;
};

// a real algebraic number: certified-irreducible minimal polynomial plus an
// interval isolating exactly one real root, endpoints non-roots
struct AlgebraicNumber {
    QPoly minpoly;
    IsolatingInterval interval;

    static AlgebraicNumber create(QPoly f, IsolatingInterval iv, bool certify = true) {
        if (f.degree() < 1) throw Error("algebraic number needs degree >= 1 minpoly");
        f = f.scale(f.lead().inverse());
        if (certify && !is_irreducible_q(f)) {
            throw ReducibleMinpoly("minimal polynomial candidate factors over Q");
        }
        if (!(iv.lower < iv.upper)) throw Error("empty isolating interval");
        int slo = f.eval(iv.lower).sign();
        int shi = f.eval(iv.upper).sign();
        if (slo == 0 || shi == 0 || slo == shi) {
            throw Error("interval does not isolate a single root with sign change");
        }
        auto chain = sturm_chain(f);
        if (sturm_count(chain, iv.lower, iv.upper) != 1) {
            throw Error("interval does not contain exactly one root");
        }
        return AlgebraicNumber{std::move(f), std::move(iv)};
    }

    bool is_rational() const { return minpoly.degree() == 1; }
    Rational rational_value() const {
        if (!is_rational()) throw Error("not a rational value");
        return -minpoly[0];
    }

    AlgebraicNumber refined(const Rational& width) const {
        return AlgebraicNumber{minpoly, refine_interval(minpoly, interval, width)};
    }

    std::string str() const {
        std::ostringstream os;
        if (is_rational()) {
            os << rational_value().str();
        } else {
            os << "root of degree-" << minpoly.degree() << " minpoly in (" << interval.lower.str()
               << ", " << interval.upper.str() << ")";
        }
        return os.str();
    }
};

}  // namespace pcalg
