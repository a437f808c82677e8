#pragma once

// Dense univariate polynomials, low degree first. Generic over the coefficient
// domain; rational-specific routines (primitive PRS gcd, Sturm chains, real
// root isolation) live at the bottom.

#include <algorithm>
#include <cassert>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pcalg/errors.hpp"
#include "pcalg/rational.hpp"

namespace pcalg {

template <class T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit UniPoly(const T& constant) : c_{constant} { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly monomial(const T& coeff, size_t e) {
        std::vector<T> c(e + 1, coeff - coeff);
        c[e] = coeff;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const T& lead() const {
        assert(!c_.empty());
        return c_.back();
    }
    const std::vector<T>& coeffs() const { return c_; }
    // coefficient of x^i; requires a sample element for the zero of the domain
    T coeff(size_t i, const T& zero_like) const {
        if (i < c_.size()) return c_[i];
        return zero_like - zero_like;
    }
    const T& operator[](size_t i) const { return c_[i]; }

    UniPoly operator-() const {
        std::vector<T> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<T> r;
        size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < c_.size() && i < o.c_.size()) {
                r.push_back(c_[i] + o.c_[i]);
            } else if (i < c_.size()) {
                r.push_back(c_[i]);
            } else {
                r.push_back(o.c_[i]);
            }
        }
        return UniPoly(std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, c_[0] - c_[0]);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == c_[0] - c_[0]) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return UniPoly(std::move(r));
    }

    UniPoly scale(const T& s) const {
        std::vector<T> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return UniPoly(std::move(r));
    }

    UniPoly shift_up(size_t k) const {  // multiply by x^k
        if (is_zero() || k == 0) return *this;
        std::vector<T> r(c_.size() + k, c_[0] - c_[0]);
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UniPoly(std::move(r));
    }

    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (!(c_[i] == o.c_[i])) return false;
        }
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    T eval(const T& x) const {
        if (is_zero()) return x - x;
        T acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == c_.back() - c_.back()) c_.pop_back();
    }

    std::vector<T> c_;
};

// derivative needs multiplication by small integers; provide as free function with
// an int->T embedding supplied by the domain
template <class T, class FromInt>
UniPoly<T> derivative(const UniPoly<T>& f, FromInt from_int) {
    if (f.degree() <= 0) return UniPoly<T>();
    std::vector<T> r;
    r.reserve(f.degree());
    for (int i = 1; i <= f.degree(); ++i) r.push_back(f[i] * from_int(i));
    return UniPoly<T>(std::move(r));
}

// division with remainder over a field
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {UniPoly<T>(), a};
    std::vector<T> rem(a.coeffs());
    T zero = b.lead() - b.lead();
    std::vector<T> quot(a.degree() - b.degree() + 1, zero);
    T linv = b.lead().inverse();
    for (int i = a.degree(); i >= b.degree(); --i) {
        T q = rem[i] * linv;
        if (!(q == zero)) {
            quot[i - b.degree()] = q;
            for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b[j];
        }
        rem[i] = zero;
    }
    return {UniPoly<T>(std::move(quot)), UniPoly<T>(std::move(rem))};
}

// exact division in a domain without inverses: requires that b divides a termwise
// via leading-coefficient exact division (T must provide exact operator/)
template <class T>
UniPoly<T> exact_div(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return a;
    UniPoly<T> rem = a;
    T zero = b.lead() - b.lead();
    std::vector<T> quot(std::max(0, a.degree() - b.degree()) + 1, zero);
    while (!rem.is_zero()) {
        if (rem.degree() < b.degree()) throw Error("exact_div: not divisible");
        T q = rem.lead() / b.lead();
        quot[rem.degree() - b.degree()] = q;
        rem = rem - b.scale(q).shift_up(rem.degree() - b.degree());
    }
    return UniPoly<T>(std::move(quot));
}

template <class T>
UniPoly<T> gcd_field(UniPoly<T> a, UniPoly<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scale(a.lead().inverse());  // monic
}

// extended Euclid over a field: returns (g, s, t) with s*a + t*b = g, g monic
template <class T>
std::tuple<UniPoly<T>, UniPoly<T>, UniPoly<T>> gcdext_field(const UniPoly<T>& a,
                                                            const UniPoly<T>& b) {
    UniPoly<T> r0 = a, r1 = b;
    T one_like = a.is_zero() ? b.lead() : a.lead();
    T one = one_like.inverse() * one_like;
    UniPoly<T> s0(one), s1, t0, t1(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly<T> s2 = s0 - q * s1;
        UniPoly<T> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = r0.lead().inverse();
    return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

template <class T>
UniPoly<T> poly_pow_mod(UniPoly<T> base, mpz_class e, const UniPoly<T>& mod) {
    T one_like = mod.lead();
    UniPoly<T> acc(one_like.inverse() * one_like);
    base = divmod(base, mod).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = divmod(acc * base, mod).second;
        base = divmod(base * base, mod).second;
        e >>= 1;
    }
    return acc;
}

// ---------- rational-coefficient specifics ----------

using QPoly = UniPoly<Rational>;

inline QPoly qpoly_from_ints(std::initializer_list<long> lows) {
    std::vector<Rational> c;
    for (long v : lows) c.emplace_back(v);
    return QPoly(std::move(c));
}

inline QPoly qpoly_parse_coeffs(const std::vector<std::string>& lows) {
    std::vector<Rational> c;
    for (const auto& s : lows) c.push_back(Rational::parse(s));
    return QPoly(std::move(c));
}

inline QPoly qd(const QPoly& f) {
    return derivative(f, [](int k) { return Rational(k); });
}

// integer primitive part: returns (content, primitive integer coeff vector)
inline std::pair<Rational, std::vector<mpz_class>> primitive_z(const QPoly& f) {
    if (f.is_zero()) return {Rational(0), {}};
    mpz_class den_lcm(1);
    for (const auto& c : f.coeffs()) {
        mpz_class d = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> z;
    z.reserve(f.coeffs().size());
    mpz_class cont(0);
    for (const auto& c : f.coeffs()) {
        mpz_class v = c.num() * (den_lcm / c.den());
        z.push_back(v);
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
    }
    if (cont == 0) cont = 1;
    if (z.back() < 0) cont = -cont;
    for (auto& v : z) v /= cont;
    return {Rational(mpq_class(cont, den_lcm)), z};
}

inline QPoly qpoly_from_z(const std::vector<mpz_class>& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& v : z) c.push_back(Rational(v));
    return QPoly(std::move(c));
}

namespace detail {

// pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a = q*b + r
inline std::vector<mpz_class> prem_z(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lb = b.back();
    while (da >= db && !(a.size() == 1 && a[0] == 0)) {
        mpz_class la = a.back();
        for (auto& v : a) v *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) return a;
        da = static_cast<int>(a.size()) - 1;
    }
    return a;
}

inline void make_primitive_z(std::vector<mpz_class>& a) {
    if (a.empty()) return;
    mpz_class g(0);
    for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0) return;
    if (a.back() < 0) g = -g;
    for (auto& v : a) v /= g;
}

}  // namespace detail

// monic gcd over Q via primitive pseudo-remainder sequences
inline QPoly gcd_q(const QPoly& f, const QPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error("gcd(0,0) undefined");
    if (f.is_zero()) return g.scale(g.lead().inverse());
    if (g.is_zero()) return f.scale(f.lead().inverse());
    auto [cf, a] = primitive_z(f);
    auto [cg, b] = primitive_z(g);
    (void)cf;
    (void)cg;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = detail::prem_z(a, b);
        detail::make_primitive_z(r);
        a = std::move(b);
        b = std::move(r);
    }
    QPoly res = qpoly_from_z(a);
    return res.scale(res.lead().inverse());
}

inline QPoly squarefree_part(const QPoly& f) {
    if (f.is_zero()) return f;
    if (f.degree() == 0) return QPoly(Rational(1));
    QPoly g = gcd_q(f, qd(f));
    if (g.degree() == 0) return f.scale(f.lead().inverse());
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw Error("squarefree_part: inexact gcd division");
    return q.scale(q.lead().inverse());
}

// ---------- Sturm sequences and real root isolation ----------

struct IsolatingInterval {
    Rational lower;
    Rational upper;
};

inline std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(f);
    chain.push_back(qd(f));
    while (!chain.back().is_zero()) {
        const QPoly& a = chain[chain.size() - 2];
        const QPoly& b = chain.back();
        auto [q, r] = divmod(a, b);
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {

inline int sign_at(const QPoly& p, const Rational& x) { return p.eval(x).sign(); }

inline int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

inline int sign_at_inf(const QPoly& p, int dir) {  // dir = +1 or -1
    if (p.is_zero()) return 0;
    int s = p.lead().sign();
    if (dir < 0 && (p.degree() % 2 == 1)) s = -s;
    return s;
}

inline int variations_at_inf(const std::vector<QPoly>& chain, int dir) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at_inf(p, dir);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace detail

// number of distinct real roots in (lo, hi]; requires f squarefree for isolation use
inline int sturm_count(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi) {
    return detail::variations_at(chain, lo) - detail::variations_at(chain, hi);
}

inline int sturm_count_all(const std::vector<QPoly>& chain) {
    return detail::variations_at_inf(chain, -1) - detail::variations_at_inf(chain, +1);
}

inline Rational cauchy_root_bound(const QPoly& f) {
    Rational m(0);
    Rational linv = f.lead().inverse().abs();
    for (int i = 0; i < f.degree(); ++i) {
        Rational a = f[i].abs() * linv;
        if (a > m) m = a;
    }
    return m + Rational(1);
}

// isolating intervals for all distinct real roots of f (f != 0); endpoints are
// never roots; one interval per root
inline std::vector<IsolatingInterval> sturm_isolate(const QPoly& fin) {
    if (fin.is_zero()) throw Error("sturm_isolate: zero polynomial");
    if (fin.degree() == 0) return {};
    QPoly f = squarefree_part(fin);
    auto chain = sturm_chain(f);
    int total = sturm_count_all(chain);
    std::vector<IsolatingInterval> out;
    if (total == 0) return out;
    Rational b = cauchy_root_bound(f);
    Rational lo = -b, hi = b;
    // endpoints +-(bound) are non-roots by construction
    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::vector<Seg> stack{{lo, hi, sturm_count(chain, lo, hi)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / Rational(2);
        while (f.eval(mid).is_zero()) {
            // nudge the split point off the root
            mid = (s.lo + mid) / Rational(2);
        }
        int left = sturm_count(chain, s.lo, mid);
        stack.push_back({mid, s.hi, s.count - left});
        stack.push_back({s.lo, mid, left});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lower < b.lower; });
    return out;
}

// shrink an isolating interval below the requested width by bisection
inline IsolatingInterval refine_interval(const QPoly& f, IsolatingInterval iv, const Rational& width) {
    QPoly sf = squarefree_part(f);
    int slo = sf.eval(iv.lower).sign();
    while (iv.upper - iv.lower >= width) {
        Rational mid = (iv.lower + iv.upper) / Rational(2);
        Rational v = sf.eval(mid);
        if (v.is_zero()) {
            // the unique root in the interval is mid itself; any symmetric window
            // inside the old interval isolates it with non-root endpoints
            Rational delta = width / Rational(4);
            Rational dl = (mid - iv.lower) / Rational(2);
            Rational dr = (iv.upper - mid) / Rational(2);
            if (dl < delta) delta = dl;
            if (dr < delta) delta = dr;
            return {mid - delta, mid + delta};
        }
        if (v.sign() == slo) {
            iv.lower = mid;
        } else {
            iv.upper = mid;
        }
    }
    return iv;
}

}  // namespace pcalg
