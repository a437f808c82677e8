#pragma once

// Sparse polynomials in the four parameters alpha, beta, gamma, psi over a
// generic exact coefficient domain (rationals by default). No zero terms are
// ever stored; the term map is ordered, so iteration is deterministic.

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcalg/errors.hpp"
#include "pcalg/rational.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

inline constexpr int kNumParams = 4;
inline const std::array<std::string, kNumParams> kParamNames = {"alpha", "beta", "gamma", "psi"};

template <class C = Rational>
class ParamPoly {
public:
    using Exps = std::array<int, kNumParams>;

    ParamPoly() = default;
    explicit ParamPoly(const C& constant) {
        if (!constant.is_zero()) terms_[{0, 0, 0, 0}] = constant;
    }

    static ParamPoly variable(int var, const C& one) {
        ParamPoly p;
        Exps e{0, 0, 0, 0};
        e[var] = 1;
        p.terms_[e] = one;
        return p;
    }

    static ParamPoly term(const C& coeff, const Exps& e) {
        ParamPoly p;
        if (!coeff.is_zero()) p.terms_[e] = coeff;
        return p;
    }

    const std::map<Exps, C>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{0, 0, 0, 0});
    }
    // constant term of the polynomial (the full value when is_constant())
    C constant_value(const C& zero_like) const {
        auto it = terms_.find({0, 0, 0, 0});
        if (it == terms_.end()) return zero_like - zero_like;
        return it->second;
    }

    int degree(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }

    ParamPoly operator-() const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    ParamPoly operator+(const ParamPoly& o) const {
        ParamPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    ParamPoly operator-(const ParamPoly& o) const {
        ParamPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    ParamPoly operator*(const ParamPoly& o) const {
        ParamPoly r;
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Exps e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly scale(const C& s) const {
        ParamPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) {
            C v = c * s;
            if (!v.is_zero()) r.terms_[e] = v;
        }
        return r;
    }

    // exact division (multivariate, lex leading term); throws if not divisible
    ParamPoly operator/(const ParamPoly& o) const {
        if (o.is_zero()) throw DivisionByZero();
        if (o.is_constant()) {
            const C& c = o.terms_.begin()->second;
            return scale(c.inverse());
        }
        ParamPoly rem = *this;
        ParamPoly quot;
        const auto& [le, lc] = *o.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            Exps q;
            for (int i = 0; i < kNumParams; ++i) {
                q[i] = re[i] - le[i];
                if (q[i] < 0) throw Error("parampoly exact division: not divisible");
            }
            C qc = rc / lc;
            ParamPoly t = ParamPoly::term(qc, q);
            quot += t;
            rem -= t * o;
        }
        return quot;
    }

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // substitute values for a subset of the variables
    ParamPoly specialize(const std::array<std::optional<C>, kNumParams>& vals) const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) {
            C coeff = c;
            Exps rest{0, 0, 0, 0};
            for (int v = 0; v < kNumParams; ++v) {
                if (vals[v].has_value()) {
                    for (int k = 0; k < e[v]; ++k) coeff = coeff * (*vals[v]);
                } else {
                    rest[v] = e[v];
                }
            }
            r.add_term(rest, coeff);
        }
        return r;
    }

    // apply fn : C -> D to every coefficient (e.g. embed Q into F_p)
    template <class D, class F>
    ParamPoly<D> map_coeff(F fn) const {
        ParamPoly<D> r;
        for (const auto& [e, c] : terms_) {
            D v = fn(c);
            if (!v.is_zero()) r.add_term(e, v);
        }
        return r;
    }

    // view as a univariate polynomial in `var`; all other variables must have
    // degree 0
    UniPoly<C> as_unipoly(int var, const C& zero_like) const {
        std::vector<C> coeffs(degree(var) + 1, zero_like - zero_like);
        for (const auto& [e, c] : terms_) {
            for (int v = 0; v < kNumParams; ++v) {
                if (v != var && e[v] != 0) throw Error("as_unipoly: polynomial is not univariate in " + kParamNames[var]);
            }
            coeffs[e[var]] = c;
        }
        return UniPoly<C>(std::move(coeffs));
    }

    void add_term(const Exps& e, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        // descending total degree, then descending lex, matching how the tables print
        std::vector<std::pair<Exps, C>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            int ta = a.first[0] + a.first[1] + a.first[2] + a.first[3];
            int tb = b.first[0] + b.first[1] + b.first[2] + b.first[3];
            if (ta != tb) return ta > tb;
            return a.first > b.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : sorted) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) {
                    os << "-";
                    cs = cs.substr(1);
                }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            bool has_var = e[0] || e[1] || e[2] || e[3];
            if (!has_var) {
                os << cs;
            } else {
                bool coeff_shown = false;
                if (cs != "1") {
                    os << cs;
                    coeff_shown = true;
                }
                bool firstv = true;
                for (int v = 0; v < kNumParams; ++v) {
                    if (e[v] == 0) continue;
                    if (coeff_shown || !firstv) os << "*";
                    os << kParamNames[v];
                    if (e[v] > 1) os << "^" << e[v];
                    firstv = false;
                    coeff_shown = true;
                }
            }
            first = false;
        }
        return os.str();
    }

private:
    template <class D>
    static std::string coeff_str(const D& c) {
        std::string s = c.str();
        // parenthesize composite coefficients (number-field values etc.)
        if (s.find(' ') != std::string::npos) {
            return "(" + s + ")";
        }
        return s;
    }

    std::map<Exps, C> terms_;
};

using QParamPoly = ParamPoly<Rational>;

}  // namespace pcalg
