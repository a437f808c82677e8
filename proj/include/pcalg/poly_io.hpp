#pragma once

// Text format for polynomials and domain descriptors. Univariate polynomials
// print like `x^3 - 3/8*x^2 - 9/32*x + 13/512`; multivariate ones use the
// variables alpha, beta, gamma, psi. Parsing round-trips printing.

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pcalg/domain.hpp"
#include "pcalg/errors.hpp"
#include "pcalg/parampoly.hpp"
#include "pcalg/rational.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

namespace detail {

struct ParsedTerm {
    Rational coeff;
    std::map<std::string, int> vars;
};

// tokenizes a sum of terms: term := [+-] factor (* factor)*,
// factor := rational | name [^ int]
inline std::vector<ParsedTerm> parse_terms(const std::string& s) {
    std::vector<ParsedTerm> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i >= s.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' near position " + std::to_string(i));
        }
        first = false;
        ParsedTerm term;
        term.coeff = Rational(sign);
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (i >= s.size()) throw ParseError("unexpected end of polynomial");
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                std::string numpart = s.substr(i, j - i);
                i = j;
                skip_ws();
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    skip_ws();
                    size_t k = i;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    if (k == i) throw ParseError("expected denominator");
                    numpart += "/" + s.substr(i, k - i);
                    i = k;
                }
                term.coeff *= Rational::parse(numpart);
            } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
                size_t j = i;
                while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                std::string name = s.substr(i, j - i);
                i = j;
                int e = 1;
                skip_ws();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    skip_ws();
                    size_t k = i;
                    if (k < s.size() && s[k] == '-') ++k;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    if (k == i) throw ParseError("expected exponent");
                    e = std::stoi(s.substr(i, k - i));
                    if (e < 0) throw ParseError("negative exponent");
                    i = k;
                }
                term.vars[name] += e;
            } else {
                throw ParseError(std::string("unexpected character '") + s[i] + "'");
            }
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        out.push_back(std::move(term));
        skip_ws();
    }
    return out;
}

}  // namespace detail

inline QPoly parse_unipoly(const std::string& s, const std::string& var = "x") {
    auto terms = detail::parse_terms(s);
    int deg = 0;
    for (const auto& t : terms) {
        for (const auto& [name, e] : t.vars) {
            if (name != var) throw ParseError("unexpected variable '" + name + "'");
            deg = std::max(deg, e);
        }
    }
    std::vector<Rational> c(deg + 1, Rational(0));
    for (const auto& t : terms) {
        int e = 0;
        auto it = t.vars.find(var);
        if (it != t.vars.end()) e = it->second;
        c[e] += t.coeff;
    }
    return QPoly(std::move(c));
}

inline QParamPoly parse_parampoly(const std::string& s) {
    auto terms = detail::parse_terms(s);
    QParamPoly p;
    for (const auto& t : terms) {
        QParamPoly::Exps e{0, 0, 0, 0};
        for (const auto& [name, exp] : t.vars) {
            bool matched = false;
            for (int v = 0; v < kNumParams; ++v) {
                if (name == kParamNames[v]) {
                    e[v] += exp;
                    matched = true;
                    break;
                }
            }
            if (!matched) throw ParseError("unknown parameter '" + name + "'");
        }
        p.add_term(e, t.coeff);
    }
    return p;
}

inline std::string unipoly_str(const QPoly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Rational a = f[i];
        if (a.is_zero()) continue;
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
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

inline std::string RationalFunction::str() const {
    if (is_polynomial()) return unipoly_str(num());
    return "(" + unipoly_str(num()) + ")/(" + unipoly_str(den()) + ")";
}

// generic univariate printing for other coefficient domains (entries carry str())
template <class T>
std::string unipoly_str_generic(const UniPoly<T>& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const T& a = f[i];
        if (a.is_zero()) continue;
        std::string cs = a.str();
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (neg) cs = cs.substr(1);
        bool composite = cs.find(' ') != std::string::npos;
        if (composite) cs = "(" + cs + ")";
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

inline DomainDesc parse_domain(const std::string& s) {
    if (s == "Q" || s == "q") return DomainDesc{};
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
        DomainDesc d;
        d.kind = DomainKind::Fp;
        try {
            d.p = std::stoull(s.substr(3));
        } catch (...) {
            throw ParseError("bad prime in '" + s + "'");
        }
        if (!detail::is_prime_u64(d.p)) throw ParseError("modulus " + std::to_string(d.p) + " is not prime");
        return d;
    }
    if (s.rfind("NF:", 0) == 0 || s.rfind("nf:", 0) == 0) {
        DomainDesc d;
        d.kind = DomainKind::NF;
        d.nf_poly_str = s.substr(3);
        d.nf_poly = parse_unipoly(d.nf_poly_str, "t");
        if (d.nf_poly.degree() < 1) throw ParseError("number field polynomial must have degree >= 1");
        return d;
    }
    throw ParseError("unknown domain '" + s + "' (expected Q, Fp:<p>, NF:<poly in t>)");
}

}  // namespace pcalg
