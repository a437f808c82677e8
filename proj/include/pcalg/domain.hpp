#pragma once

// Domain descriptors ("Q", "Fp:5", "NF:t^2-5") and uniform traits every scalar
// domain implements: building 0/1, embedding rationals, extracting the context
// an element lives in, and canonical strings.

#include <cstdint>
#include <string>

#include "pcalg/errors.hpp"
#include "pcalg/fraction_field.hpp"
#include "pcalg/number_field.hpp"
#include "pcalg/parampoly.hpp"
#include "pcalg/prime_field.hpp"
#include "pcalg/rational.hpp"

namespace pcalg {

struct QCtx {
    bool operator==(const QCtx&) const { return true; }
};

template <class T>
struct domain_traits;

template <>
struct domain_traits<Rational> {
    using ctx_type = QCtx;
    static constexpr bool is_field = true;
    static Rational zero(const ctx_type&) { return Rational(0); }
    static Rational one(const ctx_type&) { return Rational(1); }
    static Rational from_rational(const Rational& q, const ctx_type&) { return q; }
    static ctx_type ctx_of(const Rational&) { return {}; }
    static bool ctx_valid(const ctx_type&) { return true; }
    static uint64_t characteristic(const ctx_type&) { return 0; }
    static std::string name(const ctx_type&) { return "Q"; }
};

template <>
struct domain_traits<PrimeFieldElem> {
    using ctx_type = uint64_t;  // the prime modulus
    static constexpr bool is_field = true;
    static PrimeFieldElem zero(const ctx_type& p) { return PrimeFieldElem(0, p); }
    static PrimeFieldElem one(const ctx_type& p) { return PrimeFieldElem(1, p); }
    static PrimeFieldElem from_rational(const Rational& q, const ctx_type& p) {
        return embed_rational_fp(q, p);
    }
    static ctx_type ctx_of(const PrimeFieldElem& x) { return x.modulus(); }
    static bool ctx_valid(const ctx_type& p) { return p != 0; }
    static uint64_t characteristic(const ctx_type& p) { return p; }
    static std::string name(const ctx_type& p) { return "Fp:" + std::to_string(p); }
};

template <>
struct domain_traits<NumberFieldElem> {
    using ctx_type = NumberFieldPtr;
    static constexpr bool is_field = true;
    static NumberFieldElem zero(const ctx_type& K) {
        return NumberFieldElem::from_rational(K, Rational(0));
    }
    static NumberFieldElem one(const ctx_type& K) {
        return NumberFieldElem::from_rational(K, Rational(1));
    }
    static NumberFieldElem from_rational(const Rational& q, const ctx_type& K) {
        return NumberFieldElem::from_rational(K, q);
    }
    static ctx_type ctx_of(const NumberFieldElem& x) { return x.field(); }
    static bool ctx_valid(const ctx_type& K) { return K != nullptr; }
    static uint64_t characteristic(const ctx_type&) { return 0; }
    static std::string name(const ctx_type&) { return "NF"; }
};

template <>
struct domain_traits<RationalFunction> {
    using ctx_type = QCtx;
    static constexpr bool is_field = true;
    static RationalFunction zero(const ctx_type&) { return RationalFunction(); }
    static RationalFunction one(const ctx_type&) { return RationalFunction(Rational(1)); }
    static RationalFunction from_rational(const Rational& q, const ctx_type&) {
        return RationalFunction(q);
    }
    static ctx_type ctx_of(const RationalFunction&) { return {}; }
    static bool ctx_valid(const ctx_type&) { return true; }
    static uint64_t characteristic(const ctx_type&) { return 0; }
    static std::string name(const ctx_type&) { return "Q(x)"; }
};

template <class C>
struct domain_traits<ParamPoly<C>> {
    using ctx_type = typename domain_traits<C>::ctx_type;
    static constexpr bool is_field = false;
    static ParamPoly<C> zero(const ctx_type&) { return ParamPoly<C>(); }
    static ParamPoly<C> one(const ctx_type& c) {
        return ParamPoly<C>(domain_traits<C>::one(c));
    }
    static ParamPoly<C> from_rational(const Rational& q, const ctx_type& c) {
        return ParamPoly<C>(domain_traits<C>::from_rational(q, c));
    }
    static ctx_type ctx_of(const ParamPoly<C>& x) {
        if (x.is_zero()) return ctx_type{};
        return domain_traits<C>::ctx_of(x.terms().begin()->second);
    }
    static bool ctx_valid(const ctx_type& c) { return domain_traits<C>::ctx_valid(c); }
    static uint64_t characteristic(const ctx_type& c) {
        return domain_traits<C>::characteristic(c);
    }
    static std::string name(const ctx_type& c) {
        return "Param(" + domain_traits<C>::name(c) + ")";
    }
};

// ---------- runtime domain descriptors ----------

enum class DomainKind { Q, Fp, NF };

struct DomainDesc {
    DomainKind kind = DomainKind::Q;
    uint64_t p = 0;          // for Fp
    QPoly nf_poly;           // for NF, monic irreducible in t
    std::string nf_poly_str;  // original text for round trips

    std::string str() const {
        switch (kind) {
            case DomainKind::Q:
                return "Q";
            case DomainKind::Fp:
                return "Fp:" + std::to_string(p);
            case DomainKind::NF:
                return "NF:" + nf_poly_str;
        }
        return "?";
    }
};

}  // namespace pcalg
