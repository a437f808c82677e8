#pragma once

// Univariate factorization over Q: Yun squarefree decomposition, Cantor-Zassenhaus
// over F_p, quadratic Hensel lifting, Zassenhaus subset recombination.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pcalg/errors.hpp"
#include "pcalg/prime_field.hpp"
#include "pcalg/rational.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

using FpPoly = UniPoly<PrimeFieldElem>;

namespace detail {

inline FpPoly fp_poly_from_z(const std::vector<mpz_class>& z, uint64_t p) {
    std::vector<PrimeFieldElem> c;
    c.reserve(z.size());
    mpz_class pz(static_cast<unsigned long>(p));
    for (const auto& v : z) {
        mpz_class r = v % pz;
        if (r < 0) r += pz;
        c.emplace_back(r.get_ui(), p);
    }
    return FpPoly(std::move(c));
}

inline FpPoly fp_x(uint64_t p) { return FpPoly::monomial(PrimeFieldElem(1, p), 1); }

inline FpPoly fp_random(int deg, uint64_t p, std::mt19937_64& rng) {
    std::vector<PrimeFieldElem> c;
    c.reserve(deg + 1);
    for (int i = 0; i <= deg; ++i) c.emplace_back(rng() % p, p);
    return FpPoly(std::move(c));
}

// equal-degree splitting: f is a product of irreducibles of degree d, p odd
inline void fp_equal_degree(const FpPoly& f, int d, uint64_t p, std::mt19937_64& rng,
                            std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.scale(f.lead().inverse()));
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    mpz_class half = (pd - 1) / 2;
    FpPoly one(PrimeFieldElem(1, p));
    for (;;) {
        FpPoly a = fp_random(f.degree() - 1, p, rng);
        if (a.degree() < 1) continue;
        FpPoly g = gcd_field(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            fp_equal_degree(g, d, p, rng, out);
            fp_equal_degree(exact_div(f, g), d, p, rng, out);
            return;
        }
        FpPoly b = poly_pow_mod(a, half, f);
        FpPoly h = gcd_field(b - one, f);
        if (h.degree() > 0 && h.degree() < f.degree()) {
            fp_equal_degree(h, d, p, rng, out);
            fp_equal_degree(exact_div(f, h), d, p, rng, out);
            return;
        }
    }
}

// factor a squarefree monic f over F_p (p odd) into monic irreducibles
inline std::vector<FpPoly> fp_factor_squarefree(FpPoly f, uint64_t p) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (p * 1000003ull) ^ f.degree());
    std::vector<FpPoly> out;
    FpPoly x = fp_x(p);
    FpPoly h = x;
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f.scale(f.lead().inverse()));
            break;
        }
        h = poly_pow_mod(h, mpz_class(static_cast<unsigned long>(p)), f);
        FpPoly g = gcd_field(h - x, f);
        if (g.degree() > 0) {
            fp_equal_degree(g, d, p, rng, out);
            f = exact_div(f, g);
            h = divmod(h, f).second;
        }
    }
    return out;
}

// ----- arithmetic on integer polynomials mod m (m = p^k), coefficients in [0, m) -----

using ZPoly = std::vector<mpz_class>;  // low degree first

inline void zm_normalize(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zm_reduce(ZPoly a, const mpz_class& m) {
    for (auto& v : a) {
        v %= m;
        if (v < 0) v += m;
    }
    zm_normalize(a);
    return a;
}

inline ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zm_reduce(std::move(r), m);
}

inline ZPoly zm_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zm_reduce(std::move(r), m);
}

inline ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zm_reduce(std::move(r), m);
}

// division with remainder by a MONIC divisor, mod m
inline std::pair<ZPoly, ZPoly> zm_divmod_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
    zm_normalize(a);
    if (b.empty() || b.back() != 1) throw Error("zm_divmod_monic: divisor not monic");
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
    ZPoly q(a.size() - db, mpz_class(0));
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        mpz_class c = a[i] % m;
        if (c < 0) c += m;
        q[i - db] = c;
        if (c != 0) {
            for (int j = 0; j <= db; ++j) {
                a[i - db + j] -= c * b[j];
            }
        }
    }
    return {zm_reduce(std::move(q), m), zm_reduce(std::move(a), m)};
}

inline ZPoly zpoly_from_fp(const FpPoly& f) {
    ZPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) r.emplace_back(static_cast<unsigned long>(c.value()));
    return r;
}

// Hensel step (von zur Gathen-Gerhard 15.10): given f = g*h mod m, s*g + t*h = 1 mod m,
// h monic, produce the same data mod m^2
struct HenselPair {
    ZPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly e = zm_sub(f, zm_mul(in.g, in.h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(in.s, e, m2), in.h, m2);
    ZPoly gs = zm_add(in.g, zm_add(zm_mul(in.t, e, m2), zm_mul(q, in.g, m2), m2), m2);
    ZPoly hs = zm_add(in.h, r, m2);
    ZPoly one{mpz_class(1)};
    ZPoly b = zm_sub(zm_add(zm_mul(in.s, gs, m2), zm_mul(in.t, hs, m2), m2), one, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(in.s, b, m2), hs, m2);
    ZPoly ss = zm_sub(in.s, d, m2);
    ZPoly ts = zm_sub(in.t, zm_add(zm_mul(in.t, b, m2), zm_mul(c, gs, m2), m2), m2);
    return {gs, hs, ss, ts};
}

// lift f = g*h (mod p) to mod at least `bound`, h monic; returns (g, h, modulus)
inline std::tuple<ZPoly, ZPoly, mpz_class> hensel_lift_pair(const ZPoly& f, const FpPoly& gp,
                                                            const FpPoly& hp, uint64_t p,
                                                            const mpz_class& bound) {
    auto [gg, sg, tg] = gcdext_field(gp, hp);
    if (gg.degree() != 0) throw Error("hensel_lift_pair: factors not coprime");
    HenselPair hp_pair{zpoly_from_fp(gp), zpoly_from_fp(hp), zpoly_from_fp(sg), zpoly_from_fp(tg)};
    mpz_class m(static_cast<unsigned long>(p));
    while (m < bound) {
        hp_pair = hensel_step(f, hp_pair, m);
        m *= m;
    }
    return {hp_pair.g, hp_pair.h, m};
}

// lift the full modular factorization of a primitive squarefree integer poly f
// to modulus >= bound; modular factors are monic, f's leading coeff is carried
// on the left
inline std::pair<std::vector<ZPoly>, mpz_class> hensel_lift_all(const ZPoly& f,
                                                                std::vector<FpPoly> factors,
                                                                uint64_t p, const mpz_class& bound) {
    if (factors.size() == 1) {
        // f = lc * monic-irreducible; nothing to lift
        mpz_class m(static_cast<unsigned long>(p));
        while (m < bound) m *= m;
        ZPoly g = f;  // exact over Z is fine; reduce for canonical form
        return {{zm_reduce(std::move(g), m)}, m};
    }
    // split list in two, lift the pair, recurse
    size_t half = factors.size() / 2;
    FpPoly left(PrimeFieldElem(1, p));
    for (size_t i = 0; i < half; ++i) left = left * factors[i];
    FpPoly right(PrimeFieldElem(1, p));
    for (size_t i = half; i < factors.size(); ++i) right = right * factors[i];
    // absorb f's leading coefficient into the left factor mod p
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class lc = f.back() % pz;
    if (lc < 0) lc += pz;
    FpPoly gp = left.scale(PrimeFieldElem(lc.get_ui(), p));
    auto [g, h, m] = hensel_lift_pair(f, gp, right, p, bound);
    std::vector<FpPoly> lf(factors.begin(), factors.begin() + half);
    std::vector<FpPoly> rf(factors.begin() + half, factors.end());
    auto [gl, m1] = hensel_lift_all(g, std::move(lf), p, m);
    auto [hl, m2] = hensel_lift_all(h, std::move(rf), p, m);
    (void)m1;
    (void)m2;
    std::vector<ZPoly> out = std::move(gl);
    for (auto& x : hl) out.push_back(std::move(x));
    return {std::move(out), m};
}

inline mpz_class zpoly_height(const ZPoly& f) {
    mpz_class h(0);
    for (const auto& c : f) {
        mpz_class a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

// symmetric representative in (-m/2, m/2]
inline mpz_class zsym(const mpz_class& v, const mpz_class& m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// exact division test of integer polynomials; returns quotient if divisible
inline bool zpoly_divides(const ZPoly& d, const ZPoly& f, ZPoly& quot) {
    if (d.empty()) return false;
    ZPoly rem = f;
    zm_normalize(rem);
    int dd = static_cast<int>(d.size()) - 1;
    quot.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, mpz_class(0));
    while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= dd) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), d.back().get_mpz_t());
        if (r != 0) return false;
        int shift = static_cast<int>(rem.size()) - 1 - dd;
        quot[shift] = q;
        for (int j = 0; j <= dd; ++j) rem[shift + j] -= q * d[j];
        zm_normalize(rem);
    }
    return rem.empty();
}

// factor a primitive squarefree integer polynomial (deg >= 1) into irreducible
// primitive integer polynomials with positive leading coefficient
inline std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
    zm_normalize(f);
    if (f.size() <= 2) return {f};
    int n = static_cast<int>(f.size()) - 1;

    static const uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23,  29,  31,  37,  41,
                                       43, 47, 53, 59, 61, 67, 71, 73,  79,  83,  89,  97,
                                       101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    uint64_t best_p = 0;
    std::vector<FpPoly> best_factors;
    int tried = 0;
    for (uint64_t p : kPrimes) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        FpPoly fp = detail::fp_poly_from_z(f, p);
        FpPoly fpd = derivative(fp, [p](int k) { return PrimeFieldElem::from_int(k, p); });
        if (fpd.is_zero()) continue;
        if (gcd_field(fp, fpd).degree() != 0) continue;  // not squarefree mod p
        auto factors = fp_factor_squarefree(fp.scale(fp.lead().inverse()), p);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
        if (++tried >= 4) break;
    }
    if (best_p == 0) throw Error("factor_squarefree_z: no usable prime found");
    if (best_factors.size() == 1) return {f};  // irreducible mod p => irreducible over Z

    // Mignotte-style bound on coefficients of any factor (times lc)
    mpz_class height = zpoly_height(f);
    mpz_class bound = abs(f.back()) * height * (n + 1);
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
    bound *= two_n;
    bound = 2 * bound + 1;

    auto [lifted, modulus] = hensel_lift_all(f, best_factors, best_p, bound);

    // subset recombination
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
    ZPoly rem_f = f;
    size_t subset_size = 1;
    while (2 * subset_size <= alive.size()) {
        bool found = false;
        std::vector<int> comb(subset_size);
        for (size_t i = 0; i < subset_size; ++i) comb[i] = static_cast<int>(i);
        for (;;) {
            // candidate = lc(rem_f) * prod(lifted[alive[comb]]) mod modulus, symmetric
            ZPoly cand{rem_f.back()};
            for (size_t i = 0; i < subset_size; ++i) cand = zm_mul(cand, lifted[alive[comb[i]]], modulus);
            for (auto& c : cand) c = zsym(c, modulus);
            zm_normalize(cand);
            // primitive part
            mpz_class g(0);
            for (const auto& c : cand) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g != 0) {
                if (cand.back() < 0) g = -g;
                for (auto& c : cand) c /= g;
            }
            ZPoly quot;
            if (!cand.empty() && zpoly_divides(cand, rem_f, quot)) {
                result.push_back(cand);
                rem_f = quot;
                zm_normalize(rem_f);
                // remove used modular factors
                std::vector<int> next_alive;
                size_t ci = 0;
                for (size_t i = 0; i < alive.size(); ++i) {
                    if (ci < subset_size && static_cast<int>(i) == comb[ci]) {
                        ++ci;
                        continue;
                    }
                    next_alive.push_back(alive[i]);
                }
                alive = std::move(next_alive);
                found = true;
                break;
            }
            // next combination
            int k = static_cast<int>(subset_size) - 1;
            while (k >= 0 && comb[k] == static_cast<int>(alive.size() - subset_size + k)) --k;
            if (k < 0) break;
            ++comb[k];
            for (size_t j = k + 1; j < subset_size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (static_cast<int>(rem_f.size()) - 1 > 0) {
        result.push_back(rem_f);
    }
    return result;
}

}  // namespace detail

// Yun's squarefree decomposition over Q: returns list of (squarefree monic factor,
// multiplicity), nontrivial factors only
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& fin) {
    if (fin.is_zero()) throw Error("squarefree_decomposition of zero");
    QPoly f = fin.scale(fin.lead().inverse());
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() == 0) return out;
    QPoly fd = qd(f);
    QPoly u = gcd_q(f, fd);
    QPoly v = exact_div(f, u);
    QPoly w = exact_div(fd, u) - qd(v);
    int i = 1;
    while (v.degree() > 0) {
        QPoly g = gcd_q(v, w);
        if (g.degree() > 0) out.emplace_back(g.scale(g.lead().inverse()), i);
        v = exact_div(v, g);
        w = exact_div(w, g) - qd(v);
        ++i;
    }
    return out;
}

// full factorization over Q: monic irreducible factors with multiplicities
// (content dropped)
inline std::vector<std::pair<QPoly, int>> factor_q(const QPoly& fin) {
    if (fin.is_zero()) throw Error("factor_q of zero");
    std::vector<std::pair<QPoly, int>> out;
    if (fin.degree() == 0) return out;
    for (auto& [part, mult] : squarefree_decomposition(fin)) {
        // strip x^k
        QPoly p = part;
        int xpow = 0;
        while (p.degree() > 0 && p[0].is_zero()) {
            std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
            p = QPoly(std::move(c));
            ++xpow;
        }
        if (xpow > 0) out.emplace_back(QPoly(std::vector<Rational>{Rational(0), Rational(1)}), mult);
        if (p.degree() == 0) continue;
        auto [cont, z] = primitive_z(p);
        (void)cont;
        for (auto& zf : detail::factor_squarefree_z(z)) {
            QPoly qf = qpoly_from_z(zf);
            out.emplace_back(qf.scale(qf.lead().inverse()), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = 0; i <= a.first.degree(); ++i) {
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        }
        return a.second < b.second;
    });
    return out;
}

inline bool is_irreducible_q(const QPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    auto fac = factor_q(f);
    return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace pcalg
