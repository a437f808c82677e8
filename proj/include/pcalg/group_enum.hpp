#pragma once

// Breadth-first closure enumeration of matrix groups with exact canonical
// hashing, plus derived-series/center analysis and a small catalog of the
// groups the repro checks identify by order and flags.
//
// Two element representations:
//  - packed residue matrices over F_p (p < 256), one byte per entry;
//  - common-denominator integer matrices over Q or Q[t]/(monic integer f),
//    which keeps characteristic-0 probes exact without per-operation gcds.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcalg/errors.hpp"
#include "pcalg/key_pool.hpp"
#include "pcalg/matrix.hpp"
#include "pcalg/number_field.hpp"
#include "pcalg/prime_field.hpp"
#include "pcalg/rational.hpp"

namespace pcalg {

// ---------- packed F_p matrices ----------

struct PackedFpOps {
    using Elem = std::vector<uint8_t>;  // n*n residues

    size_t n = 0;
    uint32_t p = 0;

    Elem identity() const {
        Elem e(n * n, 0);
        for (size_t i = 0; i < n; ++i) e[i * n + i] = 1;
        return e;
    }

    Elem mult(const Elem& a, const Elem& b) const {
        Elem c(n * n);
        for (size_t i = 0; i < n; ++i) {
            const uint8_t* arow = a.data() + i * n;
            for (size_t j = 0; j < n; ++j) {
                uint32_t acc = 0;
                for (size_t k = 0; k < n; ++k) {
                    acc += static_cast<uint32_t>(arow[k]) * b[k * n + j];
                }
                c[i * n + j] = static_cast<uint8_t>(acc % p);
            }
        }
        return c;
    }

    Elem inverse(const Elem& a) const {
        Matrix<PrimeFieldElem> m = unpack(a);
        Matrix<PrimeFieldElem> mi = pcalg::inverse(m);
        return pack(mi);
    }

    std::string serialize(const Elem& e) const {
        return std::string(reinterpret_cast<const char*>(e.data()), e.size());
    }
    Elem deserialize(std::string_view s) const {
        return Elem(reinterpret_cast<const uint8_t*>(s.data()),
                    reinterpret_cast<const uint8_t*>(s.data()) + s.size());
    }

    Elem pack(const Matrix<PrimeFieldElem>& m) const {
        Elem e(n * n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) e[i * n + j] = static_cast<uint8_t>(m.at(i, j).value());
        }
        return e;
    }
    Matrix<PrimeFieldElem> unpack(const Elem& e) const {
        Matrix<PrimeFieldElem> m(n, PrimeFieldElem(0, p));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) m.at(i, j) = PrimeFieldElem(e[i * n + j], p);
        }
        return m;
    }
};

// ---------- scaled exact matrices over Q or Q[t]/(f), f monic integral ----------

struct ScaledExactOps {
    struct Elem {
        std::vector<mpz_class> num;  // n*n*deg coordinates
        mpz_class den;
    };

    size_t n = 0;
    int deg = 1;                      // 1 for Q
    std::vector<mpz_class> minpoly;   // monic, size deg+1; for deg 1 the value is unused
    NumberFieldPtr field;             // set when deg > 1

    static ScaledExactOps for_q(size_t n) {
        ScaledExactOps ops;
        ops.n = n;
        ops.deg = 1;
        return ops;
    }

    static ScaledExactOps for_field(size_t n, const NumberFieldPtr& K) {
        ScaledExactOps ops;
        ops.n = n;
        ops.deg = K->degree();
        ops.field = K;
        ops.minpoly.resize(ops.deg + 1);
        for (int i = 0; i <= ops.deg; ++i) {
            Rational c = K->minpoly().coeff(i, Rational(0));
            if (!c.is_integer()) {
                throw Error("scaled enumeration needs a monic integral defining polynomial");
            }
            ops.minpoly[i] = c.num();
        }
        // t^(deg+k) for k = 0..deg-2
        std::vector<mpz_class> tn(ops.deg);
        for (int i = 0; i < ops.deg; ++i) tn[i] = -ops.minpoly[i];
        std::vector<std::vector<mpz_class>> reds;
        reds.push_back(tn);
        for (int k = 1; k <= ops.deg - 2; ++k) {
            const auto& prev = reds.back();
            std::vector<mpz_class> cur(ops.deg, mpz_class(0));
            for (int i = 0; i < ops.deg - 1; ++i) cur[i + 1] = prev[i];
            if (prev[ops.deg - 1] != 0) {
                for (int i = 0; i < ops.deg; ++i) cur[i] += prev[ops.deg - 1] * tn[i];
            }
            reds.push_back(std::move(cur));
        }
        ops.int_reductions = std::move(reds);
        return ops;
    }

    std::vector<std::vector<mpz_class>> int_reductions;

    Elem identity() const {
        Elem e;
        e.num.assign(n * n * deg, mpz_class(0));
        e.den = 1;
        for (size_t i = 0; i < n; ++i) e.num[(i * n + i) * deg] = 1;
        return e;
    }

    Elem mult(const Elem& a, const Elem& b) const {
        Elem c;
        c.num.assign(n * n * deg, mpz_class(0));
        c.den = a.den * b.den;
        std::vector<mpz_class> buf(2 * deg - 1);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                for (auto& v : buf) v = 0;
                for (size_t k = 0; k < n; ++k) {
                    const mpz_class* x = &a.num[(i * n + k) * deg];
                    const mpz_class* y = &b.num[(k * n + j) * deg];
                    for (int u = 0; u < deg; ++u) {
                        if (x[u] == 0) continue;
                        for (int v = 0; v < deg; ++v) {
                            if (y[v] == 0) continue;
                            buf[u + v] += x[u] * y[v];
                        }
                    }
                }
                mpz_class* out = &c.num[(i * n + j) * deg];
                for (int u = 0; u < deg; ++u) out[u] = buf[u];
                for (int k2 = 2 * deg - 2; k2 >= deg; --k2) {
                    if (buf[k2] == 0) continue;
                    const auto& red = int_reductions[k2 - deg];
                    for (int u = 0; u < deg; ++u) out[u] += buf[k2] * red[u];
                }
            }
        }
        normalize(c);
        return c;
    }

    void normalize(Elem& e) const {
        mpz_class g = e.den;
        for (const auto& v : e.num) {
            if (g == 1) break;
            if (v == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        if (g != 1) {
            e.den /= g;
            for (auto& v : e.num) v /= g;
        }
    }

    Elem inverse(const Elem& a) const {
        if (deg == 1) {
            Matrix<Rational> m = to_q(a);
            return from_q(pcalg::inverse(m));
        }
        Matrix<NumberFieldElem> m = to_nf(a);
        return from_nf(pcalg::inverse(m));
    }

    std::string serialize(const Elem& e) const {
        std::string out;
        append_mpz(out, e.den);
        for (const auto& v : e.num) append_mpz(out, v);
        return out;
    }

    Elem deserialize(std::string_view s) const {
        Elem e;
        size_t pos = 0;
        e.den = read_mpz(s, pos);
        e.num.resize(n * n * deg);
        for (auto& v : e.num) v = read_mpz(s, pos);
        if (pos != s.size()) throw Error("scaled element deserialize: trailing bytes");
        return e;
    }

    // conversions
    Matrix<Rational> to_q(const Elem& e) const {
        Matrix<Rational> m(n, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                m.at(i, j) = Rational(mpq_class(e.num[(i * n + j) * deg], e.den));
            }
        }
        return m;
    }
    Elem from_q(const Matrix<Rational>& m) const {
        mpz_class den(1);
        for (size_t i = 0; i < n * n; ++i) {
            mpz_class d = m.entries()[i].den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = den / g * d;
        }
        Elem e;
        e.den = den;
        e.num.assign(n * n, mpz_class(0));
        for (size_t i = 0; i < n * n; ++i) {
            const Rational& q = m.entries()[i];
            e.num[i] = q.num() * (den / q.den());
        }
        normalize(e);
        return e;
    }
    Matrix<NumberFieldElem> to_nf(const Elem& e) const {
        Matrix<NumberFieldElem> m(n, NumberFieldElem::from_rational(field, Rational(0)));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                std::vector<Rational> coords(deg);
                for (int u = 0; u < deg; ++u) {
                    coords[u] = Rational(mpq_class(e.num[(i * n + j) * deg + u], e.den));
                }
                m.at(i, j) = NumberFieldElem(field, std::move(coords));
            }
        }
        return m;
    }
    Elem from_nf(const Matrix<NumberFieldElem>& m) const {
        mpz_class den(1);
        for (const auto& x : m.entries()) {
            for (const auto& c : x.coords()) {
                mpz_class d = c.den();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
                den = den / g * d;
            }
        }
        Elem e;
        e.den = den;
        e.num.assign(n * n * deg, mpz_class(0));
        for (size_t i = 0; i < n * n; ++i) {
            const auto& coords = m.entries()[i].coords();
            for (int u = 0; u < deg; ++u) {
                e.num[i * deg + u] = coords[u].num() * (den / coords[u].den());
            }
        }
        normalize(e);
        return e;
    }

private:
    static void append_mpz(std::string& out, const mpz_class& v) {
        int sign = sgn(v);
        out.push_back(static_cast<char>(sign + 1));
        if (sign == 0) return;
        size_t count = 0;
        std::vector<uint8_t> buf((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
        mpz_export(buf.data(), &count, -1, 1, 0, 0, v.get_mpz_t());
        uint32_t len = static_cast<uint32_t>(count);
        out.append(reinterpret_cast<const char*>(&len), 4);
        out.append(reinterpret_cast<const char*>(buf.data()), count);
    }

    static mpz_class read_mpz(std::string_view s, size_t& pos) {
        if (pos >= s.size()) throw Error("scaled element deserialize: truncated");
        int sign = static_cast<int>(static_cast<unsigned char>(s[pos++])) - 1;
        if (sign == 0) return mpz_class(0);
        uint32_t len;
        std::memcpy(&len, s.data() + pos, 4);
        pos += 4;
        mpz_class v;
        mpz_import(v.get_mpz_t(), len, -1, 1, 0, 0, s.data() + pos);
        pos += len;
        if (sign < 0) v = -v;
        return v;
    }
};

// ---------- BFS closure ----------

template <class Ops>
struct EnumeratedGroup {
    Ops ops;
    KeyPool pool;  // canonical keys of every discovered element, identity first
    std::vector<typename Ops::Elem> gens;
    std::vector<uint64_t> layers;
    bool completed = false;
    uint64_t cutoff = 0;

    uint64_t order() const { return pool.size(); }
    typename Ops::Elem element(size_t i) const { return ops.deserialize(pool.get(i)); }
    bool contains(const typename Ops::Elem& e) const { return pool.contains(ops.serialize(e)); }
};

template <class Ops>
EnumeratedGroup<Ops> bfs_closure(const Ops& ops, const std::vector<typename Ops::Elem>& gens,
                                 uint64_t cutoff) {
    if (cutoff < 1) throw Error("cutoff must be >= 1");
    EnumeratedGroup<Ops> g;
    g.ops = ops;
    g.gens = gens;
    g.cutoff = cutoff;
    auto id = ops.identity();
    g.pool.insert(ops.serialize(id));
    std::vector<typename Ops::Elem> frontier{id};
    g.layers.push_back(1);
    while (!frontier.empty()) {
        std::vector<typename Ops::Elem> next;
        for (const auto& e : frontier) {
            for (const auto& gen : gens) {
                auto h = ops.mult(e, gen);
                auto [idx, fresh] = g.pool.insert(ops.serialize(h));
                (void)idx;
                if (fresh) {
                    next.push_back(std::move(h));
                    if (g.pool.size() > cutoff) {
                        g.layers.push_back(next.size());
                        g.completed = false;
                        return g;
                    }
                }
            }
        }
        if (!next.empty()) g.layers.push_back(next.size());
        frontier = std::move(next);
    }
    g.completed = true;
    return g;
}

// ---------- analysis of completed closures ----------

template <class Ops>
uint64_t element_order_in_group(const Ops& ops, const typename Ops::Elem& e, uint64_t bound) {
    auto id = ops.identity();
    auto idk = ops.serialize(id);
    auto acc = e;
    for (uint64_t k = 1; k <= bound; ++k) {
        if (ops.serialize(acc) == idk) return k;
        acc = ops.mult(acc, e);
    }
    throw Error("element order exceeds group order bound");
}

// generators of the derived subgroup: commutators of the generating set,
// conjugation-closed; the subgroup itself is their BFS closure
template <class Ops>
std::vector<typename Ops::Elem> derived_generators(const Ops& ops,
                                                   const std::vector<typename Ops::Elem>& gens,
                                                   uint64_t cutoff, uint64_t* order_out) {
    using Elem = typename Ops::Elem;
    std::vector<Elem> conjugators;
    for (const auto& g : gens) {
        conjugators.push_back(g);
        conjugators.push_back(ops.inverse(g));
    }
    std::vector<Elem> T;
    auto idk = ops.serialize(ops.identity());
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            Elem c = ops.mult(ops.mult(ops.inverse(gens[i]), ops.inverse(gens[j])),
                              ops.mult(gens[i], gens[j]));
            if (ops.serialize(c) != idk) T.push_back(std::move(c));
        }
    }
    for (;;) {
        if (T.empty()) {
            if (order_out) *order_out = 1;
            return T;
        }
        auto sub = bfs_closure(ops, T, cutoff);
        if (!sub.completed) throw NotEnumerated();
        std::vector<Elem> missing;
        for (size_t i = 0; i < T.size() && missing.empty(); ++i) {
            for (const auto& g : conjugators) {
                Elem c = ops.mult(ops.mult(ops.inverse(g), T[i]), g);
                if (!sub.contains(c)) {
                    missing.push_back(std::move(c));
                    break;
                }
            }
        }
        if (missing.empty()) {
            if (order_out) *order_out = sub.order();
            return T;
        }
        for (auto& m : missing) T.push_back(std::move(m));
    }
}

struct DerivedAnalysis {
    bool perfect = false;
    bool solvable = false;
    int derived_length = -1;  // -1 when the series stabilizes above the identity
};

template <class Ops>
DerivedAnalysis derived_analysis(const Ops& ops, const std::vector<typename Ops::Elem>& gens,
                                 uint64_t group_order, uint64_t cutoff) {
    DerivedAnalysis res;
    std::vector<typename Ops::Elem> level_gens = gens;
    uint64_t level_order = group_order;
    for (int depth = 1; depth <= 64; ++depth) {
        uint64_t next_order = 0;
        auto next_gens = derived_generators(ops, level_gens, cutoff, &next_order);
        if (depth == 1) res.perfect = (next_order == group_order);
        if (next_order == 1) {
            res.solvable = true;
            res.derived_length = depth;
            return res;
        }
        if (next_order == level_order) {
            res.solvable = false;
            res.derived_length = -1;
            return res;
        }
        level_gens = std::move(next_gens);
        level_order = next_order;
    }
    throw Error("derived series did not stabilize");
}

template <class Ops>
uint64_t center_order(const EnumeratedGroup<Ops>& g) {
    if (!g.completed) throw NotEnumerated();
    uint64_t count = 0;
    for (size_t i = 0; i < g.pool.size(); ++i) {
        auto e = g.element(i);
        bool central = true;
        for (const auto& gen : g.gens) {
            if (!(g.ops.serialize(g.ops.mult(e, gen)) == g.ops.serialize(g.ops.mult(gen, e)))) {
                central = false;
                break;
            }
        }
        if (central) ++count;
    }
    return count;
}

// ---------- catalog ----------

struct CatalogEntry {
    const char* name;
    uint64_t order;
    std::optional<bool> solvable;
    std::optional<bool> perfect;
};

inline const std::vector<CatalogEntry>& group_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"PSL(2,7)", 168, false, true},
        {"A_6", 360, false, true},
        {"A_7", 2520, false, true},
        {"PSU(3,5)", 126000, false, true},
        {"5^2:(5^2:(SL(2,5):2))", 150000, false, false},
        {"5^5:A_5", 187500, false, std::nullopt},
        {"PSL(3,5)", 372000, false, true},
        {"5^5:S_5", 375000, false, false},
        {"PSL(3,7)", 1876896, false, true},
        {"PSU(3,7)", 5663616, false, true},
        {"PSU(3,11)", 70915680, false, true},
        {"PSL(3,11)", 212427600, false, true},
        {"PSL(3,13)", 270178272, false, true},
        {"PSU(3,13)", 811273008, false, true},
    };
    return entries;
}

inline std::vector<std::string> catalog_matches(uint64_t order) {
    std::vector<std::string> names;
    for (const auto& e : group_catalog()) {
        if (e.order == order) names.push_back(e.name);
    }
    return names;
}

// ---------- report facade ----------

struct GroupReport {
    size_t generator_count = 0;
    std::string domain;
    bool completed = false;
    uint64_t order = 0;         // valid when completed
    uint64_t cutoff = 0;
    std::vector<uint64_t> layers;
    std::optional<bool> solvable;
    std::optional<bool> perfect;
    std::optional<uint64_t> center;
    std::vector<std::pair<uint64_t, uint64_t>> order_histogram;  // element order -> count
    std::vector<std::string> catalog;
};

enum class AnalysisLevel { None, Orders, Full };

template <class Ops>
GroupReport make_report(const EnumeratedGroup<Ops>& g, const std::string& domain,
                        AnalysisLevel level) {
    GroupReport r;
    r.generator_count = g.gens.size();
    r.domain = domain;
    r.completed = g.completed;
    r.cutoff = g.cutoff;
    r.layers.assign(g.layers.begin(), g.layers.end());
    if (!g.completed) return r;
    r.order = g.order();
    r.catalog = catalog_matches(r.order);
    if (level == AnalysisLevel::None) return r;
    // element-order histogram over a deterministic sample
    size_t sample = std::min<size_t>(g.pool.size(), 200);
    size_t stride = std::max<size_t>(1, g.pool.size() / sample);
    std::vector<std::pair<uint64_t, uint64_t>> hist;
    for (size_t i = 0; i < g.pool.size(); i += stride) {
        uint64_t o = element_order_in_group(g.ops, g.element(i), g.order());
        bool found = false;
        for (auto& [ord, cnt] : hist) {
            if (ord == o) {
                ++cnt;
                found = true;
            }
        }
        if (!found) hist.emplace_back(o, 1);
    }
    std::sort(hist.begin(), hist.end());
    r.order_histogram = std::move(hist);
    if (level == AnalysisLevel::Full) {
        auto da = derived_analysis(g.ops, g.gens, g.order(), g.cutoff);
        r.solvable = da.solvable;
        r.perfect = da.perfect;
        r.center = center_order(g);
    }
    return r;
}

// convenience entry points from exact matrices
inline GroupReport enumerate_fp_group(const std::vector<Matrix<PrimeFieldElem>>& gens,
                                      uint64_t cutoff, AnalysisLevel level) {
    if (gens.empty()) throw Error("need at least one generator");
    uint64_t p = gens[0].ctx();
    if (p >= 256) throw Error("packed enumeration supports p < 256");
    PackedFpOps ops{gens[0].n(), static_cast<uint32_t>(p)};
    std::vector<PackedFpOps::Elem> packed;
    for (const auto& m : gens) {
        (void)pcalg::inverse(m);  // Singular generators are rejected up front
        packed.push_back(ops.pack(m));
    }
    auto g = bfs_closure(ops, packed, cutoff);
    return make_report(g, "Fp:" + std::to_string(p), level);
}

inline GroupReport enumerate_q_group(const std::vector<Matrix<Rational>>& gens, uint64_t cutoff,
                                     AnalysisLevel level) {
    if (gens.empty()) throw Error("need at least one generator");
    ScaledExactOps ops = ScaledExactOps::for_q(gens[0].n());
    std::vector<ScaledExactOps::Elem> scaled;
    for (const auto& m : gens) {
        (void)pcalg::inverse(m);
        scaled.push_back(ops.from_q(m));
    }
    auto g = bfs_closure(ops, scaled, cutoff);
    return make_report(g, "Q", level);
}

inline GroupReport enumerate_nf_group(const std::vector<Matrix<NumberFieldElem>>& gens,
                                      uint64_t cutoff, AnalysisLevel level) {
    if (gens.empty()) throw Error("need at least one generator");
    NumberFieldPtr K = gens[0].ctx();
    ScaledExactOps ops = ScaledExactOps::for_field(gens[0].n(), K);
    std::vector<ScaledExactOps::Elem> scaled;
    for (const auto& m : gens) {
        (void)pcalg::inverse(m);
        scaled.push_back(ops.from_nf(m));
    }
    auto g = bfs_closure(ops, scaled, cutoff);
    return make_report(g, "NF", level);
}

}  // namespace pcalg
