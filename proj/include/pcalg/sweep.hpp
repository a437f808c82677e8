#pragma once

// Finite-field parameter sweeps: iterate (filtered) tuples (alpha, beta,
// gamma, psi) over F_p in lexicographic order, record involution-product
// orders, group outcome and Gram rank. Points are independent work items for a
// small worker pool; results merge in input order, so output is deterministic
// for any job count.

#include <atomic>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pcalg/algebra.hpp"
#include "pcalg/closure.hpp"
#include "pcalg/group_enum.hpp"
#include "pcalg/ideals.hpp"

namespace pcalg {

struct SweepOptions {
    uint64_t p = 5;
    bool two_gen = false;  // sweep alpha only, on the 3-dimensional subalgebra
    std::optional<uint64_t> alpha, beta, gamma, psi;  // filters
    uint64_t cutoff = 200000;
    uint64_t order_cutoff = 10000;
    unsigned jobs = 1;
    bool analyze = true;  // derived series + center for completed groups
};

struct SweepRecord {
    uint64_t p = 0;
    uint64_t alpha = 0;
    std::optional<uint64_t> beta, gamma, psi;
    uint64_t ord_ab = 0, ord_bc = 0, ord_ac = 0, ord_abc = 0;
    bool completed = false;
    uint64_t group_order = 0;
    std::optional<bool> solvable, perfect;
    size_t gram_rank = 0;
};

inline const char* kSweepCsvHeader =
    "p,alpha,beta,gamma,psi,ord_ab,ord_bc,ord_ac,ord_abc_conj,group_outcome,group_order,"
    "solvable,perfect,gram_rank";

inline std::string sweep_record_csv(const SweepRecord& r) {
    std::ostringstream os;
    auto opt = [](const std::optional<uint64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    auto optb = [](const std::optional<bool>& v) {
        return v ? std::string(*v ? "true" : "false") : std::string();
    };
    os << r.p << ',' << r.alpha << ',' << opt(r.beta) << ',' << opt(r.gamma) << ',' << opt(r.psi)
       << ',' << r.ord_ab << ',';
    if (r.beta) {
        os << r.ord_bc << ',' << r.ord_ac << ',' << r.ord_abc << ',';
    } else {
        os << ",,,";
    }
    os << (r.completed ? "order" : "exceeded") << ','
       << (r.completed ? std::to_string(r.group_order) : std::string()) << ',' << optb(r.solvable)
       << ',' << optb(r.perfect) << ',' << r.gram_rank;
    return os.str();
}

namespace sweep_detail {

inline SweepRecord sweep_point(const AlgebraTable<QParamPoly>& universal, const SweepOptions& opt,
                               uint64_t a, uint64_t b, uint64_t g, uint64_t s) {
    SweepRecord rec;
    rec.p = opt.p;
    rec.alpha = a;
    auto fp = [&](uint64_t v) { return PrimeFieldElem(v, opt.p); };
    if (opt.two_gen) {
        auto t2 = two_generated_table(universal);
        auto ts = specialize_table<PrimeFieldElem>(t2, {fp(a), fp(0), fp(0), fp(0)}, opt.p, false);
        auto tau_a = miyamoto(ts, ts.basis_element(0));
        auto tau_b = miyamoto(ts, ts.basis_element(1));
        auto r = element_order(tau_a * tau_b, opt.order_cutoff);
        rec.ord_ab = r.exceeded ? 0 : r.order;
        std::vector<Matrix<PrimeFieldElem>> gens{tau_a, tau_b};
        auto rep = enumerate_fp_group(gens, opt.cutoff,
                                      opt.analyze ? AnalysisLevel::Full : AnalysisLevel::None);
        rec.completed = rep.completed;
        rec.group_order = rep.order;
        rec.solvable = rep.solvable;
        rec.perfect = rep.perfect;
        rec.gram_rank = gram_rank(ts);
        return rec;
    }
    rec.beta = b;
    rec.gamma = g;
    rec.psi = s;
    auto ts = specialize_table<PrimeFieldElem>(universal, {fp(a), fp(b), fp(g), fp(s)}, opt.p,
                                               false);
    auto tau_a = miyamoto(ts, ts.basis_element(0));
    auto tau_b = miyamoto(ts, ts.basis_element(1));
    auto tau_c = miyamoto(ts, ts.basis_element(2));
    auto ord = [&](const Matrix<PrimeFieldElem>& m) -> uint64_t {
        auto r = element_order(m, opt.order_cutoff);
        return r.exceeded ? 0 : r.order;
    };
    rec.ord_ab = ord(tau_a * tau_b);
    rec.ord_bc = ord(tau_b * tau_c);
    rec.ord_ac = ord(tau_a * tau_c);
    rec.ord_abc = ord(tau_a * (tau_c * tau_b * tau_c));
    std::vector<Matrix<PrimeFieldElem>> gens{tau_a, tau_b, tau_c};
    auto rep = enumerate_fp_group(gens, opt.cutoff,
                                  opt.analyze ? AnalysisLevel::Full : AnalysisLevel::None);
    rec.completed = rep.completed;
    rec.group_order = rep.order;
    rec.solvable = rep.solvable;
    rec.perfect = rep.perfect;
    rec.gram_rank = gram_rank(ts);
    return rec;
}

}  // namespace sweep_detail

inline std::vector<SweepRecord> sweep(const AlgebraTable<QParamPoly>& universal,
                                      const SweepOptions& opt) {
    if (opt.p == 2 || opt.p == 3) {
        throw UnsupportedCharacteristic("sweep needs p >= 5");
    }
    struct Point {
        uint64_t a, b, g, s;
    };
    std::vector<Point> points;
    auto range = [&](const std::optional<uint64_t>& f) {
        std::vector<uint64_t> vals;
        if (f) {
            vals.push_back(*f % opt.p);
        } else {
            for (uint64_t v = 0; v < opt.p; ++v) vals.push_back(v);
        }
        return vals;
    };
    if (opt.two_gen) {
        for (uint64_t a : range(opt.alpha)) points.push_back({a, 0, 0, 0});
    } else {
        for (uint64_t a : range(opt.alpha)) {
            for (uint64_t b : range(opt.beta)) {
                for (uint64_t g : range(opt.gamma)) {
                    for (uint64_t s : range(opt.psi)) points.push_back({a, b, g, s});
                }
            }
        }
    }
    std::vector<SweepRecord> out(points.size());
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < points.size(); ++i) {
            out[i] = sweep_detail::sweep_point(universal, opt, points[i].a, points[i].b,
                                               points[i].g, points[i].s);
        }
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= points.size()) return;
                out[i] = sweep_detail::sweep_point(universal, opt, points[i].a, points[i].b,
                                                   points[i].g, points[i].s);
            }
        });
    }
    for (auto& w : workers) w.join();
    return out;
}

}  // namespace pcalg
