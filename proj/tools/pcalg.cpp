// pcalg: exact reconstruction of the universal 3-generated axial
// pseudo-composition algebra, its Miyamoto involutions, and the finite groups
// they generate. One verb per procedure; see README.md for examples.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pcalg/closure.hpp"
#include "pcalg/charpoly.hpp"
#include "pcalg/group_enum.hpp"
#include "pcalg/ideals.hpp"
#include "pcalg/minpoly.hpp"
#include "pcalg/order_solve.hpp"
#include "pcalg/poly_io.hpp"
#include "pcalg/repro.hpp"
#include "pcalg/sweep.hpp"
#include "pcalg/table_io.hpp"

using namespace pcalg;

namespace {

const AlgebraTable<QParamPoly>& universal() {
    static const AlgebraTable<QParamPoly> t = build_universal_table();
    return t;
}

struct Options {
    std::string field = "Q";
    std::optional<std::string> alpha, beta, gamma, psi;
    uint64_t cutoff = 2000000;
    std::string out = "text";
    unsigned jobs = 1;
};

// a parameter value: a rational, a number-field coordinate vector, or a
// prop1:k=N:root=M token that selects a built-in 2-generated candidate
struct ParamValue {
    std::string text;
    bool is_prop1 = false;
    uint64_t prop1_k = 0;
    size_t prop1_root = 0;
};

ParamValue parse_param_token(const std::string& s) {
    ParamValue v;
    v.text = s;
    if (s.rfind("prop1:", 0) == 0) {
        v.is_prop1 = true;
        size_t kpos = s.find("k=");
        size_t rpos = s.find("root=");
        if (kpos == std::string::npos || rpos == std::string::npos) {
            throw ParseError("expected prop1:k=<order>:root=<index>");
        }
        v.prop1_k = std::stoull(s.substr(kpos + 2));
        v.prop1_root = std::stoull(s.substr(rpos + 5));
        if (v.prop1_root == 0) throw ParseError("root indices are 1-based");
    }
    return v;
}

// resolve the domain and the four parameter values together: prop1 tokens can
// upgrade Q to the number field of their minimal polynomial
struct ResolvedPoint {
    DomainDesc domain;
    std::array<Rational, 4> q;
    std::array<PrimeFieldElem, 4> fp;
    std::array<NumberFieldElem, 4> nf;
    NumberFieldPtr field;
};

std::vector<Rational> parse_coords(const std::string& s) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(Rational::parse(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ResolvedPoint resolve_point(const Options& opt, bool need_psi) {
    ResolvedPoint r;
    r.domain = parse_domain(opt.field);
    std::array<std::optional<std::string>, 4> texts{opt.alpha, opt.beta, opt.gamma, opt.psi};
    const char* names[] = {"--alpha", "--beta", "--gamma", "--psi"};
    std::array<ParamValue, 4> vals;
    for (int i = 0; i < 4; ++i) {
        if (!texts[i]) {
            if (i == 3 && !need_psi) {
                vals[i].text = "0";
                continue;
            }
            throw ParseError(std::string(names[i]) + " is required for this command");
        }
        vals[i] = parse_param_token(*texts[i]);
    }
    std::optional<QPoly> prop1_minpoly;
    std::array<std::optional<AlgebraicNumber>, 4> prop1_vals;
    for (int i = 0; i < 4; ++i) {
        if (!vals[i].is_prop1) continue;
        auto sol = solve_order_2gen(vals[i].prop1_k, universal());
        if (vals[i].prop1_root > sol.candidates.size()) {
            throw ParseError("prop1 candidate index out of range (have " +
                             std::to_string(sol.candidates.size()) + ")");
        }
        const auto& cand = sol.candidates[vals[i].prop1_root - 1];
        prop1_vals[i] = cand.value;
        if (cand.value.minpoly.degree() > 1) {
            if (prop1_minpoly && !(*prop1_minpoly == cand.value.minpoly)) {
                throw ParseError("prop1 tokens with different minimal polynomials cannot be mixed");
            }
            prop1_minpoly = cand.value.minpoly;
        }
    }
    if (prop1_minpoly) {
        if (r.domain.kind == DomainKind::Fp) {
            throw ParseError("prop1 tokens name characteristic-0 values");
        }
        r.domain.kind = DomainKind::NF;
        r.domain.nf_poly = *prop1_minpoly;
        r.domain.nf_poly_str = unipoly_str(*prop1_minpoly, "t");
    }
    switch (r.domain.kind) {
        case DomainKind::Q:
            for (int i = 0; i < 4; ++i) {
                if (prop1_vals[i]) {
                    r.q[i] = prop1_vals[i]->rational_value();
                } else {
                    r.q[i] = Rational::parse(vals[i].text);
                }
            }
            break;
        case DomainKind::Fp:
            for (int i = 0; i < 4; ++i) {
                r.fp[i] = embed_rational_fp(Rational::parse(vals[i].text), r.domain.p);
            }
            break;
        case DomainKind::NF: {
            r.field = NumberField::create(r.domain.nf_poly);
            for (int i = 0; i < 4; ++i) {
                if (prop1_vals[i]) {
                    if (prop1_vals[i]->minpoly.degree() == 1) {
                        r.nf[i] = NumberFieldElem::from_rational(r.field,
                                                                 prop1_vals[i]->rational_value());
                    } else {
                        r.nf[i] = NumberFieldElem::generator(r.field);
                    }
                    continue;
                }
                std::vector<Rational> coords = parse_coords(vals[i].text);
                if (coords.size() == 1) {
                    r.nf[i] = NumberFieldElem::from_rational(r.field, coords[0]);
                } else {
                    coords.resize(r.field->degree(), Rational(0));
                    r.nf[i] = NumberFieldElem(r.field, std::move(coords));
                }
            }
            break;
        }
    }
    return r;
}

// tau words: comma-separated tokens, each `axis` or `axis^axis`, axes from
// {a, b, c, bac}; `a,b^c` means tau_a * (tau_c tau_b tau_c)
struct WordToken {
    int axis;
    std::optional<int> conj;
};

int axis_index(const std::string& s) {
    if (s == "a") return 0;
    if (s == "b") return 1;
    if (s == "c") return 2;
    if (s == "bac") return 7;  // the b(ac) basis idempotent
    throw ParseError("unknown axis '" + s + "' (use a, b, c, bac)");
}

std::vector<WordToken> parse_word(const std::string& w) {
    std::vector<WordToken> out;
    size_t pos = 0;
    while (pos <= w.size()) {
        size_t comma = w.find(',', pos);
        std::string tok = w.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) {
            size_t hat = tok.find('^');
            WordToken t{0, std::nullopt};
            if (hat == std::string::npos) {
                t.axis = axis_index(tok);
            } else {
                t.axis = axis_index(tok.substr(0, hat));
                t.conj = axis_index(tok.substr(hat + 1));
            }
            out.push_back(t);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw ParseError("empty word");
    return out;
}

template <class T>
Matrix<T> word_matrix_for(const AlgebraTable<T>& ts, const std::vector<WordToken>& word) {
    std::vector<Matrix<T>> taus(8, Matrix<T>(0, domain_traits<T>::zero(ts.ctx)));
    auto tau_of = [&](int ax) -> const Matrix<T>& {
        if (taus[ax].n() == 0) taus[ax] = miyamoto(ts, ts.basis_element(ax));
        return taus[ax];
    };
    Matrix<T> acc = Matrix<T>::identity(ts.dim, ts.ctx);
    for (const auto& tok : word) {
        Matrix<T> m = tau_of(tok.axis);
        if (tok.conj) {
            const Matrix<T>& g = tau_of(*tok.conj);
            m = g * m * g;
        }
        acc = acc * m;
    }
    return acc;
}

template <class T>
AlgebraTable<T> specialized_table(const ResolvedPoint& pt, bool two_gen);

template <>
AlgebraTable<Rational> specialized_table(const ResolvedPoint& pt, bool two_gen) {
    const auto& base = two_gen ? two_generated_table(universal()) : universal();
    return specialize_table<Rational>(base, pt.q, QCtx{}, false);
}
template <>
AlgebraTable<PrimeFieldElem> specialized_table(const ResolvedPoint& pt, bool two_gen) {
    const auto& base = two_gen ? two_generated_table(universal()) : universal();
    return specialize_table<PrimeFieldElem>(base, pt.fp, pt.domain.p, false);
}
template <>
AlgebraTable<NumberFieldElem> specialized_table(const ResolvedPoint& pt, bool two_gen) {
    const auto& base = two_gen ? two_generated_table(universal()) : universal();
    return specialize_table<NumberFieldElem>(base, pt.nf, pt.field, false);
}

template <class Fn>
int with_table(const ResolvedPoint& pt, bool two_gen, Fn fn) {
    switch (pt.domain.kind) {
        case DomainKind::Q:
            return fn(specialized_table<Rational>(pt, two_gen));
        case DomainKind::Fp:
            return fn(specialized_table<PrimeFieldElem>(pt, two_gen));
        case DomainKind::NF:
            return fn(specialized_table<NumberFieldElem>(pt, two_gen));
    }
    return 2;
}

GroupReport enumerate_for(const AlgebraTable<Rational>&, const std::vector<Matrix<Rational>>& gens,
                          uint64_t cutoff, AnalysisLevel level) {
    return enumerate_q_group(gens, cutoff, level);
}
GroupReport enumerate_for(const AlgebraTable<PrimeFieldElem>&,
                          const std::vector<Matrix<PrimeFieldElem>>& gens, uint64_t cutoff,
                          AnalysisLevel level) {
    return enumerate_fp_group(gens, cutoff, level);
}
GroupReport enumerate_for(const AlgebraTable<NumberFieldElem>&,
                          const std::vector<Matrix<NumberFieldElem>>& gens, uint64_t cutoff,
                          AnalysisLevel level) {
    return enumerate_nf_group(gens, cutoff, level);
}

void print_report(const GroupReport& rep, const std::string& out) {
    if (out == "json") {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << "generators: " << rep.generator_count << "  domain: " << rep.domain << "\n";
    if (rep.completed) {
        std::cout << "order: " << rep.order << "\n";
        if (rep.solvable) std::cout << "solvable: " << (*rep.solvable ? "yes" : "no") << "\n";
        if (rep.perfect) std::cout << "perfect: " << (*rep.perfect ? "yes" : "no") << "\n";
        if (rep.center) std::cout << "center order: " << *rep.center << "\n";
        if (!rep.catalog.empty()) {
            std::cout << "catalog:";
            for (auto& n : rep.catalog) std::cout << " " << n;
            std::cout << "\n";
        }
    } else {
        std::cout << "outcome: exceeded cutoff " << rep.cutoff << "\n";
    }
    std::cout << "layers:";
    for (auto l : rep.layers) std::cout << " " << l;
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pseudo-composition algebra toolkit"};
    app.set_config("--config");

    Options opt;
    app.add_option("--field", opt.field, "scalar domain: Q, Fp:<p>, NF:<poly in t>");
    app.add_option("--alpha", opt.alpha, "value of alpha (rational, coords, or prop1:k=..:root=..)");
    app.add_option("--beta", opt.beta, "value of beta");
    app.add_option("--gamma", opt.gamma, "value of gamma");
    app.add_option("--psi", opt.psi, "value of psi");
    app.add_option("--cutoff", opt.cutoff, "enumeration cutoff (elements)");
    app.add_option("--out", opt.out, "output format: text, json, csv");
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps");

    bool two_gen = false;

    auto* cmd_table = app.add_subcommand("table", "print the universal (or specialized) table");
    auto* cmd_tau = app.add_subcommand("tau", "print a Miyamoto involution matrix");
    std::string axis = "a";
    cmd_tau->add_option("--axis", axis, "axis: a, b, c, or bac");
    cmd_tau->add_flag("--two-gen", two_gen, "use the 3-dimensional subalgebra on (a, b, ab)");

    std::string word = "a,b";
    auto* cmd_order = app.add_subcommand("order", "multiplicative order of a tau word");
    cmd_order->add_option("--word", word, "word, e.g. 'a,b' or 'a,b^c'");
    cmd_order->add_flag("--two-gen", two_gen);

    auto* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a tau word");
    cmd_charpoly->add_option("--word", word);
    cmd_charpoly->add_flag("--two-gen", two_gen);
    bool symbolic = false;
    cmd_charpoly->add_flag("--symbolic", symbolic, "compute over the 4-parameter polynomial ring");

    auto* cmd_minpoly = app.add_subcommand("minpoly", "minimal polynomial of a tau word");
    cmd_minpoly->add_option("--word", word);
    cmd_minpoly->add_flag("--two-gen", two_gen);

    uint64_t solve_k = 3;
    bool three_gen = false;
    std::string abg = "-1/8";
    auto* cmd_solve = app.add_subcommand("solve-order", "parameter values giving a target order");
    cmd_solve->add_option("--k", solve_k, "target order")->required();
    cmd_solve->add_flag("--three-gen", three_gen, "solve for psi in |tau_a tau_b^{tau_c}|");
    cmd_solve->add_option("--abg", abg, "common alpha=beta=gamma for --three-gen");

    std::string gens_spec = "abc";
    bool require_complete = false;
    std::string analyze = "full";
    auto* cmd_group = app.add_subcommand("group", "enumerate the group generated by tau words");
    cmd_group->add_option("--gens", gens_spec, "generators: ab, abc, or abcd (d = b(ac))");
    cmd_group->add_flag("--require-complete", require_complete,
                        "exit with status 3 if the cutoff is exceeded");
    cmd_group->add_option("--analyze", analyze, "analysis level: none, orders, full");

    uint64_t defect_k = 2;
    std::vector<std::string> seed_specs;
    auto* cmd_ideal = app.add_subcommand("ideal", "ideal closure of defect/explicit seeds");
    cmd_ideal->add_option("--defect", defect_k, "seed with tau_ab^k fixed-point defects");
    cmd_ideal->add_option("--seed", seed_specs, "extra seed vector(s), 8 comma-separated values");

    auto* cmd_quotient = app.add_subcommand("quotient", "quotient by the seeded ideal");
    cmd_quotient->add_option("--defect", defect_k);
    cmd_quotient->add_option("--seed", seed_specs);

    auto* cmd_sweep = app.add_subcommand("sweep", "sweep parameter tuples over a prime field");
    cmd_sweep->add_flag("--two-gen", two_gen, "sweep alpha on the 2-generated subalgebra");

    std::string item = "all";
    auto* cmd_repro = app.add_subcommand("repro", "regenerate a published table and compare");
    cmd_repro->add_option("--item", item, "check name or 'all'");
    bool no_extended = false;
    cmd_repro->add_flag("--no-extended", no_extended, "skip enumerations needing the extended budget");

    app.require_subcommand(1);
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_table->parsed()) {
            bool have_params = opt.alpha && opt.beta && opt.gamma && opt.psi;
            if (!have_params) {
                if (opt.out == "json") {
                    std::cout << table_to_json(universal()).dump(2) << "\n";
                } else {
                    const auto& t = universal();
                    for (size_t i = 0; i < t.dim; ++i) {
                        for (size_t j = i; j < t.dim; ++j) {
                            std::cout << t.labels[i] << " * " << t.labels[j] << " =";
                            for (size_t k = 0; k < t.dim; ++k) {
                                if (t.prod[i][j][k].is_zero()) continue;
                                std::cout << "  (" << t.prod[i][j][k].str() << ") " << t.labels[k];
                            }
                            std::cout << "\n";
                        }
                    }
                    std::cout << "gram:\n" << t.gram.dump();
                }
                return 0;
            }
            auto pt = resolve_point(opt, true);
            return with_table(pt, false, [&](const auto& ts) {
                if (opt.out == "json") {
                    std::cout << table_to_json_generic(ts, pt.domain.str()).dump(2) << "\n";
                } else {
                    std::cout << "gram:\n" << ts.gram.dump();
                }
                return 0;
            });
        }

        if (cmd_tau->parsed()) {
            bool have_params = opt.alpha && opt.beta && opt.gamma && opt.psi;
            int ax = axis_index(axis);
            if (!have_params) {
                const auto& base = two_gen ? two_generated_table(universal()) : universal();
                if (two_gen && ax > 1) throw ParseError("--two-gen supports axes a and b");
                auto tau = miyamoto(base, base.basis_element(ax));
                if (opt.out == "json") {
                    std::cout << matrix_to_json(tau).dump(2) << "\n";
                } else {
                    std::cout << tau.dump();
                }
                return 0;
            }
            auto pt = resolve_point(opt, true);
            return with_table(pt, two_gen, [&](const auto& ts) {
                int use_axis = ax;
                if (two_gen && ax > 1) throw ParseError("--two-gen supports axes a and b");
                auto tau = miyamoto(ts, ts.basis_element(use_axis));
                if (opt.out == "json") {
                    std::cout << matrix_to_json(tau).dump(2) << "\n";
                } else {
                    std::cout << tau.dump();
                }
                return 0;
            });
        }

        if (cmd_order->parsed()) {
            auto pt = resolve_point(opt, true);
            auto tokens = parse_word(word);
            return with_table(pt, two_gen, [&](const auto& ts) {
                auto m = word_matrix_for(ts, tokens);
                auto r = element_order(m, opt.cutoff < 100000 ? opt.cutoff : 100000);
                if (r.exceeded) {
                    std::cout << "order exceeds cutoff\n";
                    return 3;
                }
                std::cout << r.order << "\n";
                return 0;
            });
        }

        if (cmd_charpoly->parsed()) {
            auto tokens = parse_word(word);
            if (symbolic || !(opt.alpha && opt.beta && opt.gamma && opt.psi)) {
                const auto& base = two_gen ? two_generated_table(universal()) : universal();
                auto m = word_matrix_for(base, tokens);
                auto cp = charpoly_faddeev(m);
                std::cout << unipoly_str_generic(cp) << "\n";
                return 0;
            }
            auto pt = resolve_point(opt, true);
            return with_table(pt, two_gen, [&](const auto& ts) {
                auto m = word_matrix_for(ts, tokens);
                auto cp = char_poly(m);
                std::cout << unipoly_str_generic(cp) << "\n";
                return 0;
            });
        }

        if (cmd_minpoly->parsed()) {
            auto tokens = parse_word(word);
            bool have_params = opt.alpha && opt.beta && opt.gamma && opt.psi;
            if (!have_params) {
                std::array<std::optional<Rational>, 4> fixed{};
                std::array<std::optional<std::string>, 4> texts{opt.alpha, opt.beta, opt.gamma,
                                                                opt.psi};
                int free_var = -1;
                for (int i = 0; i < 4; ++i) {
                    if (texts[i]) {
                        fixed[i] = Rational::parse(*texts[i]);
                    } else {
                        if (free_var >= 0) {
                            throw ParseError("minpoly needs all parameters or all but one");
                        }
                        free_var = i;
                    }
                }
                const auto& base = two_gen ? two_generated_table(universal()) : universal();
                auto ts = partial_specialize(base, fixed);
                auto m = word_matrix_for(ts, tokens);
                auto mp = min_poly_param(m, free_var);
                std::cout << unipoly_str_generic(mp) << "\n";
                return 0;
            }
            auto pt = resolve_point(opt, true);
            return with_table(pt, two_gen, [&](const auto& ts) {
                auto m = word_matrix_for(ts, tokens);
                auto mp = min_poly(m);
                std::cout << unipoly_str_generic(mp) << "\n";
                return 0;
            });
        }

        if (cmd_solve->parsed()) {
            OrderSolution sol = three_gen
                                    ? solve_order_3gen_conjugate(solve_k, universal(),
                                                                 Rational::parse(abg))
                                    : solve_order_2gen(solve_k, universal());
            if (opt.out == "json") {
                json j;
                j["target"] = sol.target;
                j["parameter"] = kParamNames[sol.parameter];
                j["entry_gcd"] = unipoly_str(sol.entry_gcd);
                json cands = json::array();
                for (const auto& c : sol.candidates) {
                    json e;
                    e["minpoly"] = unipoly_str(c.value.minpoly);
                    e["interval"] = json::array(
                        {c.value.interval.lower.str(), c.value.interval.upper.str()});
                    e["verified_order"] = c.verified_order;
                    e["exact"] = c.exact;
                    cands.push_back(e);
                }
                j["candidates"] = cands;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "order,minpoly,interval_low,interval_high,verified_order\n";
                for (const auto& c : sol.candidates) {
                    std::cout << sol.target << ",\"" << unipoly_str(c.value.minpoly) << "\","
                              << c.value.interval.lower.str() << "," << c.value.interval.upper.str()
                              << "," << c.verified_order << "\n";
                }
            }
            return 0;
        }

        if (cmd_group->parsed()) {
            auto pt = resolve_point(opt, true);
            AnalysisLevel level = analyze == "none"
                                      ? AnalysisLevel::None
                                      : (analyze == "orders" ? AnalysisLevel::Orders
                                                             : AnalysisLevel::Full);
            return with_table(pt, false, [&](const auto& ts) {
                using T = std::decay_t<decltype(ts.gram.at(0, 0))>;
                std::vector<Matrix<T>> gens;
                gens.push_back(miyamoto(ts, ts.basis_element(0)));
                gens.push_back(miyamoto(ts, ts.basis_element(1)));
                if (gens_spec.find('c') != std::string::npos) {
                    gens.push_back(miyamoto(ts, ts.basis_element(2)));
                }
                if (gens_spec.find('d') != std::string::npos) {
                    gens.push_back(miyamoto(ts, ts.basis_element(7)));
                }
                auto rep = enumerate_for(ts, gens, opt.cutoff, level);
                print_report(rep, opt.out);
                if (!rep.completed && require_complete) return 3;
                return 0;
            });
        }

        if (cmd_ideal->parsed() || cmd_quotient->parsed()) {
            auto pt = resolve_point(opt, true);
            bool want_quotient = cmd_quotient->parsed();
            return with_table(pt, false, [&](const auto& ts) {
                using T = std::decay_t<decltype(ts.gram.at(0, 0))>;
                auto tau = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
                std::vector<std::vector<T>> seeds;
                if (defect_k > 0) seeds = fixed_point_defect(ts, tau, defect_k);
                for (const auto& spec : seed_specs) {
                    auto coords = parse_coords(spec);
                    coords.resize(ts.dim, Rational(0));
                    std::vector<T> v;
                    for (const auto& c : coords) {
                        v.push_back(domain_traits<T>::from_rational(c, ts.ctx));
                    }
                    seeds.push_back(std::move(v));
                }
                auto I = ideal_closure(ts, seeds);
                std::cout << "ideal dimension: " << I.dim() << "\n";
                for (const auto& v : I.vectors()) {
                    std::cout << " ";
                    for (const auto& x : v) std::cout << " " << x.str();
                    std::cout << "\n";
                }
                if (!want_quotient) return 0;
                auto q = quotient(ts, I);
                std::cout << "quotient dimension: " << q.table.dim << "\n";
                if (opt.out == "json") {
                    std::cout << table_to_json_generic(q.table, pt.domain.str()).dump(2) << "\n";
                }
                auto r = element_order(q.induced(tau), 10000);
                std::cout << "induced |tau_a tau_b|: " << (r.exceeded ? 0 : r.order) << "\n";
                return 0;
            });
        }

        if (cmd_sweep->parsed()) {
            auto desc = parse_domain(opt.field);
            if (desc.kind != DomainKind::Fp) throw ParseError("sweep needs --field Fp:<p>");
            SweepOptions so;
            so.p = desc.p;
            so.two_gen = two_gen;
            so.cutoff = opt.cutoff;
            so.jobs = opt.jobs;
            auto parse_filter = [&](const std::optional<std::string>& s) -> std::optional<uint64_t> {
                if (!s) return std::nullopt;
                return embed_rational_fp(Rational::parse(*s), desc.p).value();
            };
            so.alpha = parse_filter(opt.alpha);
            so.beta = parse_filter(opt.beta);
            so.gamma = parse_filter(opt.gamma);
            so.psi = parse_filter(opt.psi);
            auto records = sweep(universal(), so);
            if (opt.out == "json") {
                json arr = json::array();
                for (const auto& r : records) {
                    json j;
                    j["p"] = r.p;
                    j["alpha"] = r.alpha;
                    if (r.beta) j["beta"] = *r.beta;
                    if (r.gamma) j["gamma"] = *r.gamma;
                    if (r.psi) j["psi"] = *r.psi;
                    j["ord_ab"] = r.ord_ab;
                    if (r.beta) {
                        j["ord_bc"] = r.ord_bc;
                        j["ord_ac"] = r.ord_ac;
                        j["ord_abc_conj"] = r.ord_abc;
                    }
                    j["outcome"] = r.completed ? "order" : "exceeded";
                    if (r.completed) j["order"] = r.group_order;
                    if (r.solvable) j["solvable"] = *r.solvable;
                    if (r.perfect) j["perfect"] = *r.perfect;
                    j["gram_rank"] = r.gram_rank;
                    arr.push_back(j);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << kSweepCsvHeader << "\n";
                for (const auto& r : records) std::cout << sweep_record_csv(r) << "\n";
            }
            return 0;
        }

        if (cmd_repro->parsed()) {
            ReproOptions ro = repro_options_from_env();
            if (no_extended) ro.extended = false;
            std::vector<std::string> items;
            if (item == "all") {
                items = repro_items();
            } else {
                items.push_back(item);
            }
            bool all_pass = true;
            bool limited = false;
            for (const auto& it : items) {
                auto r = run_repro(it, ro);
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.item << "\n";
                for (const auto& l : r.lines) std::cout << l << "\n";
                all_pass = all_pass && r.pass;
                limited = limited || r.resource_limited;
            }
            if (all_pass) return 0;
            return limited ? 3 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownItem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
