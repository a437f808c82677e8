#pragma once

// Table, matrix and report serialization: the JSON dump of structure constants
// and Gram entries (the golden artifact checked into data/), matrix dumps, and
// the GroupReport JSON schema.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "pcalg/algebra.hpp"
#include "pcalg/group_enum.hpp"
#include "pcalg/parampoly.hpp"
#include "pcalg/poly_io.hpp"

namespace pcalg {

using nlohmann::json;

// stable ordering by basis index; entries as polynomial strings
inline json table_to_json(const AlgebraTable<QParamPoly>& t) {
    json j;
    j["dim"] = t.dim;
    j["basis"] = t.labels;
    j["domain"] = "Q[alpha,beta,gamma,psi]";
    json products = json::array();
    for (size_t i = 0; i < t.dim; ++i) {
        for (size_t k = i; k < t.dim; ++k) {
            json entry;
            entry["i"] = i;
            entry["j"] = k;
            json coords = json::array();
            for (size_t c = 0; c < t.dim; ++c) coords.push_back(t.prod[i][k][c].str());
            entry["coords"] = coords;
            products.push_back(entry);
        }
    }
    j["products"] = products;
    json gram = json::array();
    for (size_t i = 0; i < t.dim; ++i) {
        json row = json::array();
        for (size_t k = 0; k < t.dim; ++k) row.push_back(t.gram.at(i, k).str());
        gram.push_back(row);
    }
    j["gram"] = gram;
    return j;
}

template <class T>
json table_to_json_generic(const AlgebraTable<T>& t, const std::string& domain) {
    json j;
    j["dim"] = t.dim;
    j["basis"] = t.labels;
    j["domain"] = domain;
    json products = json::array();
    for (size_t i = 0; i < t.dim; ++i) {
        for (size_t k = i; k < t.dim; ++k) {
            json entry;
            entry["i"] = i;
            entry["j"] = k;
            json coords = json::array();
            for (size_t c = 0; c < t.dim; ++c) coords.push_back(t.prod[i][k][c].str());
            entry["coords"] = coords;
            products.push_back(entry);
        }
    }
    j["products"] = products;
    json gram = json::array();
    for (size_t i = 0; i < t.dim; ++i) {
        json row = json::array();
        for (size_t k = 0; k < t.dim; ++k) row.push_back(t.gram.at(i, k).str());
        gram.push_back(row);
    }
    j["gram"] = gram;
    return j;
}

inline AlgebraTable<QParamPoly> table_from_json(const json& j) {
    AlgebraTable<QParamPoly> t;
    t.dim = j.at("dim").get<size_t>();
    t.labels = j.at("basis").get<std::vector<std::string>>();
    t.ctx = QCtx{};
    QParamPoly zero;
    t.prod.assign(t.dim, std::vector<std::vector<QParamPoly>>(t.dim,
                                                              std::vector<QParamPoly>(t.dim, zero)));
    t.gram = Matrix<QParamPoly>(t.dim, zero);
    for (const auto& entry : j.at("products")) {
        size_t i = entry.at("i").get<size_t>();
        size_t k = entry.at("j").get<size_t>();
        const auto& coords = entry.at("coords");
        for (size_t c = 0; c < t.dim; ++c) {
            QParamPoly p = parse_parampoly(coords[c].get<std::string>());
            t.prod[i][k][c] = p;
            t.prod[k][i][c] = p;
        }
    }
    const auto& gram = j.at("gram");
    for (size_t i = 0; i < t.dim; ++i) {
        for (size_t k = 0; k < t.dim; ++k) {
            t.gram.at(i, k) = parse_parampoly(gram[i][k].get<std::string>());
        }
    }
    return t;
}

template <class T>
json matrix_to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline json report_to_json(const GroupReport& r) {
    json j;
    j["generators"] = r.generator_count;
    j["domain"] = r.domain;
    j["outcome"] = r.completed ? "order" : "exceeded";
    j["cutoff"] = r.cutoff;
    if (r.completed) j["order"] = r.order;
    if (r.solvable) j["solvable"] = *r.solvable;
    if (r.perfect) j["perfect"] = *r.perfect;
    if (r.center) j["center_order"] = *r.center;
    j["catalog"] = r.catalog;
    j["layers"] = r.layers;
    if (!r.order_histogram.empty()) {
        json h = json::array();
        for (auto& [ord, cnt] : r.order_histogram) {
            h.push_back(json::array({ord, cnt}));
        }
        j["element_order_sample"] = h;
    }
    return j;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace pcalg
