#include "holant/model_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "holant/errors.hpp"
#include "holant/rng.hpp"

namespace holant {

json complex_to_json(cplx z)
{
    return json{{"re", z.real()}, {"im", z.imag()}};
}

cplx complex_from_json(const json &j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_object() || !j.contains("re")) {
        throw ParseError("expected a complex number {\"re\": .., \"im\": ..}");
    }
    return {j.at("re").get<double>(), j.value("im", 0.0)};
}

json model_to_json(const EdgeColoringModel &h, int degree_bound)
{
    const auto m = h.has_rule() ? h.materialized(degree_bound) : h;
    json entries = json::array();
    for (const auto &[alpha, v] : m.entries()) {
        entries.push_back({{"alpha", alpha}, {"re", v.real()}, {"im", v.imag()}});
    }
    return json{{"k", m.colors()}, {"default", complex_to_json(m.default_value())},
                {"entries", entries}};
}

EdgeColoringModel model_from_json(const json &j)
{
    try {
        const int k = j.at("k").get<int>();
        if (k < 1) {
            throw ParseError("model: k must be positive");
        }
        const cplx def = j.contains("default") ? complex_from_json(j.at("default")) : cplx(0.0);
        EdgeColoringModel h(k, def);
        if (j.contains("entries")) {
            for (const auto &e : j.at("entries")) {
                auto alpha = e.at("alpha").get<Alpha>();
                if (static_cast<int>(alpha.size()) != k) {
                    throw ParseError("model: entry alpha has wrong length");
                }
                for (int a : alpha) {
                    if (a < 0) {
                        throw ParseError("model: entry alpha has a negative coordinate");
                    }
                }
                h.set(alpha, complex_from_json(e));
            }
        }
        return h;
    } catch (const json::exception &ex) {
        throw ParseError(std::string("model: ") + ex.what());
    }
}

json vertex_model_to_json(const VertexModel &m)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < m.a.size(); i++) {
        a.push_back(complex_to_json(m.a(i)));
    }
    json B = json::array();
    for (Eigen::Index i = 0; i < m.B.rows(); i++) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.B.cols(); j++) {
            row.push_back(complex_to_json(m.B(i, j)));
        }
        B.push_back(row);
    }
    return json{{"a", a}, {"B", B}};
}

VertexModel vertex_model_from_json(const json &j)
{
    try {
        const auto &ja = j.at("a");
        const auto &jb = j.at("B");
        const auto n = static_cast<Eigen::Index>(ja.size());
        CVector a(n);
        for (Eigen::Index i = 0; i < n; i++) {
            a(i) = complex_from_json(ja[i]);
        }
        if (static_cast<Eigen::Index>(jb.size()) != n) {
            throw ParseError("vertex model: B must be n x n");
        }
        CMatrix B(n, n);
        for (Eigen::Index i = 0; i < n; i++) {
            if (static_cast<Eigen::Index>(jb[i].size()) != n) {
                throw ParseError("vertex model: B must be n x n");
            }
            for (Eigen::Index c = 0; c < n; c++) {
                B(i, c) = complex_from_json(jb[i][c]);
            }
        }
        return VertexModel(a, B);
    } catch (const json::exception &ex) {
        throw ParseError(std::string("vertex model: ") + ex.what());
    } catch (const PreconditionError &ex) {
        throw ParseError(ex.what());
    }
}

std::variant<EdgeColoringModel, VertexModel> read_model_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open model file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception &ex) {
        throw ParseError("model file '" + path + "': " + ex.what());
    }
    if (j.contains("a") && j.contains("B")) {
        return vertex_model_from_json(j);
    }
    return model_from_json(j);
}

}  // namespace holant

namespace holant {

EdgeColoringModel perturbed_ones_model(int k, double r, std::uint64_t seed, int degree_bound)
{
    if (!(r >= 0.0)) {
        throw PreconditionError("perturbation radius must be >= 0");
    }
    Rng rng(seed);
    EdgeColoringModel h(k, 1.0);
    for (const Alpha &alpha : multisets_up_to(k, degree_bound)) {
        h.set(alpha, 1.0 + std::polar(r, 2.0 * std::numbers::pi * rng.uniform()));
    }
    return h;
}

EdgeColoringModel builtin_model(const std::string &name, int k, int degree_bound)
{
    auto number = [&](const std::string &text) {
        try {
            std::size_t used = 0;
            const double x = std::stod(text, &used);
            if (used == text.size()) {
                return x;
            }
        } catch (const std::exception &) {
        }
        throw ParseError("bad number '" + text + "' in model name '" + name + "'");
    };
    if (name == "ones") {
        return EdgeColoringModel::constant(k, 1.0);
    }
    if (name == "matching") {
        return model_from_predicate(PredicateKind::Matching, k);
    }
    if (name.rfind("dregular:", 0) == 0) {
        return model_from_predicate(PredicateKind::DRegular, k,
                                    static_cast<int>(number(name.substr(9))));
    }
    for (const std::string prefix : {"ones+uniform:", "ones±uniform:", "ones+-uniform:"}) {
        if (name.rfind(prefix, 0) == 0) {
            const std::string rest = name.substr(prefix.size());
            const auto colon = rest.find(':');
            const double r = number(rest.substr(0, colon));
            const double seed = colon == std::string::npos ? 0.0 : number(rest.substr(colon + 1));
            if (seed < 0 || seed != std::floor(seed)) {
                throw ParseError("seed must be a non-negative integer in '" + name + "'");
            }
            return perturbed_ones_model(k, r, static_cast<std::uint64_t>(seed), degree_bound);
        }
    }
    throw ParseError("unknown built-in model '" + name + "'");
}

EdgeColoringModel load_model(const std::string &name_or_path, int k, int degree_bound)
{
    std::ifstream probe(name_or_path);
    if (!probe) {
        return builtin_model(name_or_path, k, degree_bound);
    }
    auto model = read_model_file(name_or_path);
    if (auto *h = std::get_if<EdgeColoringModel>(&model)) {
        return *h;
    }
    return vertex_to_edge(std::get<VertexModel>(model));
}

}  // namespace holant
