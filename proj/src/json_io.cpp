#include "cuntz/json_io.hpp"

#include <fstream>

namespace cuntz {

namespace {

Word word_from_json(const json& j, int n, const char* field) {
    if (!j.is_array()) {
        throw usage_error(std::string("element JSON: '") + field + "' must be an array");
    }
    Word w;
    w.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw usage_error(std::string("element JSON: '") + field +
                              "' entries must be integers");
        }
        int letter = v.get<int>();
        if (letter < 1 || letter > n) {
            throw usage_error(std::string("element JSON: letter ") +
                              std::to_string(letter) + " in '" + field +
                              "' outside 1.." + std::to_string(n));
        }
        w.push_back(letter);
    }
    return w;
}

} // namespace

json element_to_json(const AlgebraElement& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms()) {
        terms.push_back({{"re", c.real()},
                         {"im", c.imag()},
                         {"alpha", key.first},
                         {"beta", key.second}});
    }
    return json{{"n", x.n()}, {"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
        throw usage_error("element JSON: expected object with 'n' and 'terms'");
    }
    int n = j.at("n").get<int>();
    if (n < 2) throw usage_error("element JSON: n must be >= 2");
    AlgebraElement out(n);
    for (const auto& t : j.at("terms")) {
        double re = t.value("re", 0.0);
        double im = t.value("im", 0.0);
        out.add_term(word_from_json(t.at("alpha"), n, "alpha"),
                     word_from_json(t.at("beta"), n, "beta"), Complex(re, im));
    }
    return out;
}

json permutation_to_json(const PermutationMap& p) {
    json pairs = json::array();
    for (const auto& [src, tgt] : p.map) {
        pairs.push_back(json::array({src, tgt}));
    }
    return json{{"n", p.n}, {"k", p.k}, {"pairs", std::move(pairs)}};
}

PermutationMap permutation_from_json(const json& j) {
    PermutationMap p;
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    for (const auto& pair : j.at("pairs")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw usage_error("permutation JSON: each pair must be [source, target]");
        }
        p.map[word_from_json(pair[0], p.n, "source")] =
            word_from_json(pair[1], p.n, "target");
    }
    p.validate();
    return p;
}

json decision_report_to_json(const DecisionReport& r) {
    json j{{"n", r.n},
           {"k", r.k},
           {"preserves_diagonal", r.preserves_diagonal},
           {"R", r.R},
           {"subspace_dims", r.subspace_dims},
           {"method", r.method},
           {"eps", r.eps}};
    j["witness"] = r.witness ? element_to_json(*r.witness) : json(nullptr);
    return j;
}

json cylinder_map_to_json(const CylinderMap& m) {
    json entries = json::array();
    if (m.zero_one) {
        for (const auto& [alpha, images] : m.entries) {
            entries.push_back({{"alpha", alpha}, {"images", images}});
        }
    } else {
        for (const auto& [alpha, weights] : m.weighted) {
            json imgs = json::array();
            for (const auto& [gamma, c] : weights) {
                imgs.push_back({{"gamma", gamma}, {"coeff", c}});
            }
            entries.push_back({{"alpha", alpha}, {"images", std::move(imgs)}});
        }
    }
    return json{{"n", m.n},
                {"k", m.k},
                {"depth", m.depth},
                {"zero_one", m.zero_one},
                {"entries", std::move(entries)}};
}

AlgebraElement load_element(const std::string& path) {
    return element_from_json(load_json(path));
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw usage_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw usage_error("JSON parse error in " + path + ": " + e.what());
    }
}

} // namespace cuntz
