// cuntz-endo: command-line front end for the endomorphism toolkit.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuntz/endomorphism.hpp"
#include "cuntz/izumi.hpp"
#include "cuntz/json_io.hpp"
#include "cuntz/masa.hpp"

using namespace cuntz;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCrossCheck = 3;

struct GlobalOpts {
    double eps = kDefaultEps;
    int max_level = 12;
    std::size_t max_terms = 1000000;
    std::uint64_t seed = 20100110;
};

json meta(const GlobalOpts& g) {
    return json{{"eps", g.eps}, {"seed", g.seed}};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json(j, out_path);
    }
}

// z_a = a(S_1S_1* + S_2S_2*) + sqrt(1-a^2)(S_2S_1* - S_1S_2*)
AlgebraElement rotation_z(double a) {
    double b = std::sqrt(std::max(0.0, 1.0 - a * a));
    AlgebraElement z(2);
    z.add_term({1}, {1}, a);
    z.add_term({1}, {2}, -b);
    z.add_term({2}, {1}, b);
    z.add_term({2}, {2}, a);
    return z;
}

AlgebraElement phased_z(double theta, double t) {
    Complex phase = std::polar(1.0, theta);
    double a = std::cos(t), b = std::sin(t);
    AlgebraElement z(2);
    z.add_term({1}, {1}, phase * a);
    z.add_term({2}, {1}, phase * b);
    z.add_term({1}, {2}, -b);
    z.add_term({2}, {2}, a);
    return z;
}

int cmd_analyze(const GlobalOpts& g, const std::string& path) {
    AlgebraElement x = load_element(path);
    json out;
    out["meta"] = meta(g);
    out["n"] = x.n();
    out["term_count"] = x.term_count();
    out["gauge_degrees"] = x.gauge_degrees();
    bool pure = gauge_commutation_test(x);
    out["pure_gauge_degree_zero"] = pure;
    out["diagonal"] = is_diagonal(x, g.eps);
    if (pure) {
        int level = x.is_zero() ? 0 : f_level(x);
        out["level"] = level;
        int k = std::max(1, level);
        bool unitary = is_unitary(x, k, std::max(g.eps, 1e-8));
        out["unitary"] = unitary;
        if (unitary) {
            out["monomial"] = is_monomial(x, k, g.eps);
            auto p = as_permutation_unitary(x, k, g.eps);
            if (p) {
                auto induced = detect_induced(*p);
                out["permutation_unitary"] = true;
                out["induced"] =
                    induced ? json(induced->omega) : json(nullptr);
            } else {
                out["permutation_unitary"] = false;
            }
            auto weyl = weyl_commutation_test(x, k, g.eps, g.seed);
            out["weyl"] = {{"commutes", weyl.commutes},
                           {"residual", weyl.residual},
                           {"random_check_agrees", weyl.random_check_agrees}};
        }
    } else {
        // mixed gauge degrees: unitarity via the word calculus
        auto one = AlgebraElement::identity(x.n());
        out["unitary"] = equals_within(x * x.adjoint(), one, g.eps) &&
                         equals_within(x.adjoint() * x, one, g.eps);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_decide(const GlobalOpts& g, const std::string& path, int k, bool oracle,
               const std::string& out_path) {
    AlgebraElement w = load_element(path);
    if (k <= 0) k = std::max(1, f_level(w));
    DecisionReport report = decide_diagonal_invariance(w, k, g.eps);
    json out = decision_report_to_json(report);
    out["meta"] = meta(g);
    if (oracle) {
        int depth = std::max(1, report.R + 2);
        bool agreed =
            oracle_direct_check(w, k, depth, g.eps) == report.preserves_diagonal;
        out["oracle"] = {{"depth", depth}, {"agrees", agreed}};
        emit(out, out_path);
        if (!agreed) {
            std::cerr << "decision procedure and direct oracle disagree\n";
            return kExitCrossCheck;
        }
        return 0;
    }
    emit(out, out_path);
    return 0;
}

int cmd_masa_scan(const GlobalOpts& g, const std::string& path,
                  const std::string& family, int steps,
                  const std::string& z_file, const std::string& out_path,
                  const std::string& csv_path) {
    AlgebraElement u = load_element(path);
    json rows = json::array();
    auto push_row = [&](json params, const AlgebraElement& z) {
        DecisionReport r = standard_masa_invariance(u, z, g.eps);
        params["preserves"] = r.preserves_diagonal;
        params["R"] = r.R;
        rows.push_back(std::move(params));
    };
    if (!z_file.empty()) {
        push_row(json{{"z_file", z_file}}, load_element(z_file));
    } else if (family == "real-su2") {
        for (int i = 0; i < steps; ++i) {
            double a = steps == 1 ? 0.0 : double(i) / (steps - 1);
            push_row(json{{"a", a}}, rotation_z(a));
        }
    } else if (family == "phased-su2") {
        for (int i = 0; i < steps; ++i) {
            double theta = 2.0 * M_PI * i / steps;
            for (int j = 0; j < steps; ++j) {
                double t = steps == 1 ? 0.0 : (M_PI / 2.0) * j / (steps - 1);
                push_row(json{{"theta", theta}, {"t", t}}, phased_z(theta, t));
            }
        }
    } else {
        throw usage_error("unknown family '" + family +
                          "' (expected real-su2 or phased-su2)");
    }
    json out{{"meta", meta(g)}, {"family", z_file.empty() ? family : "z-file"},
             {"rows", rows}};
    emit(out, out_path);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw usage_error("cannot open for writing: " + csv_path);
        // header from the first row's keys
        if (!rows.empty()) {
            bool first = true;
            for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
                if (!first) csv << ",";
                csv << it.key();
                first = false;
            }
            csv << "\n";
            for (const auto& row : rows) {
                first = true;
                for (auto it = row.begin(); it != row.end(); ++it) {
                    if (!first) csv << ",";
                    csv << it.value().dump();
                    first = false;
                }
                csv << "\n";
            }
        }
    }
    return 0;
}

int cmd_izumi(const GlobalOpts& g, const std::string& group_spec,
              const std::string& out_dir) {
    auto group = FiniteAbelianGroup::parse(group_spec);
    auto v = izumi_unitary(group);
    auto beta = izumi_beta(group);
    auto vprime = compose_endos(v, beta);
    auto vsq = compose_endos(v, v);
    if (!out_dir.empty()) {
        save_json(element_to_json(v), out_dir + "/v_lambda.json");
        save_json(element_to_json(beta), out_dir + "/beta.json");
        save_json(element_to_json(vprime), out_dir + "/v_lambda_prime.json");
        save_json(element_to_json(vsq), out_dir + "/v_lambda_squared.json");
    }
    auto report = verify_izumi_identities(group, g.eps);
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back(
            {{"name", c.name}, {"ok", c.ok}, {"residual", c.residual}});
    }
    json out{{"meta", meta(g)},
             {"group", group_spec},
             {"n", group.order()},
             {"checks", checks},
             {"all_ok", report.all_ok}};
    std::cout << out.dump(2) << "\n";
    return report.all_ok ? 0 : kExitCrossCheck;
}

int cmd_compose(const GlobalOpts& g, const std::string& path_u,
                const std::string& path_w, const std::string& out_path) {
    (void)g;
    AlgebraElement u = load_element(path_u);
    AlgebraElement w = load_element(path_w);
    AlgebraElement composed = compose_endos(u, w);
    emit(element_to_json(composed), out_path);
    return 0;
}

int cmd_restrict(const GlobalOpts& g, const std::string& path, int k, int depth,
                 const std::string& out_path) {
    AlgebraElement w = load_element(path);
    if (k <= 0) k = std::max(1, f_level(w));
    CylinderMap cm = restrict_to_diagonal(w, k, depth, g.eps);
    json out = cylinder_map_to_json(cm);
    out["meta"] = meta(g);
    emit(out, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Endomorphism toolkit for the Cuntz algebra O_n: decide diagonal "
                 "invariance, scan rotated diagonals, and build group-based examples"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("CUNTZ_ENDO_EPS")) {
        try {
            g.eps = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring invalid CUNTZ_ENDO_EPS\n";
        }
    }
    app.add_option("--eps", g.eps, "zero/decision tolerance")
        ->capture_default_str();
    app.add_option("--max-level", g.max_level, "matrix level cap")
        ->capture_default_str();
    app.add_option("--max-terms", g.max_terms, "term count cap")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized cross-checks")
        ->capture_default_str();

    std::string in_file, in_file2, out_path, csv_path, z_file;
    std::string family = "real-su2", group_spec = "2", out_dir;
    int k = 0, depth = 2, steps = 101;
    bool oracle = false;

    auto* analyze = app.add_subcommand("analyze", "inspect an element file");
    analyze->add_option("file", in_file, "element JSON")->required();

    auto* decide =
        app.add_subcommand("decide", "decide diagonal invariance of lambda_w");
    decide->add_option("file", in_file, "element JSON")->required();
    decide->add_option("--k", k, "matrix level (default: minimal embedding)");
    decide->add_flag("--oracle", oracle, "cross-check with direct conjugation");
    decide->add_option("--out", out_path, "write report JSON here");

    auto* scan = app.add_subcommand(
        "masa-scan", "scan rotated-diagonal invariance over a parameter family");
    scan->add_option("file", in_file, "element JSON")->required();
    scan->add_option("--family", family, "real-su2 | phased-su2")
        ->capture_default_str();
    scan->add_option("--steps", steps, "grid steps per axis")
        ->capture_default_str();
    scan->add_option("--z-file", z_file, "single explicit z element");
    scan->add_option("--out", out_path, "write scan JSON here");
    scan->add_option("--csv", csv_path, "also write a CSV projection");

    auto* izumi = app.add_subcommand(
        "izumi", "build the finite-group example family and verify it");
    izumi->add_option("--group", group_spec, "cyclic orders, e.g. 2 or 2,2")
        ->capture_default_str();
    izumi->add_option("--out-dir", out_dir, "write the four element files here");

    auto* compose =
        app.add_subcommand("compose", "compose two endomorphisms via unitaries");
    compose->add_option("file-u", in_file, "outer unitary")->required();
    compose->add_option("file-w", in_file2, "inner unitary")->required();
    compose->add_option("--out", out_path, "write the composed element here");

    auto* restrict_cmd = app.add_subcommand(
        "restrict", "restrict an invariant endomorphism to the diagonal");
    restrict_cmd->add_option("file", in_file, "element JSON")->required();
    restrict_cmd->add_option("--k", k, "matrix level (default: minimal)");
    restrict_cmd->add_option("--depth", depth, "cylinder depth")
        ->capture_default_str();
    restrict_cmd->add_option("--out", out_path, "write the map JSON here");

    // allow the global flags after the subcommand name as well
    for (auto* sub : {analyze, decide, scan, izumi, compose, restrict_cmd}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    limits().max_level = g.max_level;
    limits().max_terms = g.max_terms;
    limits().zero_eps = g.eps;

    try {
        if (analyze->parsed()) return cmd_analyze(g, in_file);
        if (decide->parsed()) return cmd_decide(g, in_file, k, oracle, out_path);
        if (scan->parsed()) {
            return cmd_masa_scan(g, in_file, family, steps, z_file, out_path,
                                 csv_path);
        }
        if (izumi->parsed()) return cmd_izumi(g, group_spec, out_dir);
        if (compose->parsed()) return cmd_compose(g, in_file, in_file2, out_path);
        if (restrict_cmd->parsed()) {
            return cmd_restrict(g, in_file, k, depth, out_path);
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const value_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
