// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cuntz/endomorphism.hpp"
#include "cuntz/izumi.hpp"
#include "cuntz/masa.hpp"
#include "fixtures.hpp"

using namespace cuntz;

namespace {

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<PermutationMap> all_level2_permutations() {
    std::vector<long> targets(4);
    std::iota(targets.begin(), targets.end(), 0L);
    std::vector<PermutationMap> maps;
    std::sort(targets.begin(), targets.end());
    do {
        PermutationMap p{2, 2, {}};
        for (long i = 0; i < 4; ++i) {
            p.map[word_at(i, 2, 2)] = word_at(targets[static_cast<std::size_t>(i)], 2, 2);
        }
        maps.push_back(std::move(p));
    } while (std::next_permutation(targets.begin(), targets.end()));
    return maps;
}

// 11 -> 21 -> 22 -> 12 -> 11 at level 2.
AlgebraElement four_cycle_unitary() {
    PermutationMap p{2, 2, {}};
    p.map[{1, 1}] = {2, 1};
    p.map[{2, 1}] = {2, 2};
    p.map[{2, 2}] = {1, 2};
    p.map[{1, 2}] = {1, 1};
    return permutation_unitary(p);
}

// Criterion 1: rotation-family scan hits true exactly at {0, 1/sqrt2, 1}.
bool criterion_rotation_scan() {
    auto t0 = std::chrono::steady_clock::now();
    auto u = fixtures::block_swap_u();
    const double r = std::sqrt(2.0) / 2.0;
    const std::vector<double> grid = {0.0, 0.25, 0.5, r, 0.9, 1.0};
    const std::vector<bool> expected = {true, false, false, true, false, true};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto report = standard_masa_invariance(u, fixtures::su2_real(grid[i]), 1e-8);
        if (report.preserves_diagonal != expected[i]) {
            std::fprintf(stderr, "  a=%.8f verdict %d, expected %d\n", grid[i],
                         int(report.preserves_diagonal), int(expected[i]));
            return false;
        }
    }
    return elapsed_s(t0) < 1.0;
}

// Criterion 2: conjugation produces the expected level-2 permutation unitary.
bool criterion_conjugation() {
    auto v = conjugate_by_bogolyubov(fixtures::block_swap_u(), fixtures::rot45_z());
    AlgebraElement expected(2);
    expected.add_term({1, 1}, {1, 1}, 1.0);
    expected.add_term({1, 2}, {2, 2}, 1.0);
    expected.add_term({2, 2}, {1, 2}, 1.0);
    expected.add_term({2, 1}, {2, 1}, 1.0);
    return max_coeff_difference(v, expected) < 1e-12;
}

// Criterion 3: normalizer verdict on the phased grid is true exactly on the axes.
bool criterion_phased_grid() {
    auto u = fixtures::dyadic_u();
    for (double theta : {0.0, M_PI / 4.0, M_PI / 2.0}) {
        for (int i = 0; i <= 10; ++i) {
            double s = (M_PI / 2.0) * i / 10.0;
            for (int j = 0; j <= 10; ++j) {
                double phase = 2.0 * M_PI * j / 11.0;
                Complex a = std::polar(std::cos(s), phase);
                Complex b = std::sin(s);
                auto z = fixtures::su2_phased(theta, a, b);
                auto v = lambda_apply(z.adjoint(), u);
                bool verdict = ad_normalizer_necessary(v, 3).in_normalizer;
                bool on_axis = std::abs(a * b) < 1e-12;
                if (verdict != on_axis) {
                    std::fprintf(stderr,
                                 "  theta=%.4f s=%.4f phase=%.4f: verdict %d, |ab|=%.4g\n",
                                 theta, s, phase, int(verdict), std::abs(a * b));
                    return false;
                }
                if (on_axis &&
                    !masa_equal(AlgebraElement::identity(2), z, 1e-9)) {
                    std::fprintf(stderr, "  axis point fails masa_equal\n");
                    return false;
                }
            }
        }
    }
    return true;
}

// Criterion 4: the two-parameter block family always satisfies the span
// condition yet leaves the normalizer when all blocks mix.
bool criterion_block_family() {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 20; ++trial) {
        double t1 = angle(rng) / 4.0, t2 = angle(rng) / 4.0;
        Complex a = std::polar(std::cos(t1), angle(rng));
        Complex b = std::polar(std::sin(t1), angle(rng));
        Complex c = std::polar(std::cos(t2), angle(rng));
        Complex d = std::polar(std::sin(t2), angle(rng));
        auto w = fixtures::nonorm_w(a, b, c, d);
        if (!sufficient_cor42(w, 2)) return false;
        if (!decide_diagonal_invariance(w, 2).preserves_diagonal) return false;
        double mixing = std::min(std::abs(a * b), std::abs(c * d));
        if (mixing > 0.1 && is_monomial(w, 2)) return false;
    }
    return true;
}

// Criterion 5: decision procedure vs direct-conjugation oracle, no disagreements.
bool criterion_oracle_equivalence() {
    std::vector<AlgebraElement> pool;
    for (const auto& p : all_level2_permutations()) {
        pool.push_back(permutation_unitary(p));
    }
    std::mt19937_64 rng(405);
    for (int trial = 0; trial < 50; ++trial) {
        pool.push_back(permutation_unitary(random_permutation_map(2, 2, rng)) *
                       random_diagonal_phase_unitary(2, 2, rng));
    }
    for (int trial = 0; trial < 20; ++trial) {
        pool.push_back(from_matrix(random_unitary_matrix(4, rng), 2, 2));
    }
    pool.push_back(izumi_unitary(FiniteAbelianGroup({2})));
    for (const auto& w : pool) {
        auto r = decide_diagonal_invariance(w, 2);
        int depth = std::max(1, r.R + 2);
        if (oracle_direct_check(w, 2, depth) != r.preserves_diagonal) {
            return false;
        }
    }
    return true;
}

// Criterion 6: span dimension 5 at (n,k)=(2,3); position-swap unitary commutes;
// the four-cycle does not, yet preserves every rotated diagonal.
bool criterion_weyl() {
    if (induced_span_dimension(2, 3) != 5) return false;

    AlgebraElement swap23(2);
    for (int l = 1; l <= 2; ++l) {
        for (int j = 1; j <= 2; ++j) {
            for (int i = 1; i <= 2; ++i) {
                swap23.add_term({l, j, i}, {l, i, j}, 1.0);
            }
        }
    }
    if (!weyl_commutation_test(swap23, 3).commutes) return false;

    auto u = four_cycle_unitary();
    if (weyl_commutation_test(u, 2).commutes) return false;

    std::mt19937_64 rng(406);
    for (int trial = 0; trial < 10; ++trial) {
        auto z = random_level1_unitary(2, rng);
        auto v = conjugate_by_bogolyubov(u, z);
        if (!sufficient_cor42(v, 2)) return false;
        if (!decide_diagonal_invariance(v, 2).preserves_diagonal) return false;
    }
    return true;
}

// Criterion 7: induced detection and commutation agree over all of Sym(W_2^2).
bool criterion_induced_exhaustive() {
    int induced_count = 0;
    for (const auto& p : all_level2_permutations()) {
        bool induced = detect_induced(p).has_value();
        bool commutes = weyl_commutation_test(permutation_unitary(p), 2).commutes;
        if (induced != commutes) return false;
        if (induced) ++induced_count;
    }
    return induced_count == 2;
}

// Criterion 8: order-2 construction reproduces the displayed unitaries; the
// diagonal decision fails; the full phased scan is negative.
bool criterion_izumi() {
    auto t0 = std::chrono::steady_clock::now();
    auto g = FiniteAbelianGroup::parse("2");
    auto v = izumi_unitary(g);
    auto beta = izumi_beta(g);
    const double s = fixtures::kInvSqrt2;

    AlgebraElement v_expected(2);
    v_expected.add_term({}, {}, s);
    v_expected.add_term({1}, {2}, s);
    v_expected.add_term({2}, {1}, s);
    v_expected.add_term({1, 2}, {2, 2}, -2.0 * s);
    v_expected.add_term({2, 1}, {2, 1}, -2.0 * s);
    if (max_coeff_difference(v, v_expected) >= 1e-12) return false;

    AlgebraElement vprime_expected(2);
    vprime_expected.add_term({1, 1}, {1, 1}, 1.0);
    vprime_expected.add_term({2, 2}, {1, 2}, 1.0);
    vprime_expected.add_term({1, 2}, {2, 2}, 1.0);
    vprime_expected.add_term({2, 1}, {2, 1}, 1.0);
    if (max_coeff_difference(compose_endos(v, beta), vprime_expected) >= 1e-12) {
        return false;
    }

    AlgebraElement vsq_expected(2);
    vsq_expected.add_term({1, 1}, {1, 1}, 1.0);
    vsq_expected.add_term({1, 2}, {2, 1}, 1.0);
    vsq_expected.add_term({2, 2}, {1, 2}, 1.0);
    vsq_expected.add_term({2, 1}, {2, 2}, 1.0);
    if (max_coeff_difference(compose_endos(v, v), vsq_expected) >= 1e-12) {
        return false;
    }

    if (decide_diagonal_invariance(v, 2).preserves_diagonal) return false;

    for (int i = 0; i < 21; ++i) {
        double theta = 2.0 * M_PI * i / 21.0;
        for (int j = 0; j < 21; ++j) {
            double t = (M_PI / 2.0) * j / 20.0;
            auto z = fixtures::su2_phased(theta, std::cos(t), std::sin(t));
            if (standard_masa_invariance(v, z).preserves_diagonal) return false;
        }
    }
    return elapsed_s(t0) < 10.0;
}

// Criterion 9: composed unitary implements nested application on generators.
bool criterion_composition() {
    std::mt19937_64 rng(409);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = permutation_unitary(random_permutation_map(2, 2, rng));
        auto w = permutation_unitary(random_permutation_map(2, 2, rng));
        auto composed = compose_endos(u, w);
        for (int i = 1; i <= 2; ++i) {
            auto si = AlgebraElement::word(2, {i}, {});
            auto nested = lambda_apply(u, lambda_apply(w, si));
            if (max_coeff_difference(lambda_apply(composed, si), nested) >= 1e-12) {
                return false;
            }
        }
    }
    return true;
}

// Criterion 10: rotated level-3 diagonals factor into shifted level-1 pieces.
bool criterion_product_form() {
    std::mt19937_64 rng(410);
    for (int trial = 0; trial < 10; ++trial) {
        auto z = random_level1_unitary(2, rng);
        auto z3 = u_tower(z, 3);
        Subspace lhs(64, 1e-10), rhs(64, 1e-10);
        for (long idx = 0; idx < 8; ++idx) {
            Word alpha = word_at(idx, 2, 3);
            auto img = z3 * AlgebraElement::word(2, alpha, alpha) * z3.adjoint();
            Matrix m = to_matrix(img, 3);
            lhs.add(Eigen::Map<const Vector>(m.data(), 64));
        }
        std::vector<AlgebraElement> a;
        for (int i = 1; i <= 2; ++i) {
            a.push_back(z * AlgebraElement::word(2, {i}, {i}) * z.adjoint());
        }
        for (int i0 = 0; i0 < 2; ++i0) {
            for (int i1 = 0; i1 < 2; ++i1) {
                for (int i2 = 0; i2 < 2; ++i2) {
                    auto prod = a[static_cast<std::size_t>(i0)] *
                                phi(a[static_cast<std::size_t>(i1)], 1) *
                                phi(a[static_cast<std::size_t>(i2)], 2);
                    Matrix m = to_matrix(prod, 3);
                    rhs.add(Eigen::Map<const Vector>(m.data(), 64));
                }
            }
        }
        if (subspace_distance(lhs, rhs) >= 1e-9) return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 rotation-family scan true exactly at {0, 1/sqrt2, 1}", criterion_rotation_scan},
        {"2 conjugation matches the level-2 permutation unitary", criterion_conjugation},
        {"3 phased grid: normalizer verdict true only on the axes", criterion_phased_grid},
        {"4 block family: span condition holds, monomial fails off-axis", criterion_block_family},
        {"5 decision procedure agrees with the direct oracle (95 unitaries)", criterion_oracle_equivalence},
        {"6 commutant span dim 5; swap passes, four-cycle fails yet invariant", criterion_weyl},
        {"7 exhaustive level-2: induced detection <=> commutation (2 hits)", criterion_induced_exhaustive},
        {"8 order-2 construction: displayed unitaries, negative scans", criterion_izumi},
        {"9 composition law on 50 seeded pairs", criterion_composition},
        {"10 rotated diagonal product form, 10 seeds", criterion_product_form},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "  exception: %s\n", e.what());
        }
        std::printf("%s: %s\n", ok ? "PASS" : "FAIL", c.name);
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
