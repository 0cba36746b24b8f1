#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "cuntz/matrix_rep.hpp"

namespace cuntz {

// Bijection of W_n^k, stored source -> target.
struct PermutationMap {
    int n = 2;
    int k = 1;
    std::map<Word, Word> map;

    void validate() const;  // throws usage_error unless a bijection on W_n^k
    const Word& operator()(const Word& source) const;
};

// sigma(alpha) = (alpha_{omega(1)}, ..., alpha_{omega(k)}); omega stored
// 0-based, so sigma(alpha)[i] = alpha[omega[i]].
struct InducedPermutation {
    int k = 1;
    std::vector<int> omega;

    Word apply(const Word& alpha) const;
};

// lambda_u(S_alpha S_beta^*) = u_{|alpha|} S_alpha S_beta^* u_{|beta|}^*,
// extended linearly.
AlgebraElement lambda_apply(const AlgebraElement& u, const AlgebraElement& x);

// Unitary u with lambda_u(S_i) = images[i-1], i.e. sum_i images[i] S_i^*.
// Checks the Cuntz relations on the images within eps.
AlgebraElement unitary_of_endo(const std::vector<AlgebraElement>& images,
                               double eps = kDefaultEps);

// lambda_u o lambda_w = lambda_{lambda_u(w) u}.
AlgebraElement compose_endos(const AlgebraElement& u, const AlgebraElement& w);

// sum_alpha S_{sigma(alpha)} S_alpha^*.
AlgebraElement permutation_unitary(const PermutationMap& p);

// Reads a permutation map off a unitary whose level-k matrix is a 0/1
// permutation matrix within eps; nullopt otherwise.
std::optional<PermutationMap> as_permutation_unitary(const AlgebraElement& x,
                                                     int k,
                                                     double eps = kDefaultEps);

// Exhaustive search over Sym(k) (guarded at k <= 10).
std::optional<InducedPermutation> detect_induced(const PermutationMap& p);

// Matrices of all k! induced-permutation unitaries at level k.
std::vector<Matrix> induced_permutation_matrices(int n, int k);

// Dimension of their span (the Schur-Weyl commutant of z^{otimes k}).
int induced_span_dimension(int n, int k, double tol = 1e-9);

struct WeylResult {
    bool commutes = false;
    double residual = 0.0;
    // Randomized z_k u z_k^* = u cross-check; disagreement is logged, the
    // verdict stays with the algebraic projection.
    bool random_check_agrees = true;
    std::uint64_t seed = 0;
};

// Projects to_matrix(u, k) onto the span of the induced-permutation matrices;
// commutes iff the residual is <= eps.
WeylResult weyl_commutation_test(const AlgebraElement& u, int k,
                                 double eps = kDefaultEps,
                                 std::uint64_t seed = 20100110);

// True iff u has gauge degree 0 only (finite-level content of the fact that
// commutation with the gauge action forces u into F_n).
bool gauge_commutation_test(const AlgebraElement& u);

// Seeded generators used by the randomized checks and the CLI.
Matrix random_unitary_matrix(long dim, std::mt19937_64& rng);
AlgebraElement random_level1_unitary(int n, std::mt19937_64& rng);
PermutationMap random_permutation_map(int n, int k, std::mt19937_64& rng);
AlgebraElement random_diagonal_phase_unitary(int n, int k, std::mt19937_64& rng);

} // namespace cuntz
