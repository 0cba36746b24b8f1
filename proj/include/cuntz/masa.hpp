#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cuntz/endomorphism.hpp"
#include "cuntz/matrix_rep.hpp"

namespace cuntz {

// Full trace of the finite decision procedure for lambda_w(D_n) <= D_n.
struct DecisionReport {
    int n = 0;
    int k = 0;
    bool preserves_diagonal = false;
    int R = 0;                        // stabilization index
    std::vector<int> subspace_dims;   // dim S_0, S_1, ..., S_R
    std::optional<AlgebraElement> witness;  // non-diagonal image on failure
    std::string method = "iterative";
    double eps = kDefaultEps;
};

// Classical-dynamics view of lambda_w restricted to the diagonal: cylinder of
// depth `depth` maps to a set of cylinders of depth depth + k - 1.  When the
// image coefficients are not 0/1 the weighted variant is filled instead.
struct CylinderMap {
    int n = 0;
    int k = 0;
    int depth = 0;
    bool zero_one = true;
    std::map<Word, std::vector<Word>> entries;
    std::map<Word, std::vector<std::pair<Word, double>>> weighted;
};

struct NormalizerCheck {
    bool in_normalizer = false;
    bool exact = false;  // monomial test applied (x in F_n^k, k <= depth)
    int depth = 0;
};

// True iff every gauge component other than degree 0 vanishes within eps and
// the degree-0 part is supported on alpha = beta after profile raising.
bool is_diagonal(const AlgebraElement& x, double eps = kDefaultEps);

// Last-tensor-factor slices: a = sum_{ij} E_ij(a) phi^{k-1}(S_i S_j^*).
std::vector<std::vector<AlgebraElement>> e_slices(const AlgebraElement& a, int k);

// Matrix-level slice used internally by the iteration.
Matrix e_slice(const Matrix& a, int n, int i, int j);

// Finite decision procedure: iterates the subspace chain S_r of
// F_n^{k-1}, checking (Ad w o phi)-images stay diagonal, until stabilization.
DecisionReport decide_diagonal_invariance(const AlgebraElement& w, int k,
                                          double eps = kDefaultEps);

// Independent brute-force route: tests lambda_w(P_alpha) for all |alpha| <=
// depth via word calculus only.
bool oracle_direct_check(const AlgebraElement& w, int k, int depth,
                         double eps = kDefaultEps);

// w D_n^1 w^* = phi^{k-1}(D_n^1) as spans; implies the decision is true.
bool sufficient_cor42(const AlgebraElement& w, int k, double eps = kDefaultEps);

// [DF1] w D_n^1 w^* <= D_n^k and [DF2] w commutes with phi^r(w P_i w^*) for
// r = 1..k-1; implies the decision is true.
bool sufficient_prop45(const AlgebraElement& w, int k, double eps = kDefaultEps);

// lambda_{z^*}(u); equals u_tower(z,k)^* u u_tower(z,k) for u in F_n^k, and is
// computed through lambda_apply so mixed-degree u is allowed.
AlgebraElement conjugate_by_bogolyubov(const AlgebraElement& u,
                                       const AlgebraElement& z);

// lambda_u leaves lambda_z(D_n) invariant iff the conjugated unitary passes
// the diagonal decision.
DecisionReport standard_masa_invariance(const AlgebraElement& u,
                                        const AlgebraElement& z,
                                        double eps = kDefaultEps);

// lambda_w(D_n) = lambda_z(D_n) iff w^* z normalizes D_n^1, i.e. is monomial.
bool masa_equal(const AlgebraElement& w, const AlgebraElement& z,
                double eps = kDefaultEps);

// Necessary conditions for Ad v(D_n) <= D_n up to the given depth; exact
// (monomial) when v lies in F_n^k with k <= depth.
NormalizerCheck ad_normalizer_necessary(const AlgebraElement& v, int depth,
                                        double eps = kDefaultEps);

// Block map of lambda_w on depth-level cylinders.  Requires the decision to
// hold; throws value_error telling the caller to run it otherwise.
CylinderMap restrict_to_diagonal(const AlgebraElement& w, int k, int depth,
                                 double eps = kDefaultEps);

} // namespace cuntz
