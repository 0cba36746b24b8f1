#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cuntz/algebra.hpp"

namespace cuntz {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Lexicographic index of a word in W_n^k (first letter most significant).
long word_index(const Word& w, int n);
Word word_at(long index, int n, int k);

// Dimension n^k with the level cap enforced.
long level_dim(int n, int k);

// Matrix of x in F_n^k under S_alpha S_beta^* -> e_{alpha,beta}.
// x must have pure gauge degree 0 and all terms embeddable at level k.
Matrix to_matrix(const AlgebraElement& x, int k);

// Inverse of to_matrix on level-k supports.
AlgebraElement from_matrix(const Matrix& m, int n, int k);

bool is_unitary(const Matrix& m, double eps = kDefaultEps);
bool is_unitary(const AlgebraElement& x, int k, double eps = kDefaultEps);

// One entry of modulus > eps per row and column; for unitary x in F_n^k this
// characterizes membership in the normalizer of the diagonal.
bool is_monomial(const AlgebraElement& x, int k, double eps = kDefaultEps);

// Off-diagonal entries all within tol * max(1, |m|_max).
bool matrix_is_diagonal(const Matrix& m, double tol);

// Orthonormal-basis span with tolerance-based growth detection, used for the
// stabilizing subspace chains.
class Subspace {
public:
    Subspace(long ambient_dim, double tolerance);

    long ambient_dim() const { return ambient_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    double tolerance() const { return tol_; }
    const std::vector<Vector>& basis() const { return basis_; }

    // Residual of v against the current basis (not normalized).
    Vector residual(const Vector& v) const;

    bool contains(const Vector& v) const;

    // Gram-Schmidt against the existing basis; v joins iff its residual norm
    // exceeds tolerance * max(1, |v|).  Returns true when dimension grew.
    bool add(const Vector& v);

    // Extends by several vectors; reports whether any was added.
    bool extend(const std::vector<Vector>& vectors);

private:
    long ambient_;
    double tol_;
    std::vector<Vector> basis_;
};

// max residual of either basis against the other span; 0 for equal spans.
double subspace_distance(const Subspace& a, const Subspace& b);

} // namespace cuntz
