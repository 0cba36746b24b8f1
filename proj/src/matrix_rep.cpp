#include "cuntz/matrix_rep.hpp"

#include <cmath>
#include <string>

namespace cuntz {

long word_index(const Word& w, int n) {
    long idx = 0;
    for (int letter : w) idx = idx * n + (letter - 1);
    return idx;
}

Word word_at(long index, int n, int k) {
    Word w(static_cast<std::size_t>(k));
    for (int pos = k - 1; pos >= 0; --pos) {
        w[static_cast<std::size_t>(pos)] = static_cast<int>(index % n) + 1;
        index /= n;
    }
    return w;
}

long level_dim(int n, int k) {
    if (k < 0) throw usage_error("level must be >= 0");
    if (k > limits().max_level) {
        throw resource_error("level " + std::to_string(k) + " exceeds cap " +
                             std::to_string(limits().max_level));
    }
    long dim = 1;
    for (int i = 0; i < k; ++i) {
        dim *= n;
        if (dim > (1L << 22)) {
            throw resource_error("matrix dimension n^k too large at level " +
                                 std::to_string(k));
        }
    }
    return dim;
}

Matrix to_matrix(const AlgebraElement& x, int k) {
    const int n = x.n();
    const long dim = level_dim(n, k);
    for (const auto& [key, c] : x.terms()) {
        (void)c;
        if (key.first.size() != key.second.size()) {
            throw value_error("to_matrix: element has nonzero gauge degree");
        }
        if (static_cast<int>(key.first.size()) > k) {
            throw value_error("to_matrix: term of length " +
                              std::to_string(key.first.size()) +
                              " not embeddable at level " + std::to_string(k));
        }
    }
    AlgebraElement raised = raise_to_profile(x, {{0, k}});
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& [key, c] : raised.terms()) {
        m(word_index(key.first, n), word_index(key.second, n)) += c;
    }
    return m;
}

AlgebraElement from_matrix(const Matrix& m, int n, int k) {
    const long dim = level_dim(n, k);
    if (m.rows() != dim || m.cols() != dim) {
        throw usage_error("from_matrix: matrix is not n^k x n^k");
    }
    AlgebraElement out(n);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            if (std::abs(m(r, c)) > limits().zero_eps) {
                out.add_term(word_at(r, n, k), word_at(c, n, k), m(r, c));
            }
        }
    }
    return out;
}

bool is_unitary(const Matrix& m, double eps) {
    const long dim = m.rows();
    Matrix id = Matrix::Identity(dim, dim);
    return (m * m.adjoint() - id).cwiseAbs().maxCoeff() <= eps &&
           (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= eps;
}

bool is_unitary(const AlgebraElement& x, int k, double eps) {
    return is_unitary(to_matrix(x, k), eps);
}

bool is_monomial(const AlgebraElement& x, int k, double eps) {
    Matrix m = to_matrix(x, k);
    if (!is_unitary(m, std::max(eps, 1e-8))) {
        throw value_error("is_monomial: input is not unitary at level " + std::to_string(k));
    }
    const long dim = m.rows();
    for (long r = 0; r < dim; ++r) {
        int hits = 0;
        for (long c = 0; c < dim; ++c) {
            if (std::abs(m(r, c)) > eps) ++hits;
        }
        if (hits != 1) return false;
    }
    for (long c = 0; c < dim; ++c) {
        int hits = 0;
        for (long r = 0; r < dim; ++r) {
            if (std::abs(m(r, c)) > eps) ++hits;
        }
        if (hits != 1) return false;
    }
    return true;
}

bool matrix_is_diagonal(const Matrix& m, double tol) {
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (long r = 0; r < m.rows(); ++r) {
        for (long c = 0; c < m.cols(); ++c) {
            if (r != c && std::abs(m(r, c)) > tol * scale) return false;
        }
    }
    return true;
}

Subspace::Subspace(long ambient_dim, double tolerance)
    : ambient_(ambient_dim), tol_(tolerance) {
    if (ambient_dim <= 0) throw usage_error("ambient dimension must be positive");
}

Vector Subspace::residual(const Vector& v) const {
    if (v.size() != ambient_) {
        throw usage_error("subspace: vector dimension mismatch");
    }
    Vector r = v;
    // Two Gram-Schmidt passes keep the residual orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vector& b : basis_) {
            r -= b.dot(r) * b;
        }
    }
    return r;
}

bool Subspace::contains(const Vector& v) const {
    return residual(v).norm() <= tol_ * std::max(1.0, v.norm());
}

bool Subspace::add(const Vector& v) {
    Vector r = residual(v);
    double threshold = tol_ * std::max(1.0, v.norm());
    if (r.norm() <= threshold) return false;
    if (dimension() >= ambient_) return false;
    basis_.push_back(r / r.norm());
    return true;
}

bool Subspace::extend(const std::vector<Vector>& vectors) {
    bool grew = false;
    for (const Vector& v : vectors) {
        grew = add(v) || grew;
    }
    return grew;
}

double subspace_distance(const Subspace& a, const Subspace& b) {
    double worst = 0.0;
    for (const Vector& v : a.basis()) worst = std::max(worst, b.residual(v).norm());
    for (const Vector& v : b.basis()) worst = std::max(worst, a.residual(v).norm());
    return worst;
}

} // namespace cuntz
