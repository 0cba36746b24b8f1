#include "cuntz/masa.hpp"

#include <cmath>
#include <deque>
#include <string>

namespace cuntz {

namespace {

template <typename F>
void for_each_word(int n, int length, F&& f) {
    Word w(static_cast<std::size_t>(length), 1);
    while (true) {
        f(w);
        int pos = length - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
            w[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<std::size_t>(pos)];
    }
}

Vector vectorize(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.rows() * m.cols());
}

Matrix devectorize(const Vector& v, long dim) {
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

// phi(x) at one level up: identity slot in the first (most significant) factor.
Matrix phi_matrix(const Matrix& x, int n) {
    const long d = x.rows();
    Matrix out = Matrix::Zero(d * n, d * n);
    for (int i = 0; i < n; ++i) {
        out.block(i * d, i * d, d, d) = x;
    }
    return out;
}

// P_i at level k: diagonal indicator of words starting with letter i.
Matrix level_projection(int n, int k, int i) {
    const long dim = level_dim(n, k);
    const long block = dim / n;
    Matrix out = Matrix::Zero(dim, dim);
    out.block((i - 1) * block, (i - 1) * block, block, block) =
        Matrix::Identity(block, block);
    return out;
}

} // namespace

bool is_diagonal(const AlgebraElement& x, double eps) {
    AlgebraElement zero = AlgebraElement::zero(x.n());
    for (const auto& [degree, part] : gauge_decompose(x)) {
        if (degree == 0) continue;
        if (!equals_within(part, zero, eps)) return false;
    }
    auto parts = gauge_decompose(x);
    auto it = parts.find(0);
    if (it == parts.end()) return true;
    const AlgebraElement& core = it->second;
    int level = core.max_word_length();
    AlgebraElement raised = raise_to_profile(core, {{0, level}});
    for (const auto& [key, c] : raised.terms()) {
        if (key.first != key.second && std::abs(c) > eps) return false;
    }
    return true;
}

Matrix e_slice(const Matrix& a, int n, int i, int j) {
    const long d = a.rows() / n;
    Matrix out(d, d);
    for (long r = 0; r < d; ++r) {
        for (long c = 0; c < d; ++c) {
            out(r, c) = a(r * n + (i - 1), c * n + (j - 1));
        }
    }
    return out;
}

std::vector<std::vector<AlgebraElement>> e_slices(const AlgebraElement& a, int k) {
    if (k < 1) throw usage_error("e_slices: k must be >= 1");
    const int n = a.n();
    Matrix m = to_matrix(a, k);
    std::vector<std::vector<AlgebraElement>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<AlgebraElement> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            row.push_back(from_matrix(e_slice(m, n, i, j), n, k - 1));
        }
        out.push_back(std::move(row));
    }
    return out;
}

DecisionReport decide_diagonal_invariance(const AlgebraElement& w, int k, double eps) {
    if (k < 1) throw usage_error("decide_diagonal_invariance: k must be >= 1");
    const int n = w.n();
    Matrix wm = to_matrix(w, k);
    if (!is_unitary(wm, std::max(eps, 1e-8))) {
        throw value_error("decide_diagonal_invariance: w is not unitary at level " +
                          std::to_string(k));
    }

    DecisionReport report;
    report.n = n;
    report.k = k;
    report.eps = eps;

    const long d = level_dim(n, k - 1);
    Subspace span(d * d, eps);
    {
        Matrix id = Matrix::Identity(d, d);
        span.add(vectorize(id));
    }
    report.subspace_dims.push_back(span.dimension());  // dim S_0 = 1

    // Frontier of subspace basis vectors whose (Ad w o phi)-images are still
    // unprocessed, as level-(k-1) matrices.
    std::deque<Matrix> frontier;

    auto fail_with = [&](const Matrix& image) {
        report.preserves_diagonal = false;
        report.witness = from_matrix(image, n, k);
        report.R = static_cast<int>(report.subspace_dims.size()) - 1;
        return report;
    };

    auto absorb_slices = [&](const Matrix& image, bool* grew) {
        for (int j = 1; j <= n; ++j) {
            Matrix slice = e_slice(image, n, j, j);
            Vector v = vectorize(slice);
            if (span.add(v)) {
                *grew = true;
                frontier.push_back(slice);
            }
        }
    };

    // Round 1: x ranges over the basis P_1..P_n of D_n^1.
    bool grew = false;
    for (int i = 1; i <= n; ++i) {
        Matrix image = wm * level_projection(n, k, i) * wm.adjoint();
        if (!matrix_is_diagonal(image, eps)) return fail_with(image);
        absorb_slices(image, &grew);
    }
    report.subspace_dims.push_back(span.dimension());

    // Subsequent rounds: push new basis vectors through Ad w o phi.
    const int bound = static_cast<int>(d * d) + 2;
    for (int round = 2; grew && round <= bound; ++round) {
        std::deque<Matrix> work;
        work.swap(frontier);
        grew = false;
        for (const Matrix& x : work) {
            Matrix image = wm * phi_matrix(x, n) * wm.adjoint();
            if (!matrix_is_diagonal(image, eps)) return fail_with(image);
            absorb_slices(image, &grew);
        }
        report.subspace_dims.push_back(span.dimension());
    }

    report.preserves_diagonal = true;
    report.R = static_cast<int>(report.subspace_dims.size()) - 1;
    return report;
}

bool oracle_direct_check(const AlgebraElement& w, int k, int depth, double eps) {
    if (depth < 1) throw usage_error("oracle_direct_check: depth must be >= 1");
    (void)k;
    const int n = w.n();
    for (int m = 1; m <= depth; ++m) {
        AlgebraElement wm = u_tower(w, m);
        AlgebraElement wm_adj = wm.adjoint();
        bool ok = true;
        for_each_word(n, m, [&](const Word& alpha) {
            if (!ok) return;
            AlgebraElement image =
                wm * AlgebraElement::word(n, alpha, alpha) * wm_adj;
            if (!is_diagonal(image, eps)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool sufficient_cor42(const AlgebraElement& w, int k, double eps) {
    const int n = w.n();
    Matrix wm = to_matrix(w, k);
    if (!is_unitary(wm, std::max(eps, 1e-8))) {
        throw value_error("sufficient_cor42: w is not unitary at level " +
                          std::to_string(k));
    }
    const long dim = wm.rows();
    Subspace left(dim * dim, eps);
    Subspace right(dim * dim, eps);
    for (int i = 1; i <= n; ++i) {
        Matrix p = level_projection(n, k, i);
        left.add(vectorize(Matrix(wm * p * wm.adjoint())));
        // phi^{k-1}(P_i): indicator of the last letter.
        Matrix q = Matrix::Zero(dim, dim);
        for (long r = 0; r < dim; ++r) {
            if (r % n == i - 1) q(r, r) = 1.0;
        }
        right.add(vectorize(q));
    }
    for (const Vector& v : left.basis()) {
        if (!right.contains(v)) return false;
    }
    for (const Vector& v : right.basis()) {
        if (!left.contains(v)) return false;
    }
    return true;
}

bool sufficient_prop45(const AlgebraElement& w, int k, double eps) {
    const int n = w.n();
    Matrix wm = to_matrix(w, k);
    if (!is_unitary(wm, std::max(eps, 1e-8))) {
        throw value_error("sufficient_prop45: w is not unitary at level " +
                          std::to_string(k));
    }
    // [DF1]
    std::vector<Matrix> conjugated;
    for (int i = 1; i <= n; ++i) {
        Matrix image = wm * level_projection(n, k, i) * wm.adjoint();
        if (!matrix_is_diagonal(image, eps)) return false;
        conjugated.push_back(std::move(image));
    }
    // [DF2]: commutation at level k + r.
    for (int r = 1; r <= k - 1; ++r) {
        const long extra = level_dim(n, r);
        const long dim = wm.rows() * extra;
        Matrix w_big = Matrix::Zero(dim, dim);
        for (long a = 0; a < wm.rows(); ++a) {
            for (long b = 0; b < wm.cols(); ++b) {
                if (std::abs(wm(a, b)) > 0) {
                    w_big.block(a * extra, b * extra, extra, extra) =
                        wm(a, b) * Matrix::Identity(extra, extra);
                }
            }
        }
        for (const Matrix& c : conjugated) {
            Matrix shifted = c;
            for (int s = 0; s < r; ++s) shifted = phi_matrix(shifted, n);
            if ((w_big * shifted - shifted * w_big).cwiseAbs().maxCoeff() > eps) {
                return false;
            }
        }
    }
    return true;
}

AlgebraElement conjugate_by_bogolyubov(const AlgebraElement& u,
                                       const AlgebraElement& z) {
    int z_level = f_level(z);
    if (z_level > 1) {
        throw value_error("conjugate_by_bogolyubov: z is not in F_n^1");
    }
    if (!is_unitary(z, 1, 1e-8)) {
        throw value_error("conjugate_by_bogolyubov: z is not unitary");
    }
    return lambda_apply(z.adjoint(), u);
}

DecisionReport standard_masa_invariance(const AlgebraElement& u,
                                        const AlgebraElement& z, double eps) {
    AlgebraElement v = conjugate_by_bogolyubov(u, z);
    v.prune(std::min(eps, limits().zero_eps));
    int k = std::max(1, f_level(v));
    return decide_diagonal_invariance(v, k, eps);
}

bool masa_equal(const AlgebraElement& w, const AlgebraElement& z, double eps) {
    if (f_level(w) > 1 || f_level(z) > 1) {
        throw value_error("masa_equal: inputs must lie in F_n^1");
    }
    return is_monomial(w.adjoint() * z, 1, eps);
}

NormalizerCheck ad_normalizer_necessary(const AlgebraElement& v, int depth,
                                        double eps) {
    NormalizerCheck check;
    check.depth = depth;
    auto degrees = v.gauge_degrees();
    bool pure = degrees.empty() || (degrees.size() == 1 && *degrees.begin() == 0);
    if (pure) {
        int k = std::max(1, f_level(v));
        if (k <= depth) {
            check.exact = true;
            check.in_normalizer = is_monomial(v, k, eps);
            return check;
        }
    }
    AlgebraElement v_adj = v.adjoint();
    for (int m = 1; m <= depth; ++m) {
        bool ok = true;
        for_each_word(v.n(), m, [&](const Word& alpha) {
            if (!ok) return;
            AlgebraElement image = v * AlgebraElement::word(v.n(), alpha, alpha) * v_adj;
            if (!is_diagonal(image, eps)) ok = false;
        });
        if (!ok) {
            check.in_normalizer = false;
            return check;
        }
    }
    check.in_normalizer = true;
    return check;
}

CylinderMap restrict_to_diagonal(const AlgebraElement& w, int k, int depth,
                                 double eps) {
    if (depth < 1) throw usage_error("restrict_to_diagonal: depth must be >= 1");
    DecisionReport report = decide_diagonal_invariance(w, k, eps);
    if (!report.preserves_diagonal) {
        throw value_error(
            "restrict_to_diagonal: lambda_w does not preserve the diagonal; run "
            "the decision procedure for details");
    }
    const int n = w.n();
    const int target_level = depth + k - 1;
    CylinderMap cm;
    cm.n = n;
    cm.k = k;
    cm.depth = depth;

    AlgebraElement wd = u_tower(w, depth);
    AlgebraElement wd_adj = wd.adjoint();
    for_each_word(n, depth, [&](const Word& alpha) {
        AlgebraElement image = wd * AlgebraElement::word(n, alpha, alpha) * wd_adj;
        AlgebraElement raised = raise_to_profile(image, {{0, target_level}});
        std::vector<std::pair<Word, double>> weights;
        for (const auto& [key, c] : raised.terms()) {
            if (key.first != key.second) {
                if (std::abs(c) > eps) {
                    throw value_error("restrict_to_diagonal: non-diagonal image "
                                      "despite positive decision");
                }
                continue;
            }
            if (std::abs(c) > eps) {
                weights.emplace_back(key.first, c.real());
                if (std::abs(c - Complex(1.0)) > eps) cm.zero_one = false;
            }
        }
        cm.weighted[alpha] = weights;
    });

    if (cm.zero_one) {
        for (const auto& [alpha, weights] : cm.weighted) {
            std::vector<Word> images;
            images.reserve(weights.size());
            for (const auto& [gamma, c] : weights) {
                (void)c;
                images.push_back(gamma);
            }
            cm.entries[alpha] = std::move(images);
        }
        cm.weighted.clear();
    }
    return cm;
}

} // namespace cuntz
