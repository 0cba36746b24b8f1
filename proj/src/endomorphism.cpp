#include "cuntz/endomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
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

} // namespace

void PermutationMap::validate() const {
    const long expected = level_dim(n, k);
    if (static_cast<long>(map.size()) != expected) {
        throw usage_error("permutation map has " + std::to_string(map.size()) +
                          " pairs, expected " + std::to_string(expected));
    }
    std::vector<bool> seen(static_cast<std::size_t>(expected), false);
    for (const auto& [src, tgt] : map) {
        if (static_cast<int>(src.size()) != k || static_cast<int>(tgt.size()) != k) {
            throw usage_error("permutation map entry has wrong word length");
        }
        for (int letter : src) {
            if (letter < 1 || letter > n) throw usage_error("letter outside 1..n");
        }
        long idx = word_index(tgt, n);
        if (idx < 0 || idx >= expected || tgt.size() != static_cast<std::size_t>(k)) {
            throw usage_error("permutation target outside W_n^k");
        }
        for (int letter : tgt) {
            if (letter < 1 || letter > n) throw usage_error("letter outside 1..n");
        }
        if (seen[static_cast<std::size_t>(idx)]) {
            throw usage_error("permutation map is not injective");
        }
        seen[static_cast<std::size_t>(idx)] = true;
    }
}

const Word& PermutationMap::operator()(const Word& source) const {
    auto it = map.find(source);
    if (it == map.end()) throw usage_error("word missing from permutation map");
    return it->second;
}

Word InducedPermutation::apply(const Word& alpha) const {
    Word out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        out[i] = alpha[static_cast<std::size_t>(omega[i])];
    }
    return out;
}

AlgebraElement lambda_apply(const AlgebraElement& u, const AlgebraElement& x) {
    if (u.n() != x.n()) throw usage_error("lambda_apply: mismatched n");
    int max_len = x.max_word_length();
    // u_0, ..., u_maxlen and their adjoints, computed once.
    std::vector<AlgebraElement> towers;
    towers.reserve(static_cast<std::size_t>(max_len) + 1);
    towers.push_back(AlgebraElement::identity(u.n()));
    AlgebraElement shifted = u;
    for (int m = 1; m <= max_len; ++m) {
        if (m == 1) {
            towers.push_back(u);
        } else {
            shifted = phi(shifted);
            towers.push_back(towers.back() * shifted);
        }
    }
    AlgebraElement out(x.n());
    for (const auto& [key, c] : x.terms()) {
        AlgebraElement term = AlgebraElement::word(x.n(), key.first, key.second, c);
        out += towers[key.first.size()] * term * towers[key.second.size()].adjoint();
    }
    return out;
}

AlgebraElement unitary_of_endo(const std::vector<AlgebraElement>& images, double eps) {
    if (images.empty()) throw usage_error("unitary_of_endo: no images");
    const int n = images.front().n();
    if (static_cast<int>(images.size()) != n) {
        throw usage_error("unitary_of_endo: expected exactly n images");
    }
    AlgebraElement one = AlgebraElement::identity(n);
    AlgebraElement zero = AlgebraElement::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            AlgebraElement prod = images[static_cast<std::size_t>(i)].adjoint() *
                                  images[static_cast<std::size_t>(j)];
            const AlgebraElement& expected = (i == j) ? one : zero;
            if (!equals_within(prod, expected, eps)) {
                throw value_error("unitary_of_endo: images violate S_" +
                                  std::to_string(i + 1) + "^* S_" + std::to_string(j + 1) +
                                  " = " + (i == j ? "1" : "0"));
            }
        }
    }
    AlgebraElement range_sum(n);
    for (const AlgebraElement& im : images) range_sum += im * im.adjoint();
    if (!equals_within(range_sum, one, eps)) {
        throw value_error("unitary_of_endo: images violate sum_i t_i t_i^* = 1");
    }
    AlgebraElement u(n);
    for (int i = 1; i <= n; ++i) {
        u += images[static_cast<std::size_t>(i - 1)] *
             AlgebraElement::word(n, {}, {i});
    }
    return u;
}

AlgebraElement compose_endos(const AlgebraElement& u, const AlgebraElement& w) {
    return lambda_apply(u, w) * u;
}

AlgebraElement permutation_unitary(const PermutationMap& p) {
    p.validate();
    AlgebraElement out(p.n);
    for (const auto& [src, tgt] : p.map) {
        out.add_term(tgt, src, 1.0);
    }
    return out;
}

std::optional<PermutationMap> as_permutation_unitary(const AlgebraElement& x, int k,
                                                     double eps) {
    Matrix m = to_matrix(x, k);
    const long dim = m.rows();
    PermutationMap p{x.n(), k, {}};
    for (long c = 0; c < dim; ++c) {
        long hit = -1;
        for (long r = 0; r < dim; ++r) {
            double a = std::abs(m(r, c));
            if (a > eps) {
                if (hit >= 0 || std::abs(m(r, c) - Complex(1.0)) > eps) return std::nullopt;
                hit = r;
            }
        }
        if (hit < 0) return std::nullopt;
        p.map[word_at(c, x.n(), k)] = word_at(hit, x.n(), k);
    }
    p.validate();
    return p;
}

std::optional<InducedPermutation> detect_induced(const PermutationMap& p) {
    if (p.k > 10) {
        throw resource_error("detect_induced: k = " + std::to_string(p.k) +
                             " above the k <= 10 guard");
    }
    p.validate();
    std::vector<int> omega(static_cast<std::size_t>(p.k));
    std::iota(omega.begin(), omega.end(), 0);
    do {
        InducedPermutation cand{p.k, omega};
        bool ok = true;
        for (const auto& [src, tgt] : p.map) {
            if (cand.apply(src) != tgt) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    } while (std::next_permutation(omega.begin(), omega.end()));
    return std::nullopt;
}

std::vector<Matrix> induced_permutation_matrices(int n, int k) {
    const long dim = level_dim(n, k);
    std::vector<Matrix> mats;
    std::vector<int> omega(static_cast<std::size_t>(k));
    std::iota(omega.begin(), omega.end(), 0);
    do {
        InducedPermutation ip{k, omega};
        Matrix m = Matrix::Zero(dim, dim);
        for_each_word(n, k, [&](const Word& alpha) {
            m(word_index(ip.apply(alpha), n), word_index(alpha, n)) = 1.0;
        });
        mats.push_back(std::move(m));
    } while (std::next_permutation(omega.begin(), omega.end()));
    return mats;
}

namespace {

// Columns = vectorized induced-permutation matrices.
Matrix induced_span_basis(int n, int k) {
    auto mats = induced_permutation_matrices(n, k);
    const long dim2 = mats.front().rows() * mats.front().cols();
    Matrix basis(dim2, static_cast<long>(mats.size()));
    for (std::size_t j = 0; j < mats.size(); ++j) {
        basis.col(static_cast<long>(j)) =
            Eigen::Map<const Vector>(mats[j].data(), dim2);
    }
    return basis;
}

} // namespace

int induced_span_dimension(int n, int k, double tol) {
    Matrix basis = induced_span_basis(n, k);
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(basis);
    cod.setThreshold(tol);
    return static_cast<int>(cod.rank());
}

WeylResult weyl_commutation_test(const AlgebraElement& u, int k, double eps,
                                 std::uint64_t seed) {
    Matrix m = to_matrix(u, k);
    if (!is_unitary(m, std::max(eps, 1e-8))) {
        throw value_error("weyl_commutation_test: input is not unitary at level " +
                          std::to_string(k));
    }
    Matrix basis = induced_span_basis(u.n(), k);
    Vector target = Eigen::Map<const Vector>(m.data(), m.rows() * m.cols());
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(basis);
    Vector coeffs = cod.solve(target);
    WeylResult result;
    result.seed = seed;
    result.residual = (basis * coeffs - target).norm();
    result.commutes = result.residual <= eps;

    // Randomized commutation cross-check: u = z_k u z_k^* for Haar-ish z.
    std::mt19937_64 rng(seed);
    bool random_says_commutes = true;
    for (int trial = 0; trial < 10; ++trial) {
        Matrix z = random_unitary_matrix(u.n(), rng);
        Matrix zk = z;
        for (int j = 1; j < k; ++j) {
            Matrix next(zk.rows() * z.rows(), zk.cols() * z.cols());
            for (long r = 0; r < zk.rows(); ++r) {
                for (long c = 0; c < zk.cols(); ++c) {
                    next.block(r * z.rows(), c * z.cols(), z.rows(), z.cols()) =
                        zk(r, c) * z;
                }
            }
            zk = std::move(next);
        }
        if ((zk * m * zk.adjoint() - m).cwiseAbs().maxCoeff() > 1e-7) {
            random_says_commutes = false;
            break;
        }
    }
    result.random_check_agrees = (random_says_commutes == result.commutes);
    if (!result.random_check_agrees) {
        std::cerr << "weyl_commutation_test: randomized check disagrees with "
                     "projection verdict (seed "
                  << seed << ")\n";
    }
    return result;
}

bool gauge_commutation_test(const AlgebraElement& u) {
    auto degrees = u.gauge_degrees();
    return degrees.empty() || (degrees.size() == 1 && *degrees.begin() == 0);
}

Matrix random_unitary_matrix(long dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            g(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    // Fix phases so the distribution is Haar.
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (long j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

AlgebraElement random_level1_unitary(int n, std::mt19937_64& rng) {
    return from_matrix(random_unitary_matrix(n, rng), n, 1);
}

PermutationMap random_permutation_map(int n, int k, std::mt19937_64& rng) {
    const long dim = level_dim(n, k);
    std::vector<long> targets(static_cast<std::size_t>(dim));
    std::iota(targets.begin(), targets.end(), 0L);
    std::shuffle(targets.begin(), targets.end(), rng);
    PermutationMap p{n, k, {}};
    for (long i = 0; i < dim; ++i) {
        p.map[word_at(i, n, k)] = word_at(targets[static_cast<std::size_t>(i)], n, k);
    }
    return p;
}

AlgebraElement random_diagonal_phase_unitary(int n, int k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const long dim = level_dim(n, k);
    AlgebraElement out(n);
    for (long i = 0; i < dim; ++i) {
        Word w = word_at(i, n, k);
        out.add_term(w, w, std::polar(1.0, angle(rng)));
    }
    return out;
}

} // namespace cuntz
