#pragma once

#include <complex>
#include <map>
#include <set>
#include <vector>

#include "cuntz/config.hpp"
#include "cuntz/errors.hpp"

namespace cuntz {

using Complex = std::complex<double>;

// A multi-index over {1..n}.  The empty word stands for S_0 = I.
using Word = std::vector<int>;

// Finite complex linear combination of reduced words S_alpha S_beta^*.
// Terms are keyed by (alpha, beta); the representation keeps each word at its
// minimal reduced length and never auto-raises levels.  Equality testing goes
// through raise_to_profile (see equals_within).
//
// All operations are pure; elements are immutable once built apart from the
// builder-style add_term.
class AlgebraElement {
public:
    using TermMap = std::map<std::pair<Word, Word>, Complex>;

    explicit AlgebraElement(int n);

    static AlgebraElement zero(int n) { return AlgebraElement(n); }
    static AlgebraElement identity(int n);
    // c * S_alpha S_beta^*
    static AlgebraElement word(int n, Word alpha, Word beta, Complex c = 1.0);

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c into the (alpha, beta) slot, dropping it if the result
    // falls below the zero tolerance.  Letters are validated against 1..n.
    AlgebraElement& add_term(const Word& alpha, const Word& beta, Complex c);

    AlgebraElement adjoint() const;

    // Drops terms with |coeff| <= eps (defaults to the global zero tolerance).
    AlgebraElement& prune(double eps = -1.0);

    Complex coefficient(const Word& alpha, const Word& beta) const;

    // Gauge degrees |alpha| - |beta| present among the terms.
    std::set<int> gauge_degrees() const;

    // max_i max(|alpha_i|, |beta_i|), 0 for scalars.
    int max_word_length() const;

    double max_abs_coeff() const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(Complex c);

    friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend AlgebraElement operator*(AlgebraElement lhs, Complex c) {
        lhs *= c;
        return lhs;
    }
    friend AlgebraElement operator*(Complex c, AlgebraElement rhs) {
        rhs *= c;
        return rhs;
    }
    friend AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs);

private:
    int n_;
    TermMap terms_;
};

// Reduced product of two single terms via the Cuntz relations:
// (S_a1 S_b1^*)(S_a2 S_b2^*) is S_{a1 mu} S_{b2}^* when a2 = b1.mu,
// S_{a1} S_{b2 nu}^* when b1 = a2.nu, and zero otherwise.
// Returns false when the product vanishes.
bool reduce_word_product(const Word& alpha1, const Word& beta1,
                         const Word& alpha2, const Word& beta2,
                         Word& alpha_out, Word& beta_out);

// Canonical shift phi(x) = sum_i S_i x S_i^*, applied `power` times.
AlgebraElement phi(const AlgebraElement& x, int power = 1);

// u_k = u phi(u) ... phi^{k-1}(u).  If non_unitary_warning is given and u lies
// in some F_n^k within the level cap, it is set when u fails the matrix
// unitarity check; the tower is still computed.
AlgebraElement u_tower(const AlgebraElement& u, int k,
                       bool* non_unitary_warning = nullptr);

// Rewrites x so every term of gauge degree d has |beta| = profile.at(d),
// using S_a S_b^* = sum_mu S_{a mu} S_{b mu}^*.  Degrees absent from the
// profile are left untouched.  Throws value_error if a target undercuts an
// existing term.
AlgebraElement raise_to_profile(const AlgebraElement& x,
                                const std::map<int, int>& profile);

// The per-degree beta-length profile needed to compare x and y coordinatewise.
std::map<int, int> common_profile(const AlgebraElement& x, const AlgebraElement& y);

// Largest coefficient difference after raising both sides to a common profile.
double max_coeff_difference(const AlgebraElement& x, const AlgebraElement& y);

bool equals_within(const AlgebraElement& x, const AlgebraElement& y,
                   double eps = kDefaultEps);

// Partition of the terms by gauge degree; the parts sum to x exactly.
std::map<int, AlgebraElement> gauge_decompose(const AlgebraElement& x);

// gamma_t with t = e^{i theta}: scales each term by t^{|alpha|-|beta|}.
AlgebraElement gauge_act(const AlgebraElement& x, double theta);

// Smallest k with x in F_n^k.  Throws value_error when x has a nonzero gauge
// degree component.
int f_level(const AlgebraElement& x);

} // namespace cuntz
