#pragma once

#include <string>
#include <vector>

#include "cuntz/algebra.hpp"

namespace cuntz {

// Product of cyclic groups Z_{m_1} x ... x Z_{m_r}, elements enumerated
// lexicographically (identity first) and mapped to letters 1..n.
class FiniteAbelianGroup {
public:
    using Elem = std::vector<int>;

    explicit FiniteAbelianGroup(std::vector<int> orders);

    // "2" -> Z_2, "2,2" -> Z_2 x Z_2, "4" -> Z_4.
    static FiniteAbelianGroup parse(const std::string& spec);

    const std::vector<int>& orders() const { return orders_; }
    int order() const { return n_; }
    const std::vector<Elem>& elements() const { return elems_; }

    Elem zero() const { return Elem(orders_.size(), 0); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    bool is_zero(const Elem& a) const;

    int letter(const Elem& a) const;        // 1-based
    const Elem& element(int letter) const;  // inverse of letter()

    // Symmetric duality bracket <g,h> = prod_j exp(2 pi i g_j h_j / m_j).
    Complex bracket(const Elem& g, const Elem& h) const;

private:
    std::vector<int> orders_;
    int n_;
    std::vector<Elem> elems_;
};

// U(g) = sum_h <g,h> S_h S_h^*, a diagonal unitary with U(g)U(g') = U(g+g').
AlgebraElement u_of(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Elem& e);

// Images lambda(S_g) = (1/sqrt n) sum_h <g,h> S_h U(g)^*.
std::vector<AlgebraElement> izumi_images(const FiniteAbelianGroup& g);

// v_lambda = (1/sqrt n) sum_{g,h,l} <g,h-l> S_h S_l S_l^* S_g^*, in F_n^2.
AlgebraElement izumi_unitary(const FiniteAbelianGroup& g);

// Level-1 unitary implementing the Bogolyubov automorphism beta(S_h) =
// (1/sqrt n) sum_a <h,a> S_a.
AlgebraElement izumi_beta(const FiniteAbelianGroup& g);

struct IzumiCheck {
    std::string name;
    bool ok = false;
    double residual = 0.0;
};

struct IzumiReport {
    std::vector<IzumiCheck> checks;
    bool all_ok = true;
};

// Verifies the structural identities of the construction: lambda^2 is the
// displayed permutation endomorphism, lambda o beta is a permutation
// endomorphism, and lambda does not preserve the diagonal.
IzumiReport verify_izumi_identities(const FiniteAbelianGroup& g,
                                    double eps = kDefaultEps);

} // namespace cuntz
