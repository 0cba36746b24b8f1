#include "cuntz/izumi.hpp"

#include <cmath>
#include <sstream>

#include "cuntz/endomorphism.hpp"
#include "cuntz/masa.hpp"

namespace cuntz {

namespace {
constexpr int kGroupCap = 16;  // keeps level-2 matrices at 256 x 256 or less
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders)
    : orders_(std::move(orders)) {
    if (orders_.empty()) throw usage_error("group needs at least one cyclic factor");
    long n = 1;
    for (int m : orders_) {
        if (m < 1) throw usage_error("cyclic order must be >= 1");
        n *= m;
        if (n > kGroupCap) {
            throw resource_error("group order exceeds cap " + std::to_string(kGroupCap));
        }
    }
    n_ = static_cast<int>(n);
    if (n_ < 2) throw usage_error("group must have order >= 2");
    // Lexicographic enumeration; (0,...,0) comes first.
    Elem cur(orders_.size(), 0);
    elems_.reserve(static_cast<std::size_t>(n_));
    while (true) {
        elems_.push_back(cur);
        int pos = static_cast<int>(orders_.size()) - 1;
        while (pos >= 0) {
            if (++cur[static_cast<std::size_t>(pos)] <
                orders_[static_cast<std::size_t>(pos)]) {
                break;
            }
            cur[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec) {
    std::vector<int> orders;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            orders.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw usage_error("bad group spec: '" + spec + "'");
        }
    }
    return FiniteAbelianGroup(orders);
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem out(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        out[j] = (a[j] + b[j]) % orders_[j];
    }
    return out;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::neg(const Elem& a) const {
    Elem out(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        out[j] = (orders_[j] - a[j]) % orders_[j];
    }
    return out;
}

bool FiniteAbelianGroup::is_zero(const Elem& a) const {
    for (int v : a) {
        if (v != 0) return false;
    }
    return true;
}

int FiniteAbelianGroup::letter(const Elem& a) const {
    int idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        idx = idx * orders_[j] + a[j];
    }
    return idx + 1;
}

const FiniteAbelianGroup::Elem& FiniteAbelianGroup::element(int letter) const {
    if (letter < 1 || letter > n_) throw usage_error("letter outside 1..n");
    return elems_[static_cast<std::size_t>(letter - 1)];
}

Complex FiniteAbelianGroup::bracket(const Elem& g, const Elem& h) const {
    double angle = 0.0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        angle += 2.0 * M_PI * static_cast<double>(g[j]) * static_cast<double>(h[j]) /
                 static_cast<double>(orders_[j]);
    }
    return std::polar(1.0, angle);
}

AlgebraElement u_of(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Elem& e) {
    AlgebraElement out(g.order());
    for (const auto& h : g.elements()) {
        int letter = g.letter(h);
        out.add_term({letter}, {letter}, g.bracket(e, h));
    }
    return out;
}

std::vector<AlgebraElement> izumi_images(const FiniteAbelianGroup& g) {
    const int n = g.order();
    const double root = std::sqrt(static_cast<double>(n));
    std::vector<AlgebraElement> images;
    images.reserve(static_cast<std::size_t>(n));
    for (const auto& elem : g.elements()) {
        AlgebraElement sum(n);
        for (const auto& h : g.elements()) {
            sum.add_term({g.letter(h)}, {}, g.bracket(elem, h) / root);
        }
        images.push_back(sum * u_of(g, elem).adjoint());
    }
    return images;
}

AlgebraElement izumi_unitary(const FiniteAbelianGroup& g) {
    const int n = g.order();
    const double root = std::sqrt(static_cast<double>(n));
    AlgebraElement out(n);
    for (const auto& ge : g.elements()) {
        for (const auto& h : g.elements()) {
            for (const auto& l : g.elements()) {
                // S_h S_l S_l^* S_g^* = S_{(h,l)} S_{(g,l)}^*
                Complex c = g.bracket(ge, g.add(h, g.neg(l))) / root;
                out.add_term({g.letter(h), g.letter(l)}, {g.letter(ge), g.letter(l)}, c);
            }
        }
    }
    return out;
}

AlgebraElement izumi_beta(const FiniteAbelianGroup& g) {
    const int n = g.order();
    const double root = std::sqrt(static_cast<double>(n));
    AlgebraElement out(n);
    for (const auto& h : g.elements()) {
        for (const auto& a : g.elements()) {
            out.add_term({g.letter(a)}, {g.letter(h)}, g.bracket(h, a) / root);
        }
    }
    return out;
}

IzumiReport verify_izumi_identities(const FiniteAbelianGroup& g, double eps) {
    IzumiReport report;
    const int n = g.order();
    AlgebraElement v = izumi_unitary(g);
    AlgebraElement beta = izumi_beta(g);

    auto record = [&report](const std::string& name, bool ok, double residual) {
        report.checks.push_back({name, ok, residual});
        report.all_ok = report.all_ok && ok;
    };

    record("v_lambda unitary at level 2",
           is_unitary(v, 2, eps) ? true : false, 0.0);
    record("beta unitary at level 1", is_unitary(beta, 1, eps) ? true : false, 0.0);

    // (a) lambda^2(S_g) = sum_k S_k S_{g+k} S_k^*.
    {
        double worst = 0.0;
        for (const auto& ge : g.elements()) {
            AlgebraElement s_g = AlgebraElement::word(n, {g.letter(ge)}, {});
            AlgebraElement lhs = lambda_apply(v, lambda_apply(v, s_g));
            AlgebraElement rhs(n);
            for (const auto& ke : g.elements()) {
                rhs.add_term({g.letter(ke), g.letter(g.add(ge, ke))}, {g.letter(ke)},
                             1.0);
            }
            worst = std::max(worst, max_coeff_difference(lhs, rhs));
        }
        record("lambda^2 generator images are the displayed permutation form",
               worst <= eps, worst);
    }

    // (b) v_{lambda^2} = compose(v, v) = sum_{g,h} S_g S_{h+g} S_g^* S_h^*.
    {
        AlgebraElement composed = compose_endos(v, v);
        AlgebraElement expected(n);
        for (const auto& ge : g.elements()) {
            for (const auto& he : g.elements()) {
                expected.add_term({g.letter(ge), g.letter(g.add(he, ge))},
                                  {g.letter(he), g.letter(ge)}, 1.0);
            }
        }
        double diff = max_coeff_difference(composed, expected);
        record("compose(v,v) equals the permutation unitary of lambda^2",
               diff <= eps, diff);
    }

    // (c) lambda' = lambda o beta is a permutation endomorphism.
    {
        AlgebraElement composed = compose_endos(v, beta);
        AlgebraElement expected(n);
        for (const auto& he : g.elements()) {
            for (const auto& be : g.elements()) {
                // S_b S_{h+b} S_{h+b}^* S_h^* = S_{(b,h+b)} S_{(h,h+b)}^*
                const auto hb = g.add(he, be);
                expected.add_term({g.letter(be), g.letter(hb)},
                                  {g.letter(he), g.letter(hb)}, 1.0);
            }
        }
        double diff = max_coeff_difference(composed, expected);
        bool is_perm = as_permutation_unitary(composed, 2, eps).has_value();
        record("compose(v,beta) equals the permutation unitary of lambda'",
               diff <= eps, diff);
        record("lambda' image is a genuine permutation unitary", is_perm,
               is_perm ? 0.0 : 1.0);
    }

    // (d) lambda does not preserve the diagonal.
    {
        DecisionReport decision = decide_diagonal_invariance(v, 2, eps);
        record("lambda fails the diagonal invariance decision",
               !decision.preserves_diagonal, decision.preserves_diagonal ? 1.0 : 0.0);
    }

    return report;
}

} // namespace cuntz
