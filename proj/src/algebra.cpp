#include "cuntz/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cuntz {

Limits& limits() {
    static Limits instance;
    return instance;
}

namespace {

void check_word(const Word& w, int n) {
    for (int letter : w) {
        if (letter < 1 || letter > n) {
            throw usage_error("letter " + std::to_string(letter) +
                              " outside 1.." + std::to_string(n));
        }
    }
}

void check_same_n(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.n() != y.n()) {
        throw usage_error("elements live in different Cuntz algebras (n=" +
                          std::to_string(x.n()) + " vs n=" + std::to_string(y.n()) + ")");
    }
}

void check_term_cap(std::size_t count, const char* op) {
    if (count > limits().max_terms) {
        throw resource_error(std::string(op) + ": term count " + std::to_string(count) +
                             " exceeds cap " + std::to_string(limits().max_terms));
    }
}

// Enumerates all words of the given length, invoking f on each.
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

AlgebraElement::AlgebraElement(int n) : n_(n) {
    if (n < 2) throw usage_error("n must be at least 2");
}

AlgebraElement AlgebraElement::identity(int n) {
    AlgebraElement e(n);
    e.add_term({}, {}, 1.0);
    return e;
}

AlgebraElement AlgebraElement::word(int n, Word alpha, Word beta, Complex c) {
    AlgebraElement e(n);
    e.add_term(alpha, beta, c);
    return e;
}

AlgebraElement& AlgebraElement::add_term(const Word& alpha, const Word& beta, Complex c) {
    check_word(alpha, n_);
    check_word(beta, n_);
    auto key = std::make_pair(alpha, beta);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (std::abs(c) > 1e-15) {
            terms_.emplace(std::move(key), c);
            check_term_cap(terms_.size(), "add_term");
        }
    } else {
        it->second += c;
        if (std::abs(it->second) <= 1e-15) terms_.erase(it);
    }
    return *this;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement out(n_);
    for (const auto& [key, c] : terms_) {
        out.terms_.emplace(std::make_pair(key.second, key.first), std::conj(c));
    }
    return out;
}

AlgebraElement& AlgebraElement::prune(double eps) {
    if (eps < 0.0) eps = limits().zero_eps;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= eps) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

Complex AlgebraElement::coefficient(const Word& alpha, const Word& beta) const {
    auto it = terms_.find(std::make_pair(alpha, beta));
    return it == terms_.end() ? Complex(0.0) : it->second;
}

std::set<int> AlgebraElement::gauge_degrees() const {
    std::set<int> degrees;
    for (const auto& [key, c] : terms_) {
        (void)c;
        degrees.insert(static_cast<int>(key.first.size()) -
                       static_cast<int>(key.second.size()));
    }
    return degrees;
}

int AlgebraElement::max_word_length() const {
    std::size_t len = 0;
    for (const auto& [key, c] : terms_) {
        (void)c;
        len = std::max({len, key.first.size(), key.second.size()});
    }
    return static_cast<int>(len);
}

double AlgebraElement::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) {
        (void)key;
        m = std::max(m, std::abs(c));
    }
    return m;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out = *this;
    for (auto& [key, c] : out.terms_) {
        (void)key;
        c = -c;
    }
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    check_same_n(*this, rhs);
    for (const auto& [key, c] : rhs.terms_) {
        add_term(key.first, key.second, c);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    check_same_n(*this, rhs);
    for (const auto& [key, c] : rhs.terms_) {
        add_term(key.first, key.second, -c);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex c) {
    if (std::abs(c) <= 1e-15) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) {
        (void)key;
        coeff *= c;
    }
    return *this;
}

bool reduce_word_product(const Word& alpha1, const Word& beta1,
                         const Word& alpha2, const Word& beta2,
                         Word& alpha_out, Word& beta_out) {
    // S_{b1}^* S_{a2} reduces iff one of b1, a2 is a prefix of the other.
    const Word* shorter = &beta1;
    const Word* longer = &alpha2;
    bool beta_shorter = true;
    if (beta1.size() > alpha2.size()) {
        shorter = &alpha2;
        longer = &beta1;
        beta_shorter = false;
    }
    if (!std::equal(shorter->begin(), shorter->end(), longer->begin())) return false;

    if (beta_shorter) {
        // a2 = b1 . mu  =>  S_{a1 mu} S_{b2}^*
        alpha_out = alpha1;
        alpha_out.insert(alpha_out.end(), alpha2.begin() + static_cast<long>(beta1.size()),
                         alpha2.end());
        beta_out = beta2;
    } else {
        // b1 = a2 . nu  =>  S_{a1} S_{b2 nu}^*
        alpha_out = alpha1;
        beta_out = beta2;
        beta_out.insert(beta_out.end(), beta1.begin() + static_cast<long>(alpha2.size()),
                        beta1.end());
    }
    return true;
}

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    check_same_n(lhs, rhs);
    AlgebraElement out(lhs.n());
    Word alpha, beta;
    for (const auto& [k1, c1] : lhs.terms_) {
        for (const auto& [k2, c2] : rhs.terms_) {
            if (reduce_word_product(k1.first, k1.second, k2.first, k2.second, alpha, beta)) {
                out.add_term(alpha, beta, c1 * c2);
            }
        }
    }
    out.prune();
    return out;
}

AlgebraElement phi(const AlgebraElement& x, int power) {
    if (power < 0) throw usage_error("phi power must be >= 0");
    AlgebraElement cur = x;
    for (int p = 0; p < power; ++p) {
        AlgebraElement next(cur.n());
        for (const auto& [key, c] : cur.terms()) {
            for (int i = 1; i <= cur.n(); ++i) {
                Word alpha;
                alpha.reserve(key.first.size() + 1);
                alpha.push_back(i);
                alpha.insert(alpha.end(), key.first.begin(), key.first.end());
                Word beta;
                beta.reserve(key.second.size() + 1);
                beta.push_back(i);
                beta.insert(beta.end(), key.second.begin(), key.second.end());
                next.add_term(alpha, beta, c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

AlgebraElement u_tower(const AlgebraElement& u, int k, bool* non_unitary_warning) {
    if (k < 0) throw usage_error("tower index must be >= 0");
    if (non_unitary_warning != nullptr) {
        // Word-level unitarity check; does not require a matrix level.
        AlgebraElement one = AlgebraElement::identity(u.n());
        *non_unitary_warning = !equals_within(u * u.adjoint(), one, kDefaultEps) ||
                               !equals_within(u.adjoint() * u, one, kDefaultEps);
    }
    if (k == 0) return AlgebraElement::identity(u.n());
    AlgebraElement result = u;
    AlgebraElement shifted = u;
    for (int j = 1; j < k; ++j) {
        shifted = phi(shifted);
        result = result * shifted;
    }
    return result;
}

AlgebraElement raise_to_profile(const AlgebraElement& x, const std::map<int, int>& profile) {
    AlgebraElement out(x.n());
    for (const auto& [key, c] : x.terms()) {
        int degree = static_cast<int>(key.first.size()) - static_cast<int>(key.second.size());
        auto it = profile.find(degree);
        if (it == profile.end()) {
            out.add_term(key.first, key.second, c);
            continue;
        }
        int target = it->second;
        int current = static_cast<int>(key.second.size());
        if (target < current) {
            throw value_error("raise_to_profile: target |beta|=" + std::to_string(target) +
                              " below existing length " + std::to_string(current));
        }
        for_each_word(x.n(), target - current, [&](const Word& mu) {
            Word alpha = key.first;
            alpha.insert(alpha.end(), mu.begin(), mu.end());
            Word beta = key.second;
            beta.insert(beta.end(), mu.begin(), mu.end());
            out.add_term(alpha, beta, c);
        });
    }
    return out;
}

std::map<int, int> common_profile(const AlgebraElement& x, const AlgebraElement& y) {
    std::map<int, int> profile;
    auto absorb = [&profile](const AlgebraElement& e) {
        for (const auto& [key, c] : e.terms()) {
            (void)c;
            int degree = static_cast<int>(key.first.size()) -
                         static_cast<int>(key.second.size());
            int blen = static_cast<int>(key.second.size());
            auto [it, inserted] = profile.emplace(degree, blen);
            if (!inserted) it->second = std::max(it->second, blen);
        }
    };
    absorb(x);
    absorb(y);
    return profile;
}

double max_coeff_difference(const AlgebraElement& x, const AlgebraElement& y) {
    auto profile = common_profile(x, y);
    AlgebraElement rx = raise_to_profile(x, profile);
    AlgebraElement ry = raise_to_profile(y, profile);
    double worst = 0.0;
    for (const auto& [key, c] : rx.terms()) {
        worst = std::max(worst, std::abs(c - ry.coefficient(key.first, key.second)));
    }
    for (const auto& [key, c] : ry.terms()) {
        worst = std::max(worst, std::abs(c - rx.coefficient(key.first, key.second)));
    }
    return worst;
}

bool equals_within(const AlgebraElement& x, const AlgebraElement& y, double eps) {
    check_same_n(x, y);
    return max_coeff_difference(x, y) <= eps;
}

std::map<int, AlgebraElement> gauge_decompose(const AlgebraElement& x) {
    std::map<int, AlgebraElement> parts;
    for (const auto& [key, c] : x.terms()) {
        int degree = static_cast<int>(key.first.size()) - static_cast<int>(key.second.size());
        auto it = parts.find(degree);
        if (it == parts.end()) {
            it = parts.emplace(degree, AlgebraElement(x.n())).first;
        }
        it->second.add_term(key.first, key.second, c);
    }
    return parts;
}

AlgebraElement gauge_act(const AlgebraElement& x, double theta) {
    AlgebraElement out(x.n());
    for (const auto& [key, c] : x.terms()) {
        int degree = static_cast<int>(key.first.size()) - static_cast<int>(key.second.size());
        out.add_term(key.first, key.second,
                     c * std::polar(1.0, theta * static_cast<double>(degree)));
    }
    return out;
}

int f_level(const AlgebraElement& x) {
    int level = 0;
    for (const auto& [key, c] : x.terms()) {
        (void)c;
        if (key.first.size() != key.second.size()) {
            throw value_error("element has nonzero gauge degree; not in F_n");
        }
        level = std::max(level, static_cast<int>(key.first.size()));
    }
    return level;
}

} // namespace cuntz
