#pragma once

#include <cmath>

#include "cuntz/algebra.hpp"

// Shared constructions used across the test suites.
namespace fixtures {

using cuntz::AlgebraElement;
using cuntz::Complex;
using cuntz::Word;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// u = S_1 (S_1 S_2^* + S_2 S_1^*) S_1^* + P_2, the permutation unitary in
// U(F_2^2) whose endomorphism preserves the diagonal but not every standard
// MASA.
inline AlgebraElement block_swap_u() {
    AlgebraElement u(2);
    u.add_term({1, 1}, {1, 2}, 1.0);
    u.add_term({1, 2}, {1, 1}, 1.0);
    u.add_term({2}, {2}, 1.0);
    return u;
}

// z = (1/sqrt 2)(1 - S_1 S_2^* + S_2 S_1^*).
inline AlgebraElement rot45_z() {
    AlgebraElement z(2);
    z.add_term({}, {}, kInvSqrt2);
    z.add_term({1}, {2}, -kInvSqrt2);
    z.add_term({2}, {1}, kInvSqrt2);
    return z;
}

// z_a = a S_1 S_1^* - b S_1 S_2^* + b S_2 S_1^* + a S_2 S_2^*, b = sqrt(1-a^2).
inline AlgebraElement su2_real(double a) {
    double b = std::sqrt(std::max(0.0, 1.0 - a * a));
    AlgebraElement z(2);
    z.add_term({1}, {1}, a);
    z.add_term({1}, {2}, -b);
    z.add_term({2}, {1}, b);
    z.add_term({2}, {2}, a);
    return z;
}

// z = e^{i theta} a S_1 S_1^* + e^{i theta} b S_2 S_1^* - conj(b) S_1 S_2^* +
// conj(a) S_2 S_2^*.
inline AlgebraElement su2_phased(double theta, Complex a, Complex b) {
    Complex phase = std::polar(1.0, theta);
    AlgebraElement z(2);
    z.add_term({1}, {1}, phase * a);
    z.add_term({2}, {1}, phase * b);
    z.add_term({1}, {2}, -std::conj(b));
    z.add_term({2}, {2}, std::conj(a));
    return z;
}

// u = S_1 S_1 S_1^* + S_1 S_2 S_1^* S_2^* + S_2 S_2^* S_2^*, the mixed-degree
// normalizer element (gauge degrees -1, 0, +1).
inline AlgebraElement dyadic_u() {
    AlgebraElement u(2);
    u.add_term({1, 1}, {1}, 1.0);
    u.add_term({1, 2}, {2, 1}, 1.0);
    u.add_term({2}, {2, 2}, 1.0);
    return u;
}

// w of the two-parameter family with lambda_w(D_2) <= D_2 but w outside the
// normalizer whenever ab, cd != 0.
inline AlgebraElement nonorm_w(Complex a, Complex b, Complex c, Complex d) {
    AlgebraElement w(2);
    // S_1 (a S_1S_1^* + b S_1S_2^*) S_1^*
    w.add_term({1, 1}, {1, 1}, a);
    w.add_term({1, 1}, {1, 2}, b);
    // S_1 (c S_2S_1^* + d S_2S_2^*) S_2^*
    w.add_term({1, 2}, {2, 1}, c);
    w.add_term({1, 2}, {2, 2}, d);
    // S_2 (-conj(b) S_1S_1^* + conj(a) S_1S_2^*) S_1^*
    w.add_term({2, 1}, {1, 1}, -std::conj(b));
    w.add_term({2, 1}, {1, 2}, std::conj(a));
    // S_2 (-conj(d) S_2S_1^* + conj(c) S_2S_2^*) S_2^*
    w.add_term({2, 2}, {2, 1}, -std::conj(d));
    w.add_term({2, 2}, {2, 2}, std::conj(c));
    return w;
}

// The shift unitary: phi = lambda_u for u = sum_{i,j} S_i S_j S_i^* S_j^*.
inline AlgebraElement shift_unitary(int n) {
    AlgebraElement u(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            u.add_term({i, j}, {j, i}, 1.0);
        }
    }
    return u;
}

} // namespace fixtures
