/*
   Copyright 2026 The salemkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SALEMKIT_TRACE_POLYNOMIAL_HPP
#define SALEMKIT_TRACE_POLYNOMIAL_HPP

// The substitution x = z + 1/z, which carries a reciprocal polynomial of
// degree 2m to a degree-m polynomial whose roots in [-2, 2] are the images
// of the unit-circle roots.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

namespace salemkit {

/**
 * The unique T with S(z) = z^m T(z + 1/z) for reciprocal S of degree 2m.
 *
 * S(z)/z^m = c_m + sum_{j>=1} c_{m+j} v_j(x) with v_j = z^j + z^-j, and
 * v_{j+1} = x v_j - v_{j-1}; the sum is evaluated with Clenshaw's
 * recurrence so every intermediate stays an integer polynomial.
 */
inline IntPolynomial x_transform(const IntPolynomial& s)
{
    if (s.is_zero())
        throw Error(Errc::PreconditionFailed, "x_transform of the zero polynomial");
    if (s.degree() % 2 != 0)
        throw Error(Errc::OddDegree, "degree " + std::to_string(s.degree()));
    if (!is_reciprocal(s))
        throw Error(Errc::NotReciprocal, "coefficients are not palindromic");
    const std::size_t m = static_cast<std::size_t>(s.degree() / 2);
    if (m == 0)
        return s;
    // b1 = b_k, b2 = b_{k+1}; polynomials in x, ascending.
    std::vector<mpz_class> b1, b2;
    for (std::size_t k = m; k >= 1; --k) {
        // next = a_k + x*b1 - b2
        std::vector<mpz_class> next(b1.size() + 1);
        for (std::size_t i = 0; i < b1.size(); ++i)
            next[i + 1] = b1[i];
        for (std::size_t i = 0; i < b2.size(); ++i)
            next[i] -= b2[i];
        next[0] += s[m + k];
        b2 = std::move(b1);
        b1 = std::move(next);
    }
    // T = c_m + x*b_1 - 2*b_2
    std::vector<mpz_class> t(b1.size() + 1);
    for (std::size_t i = 0; i < b1.size(); ++i)
        t[i + 1] = b1[i];
    for (std::size_t i = 0; i < b2.size(); ++i)
        t[i] -= 2 * b2[i];
    t[0] += s[m];
    return IntPolynomial(std::move(t));
}

/// Sign-change evidence that a degree-m polynomial has `expected` simple
/// roots in (-2, 2), gathered on a grid x_k = 2cos(pi k / N).
struct GridCertificate {
    bool found = false;
    std::size_t points = 0;  ///< final grid size N
    std::size_t changes = 0; ///< strict sign changes observed
};

/**
 * Evaluates t exactly at dyadic approximations of 2cos(pi k/N), doubling N
 * until `expected` strict sign changes appear or `max_points` is reached.
 * A sign change between consecutive points proves a root between them, so
 * `found` is a proof; failure proves nothing. Any grid point that is an
 * exact root aborts the search.
 */
inline GridCertificate grid_sign_changes(const IntPolynomial& t, std::size_t expected, std::size_t max_points)
{
    constexpr unsigned long kShift = 48;
    const double scale = std::ldexp(1.0, static_cast<int>(kShift));
    GridCertificate cert;
    if (expected == 0)
        return {true, 0, 0};

    auto sign_at_k = [&](std::size_t k, std::size_t n) -> int {
        if (k == 0)
            return sign_at(t, Rational(2));
        if (k == n)
            return sign_at(t, Rational(-2));
        const double x = 2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
        const mpz_class num(static_cast<long>(std::llround(x * scale)));
        return sign_at_dyadic(t, num, kShift);
    };

    std::size_t n = 4 * (expected + 1);
    std::vector<int> signs(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        signs[k] = sign_at_k(k, n);
    for (;;) {
        std::size_t changes = 0;
        int last = 0;
        bool zero = false;
        for (int s : signs) {
            if (s == 0) {
                zero = true;
                break;
            }
            if (last != 0 && s != last)
                ++changes;
            last = s;
        }
        cert.points = n;
        cert.changes = changes;
        if (zero)
            return cert;
        if (changes >= expected) {
            cert.found = (changes == expected);
            return cert;
        }
        if (2 * n > max_points)
            return cert;
        std::vector<int> finer(2 * n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            finer[2 * k] = signs[k];
        for (std::size_t k = 1; k < 2 * n; k += 2)
            finer[k] = sign_at_k(k, 2 * n);
        signs = std::move(finer);
        n *= 2;
    }
}

} // namespace salemkit

#endif // SALEMKIT_TRACE_POLYNOMIAL_HPP
