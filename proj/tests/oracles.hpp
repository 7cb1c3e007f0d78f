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

#ifndef SALEMKIT_TESTS_ORACLES_HPP
#define SALEMKIT_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests. They share
// nothing with the library beyond the IntPolynomial container.

#include <gmpxx.h>

#include <Eigen/Dense>

#include <complex>
#include <ostream>
#include <cstdint>
#include <random>
#include <vector>

#include "salemkit/polynomial.hpp"

// Readable gtest failure messages for GMP integers.
inline void PrintTo(const mpz_class& v, std::ostream* os) { *os << v.get_str(); }

namespace oracle {

using salemkit::IntPolynomial;
using QPoly = std::vector<mpq_class>; // ascending, trimmed

inline std::vector<mpz_class> to_vec(const IntPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Schoolbook product on raw vectors.
inline IntPolynomial naive_mul(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return IntPolynomial(r);
}

inline void trim(QPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline QPoly to_q(const IntPolynomial& p)
{
    QPoly q(p.coeffs().begin(), p.coeffs().end());
    trim(q);
    return q;
}

inline QPoly q_rem(QPoly a, const QPoly& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        const mpq_class f = a.back() / b.back();
        const std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[s + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Euclid over Q, returned primitive with positive leading coefficient.
inline IntPolynomial naive_gcd(const IntPolynomial& x, const IntPolynomial& y)
{
    QPoly a = to_q(x), b = to_q(y);
    while (!b.empty()) {
        QPoly r = q_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty())
        return {};
    mpz_class l = 1;
    for (const auto& c : a)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : a)
        z.push_back(mpz_class(c * l));
    mpz_class g = 0;
    for (const auto& c : z)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0)
        g = -g;
    for (auto& c : z)
        c /= g;
    return IntPolynomial(z);
}

inline mpq_class horner(const IntPolynomial& p, const mpq_class& x)
{
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

// Complex roots of p from the eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> companion_roots(const IntPolynomial& p)
{
    const long n = p.degree();
    if (n < 1)
        return {};
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.lead().get_d();
    for (long i = 1; i < n; ++i)
        m(i, i - 1) = 1.0;
    for (long i = 0; i < n; ++i)
        m(i, n - 1) = -p[static_cast<std::size_t>(i)].get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    std::vector<std::complex<double>> out;
    for (long i = 0; i < n; ++i)
        out.push_back(es.eigenvalues()[i]);
    return out;
}

inline double largest_real_root(const IntPolynomial& p)
{
    double best = -1e300;
    for (auto z : companion_roots(p))
        if (std::abs(z.imag()) < 1e-9 && z.real() > best)
            best = z.real();
    return best;
}

// S(z) = z^m T(z + 1/z), expanded as sum t_i (z^2 + 1)^i z^(m - i).
inline IntPolynomial x_inverse(const IntPolynomial& t)
{
    const std::size_t m = static_cast<std::size_t>(t.degree());
    std::vector<mpz_class> s(2 * m + 1, 0);
    IntPolynomial pw{1};
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j < pw.size(); ++j)
            s[j + m - i] += t[i] * pw[j];
        pw = naive_mul(pw, IntPolynomial{1, 0, 1});
    }
    return IntPolynomial(s);
}

inline IntPolynomial random_poly(std::mt19937_64& rng, long degree, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c)
        v = d(rng);
    while (c.back() == 0)
        c.back() = d(rng);
    return IntPolynomial(c);
}

inline IntPolynomial power(const IntPolynomial& a, unsigned e)
{
    IntPolynomial r{1};
    for (unsigned i = 0; i < e; ++i)
        r = naive_mul(r, a);
    return r;
}

} // namespace oracle

#endif // SALEMKIT_TESTS_ORACLES_HPP
