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

#ifndef SALEMKIT_MODULAR_HPP
#define SALEMKIT_MODULAR_HPP

// Polynomials over Z/pZ for word-size primes p < 2^31, and the multi-prime
// gcd over Q built on top of them.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "primes.hpp"

namespace salemkit::modp {

using Word = std::uint64_t;

/// Dense polynomial mod p, ascending, no trailing zeros.
using Poly = std::vector<Word>;

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

inline Word inverse(Word a, Word p)
{
    // a^(p-2) mod p
    return detail::powmod64(a, p - 2, p);
}

inline Poly reduce(const IntPolynomial& a, Word p)
{
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, Word p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    // p < 2^31: a product plus a reduced residue fits in a word.
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Word ai = a[i];
        if (ai == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + ai * b[j]) % p;
    }
    trim(r);
    return r;
}

/// a mod b, b nonzero.
inline Poly rem(Poly a, const Poly& b, Word p)
{
    const long db = degree(b);
    if (degree(a) < db)
        return a;
    const Word inv = inverse(b.back(), p);
    for (long i = degree(a); i >= db; --i) {
        const Word t = (a[static_cast<std::size_t>(i)] * inv) % p;
        if (t == 0)
            continue;
        const std::size_t off = static_cast<std::size_t>(i - db);
        for (long j = 0; j <= db; ++j) {
            Word& slot = a[off + static_cast<std::size_t>(j)];
            slot = (slot + p - (t * b[static_cast<std::size_t>(j)]) % p) % p;
        }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    return a;
}

inline Poly make_monic(Poly a, Word p)
{
    if (a.empty())
        return a;
    const Word inv = inverse(a.back(), p);
    for (auto& v : a)
        v = (v * inv) % p;
    return a;
}

/// Monic gcd over F_p (zero if both are zero).
inline Poly gcd(Poly a, Poly b, Word p)
{
    while (!b.empty()) {
        Poly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

/// (a * b) mod m.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, Word p) { return rem(mul(a, b, p), m, p); }

/// a(-z) over F_p.
inline Poly negate_variable(Poly a, Word p)
{
    for (std::size_t i = 1; i < a.size(); i += 2)
        a[i] = (p - a[i]) % p;
    return a;
}

/// a(z^k) over F_p.
inline Poly compose_power(const Poly& a, std::size_t k)
{
    if (a.empty())
        return a;
    Poly r((a.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i * k] = a[i];
    return r;
}

/// Descending primes below 2^31, deterministic order.
class PrimeStream {
public:
    Word next()
    {
        do {
            cur_ -= 2;
        } while (!is_prime(cur_));
        return cur_;
    }

private:
    Word cur_ = (Word{1} << 31) + 1;
};

} // namespace salemkit::modp

namespace salemkit {

namespace detail {

// CRT-combine the residue image `img` mod p into `acc` mod `modulus`,
// keeping acc in the symmetric range. Returns true if acc did not change.
inline bool crt_combine(std::vector<mpz_class>& acc, mpz_class& modulus, const modp::Poly& img, modp::Word p,
                        std::size_t len)
{
    bool unchanged = true;
    const unsigned long pl = static_cast<unsigned long>(p);
    const modp::Word m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), pl);
    const modp::Word inv = modp::inverse(m_mod_p, p);
    mpz_class new_mod = modulus * pl;
    mpz_class half = new_mod / 2;
    for (std::size_t i = 0; i < len; ++i) {
        const modp::Word target = i < img.size() ? img[i] : 0;
        const modp::Word cur = mpz_fdiv_ui(acc[i].get_mpz_t(), pl);
        if (cur == target)
            continue;
        unchanged = false;
        // acc += modulus * ((target - cur) * inv mod p)
        const modp::Word t = (((target + p - cur) % p) * inv) % p;
        mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
        if (acc[i] > half)
            acc[i] -= new_mod;
        else if (acc[i] < -half)
            acc[i] += new_mod;
    }
    modulus = std::move(new_mod);
    return unchanged;
}

} // namespace detail

/**
 * Multi-prime gcd over Q.
 *
 * `images(p)` returns the reductions of the two inputs mod p, `lead_bound`
 * is a multiple of the leading coefficient of the true gcd (gcd of the
 * leading coefficients), and `accept(h)` decides whether a primitive
 * candidate divides both inputs over Z.
 *
 * For every prime p not dividing lead_bound the degree of the mod-p gcd is
 * at least the true degree, so a degree-0 image proves coprimality
 * outright; otherwise the minimal-degree images are lifted by CRT until the
 * lifted candidate stabilises and passes `accept`.
 */
inline IntPolynomial modular_gcd(const std::function<std::pair<modp::Poly, modp::Poly>(modp::Word)>& images,
                                 const mpz_class& lead_bound, long degree_cap,
                                 const std::function<bool(const IntPolynomial&)>& accept)
{
    modp::PrimeStream primes;
    long best = degree_cap + 1;
    std::vector<mpz_class> acc;
    mpz_class modulus = 1;
    for (;;) {
        const modp::Word p = primes.next();
        if (mpz_fdiv_ui(lead_bound.get_mpz_t(), static_cast<unsigned long>(p)) == 0)
            continue;
        auto [a, b] = images(p);
        modp::Poly g = modp::gcd(std::move(a), std::move(b), p);
        const long d = modp::degree(g);
        if (d == 0)
            return IntPolynomial{1};
        if (d > best)
            continue;
        // Scale the monic image so its leading coefficient is lead_bound mod p.
        const modp::Word lb = mpz_fdiv_ui(lead_bound.get_mpz_t(), static_cast<unsigned long>(p));
        for (auto& v : g)
            v = (v * lb) % p;
        const std::size_t len = static_cast<std::size_t>(d) + 1;
        if (d < best) {
            best = d;
            acc.assign(len, mpz_class(0));
            modulus = 1;
            detail::crt_combine(acc, modulus, g, p, len);
            continue;
        }
        if (detail::crt_combine(acc, modulus, g, p, len)) {
            IntPolynomial h = primitive_part(IntPolynomial(acc));
            if (h.degree() == best && accept(h))
                return h;
        }
    }
}

/// gcd over Q as a primitive integer polynomial with positive leading
/// coefficient; gcd(a, 0) = primitive(a).
inline IntPolynomial gcd_primitive(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() && b.is_zero())
        throw Error(Errc::PreconditionFailed, "gcd of two zero polynomials");
    if (b.is_zero())
        return primitive_part(a);
    if (a.is_zero())
        return primitive_part(b);
    if (a.degree() == 0 || b.degree() == 0)
        return IntPolynomial{1};
    IntPolynomial pa = primitive_part(a), pb = primitive_part(b);
    if (pa == pb)
        return pa;
    mpz_class lead_bound;
    mpz_gcd(lead_bound.get_mpz_t(), pa.lead().get_mpz_t(), pb.lead().get_mpz_t());
    return modular_gcd(
        [&](modp::Word p) { return std::make_pair(modp::reduce(pa, p), modp::reduce(pb, p)); }, lead_bound,
        std::min(pa.degree(), pb.degree()),
        [&](const IntPolynomial& h) { return divides(h, pa) && divides(h, pb); });
}

/// a / gcd(a, a'), primitive; the squarefree part up to a constant.
inline IntPolynomial squarefree_part(const IntPolynomial& a)
{
    if (a.degree() <= 0)
        return primitive_part(a);
    IntPolynomial g = gcd_primitive(a, derivative(a));
    return primitive_part(exact_div(primitive_part(a), g));
}

} // namespace salemkit

#endif // SALEMKIT_MODULAR_HPP
