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

#ifndef SALEMKIT_CYCLO_HPP
#define SALEMKIT_CYCLO_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "error.hpp"
#include "modular.hpp"
#include "polynomial.hpp"
#include "primes.hpp"

namespace salemkit {

struct CyclotomicFactor {
    std::uint64_t index = 0; ///< d in Phi_d
    unsigned multiplicity = 0;

    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// Outcome of a cyclotomic-factor test. passed <=> witness_gcd has degree 0.
struct SieveResult {
    bool passed = false;
    IntPolynomial witness_gcd;
    std::vector<CyclotomicFactor> stripped_factors;
};

/// strip_cyclotomic adds the cyclotomic-free cofactor.
struct StripResult : SieveResult {
    IntPolynomial quotient;
};

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        out.push_back(p);
        while (n % p == 0)
            n /= p;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        lo.push_back(d);
        if (d * d != n)
            hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

} // namespace detail

inline std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t r = n;
    for (std::uint64_t p : detail::prime_factors(n))
        r = r / p * (p - 1);
    return r;
}

/// Phi_n: (z^n - 1) divided by Phi_d for every proper divisor d of n.
/// Results are memoised behind a mutex; the cache never changes a value.
inline IntPolynomial cyclotomic_poly(std::uint64_t n)
{
    if (n == 0)
        throw Error(Errc::PreconditionFailed, "cyclotomic index must be >= 1");
    static std::mutex mu;
    static std::map<std::uint64_t, IntPolynomial> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    IntPolynomial r = IntPolynomial::binomial(n, -1);
    for (std::uint64_t d : detail::divisors(n))
        if (d < n)
            r = exact_div(r, cyclotomic_poly(d));
    std::lock_guard lock(mu);
    cache.emplace(n, r);
    return r;
}

/**
 * gcd(S(z), S(-z) S(z^2) S(-z^2)) over Q; passes iff it is constant.
 *
 * A root of unity w is conjugate to one of -w, w^2, -w^2, so a cyclotomic
 * factor of S always survives into the gcd. The converse does not hold in
 * general: a failing sieve only says the gcd is nontrivial.
 *
 * The second argument is only ever formed modulo word primes (reduced
 * modulo S) unless a nontrivial candidate needs exact confirmation.
 */
inline SieveResult sieve_gcd_test(const IntPolynomial& s)
{
    if (s.is_zero())
        throw Error(Errc::PreconditionFailed, "sieve of the zero polynomial");
    SieveResult out;
    if (s.degree() == 0) {
        out.passed = true;
        out.witness_gcd = IntPolynomial{1};
        return out;
    }
    const IntPolynomial a = primitive_part(s);
    std::optional<IntPolynomial> product;
    auto exact_product = [&]() -> const IntPolynomial& {
        if (!product)
            product = negate_variable(a) * compose_power(a, 2) * compose_power(negate_variable(a), 2);
        return *product;
    };
    auto images = [&](modp::Word p) {
        modp::Poly sp = modp::reduce(a, p);
        const modp::Poly sn = modp::negate_variable(sp, p);
        modp::Poly x1 = modp::rem(sn, sp, p);
        modp::Poly x2 = modp::rem(modp::compose_power(sp, 2), sp, p);
        modp::Poly x3 = modp::rem(modp::compose_power(sn, 2), sp, p);
        modp::Poly x = modp::mulmod(modp::mulmod(x1, x2, sp, p), x3, sp, p);
        return std::make_pair(std::move(sp), std::move(x));
    };
    auto accept = [&](const IntPolynomial& h) { return divides(h, a) && divides(h, exact_product()); };
    out.witness_gcd = modular_gcd(images, abs(a.lead()), a.degree(), accept);
    out.passed = out.witness_gcd.degree() == 0;
    return out;
}

namespace detail {

// A prime p = 1 (mod d) below 2^31 together with an element of exact order d.
struct RootOfUnityModP {
    modp::Word p = 0;
    modp::Word omega = 0;
};

inline RootOfUnityModP primitive_root_of_unity(std::uint64_t d)
{
    const auto qs = prime_factors(d);
    for (std::uint64_t k = ((std::uint64_t{1} << 30) / d) + 1;; ++k) {
        const std::uint64_t p = k * d + 1;
        if (p >= (std::uint64_t{1} << 31))
            throw Error(Errc::TooLarge, "no word prime = 1 mod " + std::to_string(d));
        if (!is_prime(p))
            continue;
        for (std::uint64_t g = 2; g < p; ++g) {
            const std::uint64_t w = powmod64(g, (p - 1) / d, p);
            bool exact = (w != 1 || d == 1);
            for (std::uint64_t q : qs)
                if (powmod64(w, d / q, p) == 1)
                    exact = false;
            if (exact)
                return {p, w};
        }
    }
}

// phi(0..n) by sieving over primes.
inline std::vector<std::uint64_t> phi_table(std::uint64_t n)
{
    std::vector<std::uint64_t> phi(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i)
        phi[i] = i;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (phi[i] != i)
            continue;
        for (std::uint64_t j = i; j <= n; j += i)
            phi[j] -= phi[j] / i;
    }
    return phi;
}

// S(omega) mod p is nonzero => Phi_d does not divide S over Z.
inline bool may_divide(const IntPolynomial& s, std::uint64_t d)
{
    const RootOfUnityModP r = primitive_root_of_unity(d);
    const modp::Poly sp = modp::reduce(s, r.p);
    std::uint64_t acc = 0;
    for (std::size_t i = sp.size(); i-- > 0;)
        acc = (mulmod64(acc, r.omega, r.p) + sp[i]) % r.p;
    return acc == 0;
}

} // namespace detail

/**
 * Removes every cyclotomic factor by trial division.
 *
 * Candidates are all d with phi(d) <= deg S. Since phi(d) >= sqrt(d) for
 * d not in {2, 6}, they satisfy d <= max(deg S^2, 6). Each candidate is
 * first screened by evaluating S at a primitive d-th root of unity modulo a
 * prime p = 1 (mod d); a nonzero value rules Phi_d out exactly.
 */
inline StripResult strip_cyclotomic(const IntPolynomial& s)
{
    if (s.is_zero())
        throw Error(Errc::PreconditionFailed, "strip_cyclotomic of the zero polynomial");
    StripResult out;
    IntPolynomial rest = s;
    IntPolynomial witness{1};
    const std::uint64_t bound_deg = static_cast<std::uint64_t>(std::max<long>(s.degree(), 0));
    const std::uint64_t limit = std::max<std::uint64_t>(bound_deg * bound_deg, 6);
    const std::vector<std::uint64_t> phis = detail::phi_table(limit);
    for (std::uint64_t d = 1; d <= limit && rest.degree() > 0; ++d) {
        const std::uint64_t ph = phis[d];
        if (ph > static_cast<std::uint64_t>(rest.degree()))
            continue;
        unsigned mult = 0;
        while (rest.degree() >= static_cast<long>(ph) && detail::may_divide(rest, d)) {
            const IntPolynomial phi = cyclotomic_poly(d);
            auto res = divrem_integral(rest, phi);
            if (!res.integral || !res.remainder.is_zero())
                break;
            rest = std::move(res.quotient);
            witness = witness * phi;
            ++mult;
        }
        if (mult)
            out.stripped_factors.push_back({d, mult});
    }
    out.passed = out.stripped_factors.empty();
    out.witness_gcd = std::move(witness);
    out.quotient = std::move(rest);
    return out;
}

} // namespace salemkit

#endif // SALEMKIT_CYCLO_HPP
