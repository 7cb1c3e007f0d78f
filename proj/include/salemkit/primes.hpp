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

#ifndef SALEMKIT_PRIMES_HPP
#define SALEMKIT_PRIMES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "interval.hpp"

namespace salemkit {

/// Ascending list of distinct primes.
using PrimeList = std::vector<std::uint64_t>;

/// Largest argument accepted by the exact theta/psi computation.
inline constexpr std::uint64_t kExactSieveCap = 10'000'000;

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Miller-Rabin witness for one base.
inline bool strong_probable_prime(std::uint64_t n, std::uint64_t a)
{
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod64(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace detail

/// Deterministic primality for all 64-bit n: trial division by small primes,
/// then Miller-Rabin with the first twelve prime bases (exact below 3.3e24).
inline bool is_prime(std::uint64_t n)
{
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (std::uint64_t p : kBases) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    if (n < 41 * 41)
        return true;
    for (std::uint64_t a : kBases)
        if (!detail::strong_probable_prime(n, a))
            return false;
    return true;
}

/// Smallest prime strictly greater than n.
inline std::uint64_t next_prime(std::uint64_t n)
{
    if (n < 2)
        return 2;
    std::uint64_t c = n + 1;
    if (c > 2 && (c & 1) == 0)
        ++c;
    while (!is_prime(c))
        c += 2;
    return c;
}

/// The k smallest primes.
inline PrimeList first_primes(std::size_t k)
{
    if (k == 0)
        throw Error(Errc::PreconditionFailed, "first_primes needs k >= 1");
    PrimeList out;
    out.reserve(k);
    std::uint64_t p = 1;
    while (out.size() < k) {
        p = next_prime(p);
        out.push_back(p);
    }
    return out;
}

inline std::uint64_t sum_of(std::span<const std::uint64_t> ps)
{
    return std::accumulate(ps.begin(), ps.end(), std::uint64_t{0});
}

/// Primes <= x by the sieve of Eratosthenes.
inline PrimeList primes_up_to(std::uint64_t x)
{
    PrimeList out;
    if (x < 2)
        return out;
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i)
            composite[j] = true;
    }
    return out;
}

namespace detail {

// Product of a range of integers by a balanced product tree.
inline mpz_class product_tree(std::vector<mpz_class> v)
{
    if (v.empty())
        return 1;
    while (v.size() > 1) {
        std::vector<mpz_class> next;
        next.reserve((v.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < v.size(); i += 2)
            next.push_back(v[i] * v[i + 1]);
        if (v.size() % 2)
            next.push_back(std::move(v.back()));
        v = std::move(next);
    }
    return std::move(v.front());
}

} // namespace detail

/// Product of all primes <= x (P_x).
inline mpz_class primorial(std::uint64_t x)
{
    std::vector<mpz_class> fs;
    for (std::uint64_t p : primes_up_to(x))
        fs.emplace_back(static_cast<unsigned long>(p));
    return detail::product_tree(std::move(fs));
}

/// lcm(1, 2, ..., x).
inline mpz_class lcm_up_to(std::uint64_t x)
{
    std::vector<mpz_class> fs;
    for (std::uint64_t p : primes_up_to(x)) {
        std::uint64_t pk = p;
        while (pk <= x / p)
            pk *= p;
        fs.emplace_back(static_cast<unsigned long>(pk));
    }
    return detail::product_tree(std::move(fs));
}

/// Chebyshev functions (theta(x), psi(x)) = (log P_x, log lcm(1..x)),
/// each as an outward-rounded interval of width far below 2^-50.
inline std::pair<RealInterval, RealInterval> chebyshev_theta_psi(std::uint64_t x)
{
    if (x < 2)
        throw Error(Errc::PreconditionFailed, "theta/psi need x >= 2");
    if (x > kExactSieveCap)
        throw Error(Errc::TooLarge, "x = " + std::to_string(x) + " exceeds the exact sieving cap");
    return {RealInterval::from_integer(primorial(x)).log(), RealInterval::from_integer(lcm_up_to(x)).log()};
}

} // namespace salemkit

#endif // SALEMKIT_PRIMES_HPP
