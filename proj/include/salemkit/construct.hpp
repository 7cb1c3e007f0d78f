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

#ifndef SALEMKIT_CONSTRUCT_HPP
#define SALEMKIT_CONSTRUCT_HPP

// Trace-targeted generators. The Salem loop starts from S = (z^2-1)(z-1),
// Q = z and, for consecutive prime pairs (q, r) = (2,3), (5,7), ..., sets
//
//   S <- A B S - C Q,   Q <- A B Q,
//
// with A = (z^q-1)/(z-1), B = (z^r-1)/(z-1), C = (z^(q+r)-1)/(z-1).
// The Pisot loop is the same with P = z^2-z-1 and the undivided binomials.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "interlace.hpp"
#include "polynomial.hpp"
#include "primes.hpp"

namespace salemkit {

enum class Policy { FirstPrimes, Killer };

enum class GenerationKind { Salem, Pisot };

/// Exponent plan when k_1 is the killer exponent K (never expanded).
struct KillerPlan {
    BoundReport k1;                   ///< log K and its bounds
    std::uint64_t exclusion_limit = 0; ///< every prime <= this divides K (0 if too large)
    std::optional<PrimeList> tail;    ///< k_2..k_n, when they fit in a word
    std::string description;
};

struct GenerationRecord {
    GenerationKind kind = GenerationKind::Salem;
    long trace = 0;  ///< -T
    std::size_t n = 0;
    PrimeList exponents; ///< k_1..k_n (first-primes policy)
    std::optional<KillerPlan> killer;
    std::optional<std::uint64_t> predicted_degree;
    unsigned stripped_root_one = 0; ///< Pisot only: m in (z-1)^m

    [[nodiscard]] bool materialized() const noexcept { return raw_.has_value(); }

    [[nodiscard]] const IntPolynomial& raw() const
    {
        if (!raw_)
            throw Error(Errc::NotMaterializable, "the killer policy produces parameters only");
        return *raw_;
    }

    [[nodiscard]] const IntPolynomial& reduced() const
    {
        if (!reduced_)
            throw Error(Errc::NotMaterializable, "the killer policy produces parameters only");
        return *reduced_;
    }

    std::optional<IntPolynomial> raw_;
    std::optional<IntPolynomial> reduced_;
};

namespace detail {

inline KillerPlan killer_plan(unsigned n)
{
    KillerPlan plan;
    plan.k1 = killer_exponent_report(n);
    // K = P_N lcm(1..floor M): a prime divides K iff it is <= max(N, floor M).
    mpz_class top(static_cast<unsigned long>(plan.k1.support_size));
    if (plan.k1.lcm_argument > top)
        top = plan.k1.lcm_argument;
    if (top.fits_ulong_p() && top.get_ui() < (std::uint64_t{1} << 62)) {
        plan.exclusion_limit = top.get_ui();
        PrimeList tail;
        std::uint64_t p = plan.exclusion_limit;
        for (unsigned i = 1; i < n; ++i)
            tail.push_back(p = next_prime(p));
        plan.tail = std::move(tail);
        plan.description = "k1 = K; k2..k" + std::to_string(n) + " = the " + std::to_string(n - 1) +
                           " smallest primes above " + top.get_str();
    } else {
        plan.description = "k1 = K; k2..k" + std::to_string(n) + " = the " + std::to_string(n - 1) +
                           " smallest primes above max(3*2^" + std::to_string(n) + ", floor(M)), floor(M) = " +
                           top.get_str();
    }
    return plan;
}

} // namespace detail

/**
 * Salem candidate of trace -T from the first 2T+2 primes. The output is
 * monic and reciprocal of degree sum(k) - (2T-1); it still has to pass the
 * cyclotomic sieve. The killer policy only reports parameters.
 */
inline GenerationRecord generate_salem_candidate(unsigned trace_magnitude, Policy policy = Policy::FirstPrimes)
{
    GenerationRecord rec;
    rec.kind = GenerationKind::Salem;
    rec.trace = -static_cast<long>(trace_magnitude);
    rec.n = 2 * static_cast<std::size_t>(trace_magnitude) + 2;
    if (policy == Policy::Killer) {
        rec.killer = detail::killer_plan(static_cast<unsigned>(rec.n));
        return rec;
    }
    rec.exponents = first_primes(rec.n);
    IntPolynomial s{1, -1, -1, 1};
    IntPolynomial q{0, 1};
    for (std::size_t i = 0; i < rec.n; i += 2) {
        const std::size_t a = rec.exponents[i], b = rec.exponents[i + 1];
        IntPolynomial next = mul_geometric(mul_geometric(s, a), b) - mul_geometric(q, a + b);
        q = mul_geometric(mul_geometric(q, a), b);
        s = std::move(next);
    }
    rec.predicted_degree = sum_of(rec.exponents) + 1 - 2 * static_cast<std::uint64_t>(trace_magnitude);
    rec.raw_ = s;
    rec.reduced_ = std::move(s);
    return rec;
}

/**
 * Pisot polynomial of trace -T from the first 2T+4 primes. Every pass of
 * the loop leaves a root at z = 1; all of them are divided out and counted.
 */
inline GenerationRecord generate_pisot(unsigned trace_magnitude)
{
    GenerationRecord rec;
    rec.kind = GenerationKind::Pisot;
    rec.trace = -static_cast<long>(trace_magnitude);
    rec.n = 2 * static_cast<std::size_t>(trace_magnitude) + 4;
    rec.exponents = first_primes(rec.n);
    IntPolynomial p{-1, -1, 1};
    IntPolynomial q{0, 1};
    for (std::size_t i = 0; i < rec.n; i += 2) {
        const std::size_t a = rec.exponents[i], b = rec.exponents[i + 1];
        IntPolynomial next = mul_binomial(mul_binomial(p, a, -1), b, -1) - mul_binomial(q, a + b, -1);
        q = mul_binomial(mul_binomial(q, a, -1), b, -1);
        p = std::move(next);
    }
    auto [reduced, m] = strip_root_one(p);
    rec.stripped_root_one = m;
    rec.predicted_degree = pisot_degree_bound(trace_magnitude);
    rec.raw_ = std::move(p);
    rec.reduced_ = std::move(reduced);
    return rec;
}

/**
 * h(t, t^k1, ..., t^kn) with
 *   h = 2(x0^2 - 1) prod(xi - 1) - x0 sum_j (xj + 1) prod_{i != j}(xi - 1),
 * expanded with plain multiplication. Checks that every coefficient is
 * even and that the n-th derivative at t = 1 does not vanish.
 */
inline IntPolynomial h_substitute(std::span<const std::uint64_t> k)
{
    const std::size_t n = k.size();
    if (n == 0 || n % 2 != 0)
        throw Error(Errc::OddN, "h_substitute needs an even, positive number of exponents, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (k[i] < 2)
            throw Error(Errc::PreconditionFailed, "exponents must be >= 2");
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::gcd(k[i], k[j]) != 1)
                throw Error(Errc::NotCoprime, "gcd(" + std::to_string(k[i]) + ", " + std::to_string(k[j]) + ") > 1");
    }
    std::vector<IntPolynomial> minus, plus;
    for (std::uint64_t e : k) {
        minus.push_back(IntPolynomial::binomial(e, -1));
        plus.push_back(IntPolynomial::binomial(e, 1));
    }
    IntPolynomial all{1};
    for (const auto& f : minus)
        all = all * f;
    IntPolynomial h = IntPolynomial{-2, 0, 2} * all;
    IntPolynomial sum;
    for (std::size_t j = 0; j < n; ++j) {
        IntPolynomial term = plus[j];
        for (std::size_t i = 0; i < n; ++i)
            if (i != j)
                term = term * minus[i];
        sum += term;
    }
    h -= IntPolynomial{0, 1} * sum;
    for (const auto& c : h.coeffs())
        if (mpz_odd_p(c.get_mpz_t()))
            throw Error(Errc::PreconditionFailed, "h has an odd coefficient");
    if (taylor_shift(h, 1).coeff(n) == 0)
        throw Error(Errc::PreconditionFailed, "n-th derivative of h at t = 1 vanishes");
    return h;
}

inline IntPolynomial h_substitute(std::initializer_list<std::uint64_t> k)
{
    return h_substitute(std::span<const std::uint64_t>(k.begin(), k.size()));
}

/**
 * The pair behind (1/2) sum_i (z^ki + 1)/(z^ki - 1), reduced. When every
 * coefficient of the summed numerator is even the half is taken there,
 * otherwise p is doubled. Scaling by a positive constant keeps the pair
 * verified.
 */
inline InterlacingPair half_sum_pair(std::span<const std::uint64_t> k)
{
    std::vector<InterlacingPair> pairs;
    pairs.reserve(k.size());
    for (std::uint64_t e : k)
        pairs.push_back({IntPolynomial::binomial(e, -1), IntPolynomial::binomial(e, 1), true});
    InterlacingPair s = pair_sum(pairs);
    if (mpz_even_p(content(s.q).get_mpz_t()))
        s.q.divide_exact(2);
    else
        s.p *= 2;
    return s;
}

enum class Family { Quartic, SexticZero, Lehmer, Degree8NegTrace };

/// Accepts both the underscore and the dash spellings.
inline Family parse_family(std::string_view name)
{
    if (name == "quartic")
        return Family::Quartic;
    if (name == "sextic_zero" || name == "sextic-zero")
        return Family::SexticZero;
    if (name == "lehmer")
        return Family::Lehmer;
    if (name == "degree8_negtrace" || name == "degree8-negtrace" || name == "degree8")
        return Family::Degree8NegTrace;
    throw Error(Errc::BadParam, "unknown family '" + std::string(name) + "'");
}

inline IntPolynomial family(Family f, long param = 0)
{
    switch (f) {
    case Family::Quartic: {
        if (param < 1)
            throw Error(Errc::BadParam, "quartic needs n >= 1, got " + std::to_string(param));
        // z^4 - n z^3 - (2n+1) z^2 - n z + 1
        return IntPolynomial{1, -param, -(2 * param + 1), -param, 1};
    }
    case Family::SexticZero:
        return IntPolynomial{1, 0, -1, -2, -1, 0, 1};
    case Family::Lehmer:
        return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    case Family::Degree8NegTrace:
        return IntPolynomial{1, 1, -1, -4, -5, -4, -1, 1, 1};
    }
    throw Error(Errc::BadParam, "unknown family");
}

inline IntPolynomial family(std::string_view name, long param = 0) { return family(parse_family(name), param); }

} // namespace salemkit

#endif // SALEMKIT_CONSTRUCT_HPP
