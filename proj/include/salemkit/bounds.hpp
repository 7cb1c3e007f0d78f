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

#ifndef SALEMKIT_BOUNDS_HPP
#define SALEMKIT_BOUNDS_HPP

// Calculators for the torsion-coset exponent bound, the killer exponent of
// the hypersurface h = 0 and the degree bounds of the trace-targeted
// constructions. Every real quantity is an outward-rounded interval, and
// every inequality below is decided by comparing interval endpoints.
// All logarithms are natural.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"
#include "interval.hpp"
#include "polynomial.hpp"
#include "primes.hpp"

namespace salemkit {

namespace detail {

// ceil(sqrt(t)) for rational t >= 0.
inline mpz_class ceil_sqrt(const mpq_class& t)
{
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    mpz_class c;
    mpz_sqrt(c.get_mpz_t(), fl.get_mpz_t());
    if (mpq_class(c * c) < t)
        ++c;
    return c;
}

inline mpz_class ceil_q(const mpq_class& t)
{
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return c;
}

inline mpz_class pow_ui(const mpz_class& b, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// theta(x) exactly when x is within the sieving cap, else the upper bound 1.02 x.
inline std::pair<RealInterval, bool> theta_or_bound(std::uint64_t x)
{
    if (x >= 2 && x <= kExactSieveCap)
        return {chebyshev_theta_psi(x).first, true};
    return {RealInterval::from_decimal("1.02") * RealInterval::from_integer(mpz_class(static_cast<unsigned long>(x))),
            false};
}

} // namespace detail

/// Bound on the exponent of an (n-k)-dimensional maximal torsion coset.
struct ExponentBound {
    mpz_class m_bound;                      ///< ceil(D^(2k) k^(k/2))
    bool m_exact = false;                   ///< D^(2k) k^(k/2) was already an integer
    std::optional<mpz_class> exponent;      ///< m_bound * P_N when N is sieveable
    RealInterval log_exponent_bound;        ///< log m_bound + theta(N) (or + 1.02 N)
    bool theta_exact = false;
};

/**
 * Exponent bound m * P_N with m <= D^(2k) k^(k/2), for a variety whose
 * support has squared diameter D^2 and N monomials.
 */
inline ExponentBound coset_exponent_bound(const Rational& diameter_squared, unsigned k, std::uint64_t n_terms)
{
    if (k == 0 || diameter_squared <= 0 || n_terms == 0)
        throw Error(Errc::PreconditionFailed, "coset_exponent_bound needs D^2 > 0, k >= 1, N >= 1");
    ExponentBound out;
    mpq_class d2k;
    mpz_pow_ui(d2k.get_num_mpz_t(), diameter_squared.get_num_mpz_t(), k);
    mpz_pow_ui(d2k.get_den_mpz_t(), diameter_squared.get_den_mpz_t(), k);
    d2k.canonicalize();
    const mpz_class kk(k);
    if (k % 2 == 0) {
        const mpq_class v = d2k * mpq_class(detail::pow_ui(kk, k / 2));
        out.m_bound = detail::ceil_q(v);
        out.m_exact = v.get_den() == 1;
    } else {
        // D^(2k) k^(k/2) = sqrt(D^(4k) k^k)
        const mpq_class sq = d2k * d2k * mpq_class(detail::pow_ui(kk, k));
        out.m_bound = detail::ceil_sqrt(sq);
        out.m_exact = mpq_class(out.m_bound * out.m_bound) == sq;
    }
    RealInterval logm = RealInterval::from_integer(out.m_bound).log();
    if (n_terms < 2) {
        out.exponent = out.m_bound;
        out.theta_exact = true;
        out.log_exponent_bound = logm;
        return out;
    }
    auto [theta, exact] = detail::theta_or_bound(n_terms);
    out.theta_exact = exact;
    if (exact)
        out.exponent = out.m_bound * primorial(n_terms);
    out.log_exponent_bound = logm + theta;
    return out;
}

/// Killer-exponent data for the hypersurface h = 0 in G_m^(n+1).
struct BoundReport {
    unsigned n = 0;
    std::uint64_t support_size = 0;         ///< N = 3 * 2^n
    mpz_class diameter_squared;             ///< D^2 = n + 4
    mpz_class lcm_argument;                 ///< floor(M), M = D^(2n+2) (n+1)^((n+1)/2)
    RealInterval log_PN;                    ///< theta(N), or 1.02 N
    bool log_PN_exact = false;
    RealInterval log_lcm;                   ///< psi(floor M), or 1.04 (n+3)^(3(n+1)/2)
    bool log_lcm_exact = false;
    RealInterval log_K;                     ///< log_PN + log_lcm
    bool log_K_exact = false;               ///< both parts exact
    RealInterval log_K_bound_mode;          ///< 1.02 * 3 * 2^n + 1.04 (n+3)^(3(n+1)/2)
    RealInterval log_K_cap;                 ///< 1.2 (n+3)^(3(n+1)/2)
    RealInterval loglog_K;                  ///< log(log_K)
    RealInterval loglog_K_bound;            ///< 0.2 + (3(n+1)/2) log(n+3)
    bool log_K_below_cap = false;           ///< log_K < log_K_cap, decided on intervals
    bool loglog_K_below_bound = false;      ///< loglog_K < loglog_K_bound
    bool M_below_prime_cap = false;         ///< M < (n+3)^(3(n+1)/2)
};

/// (n+3)^(3(n+1)/2) as an interval.
inline RealInterval prime_factor_cap(unsigned n)
{
    return RealInterval::from_integer(detail::pow_ui(mpz_class(n + 3), 3 * (n + 1))).sqrt();
}

inline BoundReport killer_exponent_report(unsigned n)
{
    if (n < 2 || n % 2 != 0)
        throw Error(Errc::PreconditionFailed, "killer_exponent_report needs an even n >= 2");
    if (n > 60)
        throw Error(Errc::TooLarge, "n = " + std::to_string(n) + " overflows the support count 3 * 2^n");
    BoundReport r;
    r.n = n;
    r.support_size = std::uint64_t{3} << n;
    r.diameter_squared = n + 4;
    // M^2 = (n+4)^(2n+2) (n+1)^(n+1)
    const mpz_class m_squared = detail::pow_ui(mpz_class(n + 4), 2 * n + 2) * detail::pow_ui(mpz_class(n + 1), n + 1);
    mpz_sqrt(r.lcm_argument.get_mpz_t(), m_squared.get_mpz_t());

    const RealInterval cap_x = prime_factor_cap(n);
    r.M_below_prime_cap = certainly_less(RealInterval::from_integer(m_squared).sqrt(), cap_x);

    auto [theta, theta_exact] = detail::theta_or_bound(r.support_size);
    r.log_PN = theta;
    r.log_PN_exact = theta_exact;
    if (r.lcm_argument >= 2 && r.lcm_argument <= kExactSieveCap) {
        r.log_lcm = chebyshev_theta_psi(r.lcm_argument.get_ui()).second;
        r.log_lcm_exact = true;
    } else {
        r.log_lcm = RealInterval::from_decimal("1.04") * cap_x;
    }
    r.log_K = r.log_PN + r.log_lcm;
    r.log_K_exact = r.log_PN_exact && r.log_lcm_exact;
    r.log_K_bound_mode =
        RealInterval::from_decimal("1.02") * RealInterval::from_integer(mpz_class(static_cast<unsigned long>(r.support_size))) +
        RealInterval::from_decimal("1.04") * cap_x;
    r.log_K_cap = RealInterval::from_decimal("1.2") * cap_x;
    r.loglog_K = r.log_K.log();
    r.loglog_K_bound = RealInterval::from_decimal("0.2") +
                       RealInterval::from_rational(mpq_class(3 * (n + 1), 2)) *
                           RealInterval::from_integer(mpz_class(n + 3)).log();
    r.log_K_below_cap = certainly_less(r.log_K, r.log_K_cap);
    r.loglog_K_below_bound = certainly_less(r.loglog_K, r.loglog_K_bound);
    return r;
}

/// Degree data for the Salem construction of trace -T.
struct SalemDegreeBounds {
    std::uint64_t constructed_degree = 0; ///< sum of the first 2T+2 primes minus (2T-1)
    RealInterval theoretical_loglog;      ///< 22 + 4 T log T
    RealInterval chain_lhs;               ///< 0.2 + (3(n+1)/2) log(n+3) + 0.1 at n = 2T+2
    bool chain_holds = false;             ///< chain_lhs < theoretical_loglog
};

inline SalemDegreeBounds salem_degree_bounds(unsigned trace_magnitude)
{
    if (trace_magnitude < 1)
        throw Error(Errc::PreconditionFailed, "salem_degree_bounds needs T >= 1");
    const unsigned t = trace_magnitude;
    const unsigned n = 2 * t + 2;
    SalemDegreeBounds out;
    const auto ps = first_primes(n);
    out.constructed_degree = sum_of(ps) - (2 * static_cast<std::uint64_t>(t) - 1);
    const RealInterval tt = RealInterval::from_integer(mpz_class(t));
    out.theoretical_loglog = RealInterval::from_integer(22) + RealInterval::from_integer(4) * tt * tt.log();
    out.chain_lhs = RealInterval::from_decimal("0.3") + RealInterval::from_rational(mpq_class(3 * (n + 1), 2)) *
                                                           RealInterval::from_integer(mpz_class(n + 3)).log();
    out.chain_holds = certainly_less(out.chain_lhs, out.theoretical_loglog);
    return out;
}

/// Sum of the first 2T+4 primes; grows like 2 T^2 log T.
inline std::uint64_t pisot_degree_bound(unsigned trace_magnitude)
{
    return sum_of(first_primes(2 * static_cast<std::size_t>(trace_magnitude) + 4));
}

} // namespace salemkit

#endif // SALEMKIT_BOUNDS_HPP
