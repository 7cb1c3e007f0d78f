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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "salemkit/bounds.hpp"
#include "salemkit/certify.hpp"
#include "salemkit/construct.hpp"

using namespace salemkit;

namespace {

// psi(x) by trial division, in long double.
long double naive_psi(unsigned long x)
{
    long double s = 0;
    for (unsigned long p = 2; p <= x; ++p) {
        bool prime = true;
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime)
            continue;
        for (unsigned long q = p; q <= x; q *= p)
            s += std::log(static_cast<long double>(p));
    }
    return s;
}

} // namespace

TEST(Coset, Examples)
{
    const ExponentBound a = coset_exponent_bound(Rational(5), 1, 6);
    EXPECT_EQ(a.m_bound, 5);
    EXPECT_TRUE(a.m_exact);
    ASSERT_TRUE(a.exponent.has_value());
    EXPECT_EQ(*a.exponent, 150);
    EXPECT_NEAR(a.log_exponent_bound.mid_double(), std::log(150.0), 1e-13);
    EXPECT_TRUE(a.theta_exact);

    const ExponentBound b = coset_exponent_bound(Rational(1), 4, 1);
    EXPECT_EQ(b.m_bound, 16);
    EXPECT_TRUE(b.m_exact);

    // D^2 = 2, k = 3: 8 * 3^(3/2) = 41.56...
    const ExponentBound c = coset_exponent_bound(Rational(2), 3, 10);
    EXPECT_EQ(c.m_bound, 42);
    EXPECT_FALSE(c.m_exact);
    EXPECT_EQ(*c.exponent, 42 * 210);

    EXPECT_THROW((void)coset_exponent_bound(Rational(5), 0, 6), Error);
    EXPECT_THROW((void)coset_exponent_bound(Rational(0), 1, 6), Error);
}

TEST(Coset, BoundModeAboveSieveCap)
{
    const ExponentBound big = coset_exponent_bound(Rational(3), 2, 20000000);
    EXPECT_FALSE(big.theta_exact);
    EXPECT_FALSE(big.exponent.has_value());
    EXPECT_EQ(big.m_bound, 18);
    EXPECT_NEAR(big.log_exponent_bound.mid_double(), std::log(18.0) + 1.02 * 2e7, 1e-6);
}

TEST(Killer, TwoExact)
{
    const BoundReport r = killer_exponent_report(2);
    EXPECT_EQ(r.support_size, 12u);
    EXPECT_EQ(r.diameter_squared, 6);
    // M^2 = 6^6 * 3^3
    EXPECT_EQ(r.lcm_argument, static_cast<long>(std::floor(std::sqrt(46656.0 * 27.0))));
    EXPECT_EQ(r.lcm_argument, 1122);
    EXPECT_TRUE(r.log_PN_exact);
    EXPECT_TRUE(r.log_lcm_exact);
    EXPECT_TRUE(r.log_K_exact);
    EXPECT_NEAR(r.log_PN.mid_double(), std::log(2310.0), 1e-12);
    EXPECT_NEAR(r.log_lcm.mid_double(), static_cast<double>(naive_psi(1122)), 1e-9);
    EXPECT_NEAR(r.log_K.mid_double(), std::log(2310.0) + static_cast<double>(naive_psi(1122)), 1e-9);
    EXPECT_TRUE(r.log_K_below_cap);
    EXPECT_TRUE(r.loglog_K_below_bound);
    EXPECT_TRUE(r.M_below_prime_cap);
    EXPECT_TRUE(certainly_less_equal(r.log_K, r.log_K_bound_mode));
    EXPECT_TRUE(certainly_less(r.log_K_bound_mode, r.log_K_cap));
    EXPECT_NEAR(r.log_K_cap.mid_double(), 1.2 * std::pow(5.0, 4.5), 1e-9);
}

TEST(Killer, FourBoundMode)
{
    const BoundReport r = killer_exponent_report(4);
    EXPECT_NEAR(r.loglog_K_bound.mid_double(), 0.2 + 7.5 * std::log(7.0), 1e-12);
    EXPECT_NEAR(r.loglog_K_bound.mid_double(), 14.79, 1e-2);
    EXPECT_NEAR(r.log_K_bound_mode.mid_double(), 1.02 * 48 + 1.04 * std::pow(7.0, 7.5), 1e-6);
    EXPECT_TRUE(certainly_less(r.log_K_bound_mode, r.log_K_cap));
    EXPECT_TRUE(r.log_K_below_cap);
    EXPECT_TRUE(r.loglog_K_below_bound);
}

TEST(Killer, FlagsAcrossRange)
{
    for (unsigned n = 2; n <= 40; n += 2) {
        const BoundReport r = killer_exponent_report(n);
        EXPECT_TRUE(r.log_K_below_cap) << n;
        EXPECT_TRUE(r.loglog_K_below_bound) << n;
        EXPECT_TRUE(r.M_below_prime_cap) << n;
        EXPECT_EQ(r.support_size, std::uint64_t{3} << n);
    }
}

TEST(Killer, Preconditions)
{
    EXPECT_THROW((void)killer_exponent_report(3), Error);
    EXPECT_THROW((void)killer_exponent_report(0), Error);
    try {
        (void)killer_exponent_report(62);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooLarge);
    }
}

TEST(SalemDegree, Examples)
{
    EXPECT_EQ(salem_degree_bounds(25).constructed_degree, 5540u);
    EXPECT_EQ(salem_degree_bounds(2).constructed_degree, 38u);
    const SalemDegreeBounds one = salem_degree_bounds(1);
    EXPECT_TRUE(one.theoretical_loglog.contains(22.0));
    EXPECT_NEAR(one.chain_lhs.mid_double(), 0.3 + 7.5 * std::log(7.0), 1e-12);
    EXPECT_TRUE(one.chain_holds);
    EXPECT_THROW((void)salem_degree_bounds(0), Error);
}

TEST(SalemDegree, ChainSweep)
{
    for (unsigned t = 1; t <= 100; ++t) {
        const SalemDegreeBounds b = salem_degree_bounds(t);
        EXPECT_TRUE(b.chain_holds) << t;
        const double n = 2.0 * t + 2;
        EXPECT_NEAR(b.theoretical_loglog.mid_double(), 22 + 4 * t * std::log(double(t)), 1e-9);
        EXPECT_NEAR(b.chain_lhs.mid_double(), 0.3 + 1.5 * (n + 1) * std::log(n + 3), 1e-9);
    }
}

TEST(SalemDegree, MatchesGenerator)
{
    for (unsigned t = 1; t <= 6; ++t)
        EXPECT_EQ(salem_degree_bounds(t).constructed_degree,
                  static_cast<std::uint64_t>(generate_salem_candidate(t).reduced().degree()));
}

TEST(SalemDegree, AboveMinimumDegree)
{
    for (unsigned t = 2; t <= 25; ++t)
        EXPECT_TRUE(min_degree_check(t, static_cast<long>(salem_degree_bounds(t).constructed_degree))) << t;
}

TEST(PisotDegree, Examples)
{
    EXPECT_EQ(pisot_degree_bound(0), 17u);
    EXPECT_EQ(pisot_degree_bound(1), 41u);
    for (unsigned t = 0; t <= 5; ++t)
        EXPECT_LE(static_cast<std::uint64_t>(generate_pisot(t).reduced().degree()), pisot_degree_bound(t));
}
