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

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "salemkit/interlace.hpp"

using namespace salemkit;

namespace {

InterlacingPair binomial_pair(std::size_t n) { return {IntPolynomial::binomial(n, -1), IntPolynomial::binomial(n, 1), false}; }

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::ParseError;
}

const IntPolynomial kP4{-1, -1, 0, 1, 1};    // (z^2 - 1)(z^2 + z + 1)
const IntPolynomial kPhi5{1, 1, 1, 1, 1};    // z^4 + z^3 + z^2 + z + 1

} // namespace

TEST(Verify, SquareRootsOfUnity)
{
    const auto pr = verify_circular_interlacing(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 0, 1});
    EXPECT_TRUE(pr.verified);
}

TEST(Verify, BinomialPairs)
{
    for (std::size_t n = 1; n <= 12; ++n)
        EXPECT_TRUE(verify_circular_interlacing(IntPolynomial::binomial(n, -1), IntPolynomial::binomial(n, 1)).verified)
            << n;
}

TEST(Verify, DoubleRootIsNotSimple)
{
    EXPECT_EQ(code_of([] { (void)verify_circular_interlacing(IntPolynomial{1, -2, 1}, IntPolynomial{1, 0, 1}); }),
              Errc::NotSimple);
    // repeated pair of conjugate roots away from z = +-1
    EXPECT_EQ(code_of([] {
                  (void)verify_circular_interlacing(IntPolynomial{1, 0, 2, 0, 1}, IntPolynomial{1, 1, 1, 1, 1});
              }),
              Errc::NotSimple);
}

TEST(Verify, OffCircleRoots)
{
    EXPECT_EQ(code_of([] { (void)verify_circular_interlacing(IntPolynomial{1, -3, 1}, IntPolynomial{1, 0, 1}); }),
              Errc::NotOnCircle);
    EXPECT_EQ(code_of([] { (void)verify_circular_interlacing(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 2, 3}); }),
              Errc::NotOnCircle);
}

TEST(Verify, TwoRootsOfQBetweenRootsOfP)
{
    // q has roots at 60 and about 41.4 degrees, both between p's roots at 0 and 90
    const IntPolynomial q = IntPolynomial{1, -1, 1} * IntPolynomial{2, -3, 2};
    EXPECT_EQ(code_of([&] { (void)verify_circular_interlacing(IntPolynomial::binomial(4, -1), q); }),
              Errc::NotAlternating);
}

TEST(Verify, NeitherHasRootAtOne)
{
    // z^2 + 1 and z^2 + z + 1: no root at z = 1 at all
    EXPECT_EQ(code_of([] { (void)verify_circular_interlacing(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1, 1}); }),
              Errc::NotAlternating);
}

TEST(Verify, Preconditions)
{
    EXPECT_EQ(code_of([] { (void)verify_circular_interlacing(IntPolynomial{-1, 1}, IntPolynomial{1, 0, 1}); }),
              Errc::PreconditionFailed);
    EXPECT_EQ(code_of([] { (void)verify_circular_interlacing(IntPolynomial{1, -1}, IntPolynomial{1, 1}); }),
              Errc::PreconditionFailed);
    EXPECT_EQ(code_of([] { (void)verify_circular_interlacing(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1} * IntPolynomial{2, 1}); }),
              Errc::PreconditionFailed);
}

TEST(PairSum, TwoBinomialPairs)
{
    const auto s = pair_sum({binomial_pair(2), binomial_pair(3)});
    EXPECT_EQ(s.p, kP4);
    EXPECT_EQ(s.q, kPhi5 * mpz_class(2));
    EXPECT_TRUE(s.verified);
    // independent symbolic sum: q1 p2 + q2 p1 over p1 p2, then cancel z - 1
    const IntPolynomial num = oracle::naive_mul(IntPolynomial{1, 0, 1}, IntPolynomial{-1, 0, 0, 1}) +
                              oracle::naive_mul(IntPolynomial{1, 0, 0, 1}, IntPolynomial{-1, 0, 1});
    const IntPolynomial den = oracle::naive_mul(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 0, 0, 1});
    EXPECT_EQ(oracle::naive_mul(num, s.p), oracle::naive_mul(den, s.q));
}

TEST(PairSum, Singleton)
{
    const auto s = pair_sum({binomial_pair(5)});
    EXPECT_EQ(s.p, IntPolynomial::binomial(5, -1));
    EXPECT_EQ(s.q, IntPolynomial::binomial(5, 1));
}

TEST(PairSum, EqualSummandsDouble)
{
    const auto s = pair_sum({binomial_pair(1), binomial_pair(1)});
    EXPECT_EQ(s.p, (IntPolynomial{-1, 1}));
    EXPECT_EQ(s.q, (IntPolynomial{2, 2}));
}

TEST(PairSum, RejectsBadInput)
{
    const InterlacingPair bad{IntPolynomial{1, -2, 1}, IntPolynomial{1, 0, 1}, false};
    EXPECT_EQ(code_of([&] { (void)pair_sum({binomial_pair(2), bad}); }), Errc::NotInterlacing);
    EXPECT_EQ(code_of([] { (void)pair_sum(std::span<const InterlacingPair>{}); }), Errc::PreconditionFailed);
}

TEST(PairSum, OrderIndependent)
{
    std::vector<InterlacingPair> ps{binomial_pair(2), binomial_pair(3), binomial_pair(5), binomial_pair(7)};
    const auto ref = pair_sum(ps);
    std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) { return a.p.degree() > b.p.degree(); });
    do {
        EXPECT_EQ(pair_sum(ps), ref);
    } while (std::next_permutation(ps.begin(), ps.end(),
                                   [](const auto& a, const auto& b) { return a.p.degree() < b.p.degree(); }));
    // nested sums
    const auto left = pair_sum({pair_sum({binomial_pair(2), binomial_pair(3)}), binomial_pair(5), binomial_pair(7)});
    const auto right = pair_sum({binomial_pair(2), pair_sum({binomial_pair(3), pair_sum({binomial_pair(5), binomial_pair(7)})})});
    EXPECT_EQ(left, ref);
    EXPECT_EQ(right, ref);
}

TEST(Residues, SquarePair)
{
    const auto pr = verify_circular_interlacing(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 0, 1});
    const ResidueReport r = residue_signs(pr);
    ASSERT_EQ(r.signs.size(), 2u);
    EXPECT_EQ(r.signs, (std::vector<int>{1, 1}));
    EXPECT_EQ(r.poles[0].lo, Rational(-2));
    EXPECT_EQ(r.poles[1].lo, Rational(2));
}

TEST(Residues, PositiveForSums)
{
    const auto s = pair_sum({binomial_pair(2), binomial_pair(3)});
    const ResidueReport r = residue_signs(s);
    EXPECT_EQ(r.signs.size(), 3u);
    EXPECT_TRUE(r.all_positive());
    for (std::size_t i = 0; i + 1 < r.poles.size(); ++i)
        EXPECT_LE(r.poles[i].hi, r.poles[i + 1].lo);
    const auto big = pair_sum({binomial_pair(2), binomial_pair(3), binomial_pair(5), binomial_pair(7), binomial_pair(11)});
    EXPECT_TRUE(residue_signs(big).all_positive());
}

TEST(Residues, NegatedNumeratorDetected)
{
    const auto s = pair_sum({binomial_pair(2), binomial_pair(3)});
    EXPECT_FALSE(residue_signs(s.p, -s.q).all_positive());
    EXPECT_EQ(code_of([] { (void)residue_signs(InterlacingPair{IntPolynomial{-1, 0, 1}, IntPolynomial{1, 0, 1}, false}); }),
              Errc::PreconditionFailed);
}

TEST(Residues, PositiveForEveryVerifiedSample)
{
    for (std::size_t a = 1; a <= 6; ++a)
        for (std::size_t b = a; b <= 6; ++b) {
            const auto s = pair_sum({binomial_pair(a), binomial_pair(b)});
            EXPECT_TRUE(residue_signs(s).all_positive()) << a << "," << b;
        }
}

TEST(SalemCombine, Examples)
{
    const auto pr = verify_circular_interlacing(kP4, kPhi5);
    EXPECT_EQ(salem_combine(pr), (IntPolynomial{1, 0, -2, -3, -2, 0, 1}));
    const auto sq = verify_circular_interlacing(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 0, 1});
    EXPECT_EQ(salem_combine(sq), (IntPolynomial{1, -1, -2, -1, 1}));
}

TEST(SalemCombine, OddDegreeCarriesCyclotomicFactor)
{
    const auto pr = verify_circular_interlacing(IntPolynomial{-1, 1}, IntPolynomial{1, 1});
    const IntPolynomial s = salem_combine(pr);
    EXPECT_EQ(s, (IntPolynomial{1, -2, -2, 1}));
    EXPECT_EQ(s, oracle::naive_mul(IntPolynomial{1, 1}, IntPolynomial{1, -3, 1}));
    // numeric: roots -1, (3 +- sqrt 5)/2
    auto roots = oracle::companion_roots(s);
    std::sort(roots.begin(), roots.end(), [](auto x, auto y) { return x.real() < y.real(); });
    EXPECT_NEAR(roots[0].real(), -1.0, 1e-9);
    EXPECT_NEAR(roots[2].real(), (3 + std::sqrt(5.0)) / 2, 1e-9);
}

TEST(SalemCombine, SignConditionEnforced)
{
    // p(-1) = 0, q(1) = 0 and 2p(1) - q'(1) = 3 > 0
    const auto pr = verify_circular_interlacing(IntPolynomial{1, 1}, IntPolynomial{-1, 1});
    EXPECT_EQ(code_of([&] { (void)salem_combine(pr); }), Errc::PreconditionFailed);
    const InterlacingPair nonmonic = pair_sum({binomial_pair(2), binomial_pair(3)});
    EXPECT_EQ(code_of([&] { (void)salem_combine(InterlacingPair{nonmonic.p * mpz_class(2), nonmonic.q, true}); }),
              Errc::PreconditionFailed);
}

TEST(SalemCombine, IdentityAgainstIndependentExpansion)
{
    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = a + 1; b <= 7; ++b) {
            const auto s = pair_sum({binomial_pair(a), binomial_pair(b)});
            InterlacingPair h = s;
            if (mpz_even_p(content(h.q).get_mpz_t()))
                h.q.divide_exact(2);
            if (!h.p.is_monic())
                continue;
            const IntPolynomial expect =
                oracle::naive_mul(IntPolynomial{-1, 0, 1}, h.p) - oracle::naive_mul(IntPolynomial{0, 1}, h.q);
            EXPECT_EQ(salem_combine(h), expect);
        }
}

TEST(PisotCombine, Examples)
{
    const auto pr = verify_circular_interlacing(kP4, kPhi5);
    EXPECT_EQ(pisot_combine(pr), (IntPolynomial{1, 1, -1, -3, -3, -1, 1}));
    const auto lin = verify_circular_interlacing(IntPolynomial{-1, 1}, IntPolynomial{1, 1});
    const IntPolynomial s = pisot_combine(lin);
    EXPECT_EQ(s, (IntPolynomial{1, -1, -3, 1}));
    EXPECT_NEAR(oracle::largest_real_root(s), 3.2143, 1e-3);
    EXPECT_EQ(code_of([] { (void)pisot_combine(InterlacingPair{IntPolynomial{1}, IntPolynomial{}, true}); }),
              Errc::PreconditionFailed);
}

TEST(ComposePower, PreservesVerification)
{
    std::vector<InterlacingPair> samples{pair_sum({binomial_pair(2), binomial_pair(3)}),
                                         verify_circular_interlacing(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 0, 1}),
                                         pair_sum({binomial_pair(1), binomial_pair(4)})};
    for (const auto& s : samples)
        for (std::size_t n = 1; n <= 5; ++n)
            EXPECT_TRUE(verify_circular_interlacing(compose_power(s.p, n), compose_power(s.q, n)).verified) << n;
}
