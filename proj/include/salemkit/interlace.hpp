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

#ifndef SALEMKIT_INTERLACE_HPP
#define SALEMKIT_INTERLACE_HPP

// Pairs of polynomials whose zeros lie on the unit circle and alternate
// there, and the two combinators that turn such a pair into a Salem or a
// Pisot candidate.
//
// All circle questions are answered in the coordinate x = z + 1/z: the
// roots z = 1 and z = -1 are split off by exact division first, the
// palindromic remainder is mapped to a real polynomial, and its roots must
// then be real, simple and inside (-2, 2). z = 1 corresponds to x = 2 and
// z = -1 to x = -2.

#include <gmpxx.h>

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "modular.hpp"
#include "polynomial.hpp"
#include "sturm.hpp"
#include "trace_polynomial.hpp"

namespace salemkit {

/// Bisections allowed after the initial isolation before giving up.
inline constexpr int kRefinementCap = 64;

/// (p, q) with p in the denominator role and q in the numerator role.
struct InterlacingPair {
    IntPolynomial p;
    IntPolynomial q;
    bool verified = false;

    friend bool operator==(const InterlacingPair& a, const InterlacingPair& b)
    {
        return a.p == b.p && a.q == b.q;
    }
};

/// Unit-circle root data of one polynomial, in the x coordinate.
struct CircleRoots {
    bool root_at_one = false;       ///< z = 1 (x = 2)
    bool root_at_minus_one = false; ///< z = -1 (x = -2)
    IntPolynomial x_poly;           ///< x-transform of the part without z = +-1 roots
    std::vector<RootInterval> x_roots;
};

namespace detail {

struct UnitRootSplit {
    IntPolynomial core; ///< f / ((z-1)^m_one (z+1)^m_minus)
    unsigned m_one = 0;
    unsigned m_minus = 0;
};

inline UnitRootSplit split_unit_roots(const IntPolynomial& f)
{
    auto [g, m_one] = strip_root_one(f);
    auto [h, m_minus] = strip_root_one(negate_variable(g));
    // h(-z) = g(z) / (-z-1)^m_minus
    IntPolynomial core = negate_variable(h);
    if (m_minus % 2 == 1)
        core = -core;
    return {std::move(core), m_one, m_minus};
}

inline CircleRoots circle_roots(const IntPolynomial& f, const char* name)
{
    CircleRoots out;
    const std::string who(name);
    auto [core, m_one, m_minus] = split_unit_roots(f);
    if (m_one > 1)
        throw Error(Errc::NotSimple, who + ": z = 1 is a root of multiplicity " + std::to_string(m_one));
    if (m_minus > 1)
        throw Error(Errc::NotSimple, who + ": z = -1 is a root of multiplicity " + std::to_string(m_minus));
    out.root_at_one = m_one == 1;
    out.root_at_minus_one = m_minus == 1;
    if (core.degree() % 2 != 0 || reverse(core) != core)
        throw Error(Errc::NotOnCircle, who + ": part without z = +-1 roots is not palindromic");
    out.x_poly = x_transform(core);
    if (out.x_poly.degree() == 0)
        return out;
    if (squarefree_part(out.x_poly).degree() != out.x_poly.degree())
        throw Error(Errc::NotSimple, who + ": repeated root on the unit circle");
    const int inside = sturm_count(out.x_poly, Rational(-2), Rational(2));
    if (inside != out.x_poly.degree())
        throw Error(Errc::NotOnCircle, who + ": only " + std::to_string(inside) + " of " +
                                           std::to_string(out.x_poly.degree()) + " conjugate root pairs on |z| = 1");
    out.x_roots = isolate_real_roots(out.x_poly, Rational(-2), Rational(2));
    return out;
}

inline bool overlaps(const RootInterval& a, const RootInterval& b)
{
    if (a.exact() && b.exact())
        return a.lo == b.lo;
    if (a.exact())
        return b.lo < a.lo && a.lo < b.hi;
    if (b.exact())
        return a.lo < b.lo && b.lo < a.hi;
    return a.lo < b.hi && b.lo < a.hi;
}

struct TaggedRoot {
    RootInterval where;
    int owner; // 0 = p, 1 = q
};

} // namespace detail

/**
 * Certifies the circular interlacing condition for (p, q) exactly:
 * every root lies on |z| = 1 and is simple, and going round the circle the
 * roots of p and q alternate. Returns the pair with verified = true.
 */
inline InterlacingPair verify_circular_interlacing(const IntPolynomial& p, const IntPolynomial& q)
{
    if (p.degree() < 1 || p.degree() != q.degree())
        throw Error(Errc::PreconditionFailed, "interlacing pair needs deg p = deg q >= 1");
    if (p.lead() <= 0 || q.lead() <= 0)
        throw Error(Errc::PreconditionFailed, "interlacing pair needs positive leading coefficients");
    if (gcd_primitive(p, q).degree() != 0)
        throw Error(Errc::PreconditionFailed, "p and q share a root");

    const CircleRoots rp = detail::circle_roots(p, "p");
    const CircleRoots rq = detail::circle_roots(q, "q");

    std::vector<detail::TaggedRoot> roots;
    auto add = [&](const CircleRoots& r, int owner) {
        if (r.root_at_one)
            roots.push_back({{Rational(2), Rational(2)}, owner});
        if (r.root_at_minus_one)
            roots.push_back({{Rational(-2), Rational(-2)}, owner});
        for (const auto& iv : r.x_roots)
            roots.push_back({iv, owner});
    };
    add(rp, 0);
    add(rq, 1);
    if (!(rp.root_at_one || rq.root_at_one) || !(rp.root_at_minus_one || rq.root_at_minus_one))
        throw Error(Errc::NotAlternating, "conjugate roots next to z = 1 or z = -1 belong to the same polynomial");

    const IntPolynomial* polys[2] = {&rp.x_poly, &rq.x_poly};
    for (int round = 0;; ++round) {
        std::sort(roots.begin(), roots.end(),
                  [](const detail::TaggedRoot& a, const detail::TaggedRoot& b) {
                      // an exact point sorts before an open interval starting at it
                      if (a.where.lo != b.where.lo)
                          return a.where.lo < b.where.lo;
                      return a.where.exact() && !b.where.exact();
                  });
        bool clash = false;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots[i].owner == roots[i + 1].owner || !detail::overlaps(roots[i].where, roots[i + 1].where))
                continue;
            clash = true;
            bisect_root(*polys[roots[i].owner], roots[i].where);
            bisect_root(*polys[roots[i + 1].owner], roots[i + 1].where);
        }
        if (!clash)
            break;
        if (round >= kRefinementCap)
            throw Error(Errc::Inconclusive, "isolating intervals of p and q still overlap after refinement cap");
    }
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        if (roots[i].owner == roots[i + 1].owner)
            throw Error(Errc::NotAlternating, std::string("two consecutive roots of ") +
                                                  (roots[i].owner == 0 ? "p" : "q") + " near x = " +
                                                  roots[i].where.hi.get_str());
    return {p, q, true};
}

/// Signs of the residues of f(x) = (z/(z^2-1)) q/p at its poles in x.
struct ResidueReport {
    std::vector<RootInterval> poles; ///< increasing, pairwise disjoint
    std::vector<int> signs;          ///< +1 or -1, one per pole

    [[nodiscard]] bool all_positive() const
    {
        return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
    }
};

namespace detail {

// Sign of f at the root isolated by `iv` of the squarefree `owner`, where
// f and owner have no common root. Refines iv in place.
inline int sign_at_root(const IntPolynomial& f, const IntPolynomial& owner, RootInterval& iv)
{
    if (iv.exact())
        return sign_at(f, iv.lo);
    const IntPolynomial fs = squarefree_part(f);
    for (int k = 0; k <= kRefinementCap; ++k) {
        const int slo = sign_at(fs, iv.lo), shi = sign_at(fs, iv.hi);
        if (slo != 0 && shi != 0 && sturm_count(fs, iv.lo, iv.hi) == 0)
            return sign_at(f, iv.lo);
        bisect_root(owner, iv);
        if (iv.exact())
            return sign_at(f, iv.lo);
    }
    throw Error(Errc::Inconclusive, "residue sign undecided after refinement cap");
}

} // namespace detail

/**
 * Residue signs of f(x) = (z/(z^2-1)) q(z)/p(z) written in x = z + 1/z.
 *
 * With the z = +-1 roots split off, f = Q(x)/D(x) where Q is the
 * x-transform of the palindromic part of q and D is that of p times
 * (x - 2) if p(1) = 0 and (x + 2) if p(-1) = 0. The residue at a pole a is
 * Q(a)/D'(a). Only p needs its roots on the circle.
 */
inline ResidueReport residue_signs(const IntPolynomial& p, const IntPolynomial& q)
{
    const CircleRoots rp = detail::circle_roots(p, "p");
    const IntPolynomial qx = x_transform(detail::split_unit_roots(q).core);

    IntPolynomial d = rp.x_poly;
    std::vector<RootInterval> poles = rp.x_roots;
    if (rp.root_at_one) {
        d = d * IntPolynomial{-2, 1};
        poles.push_back({Rational(2), Rational(2)});
    }
    if (rp.root_at_minus_one) {
        d = d * IntPolynomial{2, 1};
        poles.push_back({Rational(-2), Rational(-2)});
    }
    const IntPolynomial dd = derivative(d);

    // Open intervals are refined against the x-polynomial of p, which does
    // not vanish at the endpoints -2 and 2.
    std::vector<std::pair<RootInterval, int>> found;
    for (auto iv : poles) {
        const IntPolynomial& owner = iv.exact() ? d : rp.x_poly;
        const int sq = detail::sign_at_root(qx, owner, iv);
        const int sd = detail::sign_at_root(dd, owner, iv);
        if (sq == 0)
            throw Error(Errc::PreconditionFailed, "numerator vanishes at a pole");
        found.emplace_back(iv, sq * sd);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first.lo != b.first.lo)
            return a.first.lo < b.first.lo;
        return a.first.exact() && !b.first.exact();
    });
    ResidueReport out;
    for (auto& [iv, s] : found) {
        out.poles.push_back(iv);
        out.signs.push_back(s);
    }
    return out;
}

inline ResidueReport residue_signs(const InterlacingPair& pair)
{
    if (!pair.verified)
        throw Error(Errc::PreconditionFailed, "residue_signs needs a verified pair");
    return residue_signs(pair.p, pair.q);
}

/// Divides p and q by their joint content and makes lc(p) positive.
inline InterlacingPair normalize_pair(IntPolynomial p, IntPolynomial q)
{
    mpz_class c;
    const mpz_class cp = content(p), cq = content(q);
    mpz_gcd(c.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
    if (p.lead() < 0)
        c = -c;
    if (c != 0) {
        p.divide_exact(c);
        q.divide_exact(c);
    }
    return {std::move(p), std::move(q), false};
}

/**
 * The reduced quotient q/p = sum_i q_i/p_i, normalised and re-verified.
 * Inputs that are not flagged verified are checked first.
 */
inline InterlacingPair pair_sum(std::span<const InterlacingPair> pairs)
{
    if (pairs.empty())
        throw Error(Errc::PreconditionFailed, "pair_sum of an empty list");
    for (const auto& pr : pairs) {
        if (pr.verified)
            continue;
        try {
            (void)verify_circular_interlacing(pr.p, pr.q);
        } catch (const Error& e) {
            throw Error(Errc::NotInterlacing, std::string("input pair rejected: ") + e.what());
        }
    }
    IntPolynomial num = pairs[0].q, den = pairs[0].p;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        num = num * pairs[i].p + pairs[i].q * den;
        den = den * pairs[i].p;
        const IntPolynomial g = gcd_primitive(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    const IntPolynomial g = gcd_primitive(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    InterlacingPair out = normalize_pair(std::move(den), std::move(num));
    return verify_circular_interlacing(out.p, out.q);
}

inline InterlacingPair pair_sum(std::initializer_list<InterlacingPair> pairs)
{
    return pair_sum(std::span<const InterlacingPair>(pairs.begin(), pairs.size()));
}

namespace detail {

inline void require_combinable(const InterlacingPair& pair)
{
    if (!pair.verified)
        throw Error(Errc::PreconditionFailed, "pair is not verified");
    if (pair.p.degree() < 1)
        throw Error(Errc::PreconditionFailed, "degenerate pair");
    if (!pair.p.is_monic())
        throw Error(Errc::PreconditionFailed, "p must be monic");
}

} // namespace detail

/**
 * (z^2 - 1) p(z) - z q(z): a Salem minimal polynomial (or a quadratic
 * reciprocal Pisot one), possibly times cyclotomic factors. Requires
 * p(1) = 0, or q(1) = 0 with 2p(1) - q'(1) < 0, which is exactly when the
 * result has a real root greater than 1.
 */
inline IntPolynomial salem_combine(const InterlacingPair& pair)
{
    detail::require_combinable(pair);
    const mpz_class p1 = eval(pair.p, 1);
    const mpz_class q1 = eval(pair.q, 1);
    const bool ok = (p1 == 0) || (q1 == 0 && 2 * p1 - eval(derivative(pair.q), 1) < 0);
    if (!ok)
        throw Error(Errc::PreconditionFailed, "sign condition at z = 1 fails; no root > 1 is guaranteed");
    return IntPolynomial{-1, 0, 1} * pair.p - pair.q.shifted(1);
}

/// (z^2 - z - 1) p(z) - z q(z): always a Pisot minimal polynomial.
inline IntPolynomial pisot_combine(const InterlacingPair& pair)
{
    detail::require_combinable(pair);
    return IntPolynomial{-1, -1, 1} * pair.p - pair.q.shifted(1);
}

} // namespace salemkit

#endif // SALEMKIT_INTERLACE_HPP
