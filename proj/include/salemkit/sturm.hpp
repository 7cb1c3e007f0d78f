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

#ifndef SALEMKIT_STURM_HPP
#define SALEMKIT_STURM_HPP

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "error.hpp"
#include "modular.hpp"
#include "polynomial.hpp"

namespace salemkit {

/// Interval endpoint; nullopt means -infinity on the left, +infinity on the right.
using Bound = std::optional<Rational>;

/**
 * Signed remainder sequence p, p', -rem(p, p'), ... of a squarefree
 * polynomial. Every element is kept primitive; only positive factors are
 * ever dropped, so sign variations are those of the classical chain.
 */
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p)
    {
        if (p.degree() < 1) {
            seq_.push_back(p);
            return;
        }
        seq_.push_back(primitive_part(p));
        seq_.push_back(primitive_part(derivative(seq_[0])));
        while (seq_.back().degree() > 0) {
            const IntPolynomial& a = seq_[seq_.size() - 2];
            const IntPolynomial& b = seq_.back();
            IntPolynomial r = pseudo_remainder(a, b);
            if (r.is_zero())
                break;
            // prem = lc(b)^(da-db+1) * rem; keep -rem up to a positive factor.
            const long e = a.degree() - b.degree() + 1;
            const bool flip = (b.lead() < 0) && (e % 2 == 1);
            r = flip ? r : -r;
            mpz_class c = content(r);
            r.divide_exact(c);
            seq_.push_back(std::move(r));
        }
    }

    [[nodiscard]] const std::vector<IntPolynomial>& sequence() const noexcept { return seq_; }

    /// Sign variations at x (zeros skipped).
    [[nodiscard]] int variations(const Rational& x) const
    {
        int v = 0, last = 0;
        for (const auto& f : seq_) {
            const int s = sign_at(f, x);
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++v;
            last = s;
        }
        return v;
    }

    /// Sign variations at +infinity (positive = true) or -infinity.
    [[nodiscard]] int variations_at_infinity(bool positive) const
    {
        int v = 0, last = 0;
        for (const auto& f : seq_) {
            if (f.is_zero())
                continue;
            int s = sgn(f.lead());
            if (!positive && (f.degree() % 2 == 1))
                s = -s;
            if (last != 0 && s != last)
                ++v;
            last = s;
        }
        return v;
    }

    [[nodiscard]] int variations(const Bound& x, bool right_end) const
    {
        return x ? variations(*x) : variations_at_infinity(right_end);
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    [[nodiscard]] int count(const Bound& lo, const Bound& hi) const
    {
        return variations(lo, false) - variations(hi, true);
    }

private:
    std::vector<IntPolynomial> seq_;
};

/// Number of distinct real roots of p in the open interval (lo, hi).
/// p is reduced to its squarefree part first; finite endpoints must not be roots.
inline int sturm_count(const IntPolynomial& p, const Bound& lo, const Bound& hi)
{
    if (p.is_zero())
        throw Error(Errc::PreconditionFailed, "sturm_count of the zero polynomial");
    for (const Bound* b : {&lo, &hi})
        if (*b && sign_at(p, **b) == 0)
            throw Error(Errc::EndpointIsRoot, "endpoint " + (*b)->get_str() + " is a root");
    return SturmChain(squarefree_part(p)).count(lo, hi);
}

/// An isolating interval for one real root: open (lo, hi) with the root
/// strictly inside, or the exact root lo == hi.
struct RootInterval {
    Rational lo;
    Rational hi;

    [[nodiscard]] bool exact() const { return lo == hi; }
    [[nodiscard]] Rational width() const { return hi - lo; }
};

/// Halves an isolating interval of a simple root of squarefree p.
inline void bisect_root(const IntPolynomial& p, RootInterval& r)
{
    if (r.exact())
        return;
    Rational mid = (r.lo + r.hi) / 2;
    const int sm = sign_at(p, mid);
    if (sm == 0) {
        r.lo = r.hi = mid;
        return;
    }
    if (sm == sign_at(p, r.lo))
        r.lo = mid;
    else
        r.hi = mid;
}

/**
 * Isolating intervals, in increasing order, for every real root of the
 * squarefree polynomial p inside the open interval (lo, hi).
 */
inline std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi)
{
    const SturmChain chain(p);
    std::vector<RootInterval> out;
    struct Job {
        Rational lo, hi;
        int vlo, vhi;
    };
    if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0)
        throw Error(Errc::EndpointIsRoot, "isolation interval endpoint is a root");
    std::vector<Job> stack{{lo, hi, chain.variations(lo), chain.variations(hi)}};
    while (!stack.empty()) {
        Job j = std::move(stack.back());
        stack.pop_back();
        const int n = j.vlo - j.vhi;
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back({j.lo, j.hi});
            continue;
        }
        Rational mid = (j.lo + j.hi) / 2;
        if (sign_at(p, mid) == 0) {
            out.push_back({mid, mid});
            // Nudge away from the exact root by a quarter of the half-width.
            Rational eps = (j.hi - j.lo) / 8;
            while (sgn(eval_rational(p, mid - eps)) == 0 || sgn(eval_rational(p, mid + eps)) == 0 ||
                   chain.count(mid - eps, mid + eps) != 1)
                eps /= 2;
            Rational l = mid - eps, r = mid + eps;
            const int vl = chain.variations(l), vr = chain.variations(r);
            stack.push_back({r, j.hi, vr, j.vhi});
            stack.push_back({j.lo, l, j.vlo, vl});
            continue;
        }
        const int vm = chain.variations(mid);
        stack.push_back({mid, j.hi, vm, j.vhi});
        stack.push_back({j.lo, mid, j.vlo, vm});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

/// Cauchy bound 1 + max|c_i / lc|, rounded up to an integer.
inline mpz_class cauchy_bound(const IntPolynomial& p)
{
    mpz_class mx = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        mpz_class a = abs(p[i]);
        if (a > mx)
            mx = a;
    }
    mpz_class lc = abs(p.lead());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

} // namespace salemkit

#endif // SALEMKIT_STURM_HPP
