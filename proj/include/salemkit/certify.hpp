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

#ifndef SALEMKIT_CERTIFY_HPP
#define SALEMKIT_CERTIFY_HPP

// Exact certification of Salem and Pisot minimal polynomials.
//
// Salem: S monic, reciprocal of degree 2m >= 4 with S(+-1) != 0. Its
// x-transform has m - 1 simple roots in (-2, 2) and one in (2, oo) exactly
// when S has 2m - 2 simple roots on |z| = 1 and the pair tau, 1/tau off it.
// Such an S is irreducible once the sieve passes. In a factorisation S = AB
// with tau a root of A, a factor B holding 1/tau would have constant term of
// modulus 1/tau < 1; otherwise all roots of B lie on the circle and B is
// cyclotomic by Kronecker's theorem.
//
// Pisot: P monic with one root in (1, oo) and deg - 1 roots in |z| < 1.
// A proper factor without the large root would have a nonzero integer
// constant term of modulus < 1, so P is irreducible.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cyclo.hpp"
#include "error.hpp"
#include "modular.hpp"
#include "polynomial.hpp"
#include "sturm.hpp"
#include "trace_polynomial.hpp"

namespace salemkit {

/// x-transforms up to this degree are counted with Sturm chains; larger
/// ones try the grid certificate first.
inline constexpr long kSturmDegreeLimit = 24;
inline constexpr std::size_t kGridMaxPoints = std::size_t{1} << 22;
inline constexpr unsigned kDefaultPrecisionBits = 64;

enum class SalemVerdict { Salem, ReciprocalPisot, NotSalem, Inconclusive };
enum class PisotVerdict { Pisot, NotPisot, Inconclusive };

inline std::string_view verdict_name(SalemVerdict v)
{
    switch (v) {
    case SalemVerdict::Salem: return "Salem";
    case SalemVerdict::ReciprocalPisot: return "ReciprocalPisot";
    case SalemVerdict::NotSalem: return "NotSalem";
    case SalemVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline std::string_view verdict_name(PisotVerdict v)
{
    switch (v) {
    case PisotVerdict::Pisot: return "Pisot";
    case PisotVerdict::NotPisot: return "NotPisot";
    case PisotVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

/// Closed interval [first, second] with dyadic endpoints.
using ValueInterval = std::pair<Rational, Rational>;

struct SalemCertificate {
    SalemVerdict verdict = SalemVerdict::Inconclusive;
    long degree = 0;
    mpz_class trace;
    bool monic = false;
    bool reciprocal = false;
    bool squarefree = false;
    int roots_inside = -1;       ///< x-transform roots in (-2, 2)
    int roots_at_endpoints = -1; ///< how many of x = +-2 are roots
    int roots_above = -1;        ///< x-transform roots in (2, oo)
    std::string method;          ///< "sturm" or "grid"
    std::optional<SieveResult> sieve;
    std::optional<ValueInterval> value;
    std::string reason; ///< first failed condition, empty for Salem
};

struct SalemOptions {
    bool compute_value = true;
    unsigned precision_bits = kDefaultPrecisionBits;
};

namespace detail {

// Root counts of the x-transform t of degree m.
struct XCounts {
    bool squarefree = false;
    int inside = -1;
    int above = -1;
    std::string method;
};

inline XCounts count_x_roots(const IntPolynomial& t)
{
    XCounts out;
    const long m = t.degree();
    if (m > kSturmDegreeLimit) {
        // m - 1 sign changes on (-2, 2) plus a sign change on (2, oo)
        // account for all m roots, so every root is simple.
        const bool above = sign_at(t, Rational(2)) != sgn(t.lead());
        if (above) {
            const GridCertificate g = grid_sign_changes(t, static_cast<std::size_t>(m - 1), kGridMaxPoints);
            if (g.found) {
                out.squarefree = true;
                out.inside = m - 1;
                out.above = 1;
                out.method = "grid";
                return out;
            }
        }
    }
    out.method = "sturm";
    const IntPolynomial sf = squarefree_part(t);
    out.squarefree = sf.degree() == m;
    out.inside = sturm_count(sf, Rational(-2), Rational(2));
    out.above = sturm_count(sf, Rational(2), std::nullopt);
    return out;
}

// Directed square roots of a nonnegative rational at 2^-bits resolution.
inline Rational sqrt_down(const Rational& r, unsigned bits)
{
    mpz_class scaled = r.get_num() << (2 * bits);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), r.get_den_mpz_t());
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    return make_rational(s, mpz_class(1) << bits);
}

inline Rational sqrt_up(const Rational& r, unsigned bits)
{
    mpz_class scaled = r.get_num() << (2 * bits);
    mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), r.get_den_mpz_t());
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    if (s * s < scaled)
        ++s;
    return make_rational(s, mpz_class(1) << bits);
}

// (x + sqrt(x^2 - 4)) / 2, rounded down or up.
inline Rational tau_down(const Rational& x, unsigned bits) { return (x + sqrt_down(x * x - 4, bits)) / 2; }
inline Rational tau_up(const Rational& x, unsigned bits) { return (x + sqrt_up(x * x - 4, bits)) / 2; }

// Bracket (lo, hi) with lo >= 2 around the unique root of t above 2.
inline ValueInterval bracket_above_two(const IntPolynomial& t)
{
    const int s2 = sign_at(t, Rational(2));
    if (s2 == 0 || s2 == sgn(t.lead()))
        throw Error(Errc::PreconditionFailed, "no sign change of the x-transform above 2");
    const Rational cap(cauchy_bound(t));
    Rational lo(2), hi(4);
    while (hi < cap && sign_at(t, hi) == s2) {
        lo = hi;
        hi *= 2;
    }
    if (hi > cap)
        hi = cap;
    return {lo, hi};
}

} // namespace detail

/**
 * Interval [lo, hi] around the Salem number tau of S, hi - lo <= 2^-bits.
 * The x-transform is bisected on a dyadic bracket of x0 = tau + 1/tau and
 * the endpoints are pushed through tau = (x + sqrt(x^2 - 4))/2 with outward
 * rounding; the map is increasing for x > 2.
 */
inline ValueInterval salem_value(const IntPolynomial& s, unsigned precision_bits = kDefaultPrecisionBits)
{
    const IntPolynomial t = x_transform(s);
    auto [lo, hi] = detail::bracket_above_two(t);
    const int slo = sign_at(t, lo) != 0 ? sign_at(t, lo) : sign_at(t, Rational(2));
    const Rational target = make_rational(1, mpz_class(1) << precision_bits);
    unsigned extra = 8;
    for (;;) {
        const Rational x_width = make_rational(1, mpz_class(1) << (precision_bits + extra));
        while (hi - lo > x_width) {
            Rational mid = (lo + hi) / 2;
            const int sm = sign_at(t, mid);
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
        const unsigned sqrt_bits = precision_bits + extra + 2;
        Rational tlo = detail::tau_down(lo, sqrt_bits), thi = detail::tau_up(hi, sqrt_bits);
        if (thi - tlo <= target)
            return {tlo, thi};
        extra += 8;
    }
}

inline SalemCertificate certify_salem(const IntPolynomial& s, const SalemOptions& opt = {})
{
    if (s.is_zero())
        throw Error(Errc::PreconditionFailed, "certify_salem of the zero polynomial");
    SalemCertificate c;
    c.degree = s.degree();
    c.trace = s.trace();
    c.monic = s.is_monic();
    c.reciprocal = is_reciprocal(s);
    auto fail = [&](SalemVerdict v, std::string why) {
        c.verdict = v;
        c.reason = std::move(why);
        return c;
    };
    if (!c.monic)
        return fail(SalemVerdict::NotSalem, "not monic");
    if (c.degree < 2 || c.degree % 2 != 0)
        return fail(SalemVerdict::NotSalem, "degree is not even and positive");
    if (!c.reciprocal)
        return fail(SalemVerdict::NotSalem, "not reciprocal");

    c.sieve = sieve_gcd_test(s);
    const IntPolynomial t = x_transform(s);
    const int at_plus = sign_at(t, Rational(2)) == 0 ? 1 : 0;
    const int at_minus = sign_at(t, Rational(-2)) == 0 ? 1 : 0;
    c.roots_at_endpoints = at_plus + at_minus;
    if (c.roots_at_endpoints)
        return fail(SalemVerdict::NotSalem, "S vanishes at z = 1 or z = -1");

    const detail::XCounts xc = detail::count_x_roots(t);
    c.squarefree = xc.squarefree;
    c.roots_inside = xc.inside;
    c.roots_above = xc.above;
    c.method = xc.method;
    const int m = static_cast<int>(t.degree());
    if (!c.squarefree)
        return fail(SalemVerdict::NotSalem, "repeated roots");
    if (c.roots_above != 1)
        return fail(SalemVerdict::NotSalem, std::to_string(c.roots_above) + " roots outside the closed disc, need 1");
    if (c.roots_inside != m - 1)
        return fail(SalemVerdict::NotSalem,
                    std::to_string(c.roots_inside) + " of " + std::to_string(m - 1) + " root pairs on the unit circle");
    if (!c.sieve->passed)
        return fail(SalemVerdict::NotSalem, "cyclotomic factor (sieve gcd has degree " +
                                                std::to_string(c.sieve->witness_gcd.degree()) + ")");
    c.verdict = (m == 1) ? SalemVerdict::ReciprocalPisot : SalemVerdict::Salem;
    if (opt.compute_value)
        c.value = salem_value(s, opt.precision_bits);
    return c;
}

/// |S(1) S(-1)|; equal to 1 exactly for unramified Salem numbers.
inline mpz_class unramified_flag(const IntPolynomial& s)
{
    return abs(eval(s, mpz_class(1)) * eval(s, mpz_class(-1)));
}

/**
 * T(y - 2) for the x-transform T of a Salem polynomial S of degree 2m:
 * the minimal polynomial of tau + 1/tau + 2, totally positive of trace
 * 2m + trace(S).
 */
inline IntPolynomial totally_positive_from_salem(const IntPolynomial& s)
{
    const SalemCertificate c = certify_salem(s, {.compute_value = false});
    if (c.verdict != SalemVerdict::Salem)
        throw Error(Errc::PreconditionFailed, "not a Salem polynomial: " + c.reason);
    const IntPolynomial r = taylor_shift(x_transform(s), mpz_class(-2));
    const long m = r.degree();
    if (m <= kSturmDegreeLimit && sturm_count(r, Rational(0), std::nullopt) != m)
        throw Error(Errc::PreconditionFailed, "shifted polynomial is not totally positive");
    if (r.trace() != c.trace + 2 * m)
        throw Error(Errc::PreconditionFailed, "trace of the shifted polynomial is not 2m + trace");
    return r;
}

/// deg >= 2 ceil(9T/2) + 2 for trace -T, T >= 2.
/// 18k+2 for T = 2k and 18k+10 for T = 2k+1, i.e. half the degree exceeds 9T/2.
inline constexpr long min_salem_degree(long trace_magnitude) { return 2 * ((9 * trace_magnitude) / 2) + 2; }

inline bool min_degree_check(long trace_magnitude, long degree)
{
    if (trace_magnitude < 2)
        throw Error(Errc::BadTrace, "minimum degree bound needs T >= 2, got " + std::to_string(trace_magnitude));
    return degree >= min_salem_degree(trace_magnitude);
}

/// min_degree_check for any trace; vacuously true when T < 2.
inline bool satisfies_min_degree(long trace, long degree)
{
    const long t = -trace;
    return t < 2 || min_degree_check(t, degree);
}

// ---------------------------------------------------------------------------
// Pisot

struct SchurCohnResult {
    std::optional<int> inside; ///< roots in |z| < 1, absent if every attempt degenerated
    long degenerate_step = -1; ///< first degenerate step of the unmodified run
    int auxiliary = 0;         ///< index into the auxiliary factor list, 0 = none
};

namespace detail {

// Schur-Cohn count for f without roots on |z| = 1; nullopt on a step with
// |a_0| = |a_n|, with the step index stored in `step`.
inline std::optional<int> schur_cohn_plain(IntPolynomial f, long& step)
{
    std::vector<std::pair<long, bool>> trail; // (degree, delta > 0)
    f = primitive_part(f);
    step = 0;
    while (f.degree() > 0) {
        const mpz_class a0 = f[0], an = f.lead();
        const mpz_class delta = a0 * a0 - an * an;
        if (delta == 0)
            return std::nullopt;
        trail.emplace_back(f.degree(), delta > 0);
        IntPolynomial g = a0 * f - an * reverse(f);
        if (g.is_zero())
            return std::nullopt;
        const mpz_class ct = content(g);
        g.divide_exact(ct);
        f = std::move(g);
        ++step;
    }
    int n = 0;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        n = it->second ? n : static_cast<int>(it->first) - n;
    return n;
}

} // namespace detail

/**
 * Roots of f in the open unit disc, for f without roots on |z| = 1. A step
 * with |a_0| = |a_n| (always the case for monic f with f(0) = +-1) stops the
 * plain recursion; f is then multiplied by a factor with a single root of
 * known position inside the disc and the count corrected.
 */
inline SchurCohnResult schur_cohn_count(const IntPolynomial& f)
{
    if (f.is_zero())
        throw Error(Errc::PreconditionFailed, "Schur-Cohn count of the zero polynomial");
    static const std::array<IntPolynomial, 5> aux = {IntPolynomial{1},      IntPolynomial{-1, 2}, IntPolynomial{1, 2},
                                                     IntPolynomial{-1, 3}, IntPolynomial{1, 3}};
    SchurCohnResult out;
    for (std::size_t i = 0; i < aux.size(); ++i) {
        long step = 0;
        auto n = detail::schur_cohn_plain(f * aux[i], step);
        if (i == 0 && !n)
            out.degenerate_step = step;
        if (n) {
            out.inside = *n - (i == 0 ? 0 : 1);
            out.auxiliary = static_cast<int>(i);
            return out;
        }
    }
    return out;
}

struct PisotCertificate {
    PisotVerdict verdict = PisotVerdict::Inconclusive;
    long degree = 0;
    mpz_class trace;
    int roots_inside = -1;     ///< |z| < 1
    int roots_above_one = -1;  ///< real roots in (1, oo)
    bool circle_free = false;
    long degenerate_step = -1;
    std::optional<ValueInterval> dominant;
    std::string reason;
};

/// Isolates the real root of p in (lo, hi) to width 2^-bits; p(lo), p(hi) of opposite sign.
inline ValueInterval refine_real_root(const IntPolynomial& p, Rational lo, Rational hi, unsigned bits)
{
    const int slo = sign_at(p, lo);
    const Rational w = make_rational(1, mpz_class(1) << bits);
    while (hi - lo > w) {
        Rational mid = (lo + hi) / 2;
        const int sm = sign_at(p, mid);
        if (sm == 0)
            return {mid, mid};
        (sm == slo ? lo : hi) = mid;
    }
    return {lo, hi};
}

inline PisotCertificate certify_pisot(const IntPolynomial& p, unsigned precision_bits = kDefaultPrecisionBits)
{
    if (p.is_zero())
        throw Error(Errc::PreconditionFailed, "certify_pisot of the zero polynomial");
    PisotCertificate c;
    c.degree = p.degree();
    c.trace = p.trace();
    auto fail = [&](PisotVerdict v, std::string why) {
        c.verdict = v;
        c.reason = std::move(why);
        return c;
    };
    if (!p.is_monic())
        return fail(PisotVerdict::NotPisot, "not monic");
    if (c.degree < 1)
        return fail(PisotVerdict::NotPisot, "constant polynomial");
    if (p[0] == 0)
        return fail(PisotVerdict::NotPisot, "zero constant term");
    if (sign_at(p, Rational(1)) == 0 || sign_at(p, Rational(-1)) == 0)
        return fail(PisotVerdict::NotPisot, "root at z = 1 or z = -1");

    const IntPolynomial sf = squarefree_part(p);
    c.roots_above_one = sturm_count(sf, Rational(1), std::nullopt);
    if (c.roots_above_one != 1)
        return fail(PisotVerdict::NotPisot, std::to_string(c.roots_above_one) + " real roots above 1, need 1");

    // A root w on the circle makes 1/w = conj(w) a root too, so it divides gcd(P, P*).
    const IntPolynomial g = gcd_primitive(p, reverse(p));
    if (g.degree() > 0) {
        const StripResult st = strip_cyclotomic(g);
        if (!st.passed)
            return fail(PisotVerdict::NotPisot, "cyclotomic factor");
        const IntPolynomial& h = st.quotient;
        if (h.degree() % 2 != 0 || !is_reciprocal(h))
            return fail(PisotVerdict::Inconclusive, "could not rule out roots on the unit circle");
        const IntPolynomial ht = x_transform(h);
        if (sign_at(ht, Rational(2)) == 0 || sign_at(ht, Rational(-2)) == 0 ||
            sturm_count(ht, Rational(-2), Rational(2)) != 0)
            return fail(PisotVerdict::NotPisot, "root on the unit circle");
    }
    c.circle_free = true;

    const SchurCohnResult sc = schur_cohn_count(p);
    c.degenerate_step = sc.degenerate_step;
    if (!sc.inside)
        return fail(PisotVerdict::Inconclusive,
                    "degenerate Schur-Cohn step " + std::to_string(sc.degenerate_step) + " for every auxiliary factor");
    c.roots_inside = *sc.inside;
    if (c.roots_inside != c.degree - 1)
        return fail(PisotVerdict::NotPisot, std::to_string(c.roots_inside) + " roots in the open disc, need " +
                                                std::to_string(c.degree - 1));
    c.verdict = PisotVerdict::Pisot;
    const Rational cap(cauchy_bound(p));
    c.dominant = refine_real_root(sf, Rational(1), cap, precision_bits);
    return c;
}

} // namespace salemkit

#endif // SALEMKIT_CERTIFY_HPP
