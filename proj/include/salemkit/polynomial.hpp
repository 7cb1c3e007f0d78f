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

#ifndef SALEMKIT_POLYNOMIAL_HPP
#define SALEMKIT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace salemkit {

/// Exact rational; mpq_class keeps numerator/denominator reduced with a
/// positive denominator once canonicalize() has run.
using Rational = mpq_class;

inline Rational make_rational(const mpz_class& num, const mpz_class& den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/**
 * Dense univariate polynomial over Z, coefficients stored in ascending
 * order of exponent.
 *
 * The stored form is canonical: the highest stored coefficient is nonzero,
 * and the zero polynomial is the empty sequence. degree() of the zero
 * polynomial is kZeroDegree, which stands in for minus infinity.
 */
class IntPolynomial {
public:
    static constexpr long kZeroDegree = -1;

    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long> coeffs)
    {
        c_.reserve(coeffs.size());
        for (long v : coeffs)
            c_.emplace_back(v);
        trim();
    }

    static IntPolynomial constant(const mpz_class& v) { return IntPolynomial(std::vector<mpz_class>{v}); }

    /// coef * z^k
    static IntPolynomial monomial(const mpz_class& coef, std::size_t k)
    {
        std::vector<mpz_class> c(k + 1);
        c[k] = coef;
        return IntPolynomial(std::move(c));
    }

    /// z^k + sign (sign = -1 gives z^k - 1).
    static IntPolynomial binomial(std::size_t k, long sign)
    {
        std::vector<mpz_class> c(k + 1);
        c[k] += 1;
        c[0] += sign;
        return IntPolynomial(std::move(c));
    }

    [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }

    [[nodiscard]] std::span<const mpz_class> coeffs() const noexcept { return c_; }

    /// Coefficient of z^i; zero beyond the degree.
    [[nodiscard]] mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

    [[nodiscard]] const mpz_class& operator[](std::size_t i) const { return c_[i]; }

    /// Leading coefficient; zero for the zero polynomial.
    [[nodiscard]] mpz_class lead() const { return c_.empty() ? mpz_class(0) : c_.back(); }

    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Negative of the subleading coefficient of a monic polynomial.
    [[nodiscard]] mpz_class trace() const
    {
        if (c_.size() < 2)
            return 0;
        return -c_[c_.size() - 2];
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    IntPolynomial operator-() const
    {
        IntPolynomial r = *this;
        for (auto& v : r.c_)
            v = -v;
        return r;
    }

    IntPolynomial& operator+=(const IntPolynomial& b)
    {
        if (b.c_.size() > c_.size())
            c_.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c_[i] += b.c_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& b)
    {
        if (b.c_.size() > c_.size())
            c_.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c_[i] -= b.c_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator*=(const mpz_class& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
    friend IntPolynomial operator*(const mpz_class& s, IntPolynomial a) { return a *= s; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    /// Multiply by z^k.
    [[nodiscard]] IntPolynomial shifted(std::size_t k) const
    {
        if (c_.empty())
            return {};
        std::vector<mpz_class> c(k + c_.size());
        std::copy(c_.begin(), c_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
        return IntPolynomial(std::move(c));
    }

    /// Exact division of every coefficient by s (caller guarantees divisibility).
    IntPolynomial& divide_exact(const mpz_class& s)
    {
        for (auto& v : c_)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
        return *this;
    }

    /// Moves the coefficient storage out; the polynomial becomes zero.
    std::vector<mpz_class> release() && { return std::move(c_); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = 40;

// r[0 .. a.size()+b.size()-1) += a*b, schoolbook.
inline void mul_schoolbook_acc(std::span<mpz_class> r, std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        mpz_srcptr ai = a[i].get_mpz_t();
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
}

// Karatsuba for equal-length operands; r must hold 2n-1 zeroed slots.
inline void mul_karatsuba_equal(std::span<mpz_class> r, std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    const std::size_t n = a.size();
    if (n < kKaratsubaThreshold) {
        mul_schoolbook_acc(r, a, b);
        return;
    }
    const std::size_t h = n / 2;
    const std::size_t hi = n - h;
    auto a0 = a.first(h), a1 = a.subspan(h);
    auto b0 = b.first(h), b1 = b.subspan(h);

    std::vector<mpz_class> z0(2 * h - 1), z2(2 * hi - 1);
    mul_karatsuba_equal(z0, a0, b0);
    mul_karatsuba_equal(z2, a1, b1);

    std::vector<mpz_class> as(hi), bs(hi);
    for (std::size_t i = 0; i < hi; ++i) {
        as[i] = a1[i];
        bs[i] = b1[i];
        if (i < h) {
            as[i] += a0[i];
            bs[i] += b0[i];
        }
    }
    std::vector<mpz_class> z1(2 * hi - 1);
    mul_karatsuba_equal(z1, as, bs);
    for (std::size_t i = 0; i < z0.size(); ++i)
        z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i)
        z1[i] -= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i)
        r[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i)
        r[i + h] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i)
        r[i + 2 * h] += z2[i];
}

inline std::vector<mpz_class> mul_dense(std::span<const mpz_class> a, std::span<const mpz_class> b)
{
    if (a.empty() || b.empty())
        return {};
    if (a.size() < b.size())
        std::swap(a, b);
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    if (b.size() < kKaratsubaThreshold) {
        mul_schoolbook_acc(r, a, b);
        return r;
    }
    // Unbalanced operands: cut the longer one into blocks of the shorter length.
    const std::size_t m = b.size();
    std::vector<mpz_class> block(2 * m - 1);
    std::vector<mpz_class> padded(m);
    for (std::size_t off = 0; off < a.size(); off += m) {
        const std::size_t len = std::min(m, a.size() - off);
        for (std::size_t i = 0; i < m; ++i)
            padded[i] = i < len ? a[off + i] : mpz_class(0);
        for (auto& v : block)
            v = 0;
        mul_karatsuba_equal(block, padded, b);
        const std::size_t used = std::min(block.size(), r.size() - off);
        for (std::size_t i = 0; i < used; ++i)
            r[off + i] += block[i];
    }
    return r;
}

} // namespace detail

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    return IntPolynomial(detail::mul_dense(a.coeffs(), b.coeffs()));
}

/// Exact product; schoolbook below the Karatsuba threshold.
inline IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

/// Reference schoolbook product, kept for cross-checking the fast path.
inline IntPolynomial mul_schoolbook(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    detail::mul_schoolbook_acc(r, a.coeffs(), b.coeffs());
    return IntPolynomial(std::move(r));
}

/// Quotient and remainder of a / b, or nothing if the quotient is not integral.
struct DivResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
    bool integral = true;
};

/// Long division over Z. Stops early (integral = false) as soon as a
/// quotient coefficient is not an integer.
inline DivResult divrem_integral(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw Error(Errc::PreconditionFailed, "division by the zero polynomial");
    if (a.degree() < b.degree())
        return {IntPolynomial{}, a, true};
    std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const mpz_class& lb = b.coeffs().back();
    const bool unit = (lb == 1);
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db + 1));
    mpz_class t;
    for (long i = a.degree() - db; i >= 0; --i) {
        mpz_class& top = r[static_cast<std::size_t>(i + db)];
        if (top == 0)
            continue;
        if (unit) {
            t = top;
        } else {
            if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
                return {IntPolynomial{}, IntPolynomial{}, false};
            mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        }
        q[static_cast<std::size_t>(i)] = t;
        for (long j = 0; j <= db; ++j) {
            const mpz_class& bj = b.coeffs()[static_cast<std::size_t>(j)];
            if (bj != 0)
                mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), t.get_mpz_t(), bj.get_mpz_t());
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r)), true};
}

/// q with a = q*b exactly; throws NotDivisible otherwise.
inline IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b)
{
    auto res = divrem_integral(a, b);
    if (!res.integral)
        throw Error(Errc::NotDivisible, "quotient is not integral");
    if (!res.remainder.is_zero())
        throw Error(Errc::NotDivisible, "nonzero remainder of degree " + std::to_string(res.remainder.degree()));
    return std::move(res.quotient);
}

/// True when b divides a over Z.
inline bool divides(const IntPolynomial& b, const IntPolynomial& a)
{
    if (a.is_zero())
        return true;
    if (b.is_zero())
        return false;
    auto res = divrem_integral(a, b);
    return res.integral && res.remainder.is_zero();
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw Error(Errc::PreconditionFailed, "pseudo-division by zero");
    if (a.degree() < b.degree())
        return a;
    std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const mpz_class& lb = b.coeffs().back();
    for (long i = a.degree(); i >= db; --i) {
        mpz_class t = r[static_cast<std::size_t>(i)];
        for (long k = 0; k < i; ++k)
            r[static_cast<std::size_t>(k)] *= lb;
        r[static_cast<std::size_t>(i)] = 0;
        if (t == 0)
            continue;
        for (long j = 0; j < db; ++j)
            mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), t.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(db));
    return IntPolynomial(std::move(r));
}

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
inline mpz_class content(const IntPolynomial& a)
{
    mpz_class g = 0;
    for (const auto& v : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

/// a / content(a) with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& a)
{
    if (a.is_zero())
        return a;
    mpz_class c = content(a);
    if (a.lead() < 0)
        c = -c;
    IntPolynomial r = a;
    return r.divide_exact(c);
}

/// z^deg(a) * a(1/z): the coefficient sequence reversed.
inline IntPolynomial reverse(const IntPolynomial& a)
{
    std::vector<mpz_class> c(a.coeffs().rbegin(), a.coeffs().rend());
    return IntPolynomial(std::move(c));
}

inline bool is_reciprocal(const IntPolynomial& a) { return !a.is_zero() && reverse(a) == a; }

/// a(z^k), k >= 1.
inline IntPolynomial compose_power(const IntPolynomial& a, std::size_t k)
{
    if (k == 0)
        throw Error(Errc::PreconditionFailed, "compose_power needs k >= 1");
    if (a.is_zero() || k == 1)
        return a;
    std::vector<mpz_class> c(static_cast<std::size_t>(a.degree()) * k + 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i * k] = a[i];
    return IntPolynomial(std::move(c));
}

/// a(-z).
inline IntPolynomial negate_variable(const IntPolynomial& a)
{
    std::vector<mpz_class> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

inline IntPolynomial derivative(const IntPolynomial& a)
{
    if (a.size() <= 1)
        return {};
    std::vector<mpz_class> c(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        c[i - 1] = a[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(c));
}

inline mpz_class eval(const IntPolynomial& a, const mpz_class& x)
{
    mpz_class acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc *= x;
        acc += a[i];
    }
    return acc;
}

/// den^deg(a) * a(num/den) as an integer (den > 0); same sign as a(num/den).
inline mpz_class eval_homogeneous(const IntPolynomial& a, const mpz_class& num, const mpz_class& den)
{
    if (a.is_zero())
        return 0;
    mpz_class acc = a.lead();
    mpz_class dpow = 1;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        dpow *= den;
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), dpow.get_mpz_t());
    }
    return acc;
}

/// Exact value a(x).
inline Rational eval_rational(const IntPolynomial& a, const Rational& x)
{
    if (a.is_zero())
        return 0;
    mpz_class num = eval_homogeneous(a, x.get_num(), x.get_den());
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(a.degree()));
    return make_rational(num, den);
}

/// Sign (-1, 0, 1) of a(x).
inline int sign_at(const IntPolynomial& a, const Rational& x)
{
    return sgn(eval_homogeneous(a, x.get_num(), x.get_den()));
}

/// Sign of a(num / 2^shift), evaluated without forming rationals.
inline int sign_at_dyadic(const IntPolynomial& a, const mpz_class& num, unsigned long shift)
{
    if (a.is_zero())
        return 0;
    // Horner on sum c_i num^i 2^(shift*(d-i)).
    mpz_class acc = a.lead();
    mpz_class term;
    unsigned long pw = 0;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        pw += shift;
        acc *= num;
        if (a[i] != 0) {
            mpz_mul_2exp(term.get_mpz_t(), a[i].get_mpz_t(), pw);
            acc += term;
        }
    }
    return sgn(acc);
}

/// a(z + s), by repeated synthetic division (O(n^2) additions).
inline IntPolynomial taylor_shift(const IntPolynomial& a, const mpz_class& s)
{
    std::vector<mpz_class> c(a.coeffs().begin(), a.coeffs().end());
    const std::size_t n = c.size();
    if (s == 0 || n <= 1)
        return a;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            mpz_addmul(c[j].get_mpz_t(), c[j + 1].get_mpz_t(), s.get_mpz_t());
    return IntPolynomial(std::move(c));
}

/// a * (z^k - 1)/(z - 1) = a * (1 + z + ... + z^(k-1)) via a sliding window sum.
inline IntPolynomial mul_geometric(const IntPolynomial& a, std::size_t k)
{
    if (a.is_zero() || k == 0)
        return {};
    const std::size_t n = a.size();
    std::vector<mpz_class> r(n + k - 1);
    mpz_class window = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < n)
            window += a[i];
        if (i >= k)
            window -= a[i - k];
        r[i] = window;
    }
    return IntPolynomial(std::move(r));
}

/// a * (z^k + sign).
inline IntPolynomial mul_binomial(const IntPolynomial& a, std::size_t k, long sign)
{
    if (a.is_zero())
        return {};
    std::vector<mpz_class> r(a.size() + k);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i + k] += a[i];
        if (sign == 1)
            r[i] += a[i];
        else if (sign == -1)
            r[i] -= a[i];
        else
            r[i] += a[i] * sign;
    }
    return IntPolynomial(std::move(r));
}

/// Divides by (z - 1) while the value at 1 vanishes; returns the quotient and the count.
inline std::pair<IntPolynomial, unsigned> strip_root_one(const IntPolynomial& p)
{
    if (p.is_zero())
        throw Error(Errc::PreconditionFailed, "strip_root_one of the zero polynomial");
    std::vector<mpz_class> c(p.coeffs().begin(), p.coeffs().end());
    unsigned m = 0;
    for (;;) {
        mpz_class s = 0;
        for (const auto& v : c)
            s += v;
        if (s != 0 || c.size() <= 1)
            break;
        // synthetic division by (z - 1), top-down
        std::vector<mpz_class> q(c.size() - 1);
        mpz_class acc = 0;
        for (std::size_t i = c.size() - 1; i >= 1; --i) {
            acc += c[i];
            q[i - 1] = acc;
        }
        c = std::move(q);
        ++m;
    }
    return {IntPolynomial(std::move(c)), m};
}

// ---------------------------------------------------------------------------
// Text form: ascending base-10 coefficients separated by single spaces.

inline std::string to_text(const IntPolynomial& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            out += ' ';
        out += a[i].get_str();
    }
    return out;
}

namespace detail {

inline bool is_integer_token(std::string_view t)
{
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size())
        return false;
    for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9')
            return false;
    return true;
}

} // namespace detail

/// Parses one line of the text form. `line_no` is only used in diagnostics.
inline IntPolynomial from_text(std::string_view line, std::size_t line_no = 1)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": empty polynomial line");
    std::vector<mpz_class> c;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t sp = line.find(' ', pos);
        if (sp == std::string_view::npos)
            sp = line.size();
        std::string_view tok = line.substr(pos, sp - pos);
        if (!detail::is_integer_token(tok))
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ", offset " + std::to_string(pos) +
                                              ": expected an integer");
        c.emplace_back(std::string(tok), 10);
        pos = sp + 1;
    }
    return IntPolynomial(std::move(c));
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& a) { return os << to_text(a); }

} // namespace salemkit

#endif // SALEMKIT_POLYNOMIAL_HPP
