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

#ifndef SALEMKIT_INTERVAL_HPP
#define SALEMKIT_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace salemkit {

/// Working precision (bits) of every interval endpoint.
inline constexpr mpfr_prec_t kIntervalPrecision = 128;

/// Owning wrapper around an mpfr_t.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, kIntervalPrecision); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kIntervalPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept : BigFloat() { mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o)
    {
        if (this != &o)
            mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    [[nodiscard]] mpfr_srcptr get() const noexcept { return v_; }

    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

/**
 * Closed real interval [lo, hi] with outward-rounded endpoints.
 *
 * Every operation rounds lo down and hi up, so the true value of any
 * expression built from these operations lies inside the result.
 */
class RealInterval {
public:
    RealInterval() = default;

    static RealInterval from_integer(const mpz_class& v)
    {
        RealInterval r;
        mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
        return r;
    }

    static RealInterval from_rational(const mpq_class& v)
    {
        RealInterval r;
        mpfr_set_q(r.lo_.get(), v.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), v.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    /// Decimal constant such as "1.02", enclosed exactly.
    static RealInterval from_decimal(const std::string& s)
    {
        RealInterval r;
        mpfr_set_str(r.lo_.get(), s.c_str(), 10, MPFR_RNDD);
        mpfr_set_str(r.hi_.get(), s.c_str(), 10, MPFR_RNDU);
        return r;
    }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b)
    {
        RealInterval r;
        mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return r;
    }

    friend RealInterval operator-(const RealInterval& a, const RealInterval& b)
    {
        RealInterval r;
        mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return r;
    }

    friend RealInterval operator*(const RealInterval& a, const RealInterval& b)
    {
        // General case: min/max over the four endpoint products.
        BigFloat p[4], q[4];
        const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
        const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                mpfr_mul(p[2 * i + j].get(), as[i], bs[j], MPFR_RNDD);
                mpfr_mul(q[2 * i + j].get(), as[i], bs[j], MPFR_RNDU);
            }
        RealInterval r;
        mpfr_set(r.lo_.get(), p[0].get(), MPFR_RNDD);
        mpfr_set(r.hi_.get(), q[0].get(), MPFR_RNDU);
        for (int k = 1; k < 4; ++k) {
            mpfr_min(r.lo_.get(), r.lo_.get(), p[k].get(), MPFR_RNDD);
            mpfr_max(r.hi_.get(), r.hi_.get(), q[k].get(), MPFR_RNDU);
        }
        return r;
    }

    /// Natural log; requires lo > 0.
    [[nodiscard]] RealInterval log() const
    {
        RealInterval r;
        mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    /// Square root; requires lo >= 0.
    [[nodiscard]] RealInterval sqrt() const
    {
        RealInterval r;
        mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    /// Certainly a < b for every pair of points.
    friend bool certainly_less(const RealInterval& a, const RealInterval& b)
    {
        return mpfr_less_p(a.hi_.get(), b.lo_.get()) != 0;
    }

    friend bool certainly_less_equal(const RealInterval& a, const RealInterval& b)
    {
        return mpfr_lessequal_p(a.hi_.get(), b.lo_.get()) != 0;
    }

    [[nodiscard]] bool contains(double x) const
    {
        return mpfr_cmp_d(lo_.get(), x) <= 0 && mpfr_cmp_d(hi_.get(), x) >= 0;
    }

    [[nodiscard]] double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    [[nodiscard]] double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
    [[nodiscard]] double mid_double() const
    {
        BigFloat m;
        mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return m.to_double();
    }

    /// Width as a double (rounded up).
    [[nodiscard]] double width() const
    {
        BigFloat w;
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return mpfr_get_d(w.get(), MPFR_RNDU);
    }

    [[nodiscard]] const BigFloat& lo() const noexcept { return lo_; }
    [[nodiscard]] const BigFloat& hi() const noexcept { return hi_; }

    /// "[lo, hi]" with `digits` significant digits, outward rounded.
    [[nodiscard]] std::string to_string(int digits = 17) const
    {
        return "[" + format(lo_, digits, MPFR_RNDD) + ", " + format(hi_, digits, MPFR_RNDU) + "]";
    }

private:
    static std::string format(const BigFloat& v, int digits, mpfr_rnd_t rnd)
    {
        char* buf = nullptr;
        const std::string fmt = "%." + std::to_string(digits) + "R*g";
        mpfr_asprintf(&buf, fmt.c_str(), rnd, v.get());
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    BigFloat lo_;
    BigFloat hi_;
};

} // namespace salemkit

#endif // SALEMKIT_INTERVAL_HPP
