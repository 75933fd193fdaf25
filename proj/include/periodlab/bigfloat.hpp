#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace periodlab {

// Thin RAII wrapper over mpfr_t with per-value precision.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_double(double d, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const mpq_class& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat operator+(const BigFloat& o) const { BigFloat r(prec()); mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator-(const BigFloat& o) const { BigFloat r(prec()); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator*(const BigFloat& o) const { BigFloat r(prec()); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator/(const BigFloat& o) const { BigFloat r(prec()); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    BigFloat operator-() const { BigFloat r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sqrt() const { BigFloat r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }

    // cos/sin of 2*pi*k/n at this value's precision
    static void cos_sin_2pi(BigFloat& c, BigFloat& s, long k, long n, mpfr_prec_t prec);

    std::string str(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

// Complex midpoint with a conservative error radius. The radius is a
// plain double: values at desk scale stay far from the double range
// limits while the midpoints carry hundreds of bits.
struct BallComplex {
    BigFloat re, im;
    double rad = 0.0;

    BallComplex() = default;
    BallComplex(BigFloat r, BigFloat i, double e = 0.0)
        : re(std::move(r)), im(std::move(i)), rad(e) {}

    static BallComplex from_rational(const mpq_class& q, mpfr_prec_t prec);
    static BallComplex zero(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re.prec(); }
    double mag_upper() const; // upper bound on |z|
    double mid_mag() const;   // |midpoint| as double

    BallComplex operator+(const BallComplex& o) const;
    BallComplex operator-(const BallComplex& o) const;
    BallComplex operator-() const;
    BallComplex operator*(const BallComplex& o) const;
    BallComplex inverse() const;
    BallComplex operator/(const BallComplex& o) const { return *this * o.inverse(); }
    BallComplex conj() const { return BallComplex(re, -im, rad); }

    bool certainly_nonzero() const { return mid_mag() > rad; }
    bool contains_zero() const { return !certainly_nonzero(); }
    // |*this - o| certainly positive?
    bool certainly_distinct(const BallComplex& o) const { return (*this - o).certainly_nonzero(); }

    std::string str(int digits) const;
};

} // namespace periodlab
