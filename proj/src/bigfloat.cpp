#include "periodlab/bigfloat.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace periodlab {

namespace {
// one ulp at the magnitude of x, as a double upper bound
double ulp_of(const BigFloat& x) {
    double m = std::fabs(x.to_double());
    if (m == 0.0) m = 1e-300;
    return m * std::ldexp(1.0, -static_cast<int>(x.prec()) + 2);
}
} // namespace

void BigFloat::cos_sin_2pi(BigFloat& c, BigFloat& s, long k, long n, mpfr_prec_t prec) {
    mpfr_t pi, ang;
    mpfr_init2(pi, prec + 16);
    mpfr_init2(ang, prec + 16);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_si(ang, pi, 2 * k, MPFR_RNDN);
    mpfr_div_si(ang, ang, n, MPFR_RNDN);
    c = BigFloat(prec);
    s = BigFloat(prec);
    mpfr_sin_cos(s.raw(), c.raw(), ang, MPFR_RNDN);
    mpfr_clear(pi);
    mpfr_clear(ang);
}

std::string BigFloat::str(int digits) const {
    char* buf = nullptr;
    // %.NRe gives a deterministic decimal rendering
    std::string fmt = "%." + std::to_string(digits) + "Re";
    if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BallComplex BallComplex::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    BallComplex r(BigFloat::from_rational(q, prec), BigFloat(prec), 0.0);
    r.rad = ulp_of(r.re);
    return r;
}

BallComplex BallComplex::zero(mpfr_prec_t prec) {
    return BallComplex(BigFloat(prec), BigFloat(prec), 0.0);
}

double BallComplex::mid_mag() const {
    double a = re.to_double(), b = im.to_double();
    return std::hypot(a, b);
}

double BallComplex::mag_upper() const { return mid_mag() * (1 + 1e-14) + rad; }

BallComplex BallComplex::operator+(const BallComplex& o) const {
    BallComplex r(re + o.re, im + o.im, rad + o.rad);
    r.rad += ulp_of(r.re) + ulp_of(r.im);
    return r;
}

BallComplex BallComplex::operator-(const BallComplex& o) const {
    BallComplex r(re - o.re, im - o.im, rad + o.rad);
    r.rad += ulp_of(r.re) + ulp_of(r.im);
    return r;
}

BallComplex BallComplex::operator-() const { return BallComplex(-re, -im, rad); }

BallComplex BallComplex::operator*(const BallComplex& o) const {
    BallComplex r(re * o.re - im * o.im, re * o.im + im * o.re, 0.0);
    double ma = mid_mag(), mb = o.mid_mag();
    r.rad = ma * o.rad + mb * rad + rad * o.rad;
    r.rad = r.rad * (1 + 1e-14) + ulp_of(r.re) + ulp_of(r.im);
    return r;
}

BallComplex BallComplex::inverse() const {
    double m = mid_mag();
    if (m <= rad)
        throw std::domain_error("BallComplex: inverting a ball containing zero");
    BigFloat n2 = re * re + im * im;
    BallComplex r(re / n2, -im / n2, 0.0);
    // |1/z - 1/m| <= rad / (m * (m - rad))
    r.rad = rad / (m * (m - rad));
    r.rad = r.rad * (1 + 1e-14) + ulp_of(r.re) + ulp_of(r.im);
    return r;
}

std::string BallComplex::str(int digits) const {
    std::ostringstream os;
    os << re.str(digits);
    std::string ims = im.str(digits);
    if (!ims.empty() && ims[0] != '-') os << "+";
    os << ims << "i";
    return os.str();
}

} // namespace periodlab
