#include "periodlab/scalar.hpp"

#include <stdexcept>

namespace periodlab {

std::string Backend::describe() const {
    if (is_exact()) return "exact:N=" + std::to_string(cyclo->conductor());
    return "float:digits=" + std::to_string(digits);
}

Scalar Scalar::zero(const Backend& b) {
    if (b.is_exact()) return Scalar(Cyclo::from_rational(b.cyclo, 0));
    return Scalar(BallComplex::zero(b.bits));
}

Scalar Scalar::one(const Backend& b) { return from_rational(b, 1); }

Scalar Scalar::from_rational(const Backend& b, const mpq_class& q) {
    if (b.is_exact()) return Scalar(Cyclo::from_rational(b.cyclo, q));
    return Scalar(BallComplex::from_rational(q, b.bits));
}

Scalar Scalar::random(const Backend& b, Rng& rng, long height) {
    if (b.is_exact()) return Scalar(Cyclo::random(b.cyclo, rng, height));
    long denom = 16;
    BigFloat re = BigFloat::from_rational(mpq_class(rng.range(-height * denom, height * denom), denom), b.bits);
    BigFloat im = BigFloat::from_rational(mpq_class(rng.range(-height * denom, height * denom), denom), b.bits);
    return Scalar(BallComplex(std::move(re), std::move(im), 0.0));
}

Scalar Scalar::random_nonzero(const Backend& b, Rng& rng, long height) {
    for (int tries = 0; tries < 64; ++tries) {
        Scalar s = random(b, rng, height);
        if (s.certainly_nonzero()) return s;
    }
    throw std::runtime_error("random_nonzero: exhausted retries");
}

#define PL_BINOP(op)                                                            \
    if (exact() != o.exact()) throw std::logic_error("Scalar: backend mismatch"); \
    if (exact()) return Scalar(cyc() op o.cyc());                               \
    return Scalar(ball() op o.ball());

Scalar Scalar::operator+(const Scalar& o) const { PL_BINOP(+) }
Scalar Scalar::operator-(const Scalar& o) const { PL_BINOP(-) }
Scalar Scalar::operator*(const Scalar& o) const { PL_BINOP(*) }
#undef PL_BINOP

Scalar Scalar::operator-() const {
    if (exact()) return Scalar(-cyc());
    return Scalar(-ball());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (exact()) return Scalar(cyc().inverse());
    return Scalar(ball().inverse());
}

Scalar Scalar::conj() const {
    if (exact()) return Scalar(cyc().conj());
    return Scalar(ball().conj());
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar r;
    bool have = false;
    while (e) {
        if (e & 1) {
            r = have ? r * base : base;
            have = true;
        }
        base = base * base;
        e >>= 1;
    }
    if (!have) {
        if (exact()) return Scalar(Cyclo::from_rational(cyc().field(), 1));
        return Scalar(BallComplex::from_rational(1, ball().prec()));
    }
    return r;
}

Tri Scalar::is_zero() const {
    if (exact()) return cyc().is_zero() ? Tri::yes : Tri::no;
    return ball().certainly_nonzero() ? Tri::no : Tri::unknown;
}

Tri Scalar::equals(const Scalar& o) const {
    if (exact() != o.exact()) throw std::logic_error("Scalar: backend mismatch");
    if (exact()) return cyc() == o.cyc() ? Tri::yes : Tri::no;
    return ball().certainly_distinct(o.ball()) ? Tri::no : Tri::unknown;
}

double Scalar::pivot_weight() const {
    if (!exact()) return ball().mid_mag();
    // exact: prefer entries with small support for cheaper elimination
    double nz = 0;
    for (const auto& c : cyc().coeffs())
        if (c != 0) ++nz;
    return cyc().is_zero() ? 0.0 : 1.0 / (1.0 + nz);
}

std::string Scalar::str(int float_digits) const {
    if (std::holds_alternative<std::monostate>(v_)) return "<unset>";
    if (exact()) return cyc().str();
    return ball().str(float_digits);
}

} // namespace periodlab
