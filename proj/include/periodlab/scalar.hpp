#pragma once

#include "periodlab/bigfloat.hpp"
#include "periodlab/cyclotomic.hpp"
#include "periodlab/rng.hpp"

#include <memory>
#include <string>
#include <variant>

namespace periodlab {

enum class Tri { yes, no, unknown };

inline bool definitely(Tri t) { return t == Tri::yes; }

enum class BackendMode { exact_cyclotomic, big_complex };

// Scalar backend shared by all values of one computation: exact numbers
// in Q(zeta_N), or complex balls at a fixed decimal precision.
struct Backend {
    BackendMode mode;
    std::shared_ptr<const CycloField> cyclo; // exact mode
    long digits = 0;                         // float mode
    mpfr_prec_t bits = 0;

    static Backend exact(unsigned conductor) {
        Backend b;
        b.mode = BackendMode::exact_cyclotomic;
        b.cyclo = std::make_shared<CycloField>(conductor);
        return b;
    }
    static Backend floating(long digits) {
        Backend b;
        b.mode = BackendMode::big_complex;
        b.digits = digits;
        b.bits = static_cast<mpfr_prec_t>(digits * 3.3219280948873623) + 32;
        return b;
    }
    bool is_exact() const { return mode == BackendMode::exact_cyclotomic; }
    std::string describe() const;
};

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Cyclo c) : v_(std::move(c)) {}
    explicit Scalar(BallComplex b) : v_(std::move(b)) {}

    static Scalar zero(const Backend& b);
    static Scalar one(const Backend& b);
    static Scalar from_rational(const Backend& b, const mpq_class& q);
    static Scalar random(const Backend& b, Rng& rng, long height = 3);
    static Scalar random_nonzero(const Backend& b, Rng& rng, long height = 3);

    bool exact() const { return std::holds_alternative<Cyclo>(v_); }
    const Cyclo& cyc() const { return std::get<Cyclo>(v_); }
    const BallComplex& ball() const { return std::get<BallComplex>(v_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar conj() const;
    Scalar pow(long e) const;

    // decidable in exact mode; never claims yes in float mode
    Tri is_zero() const;
    Tri equals(const Scalar& o) const;
    bool certainly_nonzero() const { return is_zero() == Tri::no; }

    // pivoting magnitude (float); exact mode uses a support size heuristic
    double pivot_weight() const;

    std::string str(int float_digits = 20) const;

private:
    std::variant<std::monostate, Cyclo, BallComplex> v_;
};

} // namespace periodlab
