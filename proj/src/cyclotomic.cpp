#include "periodlab/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

namespace periodlab {

PolyQ cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n
    PolyQ f(n + 1, mpq_class(0));
    f[0] = -1;
    f[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        f = div_exact(f, cyclotomic_polynomial(d));
    }
    return f;
}

std::vector<unsigned> coprime_residues(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned a = 1; a < std::max(n, 2u); ++a)
        if (std::gcd(a, n) == 1) out.push_back(a);
    if (n == 1) out.push_back(1);
    return out;
}

CycloField::CycloField(unsigned conductor) : n_(conductor) {
    if (conductor == 0) throw std::invalid_argument("CycloField: conductor must be positive");
    phi_ = cyclotomic_polynomial(conductor);
    dim_ = static_cast<unsigned>(degree(phi_));
    powers_.resize(n_);
    PolyQ z{mpq_class(0), mpq_class(1)};
    PolyQ cur{mpq_class(1)};
    for (unsigned k = 0; k < n_; ++k) {
        powers_[k] = cur;
        cur = divmod(mul(cur, z), phi_).second;
    }
}

Cyclo::Cyclo(std::shared_ptr<const CycloField> field, PolyQ coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (degree(c_) >= static_cast<int>(field_->dim()))
        c_ = divmod(c_, field_->modulus()).second;
    normalize(c_);
}

Cyclo Cyclo::from_rational(std::shared_ptr<const CycloField> field, const mpq_class& q) {
    PolyQ c;
    if (q != 0) c.push_back(q);
    return Cyclo(std::move(field), std::move(c));
}

Cyclo Cyclo::zeta_power(std::shared_ptr<const CycloField> field, unsigned k) {
    PolyQ c = field->power(k);
    return Cyclo(std::move(field), std::move(c));
}

Cyclo Cyclo::random(std::shared_ptr<const CycloField> field, Rng& rng, long height) {
    PolyQ c(field->dim());
    for (auto& x : c) x = mpq_class(rng.range(-height, height));
    return Cyclo(std::move(field), std::move(c));
}

bool Cyclo::is_rational(mpq_class* value) const {
    if (degree(c_) > 0) return false;
    if (value) *value = c_.empty() ? mpq_class(0) : c_[0];
    return true;
}

Cyclo Cyclo::operator+(const Cyclo& o) const { return Cyclo(field_, add(c_, o.c_)); }
Cyclo Cyclo::operator-(const Cyclo& o) const { return Cyclo(field_, sub(c_, o.c_)); }
Cyclo Cyclo::operator-() const { return Cyclo(field_, neg(c_)); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    return Cyclo(field_, divmod(mul(c_, o.c_), field_->modulus()).second);
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    // extended euclid: s*c + t*phi = 1
    PolyQ a(c_), b(field_->modulus());
    PolyQ s0{mpq_class(1)}, s1{};
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        PolyQ s2 = sub(s0, mul(q, s1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // a = gcd, constant (phi irreducible, c nonzero)
    if (degree(a) != 0) throw std::logic_error("Cyclo: modulus not irreducible?");
    mpq_class inv = 1 / a[0];
    return Cyclo(field_, scale(s0, inv));
}

bool Cyclo::operator==(const Cyclo& o) const { return c_ == o.c_; }

Cyclo Cyclo::conj() const { return galois(field_->conductor() == 1 ? 1 : field_->conductor() - 1); }

Cyclo Cyclo::galois(unsigned a) const {
    const unsigned n = field_->conductor();
    if (std::gcd(a, n) != 1) throw std::invalid_argument("Cyclo::galois: residue not coprime");
    PolyQ out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        out = add(out, scale(field_->power(static_cast<unsigned>(k) * a % n), c_[k]));
    }
    return Cyclo(field_, out);
}

std::string Cyclo::str() const {
    if (c_.empty()) return "0";
    return to_string(c_, "z");
}

} // namespace periodlab
