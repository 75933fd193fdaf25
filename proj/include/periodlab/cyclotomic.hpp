#pragma once

#include "periodlab/poly.hpp"
#include "periodlab/rng.hpp"

#include <memory>
#include <string>
#include <vector>

namespace periodlab {

// Q(zeta_N), elements written in the power basis 1, z, ..., z^{phi(N)-1}
// modulo the N-th cyclotomic polynomial. All arithmetic is exact.
class CycloField {
public:
    explicit CycloField(unsigned conductor);

    unsigned conductor() const { return n_; }
    unsigned dim() const { return dim_; }
    const PolyQ& modulus() const { return phi_; }

    // z^k reduced into the power basis, any k >= 0 (taken mod N first)
    const PolyQ& power(unsigned k) const { return powers_[k % n_]; }

private:
    unsigned n_;
    unsigned dim_;
    PolyQ phi_;
    std::vector<PolyQ> powers_; // z^0 .. z^{N-1} reduced
};

PolyQ cyclotomic_polynomial(unsigned n);

class Cyclo {
public:
    Cyclo() : field_(nullptr) {}
    Cyclo(std::shared_ptr<const CycloField> field, PolyQ coeffs);

    static Cyclo from_rational(std::shared_ptr<const CycloField> field, const mpq_class& q);
    static Cyclo zeta_power(std::shared_ptr<const CycloField> field, unsigned k);
    static Cyclo random(std::shared_ptr<const CycloField> field, Rng& rng, long height = 3);

    const std::shared_ptr<const CycloField>& field() const { return field_; }
    const PolyQ& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational(mpq_class* value = nullptr) const;

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo inverse() const;
    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // complex conjugation z -> z^{N-1}
    Cyclo conj() const;
    // Galois action z -> z^a, gcd(a, N) = 1
    Cyclo galois(unsigned a) const;

    std::string str() const;

private:
    std::shared_ptr<const CycloField> field_;
    PolyQ c_;
};

// Residues coprime to N; indexes the Galois group of Q(zeta_N)/Q.
std::vector<unsigned> coprime_residues(unsigned n);

} // namespace periodlab
