#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace periodlab {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// The zero polynomial is the empty vector; degree(zero) == -1.
using PolyQ = std::vector<mpq_class>;

int degree(const PolyQ& f);
void normalize(PolyQ& f);
bool is_zero(const PolyQ& f);
bool is_monic(const PolyQ& f);

PolyQ poly_from_int_coeffs(const std::vector<long>& c);

PolyQ add(const PolyQ& a, const PolyQ& b);
PolyQ sub(const PolyQ& a, const PolyQ& b);
PolyQ neg(const PolyQ& a);
PolyQ mul(const PolyQ& a, const PolyQ& b);
PolyQ scale(const PolyQ& a, const mpq_class& c);

// Euclidean division; b nonzero. Returns {quotient, remainder}.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

// Exact division; throws if the remainder is nonzero.
PolyQ div_exact(const PolyQ& a, const PolyQ& b);

// Monic gcd over Q.
PolyQ gcd(const PolyQ& a, const PolyQ& b);

PolyQ derivative(const PolyQ& f);
bool is_squarefree(const PolyQ& f);

mpq_class eval(const PolyQ& f, const mpq_class& x);

// f(a + b*y) as a polynomial in y.
PolyQ compose_linear(const PolyQ& f, const mpq_class& a, const mpq_class& b);

// Resultant Res_y(a, b) of two rational polynomials.
mpq_class resultant(const PolyQ& a, const PolyQ& b);

// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
PolyQ interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

std::string to_string(const PolyQ& f, const std::string& var = "x");

} // namespace periodlab
