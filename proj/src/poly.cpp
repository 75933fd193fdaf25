#include "periodlab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace periodlab {

int degree(const PolyQ& f) { return static_cast<int>(f.size()) - 1; }

void normalize(PolyQ& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_zero(const PolyQ& f) { return f.empty(); }

bool is_monic(const PolyQ& f) { return !f.empty() && f.back() == 1; }

PolyQ poly_from_int_coeffs(const std::vector<long>& c) {
    PolyQ f;
    f.reserve(c.size());
    for (long v : c) f.emplace_back(v);
    normalize(f);
    return f;
}

PolyQ add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

PolyQ sub(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

PolyQ neg(const PolyQ& a) {
    PolyQ r(a);
    for (auto& c : r) c = -c;
    return r;
}

PolyQ mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    normalize(r);
    return r;
}

PolyQ scale(const PolyQ& a, const mpq_class& c) {
    if (c == 0) return {};
    PolyQ r(a);
    for (auto& x : r) x *= c;
    return r;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.empty()) throw std::invalid_argument("poly division by zero");
    PolyQ rem(a), quo;
    int db = degree(b);
    if (degree(a) >= db) quo.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class& lc = b.back();
    while (degree(rem) >= db) {
        int k = degree(rem) - db;
        mpq_class c = rem.back() / lc;
        quo[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        normalize(rem);
    }
    return {quo, rem};
}

PolyQ div_exact(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw std::logic_error("div_exact: nonzero remainder");
    return q;
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x(a), y(b);
    normalize(x);
    normalize(y);
    while (!y.empty()) {
        PolyQ r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty() && x.back() != 1) {
        mpq_class inv = 1 / x.back();
        for (auto& c : x) c *= inv;
    }
    return x;
}

PolyQ derivative(const PolyQ& f) {
    PolyQ r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * mpq_class(static_cast<long>(i)));
    normalize(r);
    return r;
}

bool is_squarefree(const PolyQ& f) {
    if (degree(f) <= 1) return !f.empty();
    return degree(gcd(f, derivative(f))) == 0;
}

mpq_class eval(const PolyQ& f, const mpq_class& x) {
    mpq_class r(0);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

PolyQ compose_linear(const PolyQ& f, const mpq_class& a, const mpq_class& b) {
    // Horner: result = (...(f_n*(a+by) + f_{n-1})*(a+by) + ...)
    PolyQ lin{a, b};
    normalize(lin);
    PolyQ r;
    for (size_t i = f.size(); i-- > 0;) {
        r = mul(r, lin);
        if (f[i] != 0) r = add(r, PolyQ{f[i]});
    }
    return r;
}

mpq_class resultant(const PolyQ& a0, const PolyQ& b0) {
    PolyQ a(a0), b(b0);
    normalize(a);
    normalize(b);
    if (a.empty() || b.empty()) return 0;
    if (degree(a) == 0) {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), a[0].get_num().get_mpz_t(), degree(b));
        mpz_pow_ui(r.get_den_mpz_t(), a[0].get_den().get_mpz_t(), degree(b));
        r.canonicalize();
        return r;
    }
    mpq_class acc(1);
    bool flip = false;
    // Euclidean remainder sequence with the classical transformation rules.
    while (degree(b) > 0) {
        PolyQ r = divmod(a, b).second;
        int da = degree(a), db = degree(b), dr = degree(r);
        // res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b,r)
        if ((da & 1) && (db & 1)) flip = !flip;
        mpq_class p(1);
        for (int i = 0; i < da - dr; ++i) p *= b.back();
        acc *= p;
        a = std::move(b);
        b = std::move(r);
        if (b.empty()) return 0;
    }
    // deg b == 0
    mpq_class p(1);
    for (int i = 0; i < degree(a); ++i) p *= b[0];
    acc *= p;
    return flip ? mpq_class(-acc) : acc;
}

PolyQ interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    // Newton's divided differences.
    size_t n = xs.size();
    std::vector<mpq_class> coef(ys);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n; i-- > j;)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    PolyQ r;
    for (size_t i = n; i-- > 0;) {
        // r = r*(x - xs[i]) + coef[i]
        r = mul(r, PolyQ{-xs[i], 1});
        r = add(r, PolyQ{coef[i]});
    }
    return r;
}

std::string to_string(const PolyQ& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        mpq_class c = f[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace periodlab
