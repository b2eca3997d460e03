#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtcomb {

using Int = mpz_class;
using Rat = mpq_class;

// Monomial q^a * t^b * z^c.
struct Monomial {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    std::uint32_t z = 0;

    std::uint32_t total() const { return q + t + z; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: higher total degree first, ties broken by higher
// q-exponent, then t, then z.  Map iteration order == printing order, and
// begin() is the leading term.
struct CanonicalTermFirst {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.q != b.q) return a.q > b.q;
        if (a.t != b.t) return a.t > b.t;
        return a.z > b.z;
    }
};

// Exact sparse polynomial in q, t, z with rational coefficients.
// Invariant: no stored coefficient is zero.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, CanonicalTermFirst>;

    MPoly() = default;
    MPoly(long c);
    explicit MPoly(const Rat& c);

    static MPoly monomial(Rat coeff, std::uint32_t eq, std::uint32_t et = 0,
                          std::uint32_t ez = 0);
    static MPoly var_q(std::uint32_t e = 1) { return monomial(1, e, 0, 0); }
    static MPoly var_t(std::uint32_t e = 1) { return monomial(1, 0, e, 0); }
    static MPoly var_z(std::uint32_t e = 1) { return monomial(1, 0, 0, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }

    std::uint32_t degree() const;  // total degree; 0 for the zero polynomial
    std::uint32_t degree_q() const;
    std::uint32_t degree_t() const;
    std::uint32_t degree_z() const;
    bool uses_z() const { return degree_z() > 0; }

    const Rat& leading_coeff() const;  // under the canonical order
    Rat constant_term() const;
    Rat coeff(const Monomial& m) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator-() const;
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& mul_scalar(const Rat& c);
    MPoly& mul_monomial(const Rat& c, const Monomial& m);
    MPoly pow(std::uint32_t e) const;
    friend bool operator==(const MPoly&, const MPoly&) = default;

    // Value at q = t = z = 1 (sum of coefficients).
    Rat eval_one() const;
    // Value at numeric point (q0, t0, z0).
    Rat eval(const Rat& q0, const Rat& t0, const Rat& z0 = 0) const;

    // Exponent scaling x^e -> x^{k*e}; this is p_k applied to an alphabet of
    // monomials, valid for integer-coefficient alphabets.
    MPoly frobenius(std::uint32_t k) const;

    // Coefficient of z^k, as a polynomial in q,t only.
    MPoly z_coefficient(std::uint32_t k) const;

    // All coefficients integers with no common factor, leading coeff > 0.
    bool is_integer_primitive() const;
    // Writes f = content * primitive, content rational carrying the sign of
    // the leading coefficient.  Content of 0 is 0.
    Rat rational_content() const;
    MPoly primitive_part() const;

    // True (and sets quot) iff b divides *this exactly.
    bool divide_exact(const MPoly& b, MPoly* quot = nullptr) const;
    static MPoly gcd(const MPoly& a, const MPoly& b);

    // Canonical text, e.g. "q^3 + q^2*t + q*t^2 + t^3 + q*t", "-1/2*q*z + 3".
    std::string str() const;
    static MPoly parse(std::string_view text);

private:
    void add_term(const Monomial& m, const Rat& c);
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, MPoly p) { return p.mul_scalar(c); }

}  // namespace qtcomb
