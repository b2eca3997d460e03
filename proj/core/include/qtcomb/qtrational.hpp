#pragma once

#include <string>
#include <string_view>

#include "qtcomb/mpoly.hpp"

namespace qtcomb {

// Exact rational function in q, t (and z) over the integers.
//
// Canonical form: num and den are integer polynomials with trivial joint
// content, gcd(num, den) = 1, and den has positive leading coefficient under
// the canonical term order.  With that normalization equality is structural.
class QTRational {
public:
    QTRational() : num_(), den_(1) {}
    QTRational(long c) : num_(c), den_(1) {}
    QTRational(const Rat& c);
    QTRational(MPoly num);                // num / 1
    QTRational(MPoly num, MPoly den);     // reduces; den must be nonzero

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // value lies in Q[q,t,z] (denominator is constant)
    bool is_polynomial() const { return den_.is_constant(); }
    // value lies in Z[q,t,z] with all coefficients >= 0
    bool is_nonneg_integer_polynomial() const;
    bool uses_z() const { return num_.uses_z() || den_.uses_z(); }
    // numerator/denominator ratio as a single polynomial; throws if not one
    MPoly as_polynomial() const;

    QTRational& operator+=(const QTRational& o);
    QTRational& operator-=(const QTRational& o);
    QTRational& operator*=(const QTRational& o);
    QTRational& operator/=(const QTRational& o);  // throws on zero divisor
    friend QTRational operator+(QTRational a, const QTRational& b) { return a += b; }
    friend QTRational operator-(QTRational a, const QTRational& b) { return a -= b; }
    friend QTRational operator*(QTRational a, const QTRational& b) { return a *= b; }
    friend QTRational operator/(QTRational a, const QTRational& b) { return a /= b; }
    QTRational operator-() const;
    QTRational inverse() const;

    friend bool operator==(const QTRational&, const QTRational&) = default;
    // cross-multiplication equality, independent of canonicalization
    static bool eq_cross(const QTRational& a, const QTRational& b);

    // substitute t -> 1/t, exactly
    QTRational subst_t_inverse() const;
    // numeric evaluation at q = t = z = 1; throws if the denominator vanishes
    Rat eval_one() const;

    std::string str() const;  // "num" or "(num)/(den)"
    static QTRational parse(std::string_view text);

private:
    void reduce();
    MPoly num_, den_;
};

inline QTRational operator*(const MPoly& a, QTRational b) { return b *= QTRational(a); }

}  // namespace qtcomb
