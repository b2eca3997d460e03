#include "qtcomb/qtrational.hpp"

#include <stdexcept>

namespace qtcomb {

QTRational::QTRational(const Rat& c) : num_(c), den_(1) { reduce(); }

QTRational::QTRational(MPoly num) : num_(std::move(num)), den_(1) { reduce(); }

QTRational::QTRational(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QTRational: zero denominator");
    reduce();
}

void QTRational::reduce() {
    if (den_.is_zero()) throw std::domain_error("QTRational: zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        // cheap exact-division fast paths before the full gcd
        MPoly q;
        if (num_.divide_exact(den_, &q)) {
            num_ = std::move(q);
            den_ = MPoly(1);
        } else if (den_.divide_exact(num_, &q)) {
            den_ = std::move(q);
            num_ = MPoly(1);
        } else {
            MPoly g = MPoly::gcd(num_, den_);
            if (!g.is_constant()) {
                MPoly qn, qd;
                if (!num_.divide_exact(g, &qn) || !den_.divide_exact(g, &qd))
                    throw std::logic_error("QTRational: gcd does not divide");
                num_ = std::move(qn);
                den_ = std::move(qd);
            }
        }
    }
    // joint content: scale so both are integer polynomials with gcd of all
    // integer contents equal to 1, denominator leading coefficient positive
    Rat cn = num_.rational_content();
    Rat cd = den_.rational_content();
    // cn/cd in lowest terms: num = (cn/cd) * prim(num)/prim(den)
    Rat ratio = cn / cd;
    Int rnum = ratio.get_num();
    Int rden = ratio.get_den();
    num_ = num_.primitive_part();
    num_.mul_scalar(Rat(rnum));
    den_ = den_.primitive_part();
    den_.mul_scalar(Rat(rden));
    if (den_.leading_coeff() < 0) {
        num_.mul_scalar(-1);
        den_.mul_scalar(-1);
    }
}

bool QTRational::is_nonneg_integer_polynomial() const {
    if (!den_.is_one()) return false;
    for (const auto& [m, c] : num_.terms()) {
        if (c.get_den() != 1 || c < 0) return false;
    }
    return true;
}

MPoly QTRational::as_polynomial() const {
    MPoly q;
    if (!num_.divide_exact(den_, &q))
        throw std::domain_error("QTRational: not a polynomial: " + str());
    return q;
}

QTRational& QTRational::operator+=(const QTRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

QTRational& QTRational::operator-=(const QTRational& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ -= o.num_;
        reduce();
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

QTRational& QTRational::operator*=(const QTRational& o) {
    if (is_zero() || o.is_zero()) return *this = QTRational();
    // cross-reduce first to keep intermediates small
    MPoly g1 = MPoly::gcd(num_, o.den_);
    MPoly g2 = MPoly::gcd(o.num_, den_);
    MPoly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
    if (!g1.is_one()) {
        n1.divide_exact(g1, &n1);
        d2.divide_exact(g1, &d2);
    }
    if (!g2.is_one()) {
        n2.divide_exact(g2, &n2);
        d1.divide_exact(g2, &d1);
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    reduce();
    return *this;
}

QTRational& QTRational::operator/=(const QTRational& o) {
    if (o.is_zero()) throw std::domain_error("QTRational: division by zero");
    QTRational inv(o.den_, o.num_);
    return *this *= inv;
}

QTRational QTRational::operator-() const {
    QTRational r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRational QTRational::inverse() const {
    if (is_zero()) throw std::domain_error("QTRational: inverse of zero");
    return QTRational(den_, num_);
}

bool QTRational::eq_cross(const QTRational& a, const QTRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

static MPoly poly_t_inverse(const MPoly& p, std::uint32_t dt) {
    // t^dt * p(q, 1/t, z)
    MPoly r;
    for (const auto& [m, c] : p.terms()) {
        r += MPoly::monomial(c, m.q, dt - m.t, m.z);
    }
    return r;
}

QTRational QTRational::subst_t_inverse() const {
    std::uint32_t d = std::max(num_.degree_t(), den_.degree_t());
    return QTRational(poly_t_inverse(num_, d), poly_t_inverse(den_, d));
}

Rat QTRational::eval_one() const {
    Rat d = den_.eval_one();
    if (d == 0) throw std::domain_error("QTRational: denominator vanishes at q=t=z=1");
    return num_.eval_one() / d;
}

std::string QTRational::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QTRational QTRational::parse(std::string_view text) {
    // accepted forms: "poly" or "(poly)/(poly)"
    auto strip = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    std::string_view s = strip(text);
    if (!s.empty() && s.front() == '(') {
        int depth = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')') {
                --depth;
                if (depth == 0) {
                    std::string_view rest = strip(s.substr(i + 1));
                    if (!rest.empty() && rest.front() == '/') {
                        std::string_view den = strip(rest.substr(1));
                        if (den.size() >= 2 && den.front() == '(' && den.back() == ')')
                            den = den.substr(1, den.size() - 2);
                        return QTRational(MPoly::parse(s.substr(1, i - 1)),
                                          MPoly::parse(den));
                    }
                    break;
                }
            }
        }
    }
    return QTRational(MPoly::parse(s));
}

}  // namespace qtcomb
