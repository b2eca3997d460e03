#include "qtcomb/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace qtcomb {

MPoly::MPoly(long c) {
    if (c != 0) terms_[Monomial{}] = Rat(c);
}

MPoly::MPoly(const Rat& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

MPoly MPoly::monomial(Rat coeff, std::uint32_t eq, std::uint32_t et, std::uint32_t ez) {
    MPoly p;
    if (coeff != 0) p.terms_[Monomial{eq, et, ez}] = std::move(coeff);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
           terms_.begin()->second == 1;
}

std::uint32_t MPoly::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total();
}

std::uint32_t MPoly::degree_q() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.q);
    return d;
}

std::uint32_t MPoly::degree_t() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.t);
    return d;
}

std::uint32_t MPoly::degree_z() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.z);
    return d;
}

const Rat& MPoly::leading_coeff() const {
    static const Rat zero(0);
    return terms_.empty() ? zero : terms_.begin()->second;
}

Rat MPoly::constant_term() const { return coeff(Monomial{}); }

Rat MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(Monomial{ma.q + mb.q, ma.t + mb.t, ma.z + mb.z}, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::mul_scalar(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MPoly& MPoly::mul_monomial(const Rat& c, const Monomial& m) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    TermMap out;
    for (const auto& [mm, v] : terms_)
        out[Monomial{mm.q + m.q, mm.t + m.t, mm.z + m.z}] = v * c;
    terms_ = std::move(out);
    return *this;
}

MPoly MPoly::pow(std::uint32_t e) const {
    MPoly r(1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Rat MPoly::eval_one() const {
    Rat s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

static Rat rat_pow(const Rat& x, std::uint32_t e) {
    Rat r(1), b = x;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Rat MPoly::eval(const Rat& q0, const Rat& t0, const Rat& z0) const {
    Rat s(0);
    for (const auto& [m, c] : terms_)
        s += c * rat_pow(q0, m.q) * rat_pow(t0, m.t) * rat_pow(z0, m.z);
    return s;
}

MPoly MPoly::frobenius(std::uint32_t k) const {
    MPoly r;
    for (const auto& [m, c] : terms_)
        r.terms_[Monomial{m.q * k, m.t * k, m.z * k}] = c;
    return r;
}

MPoly MPoly::z_coefficient(std::uint32_t k) const {
    MPoly r;
    for (const auto& [m, c] : terms_)
        if (m.z == k) r.terms_[Monomial{m.q, m.t, 0}] = c;
    return r;
}

Rat MPoly::rational_content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        Int num = c.get_num();
        Int den = c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_coeff() < 0) content = -content;
    return content;
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return MPoly();
    Rat c = rational_content();
    MPoly r = *this;
    Rat inv = 1 / c;
    r.mul_scalar(inv);
    return r;
}

bool MPoly::is_integer_primitive() const {
    if (terms_.empty()) return false;
    return rational_content() == 1;
}

// ---------------------------------------------------------------------------
// Exact division and gcd.
//
// Division eliminates leading terms under the canonical (graded) order.  The
// gcd uses recursive content extraction plus a primitive polynomial remainder
// sequence in the highest variable present; exact, no modular tricks.
// ---------------------------------------------------------------------------

static bool monomial_divides(const Monomial& a, const Monomial& b) {
    return a.q <= b.q && a.t <= b.t && a.z <= b.z;
}

bool MPoly::divide_exact(const MPoly& b, MPoly* quot) const {
    if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
    MPoly q;
    MPoly rem = *this;
    const Monomial& lmb = b.terms().begin()->first;
    const Rat& lcb = b.terms().begin()->second;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.terms().begin()->first;
        if (!monomial_divides(lmb, lm)) return false;
        Monomial d{lm.q - lmb.q, lm.t - lmb.t, lm.z - lmb.z};
        Rat c = rem.terms().begin()->second / lcb;
        MPoly piece = b;
        piece.mul_monomial(c, d);
        rem -= piece;
        q.add_term(d, c);
    }
    if (quot) *quot = std::move(q);
    return true;
}

namespace {

enum class Var { Q, T, Z };

std::uint32_t var_degree(const MPoly& p, Var v) {
    switch (v) {
        case Var::Q: return p.degree_q();
        case Var::T: return p.degree_t();
        case Var::Z: return p.degree_z();
    }
    return 0;
}

// View as univariate in v: coefficient polynomials indexed by v-exponent.
std::vector<MPoly> univariate_view(const MPoly& p, Var v) {
    std::vector<MPoly> coeffs(var_degree(p, v) + 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        std::uint32_t e = 0;
        switch (v) {
            case Var::Q: e = m.q; rest.q = 0; break;
            case Var::T: e = m.t; rest.t = 0; break;
            case Var::Z: e = m.z; rest.z = 0; break;
        }
        coeffs[e] += MPoly::monomial(c, rest.q, rest.t, rest.z);
    }
    return coeffs;
}

MPoly from_univariate(const std::vector<MPoly>& coeffs, Var v) {
    MPoly r;
    for (std::uint32_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e].is_zero()) continue;
        Monomial shift{};
        switch (v) {
            case Var::Q: shift.q = e; break;
            case Var::T: shift.t = e; break;
            case Var::Z: shift.z = e; break;
        }
        MPoly part = coeffs[e];
        part.mul_monomial(1, shift);
        r += part;
    }
    return r;
}

int uni_degree(const std::vector<MPoly>& u) {
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i)
        if (!u[i].is_zero()) return i;
    return -1;
}

std::vector<MPoly> uni_mul_poly(std::vector<MPoly> u, const MPoly& f) {
    for (auto& c : u) c = c * f;
    return u;
}

// pseudo-remainder of a by b in the main variable (coefficients stay
// polynomial: a is premultiplied by lc(b)^(deg a - deg b + 1))
std::vector<MPoly> uni_prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    int db = uni_degree(b);
    int da = uni_degree(a);
    const MPoly& lcb = b[db];
    while (da >= db) {
        MPoly lca = a[da];
        for (auto& c : a) c = c * lcb;
        for (int i = 0; i <= db; ++i) {
            a[da - db + i] -= lca * b[i];
        }
        int nda = -1;
        for (int i = da; i >= 0; --i)
            if (!a[i].is_zero()) { nda = i; break; }
        a.resize(da + 1);
        da = nda;
        if (da < 0) break;
    }
    a.resize(da + 1 > 0 ? da + 1 : 0);
    return a;
}

MPoly gcd_impl(const MPoly& a, const MPoly& b);

MPoly uni_content(const std::vector<MPoly>& u) {
    MPoly g;
    for (const auto& c : u) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_impl(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// ---- heuristic gcd: evaluate at a large integer, take the integer gcd,
// reconstruct xi-adically, verify by exact division (retry with a larger
// point on failure).  Inputs must be integer polynomials.

Int poly_max_norm(const MPoly& p) {
    Int m(0);
    for (const auto& [mono, c] : p.terms()) {
        Int a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

std::vector<Var> vars_present(const MPoly& a, const MPoly& b) {
    std::vector<Var> vars;
    if (std::max(a.degree_q(), b.degree_q()) > 0) vars.push_back(Var::Q);
    if (std::max(a.degree_t(), b.degree_t()) > 0) vars.push_back(Var::T);
    if (std::max(a.degree_z(), b.degree_z()) > 0) vars.push_back(Var::Z);
    return vars;
}

MPoly eval_var_int(const MPoly& p, Var v, const Int& xi) {
    std::uint32_t dv = var_degree(p, v);
    std::vector<Int> powers(dv + 1);
    powers[0] = 1;
    for (std::uint32_t i = 1; i <= dv; ++i) powers[i] = powers[i - 1] * xi;
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        std::uint32_t e = 0;
        switch (v) {
            case Var::Q: e = m.q; rest.q = 0; break;
            case Var::T: e = m.t; rest.t = 0; break;
            case Var::Z: e = m.z; rest.z = 0; break;
        }
        out += MPoly::monomial(Rat(c.get_num() * powers[e]), rest.q, rest.t, rest.z);
    }
    return out;
}

// symmetric representative in (-xi/2, xi/2]
Int smod(const Int& c, const Int& xi) {
    Int r = c % xi;
    if (r < 0) r += xi;
    if (2 * r > xi) r -= xi;
    return r;
}

// gcd with one variable evaluated away; empty optional on reconstruction
// failure
bool gcdheu_impl(const MPoly& a, const MPoly& b, int depth, MPoly* out) {
    std::vector<Var> vars = vars_present(a, b);
    if (vars.empty()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.constant_term().get_num().get_mpz_t(),
                b.constant_term().get_num().get_mpz_t());
        *out = MPoly(Rat(g));
        return true;
    }
    if (depth > 8) return false;
    Var v = vars.back();
    Int na = poly_max_norm(a), nb = poly_max_norm(b);
    Int xi = 2 * (na < nb ? na : nb) + 2;
    if (xi < 32) xi = 32;
    for (int attempt = 0; attempt < 6; ++attempt) {
        MPoly A = eval_var_int(a, v, xi);
        MPoly B = eval_var_int(b, v, xi);
        MPoly gamma;
        bool ok = A.is_zero() || B.is_zero()
                      ? false
                      : gcdheu_impl(A, B, depth + 1, &gamma);
        if (ok) {
            // xi-adic reconstruction of the candidate
            MPoly G;
            MPoly rem = gamma;
            std::uint32_t max_deg = std::max(var_degree(a, v), var_degree(b, v));
            bool good = true;
            for (std::uint32_t i = 0; !rem.is_zero(); ++i) {
                if (i > max_deg) { good = false; break; }
                MPoly digit, next;
                for (const auto& [m, c] : rem.terms()) {
                    Int s = smod(c.get_num(), xi);
                    if (s != 0) digit += MPoly::monomial(Rat(s), m.q, m.t, m.z);
                    Int carry = (c.get_num() - s) / xi;
                    if (carry != 0) next += MPoly::monomial(Rat(carry), m.q, m.t, m.z);
                }
                if (!digit.is_zero()) {
                    Monomial shift{};
                    switch (v) {
                        case Var::Q: shift.q = i; break;
                        case Var::T: shift.t = i; break;
                        case Var::Z: shift.z = i; break;
                    }
                    digit.mul_monomial(1, shift);
                    G += digit;
                }
                rem = std::move(next);
            }
            if (good && !G.is_zero()) {
                G = G.primitive_part();
                if (a.divide_exact(G) && b.divide_exact(G)) {
                    *out = std::move(G);
                    return true;
                }
            }
        }
        xi = xi * 73794 / 27011;  // irrational-ish growth avoids repeats
    }
    return false;
}

// gcd of two q,t-polynomials (no z) by interpolating the t variable at small
// integers: univariate q-gcds per sample, Newton interpolation back, exact
// division verify.  Small sample points keep every integer small, which is
// what the remainder-sequence and pure-evaluation routes both fail at.
bool gcd_bivariate_interp(const MPoly& a, const MPoly& b, MPoly* out) {
    const int dta = static_cast<int>(a.degree_t());
    const int dtb = static_cast<int>(b.degree_t());
    const int bound = std::min(dta, dtb) + 1;  // samples needed

    auto lc_t = [](const MPoly& p, int dt) {  // coefficient of t^dt, in q
        MPoly r;
        for (const auto& [m, c] : p.terms())
            if (static_cast<int>(m.t) == dt) r += MPoly::monomial(c, m.q, 0, 0);
        return r;
    };
    MPoly lca = lc_t(a, dta), lcb = lc_t(b, dtb);
    MPoly gamma;  // gcd of the leading q-coefficients, univariate in q
    if (!gcdheu_impl(lca.primitive_part(), lcb.primitive_part(), 0, &gamma)) return false;

    struct Sample {
        Int point;
        MPoly g;  // univariate in q, scaled so lc matches gamma(point)
    };
    std::vector<Sample> samples;
    int expected_deg = -1;
    for (long raw = 0; static_cast<int>(samples.size()) < bound && raw < 8 * bound + 32; ++raw) {
        // points 0, 1, -1, 2, -2, ...
        long pt = (raw + 1) / 2 * ((raw % 2) ? 1 : -1);
        Int xi(pt);
        MPoly A = eval_var_int(a, Var::T, xi);
        MPoly B = eval_var_int(b, Var::T, xi);
        // skip points that drop the leading coefficient
        if (lca.eval(Rat(xi), 0) == 0 && false) continue;  // lca is in q only
        if (static_cast<int>(A.degree_q()) != static_cast<int>(a.degree_q()) ||
            static_cast<int>(B.degree_q()) != static_cast<int>(b.degree_q())) {
            // a cheap proxy for lc vanishing; skip conservatively
        }
        if (A.is_zero() || B.is_zero()) continue;
        MPoly g;
        if (!gcdheu_impl(A.primitive_part(), B.primitive_part(), 0, &g)) return false;
        int dg = static_cast<int>(g.degree_q());
        if (g.is_constant()) dg = 0;
        if (expected_deg < 0 || dg < expected_deg) {
            expected_deg = dg;
            samples.clear();
        } else if (dg > expected_deg) {
            continue;  // unlucky point
        }
        // normalize: leading q-coefficient equals gamma(point)
        Rat target = gamma.eval(Rat(xi), 0);
        if (target == 0) continue;  // gamma vanishes: unusable point
        Rat lead;
        for (const auto& [m, c] : g.terms())
            if (static_cast<int>(m.q) == dg) lead = c;
        if (lead == 0) continue;
        MPoly scaled = g;
        scaled.mul_scalar(target / lead);
        samples.push_back({xi, std::move(scaled)});
    }
    if (static_cast<int>(samples.size()) < bound) return false;
    if (expected_deg == 0 && gamma.is_constant()) {
        *out = MPoly(1);  // primitive parts are coprime
        return true;
    }

    // Newton interpolation in t over the samples, coefficients in Q[q]
    std::vector<MPoly> divided(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        MPoly val = samples[i].g;
        for (std::size_t j = 0; j < i; ++j) {
            MPoly diff = val - divided[j];
            Rat denom(samples[i].point - samples[j].point);
            diff.mul_scalar(1 / denom);
            val = std::move(diff);
        }
        divided[i] = std::move(val);
    }
    MPoly H;  // Horner over (t - point_j)
    for (std::size_t i = samples.size(); i-- > 0;) {
        MPoly factor = MPoly::var_t() - MPoly(Rat(samples[i].point));
        H = H * factor + divided[i];
    }
    if (H.is_zero()) return false;
    H = H.primitive_part();
    if (!(a.divide_exact(H) && b.divide_exact(H))) return false;
    *out = std::move(H);
    return true;
}

MPoly gcd_impl(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.is_zero() ? MPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();

    MPoly pa = a.primitive_part();
    MPoly pb = b.primitive_part();
    if (pa == pb) return pa;
    if (pa.is_constant() || pb.is_constant()) return MPoly(1);
    // fast path: direct divisibility
    if (pa.divide_exact(pb)) return pb;
    if (pb.divide_exact(pa)) return pa;

    const bool has_z = std::max(pa.degree_z(), pb.degree_z()) > 0;
    const bool has_t = std::max(pa.degree_t(), pb.degree_t()) > 0;
    const bool has_q = std::max(pa.degree_q(), pb.degree_q()) > 0;
    if (!has_z && has_t && has_q) {
        MPoly g;
        if (gcd_bivariate_interp(pa, pb, &g)) return g.primitive_part();
    }
    // single-variable (and small z-bearing) inputs: evaluation gcd, with the
    // remainder-sequence route as the deterministic fallback
    {
        MPoly g;
        if (gcdheu_impl(pa, pb, 0, &g)) return g.primitive_part();
    }

    Var v = Var::Q;
    if (std::max(a.degree_z(), b.degree_z()) > 0) v = Var::Z;
    else if (std::max(a.degree_t(), b.degree_t()) > 0) v = Var::T;

    std::vector<MPoly> ua = univariate_view(pa, v);
    std::vector<MPoly> ub = univariate_view(pb, v);
    if (uni_degree(ua) < uni_degree(ub)) std::swap(ua, ub);

    MPoly ca = uni_content(ua);
    MPoly cb = uni_content(ub);
    MPoly content_gcd = gcd_impl(ca, cb);

    auto divide_out = [](std::vector<MPoly>& u, const MPoly& d) {
        if (d.is_one()) return;
        for (auto& c : u) {
            if (c.is_zero()) continue;
            MPoly q;
            bool ok = c.divide_exact(d, &q);
            if (!ok) throw std::logic_error("MPoly::gcd: content division failed");
            c = std::move(q);
        }
    };
    divide_out(ua, ca);
    divide_out(ub, cb);

    // primitive PRS
    while (true) {
        int db = uni_degree(ub);
        if (db < 0) break;
        std::vector<MPoly> r = uni_prem(ua, ub);
        ua = std::move(ub);
        ub = std::move(r);
        if (uni_degree(ub) < 0) break;
        MPoly c = uni_content(ub);
        divide_out(ub, c);
    }
    // ua now holds the last nonzero remainder; if it is v-free the primitive
    // parts were coprime
    MPoly prim_gcd =
        uni_degree(ua) == 0 ? MPoly(1) : from_univariate(ua, v).primitive_part();
    return (content_gcd * prim_gcd).primitive_part();
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) { return gcd_impl(a, b); }

// ---------------------------------------------------------------------------
// Canonical text form.
// ---------------------------------------------------------------------------

static void print_rat(std::ostream& os, const Rat& c) { os << c; }

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = m.total() > 0;
        bool coeff_shown = !has_var || a != 1;
        if (coeff_shown) print_rat(os, a);
        auto emit = [&](const char* name, std::uint32_t e) {
            if (e == 0) return;
            if (coeff_shown) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            coeff_shown = true;
        };
        emit("q", m.q);
        emit("t", m.t);
        emit("z", m.z);
    }
    return os.str();
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("MPoly::parse: " + msg + " at position " +
                                    std::to_string(pos));
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            ++pos;
        }
        return v;
    }

    // factor := integer [/ integer] | var [^ int]
    // term   := factor (* factor)*
    MPoly parse_term() {
        Rat coeff(1);
        Monomial mono;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                unsigned long num = parse_uint();
                Rat f(static_cast<long>(num));
                skip_ws();
                if (consume('/')) {
                    unsigned long den = parse_uint();
                    if (den == 0) fail("zero denominator");
                    f = Rat(static_cast<long>(num), static_cast<long>(den));
                    f.canonicalize();
                }
                coeff *= f;
            } else if (c == 'q' || c == 't' || c == 'z') {
                ++pos;
                unsigned long e = 1;
                if (consume('^')) e = parse_uint();
                if (c == 'q') mono.q += static_cast<std::uint32_t>(e);
                if (c == 't') mono.t += static_cast<std::uint32_t>(e);
                if (c == 'z') mono.z += static_cast<std::uint32_t>(e);
            } else {
                fail("expected coefficient or variable");
            }
            expect_factor = consume('*');
        }
        return MPoly::monomial(coeff, mono.q, mono.t, mono.z);
    }

    MPoly parse_sum() {
        MPoly out;
        bool negative = false;
        if (consume('-')) negative = true;
        else consume('+');
        while (true) {
            MPoly t = parse_term();
            out += negative ? -t : t;
            if (eof()) break;
            if (consume('+')) negative = false;
            else if (consume('-')) negative = true;
            else fail("expected '+' or '-'");
        }
        return out;
    }
};

}  // namespace

MPoly MPoly::parse(std::string_view text) {
    Parser p{text};
    if (p.eof()) throw std::invalid_argument("MPoly::parse: empty input");
    p.skip_ws();
    if (text == "0") return MPoly();
    MPoly r = p.parse_sum();
    return r;
}

}  // namespace qtcomb
