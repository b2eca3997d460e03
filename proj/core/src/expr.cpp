#include "qtcomb/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace qtcomb {

namespace {

struct ExprParser {
    const SymEngine& eng;
    const MacdonaldOps& mac;
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& m) {
        throw std::invalid_argument("symfunc expression: " + m + " at position " +
                                    std::to_string(pos));
    }

    ExprValue scalar(QTRational v) {
        ExprValue e;
        e.is_scalar = true;
        e.scalar = std::move(v);
        return e;
    }
    ExprValue func(SymFunc f) {
        ExprValue e;
        e.func = eng.to_p(f);
        return e;
    }
    SymFunc as_func(const ExprValue& v) {
        if (!v.is_scalar) return v.func;
        SymFunc f = eng.one();
        f.scale(v.scalar);
        return f;
    }
    int as_int(const ExprValue& v) {
        if (!v.is_scalar || !v.scalar.is_polynomial() || !v.scalar.num().is_constant())
            fail("expected an integer argument");
        Rat r = v.scalar.num().constant_term() / v.scalar.den().constant_term();
        if (r.get_den() != 1) fail("expected an integer argument");
        return static_cast<int>(r.get_num().get_si());
    }

    long parse_number() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected number");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return v;
    }

    Partition parse_partition() {
        skip();
        std::size_t start = pos;
        if (peek() != '[') fail("expected partition literal like [2,1]");
        while (pos < s.size() && s[pos] != ']') ++pos;
        if (pos >= s.size()) fail("unterminated partition literal");
        ++pos;
        return Partition::parse(s.substr(start, pos - start));
    }

    std::string parse_name() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
            ++pos;
        if (start == pos) fail("expected name");
        return std::string(s.substr(start, pos - start));
    }

    ExprValue parse_call(const std::string& name) {
        if (!consume('(')) fail("expected '(' after " + name);
        std::vector<ExprValue> args;
        std::vector<Partition> parts;
        std::vector<bool> is_part;
        if (peek() != ')') {
            while (true) {
                if (peek() == '[') {
                    parts.push_back(parse_partition());
                    is_part.push_back(true);
                    args.emplace_back();
                } else {
                    args.push_back(parse_expr());
                    is_part.push_back(false);
                    parts.emplace_back();
                }
                if (consume(',')) continue;
                break;
            }
        }
        if (!consume(')')) fail("expected ')'");
        auto argc = args.size();
        auto need = [&](std::size_t n) {
            if (argc != n) fail(name + " expects " + std::to_string(n) + " argument(s)");
        };
        auto part_at = [&](std::size_t i) {
            if (!is_part[i]) fail(name + ": expected a partition literal");
            return parts[i];
        };
        auto val_at = [&](std::size_t i) -> ExprValue& {
            if (is_part[i]) fail(name + ": unexpected partition literal");
            return args[i];
        };

        if (name == "e" || name == "h" || name == "p") {
            need(1);
            if (is_part[0]) {
                Basis b = name == "e" ? Basis::Elementary
                                      : (name == "h" ? Basis::Homogeneous : Basis::PowerSum);
                return func(eng.basis_unit(b, parts[0]));
            }
            int n = as_int(val_at(0));
            return func(name == "e" ? eng.e(n) : (name == "h" ? eng.h(n) : eng.p(n)));
        }
        if (name == "m" || name == "s") {
            need(1);
            return func(eng.basis_unit(name == "m" ? Basis::Monomial : Basis::Schur, part_at(0)));
        }
        if (name == "H") {
            need(1);
            return func(mac.htilde(part_at(0)));
        }
        if (name == "E") {
            need(2);
            int n = as_int(val_at(0)), k = as_int(val_at(1));
            if (n < 0 || k < 0 || k > n) return func(SymFunc(Basis::PowerSum));
            return func(mac.e_family(n)[static_cast<std::size_t>(k)]);
        }
        if (name == "nabla") { need(1); return func(mac.nabla(as_func(val_at(0)))); }
        if (name == "omega") { need(1); return func(eng.omega(as_func(val_at(0)))); }
        if (name == "pi") { need(1); return func(mac.pi_op(as_func(val_at(0)), false)); }
        if (name == "piinv") { need(1); return func(mac.pi_op(as_func(val_at(0)), true)); }
        if (name == "delta") {
            need(2);
            return func(mac.delta(as_func(val_at(0)), as_func(val_at(1))));
        }
        if (name == "deltaprime" || name == "delta'") {
            need(2);
            return func(mac.delta_prime(as_func(val_at(0)), as_func(val_at(1))));
        }
        if (name == "theta") {
            need(2);
            return func(mac.theta(as_func(val_at(0)), as_func(val_at(1))));
        }
        if (name == "hperp") {
            need(2);
            return func(eng.hperp(as_int(val_at(0)), as_func(val_at(1))));
        }
        if (name == "inner") {
            need(2);
            return scalar(eng.hall_inner(as_func(val_at(0)), as_func(val_at(1))));
        }
        if (name == "starinner" || name == "star-inner") {
            need(2);
            return scalar(eng.star_inner(as_func(val_at(0)), as_func(val_at(1))));
        }
        fail("unknown function: " + name);
    }

    ExprValue parse_factor() {
        skip();
        char c = peek();
        if (c == '(') {
            consume('(');
            ExprValue v = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_number();
            if (consume('/')) {
                long den = parse_number();
                if (den == 0) fail("zero denominator");
                Rat r(num, den);
                r.canonicalize();
                return scalar(QTRational(r));
            }
            return scalar(QTRational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = parse_name();
            if (name == "q" || name == "t") {
                // bare variable (possibly with power) as a scalar
                std::uint32_t e = 1;
                if (consume('^')) e = static_cast<std::uint32_t>(parse_number());
                return scalar(QTRational(name == "q" ? MPoly::var_q(e) : MPoly::var_t(e)));
            }
            return parse_call(name);
        }
        fail("unexpected character");
    }

    ExprValue mul(const ExprValue& a, const ExprValue& b) {
        if (a.is_scalar && b.is_scalar) {
            ExprValue r = a;
            r.scalar *= b.scalar;
            return r;
        }
        if (a.is_scalar) {
            ExprValue r = b;
            r.func.scale(a.scalar);
            return r;
        }
        if (b.is_scalar) {
            ExprValue r = a;
            r.func.scale(b.scalar);
            return r;
        }
        ExprValue r;
        r.func = eng.multiply(a.func, b.func);
        return r;
    }

    ExprValue add(const ExprValue& a, const ExprValue& b, bool subtract) {
        if (a.is_scalar && b.is_scalar) {
            ExprValue r = a;
            if (subtract) r.scalar -= b.scalar;
            else r.scalar += b.scalar;
            return r;
        }
        ExprValue r;
        r.func = as_func(a);
        SymFunc bf = as_func(b);
        if (subtract) r.func -= bf;
        else r.func += bf;
        return r;
    }

    ExprValue parse_term() {
        ExprValue v = parse_factor();
        while (consume('*')) v = mul(v, parse_factor());
        return v;
    }

    ExprValue parse_expr() {
        skip();
        bool neg = false;
        if (consume('-')) neg = true;
        ExprValue v = parse_term();
        if (neg) {
            if (v.is_scalar) v.scalar = -v.scalar;
            else v.func.scale(QTRational(-1));
        }
        while (true) {
            skip();
            if (consume('+')) v = add(v, parse_term(), false);
            else if (consume('-')) v = add(v, parse_term(), true);
            else break;
        }
        return v;
    }
};

}  // namespace

ExprValue eval_expression(const SymEngine& eng, const MacdonaldOps& mac,
                          std::string_view text) {
    ExprParser p{eng, mac, text};
    ExprValue v = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    // collapse degree-zero functions to scalars
    if (!v.is_scalar && v.func.max_degree() == 0) {
        QTRational c;
        auto it = v.func.terms.find(Partition());
        if (it != v.func.terms.end()) c = it->second;
        v.is_scalar = true;
        v.scalar = c;
        v.func = SymFunc(Basis::PowerSum);
    }
    return v;
}

std::string expr_text(const SymEngine& eng, const ExprValue& v) {
    if (v.is_scalar) return v.scalar.str();
    return eng.convert(v.func, Basis::Schur).str();
}

std::string expr_json(const SymEngine& eng, const ExprValue& v) {
    if (v.is_scalar) {
        SymFunc f(Basis::Schur);
        f.add_term(Partition(), v.scalar);
        return f.to_json_string();
    }
    return eng.convert(v.func, Basis::Schur).to_json_string();
}

}  // namespace qtcomb
