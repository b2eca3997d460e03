#include "qtcomb/symfunc.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qtcomb {

char basis_letter(Basis b) { return static_cast<char>(b); }

Basis basis_from_letter(char c) {
    switch (c) {
        case 'm': return Basis::Monomial;
        case 'e': return Basis::Elementary;
        case 'h': return Basis::Homogeneous;
        case 'p': return Basis::PowerSum;
        case 's': return Basis::Schur;
        case 'H': return Basis::Macdonald;
    }
    throw std::invalid_argument(std::string("unknown basis letter: ") + c);
}

// ---------------------------------------------------------------------------
// SymFunc
// ---------------------------------------------------------------------------

int SymFunc::max_degree() const {
    int d = 0;
    for (const auto& [mu, c] : terms) d = std::max(d, mu.size());
    return d;
}

bool SymFunc::is_homogeneous() const {
    if (terms.empty()) return true;
    int d = terms.begin()->first.size();
    for (const auto& [mu, c] : terms)
        if (mu.size() != d) return false;
    return true;
}

SymFunc SymFunc::homogeneous_part(int n) const {
    SymFunc out(basis);
    for (const auto& [mu, c] : terms)
        if (mu.size() == n) out.terms.emplace(mu, c);
    return out;
}

std::vector<int> SymFunc::degrees() const {
    std::set<int> ds;
    for (const auto& [mu, c] : terms) ds.insert(mu.size());
    return {ds.begin(), ds.end()};
}

void SymFunc::add_term(const Partition& mu, const QTRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) basis = o.basis;
    if (basis != o.basis)
        throw std::invalid_argument("SymFunc: adding different bases");
    for (const auto& [mu, c] : o.terms) add_term(mu, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) basis = o.basis;
    if (basis != o.basis)
        throw std::invalid_argument("SymFunc: subtracting different bases");
    for (const auto& [mu, c] : o.terms) add_term(mu, -c);
    return *this;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(basis);
    for (const auto& [mu, c] : terms) r.terms.emplace(mu, -c);
    return r;
}

SymFunc& SymFunc::scale(const QTRational& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [mu, v] : terms) v *= c;
    return *this;
}

std::string SymFunc::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        if (c.is_one())
            os << basis_letter(basis) << mu.str();
        else if (cs.find_first_of("+-") != std::string::npos || !c.is_polynomial())
            os << "(" << cs << ")*" << basis_letter(basis) << mu.str();
        else
            os << cs << "*" << basis_letter(basis) << mu.str();
    }
    return os.str();
}

std::string SymFunc::to_json_string() const {
    nlohmann::json j;
    j["basis"] = std::string(1, basis_letter(basis));
    j["terms"] = nlohmann::json::array();
    for (const auto& [mu, c] : terms) {
        nlohmann::json t;
        t["partition"] = mu.parts();
        t["coeff"] = c.str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

SymFunc SymFunc::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SymFunc f(basis_from_letter(j.at("basis").get<std::string>().at(0)));
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("partition").get<std::vector<int>>();
        f.add_term(Partition(std::move(parts)),
                   QTRational::parse(t.at("coeff").get<std::string>()));
    }
    return f;
}

// ---------------------------------------------------------------------------
// SymEngine tables
// ---------------------------------------------------------------------------

namespace {

Partition union_partition(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

int epsilon(const Partition& mu) {  // omega sign on p_mu
    return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
}

using PExp = std::map<Partition, Rat>;  // rational p-expansion

PExp pexp_mul(const PExp& a, const PExp& b) {
    PExp r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Rat c = ca * cb;
            if (c == 0) continue;
            auto key = union_partition(ma, mb);
            auto [it, ins] = r.emplace(key, c);
            if (!ins) {
                it->second += c;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

}  // namespace

struct SymEngine::Tables {
    std::vector<Partition> parts;           // partitions of n, descending lex
    std::map<Partition, int> index;
    std::vector<Int> z;                     // z_rho
    std::vector<PExp> e_in_p, h_in_p, m_in_p;
    std::vector<std::vector<Int>> chi;      // chi[lambda][rho]
};

SymEngine::SymEngine(int degree_bound) : bound_(degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("SymEngine: negative bound");
}

SymEngine::~SymEngine() = default;

void SymEngine::check_degree(int n) const {
    if (n > bound_)
        throw std::domain_error("SymEngine: degree " + std::to_string(n) +
                                " exceeds table bound " + std::to_string(bound_));
}

const std::vector<Partition>& SymEngine::partitions(int n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = partitions_.find(n);
    if (it == partitions_.end()) it = partitions_.emplace(n, Partition::all(n)).first;
    return it->second;
}

// Murnaghan-Nakayama via beta sets: remove a border strip of size r from
// lambda for each admissible beta number, with sign (-1)^{height}.
static Int mn_character(const Partition& lambda, const Partition& mu,
                        std::map<std::pair<Partition, Partition>, Int>& memo) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character: sizes differ");
    if (lambda.empty()) return Int(1);
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = mu.part(0);
    std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
    Partition rest(std::move(rest_parts));

    int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);

    Int total(0);
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        int nb = b - r;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            int c = beta[static_cast<std::size_t>(j)];
            if (c == nb) { clash = true; break; }
            if (c > nb && c < b) ++height;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nparts;
        for (int j = 0; j < len; ++j) {
            int p = nbeta[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (p > 0) nparts.push_back(p);
        }
        Int term = mn_character(Partition(std::move(nparts)), rest, memo);
        total += (height % 2 == 0) ? term : -term;
    }
    memo.emplace(key, total);
    return total;
}

Int SymEngine::character(const Partition& lambda, const Partition& mu) const {
    std::lock_guard<std::mutex> lock(mu_);
    return mn_character(lambda, mu, char_memo_);
}

// Newton recurrences: n*e_n = sum_i (-1)^{i-1} p_i e_{n-i},
//                     n*h_n = sum_i p_i h_{n-i}.
std::map<Partition, Rat> SymEngine::poly_to_p(int k, bool elementary) const {
    if (k == 0) return {{Partition(), Rat(1)}};
    PExp acc;
    for (int i = 1; i <= k; ++i) {
        PExp prev = poly_to_p(k - i, elementary);
        Rat sign(1);
        if (elementary && i % 2 == 0) sign = -1;
        for (const auto& [mu, c] : prev) {
            std::vector<int> parts = mu.parts();
            parts.insert(std::upper_bound(parts.begin(), parts.end(), i, std::greater<int>()), i);
            Partition key(std::move(parts));
            Rat v = sign * c / k;
            auto [it, ins] = acc.emplace(key, v);
            if (!ins) {
                it->second += v;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    return acc;
}

const SymEngine::Tables& SymEngine::tables(int n) const {
    check_degree(n);
    std::lock_guard<std::mutex> lock(mu_);
    auto found = tables_.find(n);
    if (found != tables_.end()) return *found->second;

    auto tab = std::make_unique<Tables>();
    {
        auto pit = partitions_.find(n);
        if (pit == partitions_.end()) pit = partitions_.emplace(n, Partition::all(n)).first;
        tab->parts = pit->second;
    }
    const int P = static_cast<int>(tab->parts.size());
    for (int i = 0; i < P; ++i) tab->index.emplace(tab->parts[static_cast<std::size_t>(i)], i);
    tab->z.resize(static_cast<std::size_t>(P));
    for (int i = 0; i < P; ++i) tab->z[static_cast<std::size_t>(i)] = tab->parts[static_cast<std::size_t>(i)].z_factor();

    // e_lambda, h_lambda expansions (products of one-row expansions)
    std::vector<PExp> e_rows(static_cast<std::size_t>(n) + 1), h_rows(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        e_rows[static_cast<std::size_t>(k)] = poly_to_p(k, true);
        h_rows[static_cast<std::size_t>(k)] = poly_to_p(k, false);
    }
    tab->e_in_p.resize(static_cast<std::size_t>(P));
    tab->h_in_p.resize(static_cast<std::size_t>(P));
    for (int i = 0; i < P; ++i) {
        PExp ee{{Partition(), Rat(1)}}, hh{{Partition(), Rat(1)}};
        for (int part : tab->parts[static_cast<std::size_t>(i)].parts()) {
            ee = pexp_mul(ee, e_rows[static_cast<std::size_t>(part)]);
            hh = pexp_mul(hh, h_rows[static_cast<std::size_t>(part)]);
        }
        tab->e_in_p[static_cast<std::size_t>(i)] = std::move(ee);
        tab->h_in_p[static_cast<std::size_t>(i)] = std::move(hh);
    }

    // characters
    tab->chi.assign(static_cast<std::size_t>(P), std::vector<Int>(static_cast<std::size_t>(P)));
    for (int l = 0; l < P; ++l)
        for (int r = 0; r < P; ++r)
            tab->chi[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] =
                mn_character(tab->parts[static_cast<std::size_t>(l)], tab->parts[static_cast<std::size_t>(r)], char_memo_);

    // m_lambda in p: invert the matrix of p_rho in the m basis,
    // A[rho][lambda] = <p_rho, h_lambda> = z_rho * [p_rho] h_lambda
    std::vector<std::vector<Rat>> A(static_cast<std::size_t>(P), std::vector<Rat>(static_cast<std::size_t>(P), Rat(0)));
    for (int r = 0; r < P; ++r)
        for (int l = 0; l < P; ++l) {
            const PExp& hl = tab->h_in_p[static_cast<std::size_t>(l)];
            auto itc = hl.find(tab->parts[static_cast<std::size_t>(r)]);
            if (itc != hl.end())
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] =
                    Rat(tab->z[static_cast<std::size_t>(r)]) * itc->second;
        }
    // Gauss-Jordan inverse
    std::vector<std::vector<Rat>> inv(static_cast<std::size_t>(P), std::vector<Rat>(static_cast<std::size_t>(P), Rat(0)));
    for (int i = 0; i < P; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int col = 0; col < P; ++col) {
        int piv = -1;
        for (int r = col; r < P; ++r)
            if (A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("SymEngine: singular p->m matrix");
        std::swap(A[static_cast<std::size_t>(col)], A[static_cast<std::size_t>(piv)]);
        std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(piv)]);
        Rat d = A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < P; ++j) {
            A[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= d;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= d;
        }
        for (int r = 0; r < P; ++r) {
            if (r == col) continue;
            Rat f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < P; ++j) {
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
    }
    tab->m_in_p.resize(static_cast<std::size_t>(P));
    for (int l = 0; l < P; ++l) {
        PExp ex;
        for (int r = 0; r < P; ++r) {
            const Rat& c = inv[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
            if (c != 0) ex.emplace(tab->parts[static_cast<std::size_t>(r)], c);
        }
        tab->m_in_p[static_cast<std::size_t>(l)] = std::move(ex);
    }

    auto [it2, ins2] = tables_.emplace(n, std::move(tab));
    return *it2->second;
}

// ---------------------------------------------------------------------------
// constructors and conversions
// ---------------------------------------------------------------------------

SymFunc SymEngine::one() const {
    SymFunc f(Basis::PowerSum);
    f.add_term(Partition(), QTRational(1));
    return f;
}

SymFunc SymEngine::e(int n) const { return basis_unit(Basis::Elementary, n == 0 ? Partition() : Partition({n})); }
SymFunc SymEngine::h(int n) const { return basis_unit(Basis::Homogeneous, n == 0 ? Partition() : Partition({n})); }
SymFunc SymEngine::p(int n) const { return basis_unit(Basis::PowerSum, n == 0 ? Partition() : Partition({n})); }

SymFunc SymEngine::basis_unit(Basis b, const Partition& mu) const {
    check_degree(mu.size());
    SymFunc f(b);
    f.add_term(mu, QTRational(1));
    return f;
}

SymFunc SymEngine::to_p(const SymFunc& f) const {
    if (f.basis == Basis::PowerSum) return f;
    if (f.basis == Basis::Macdonald)
        throw std::invalid_argument("SymEngine::to_p: Macdonald basis needs MacdonaldOps");
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, c] : f.terms) {
        const Tables& tab = tables(mu.size());
        int idx = tab.index.at(mu);
        const PExp* exp = nullptr;
        switch (f.basis) {
            case Basis::Elementary: exp = &tab.e_in_p[static_cast<std::size_t>(idx)]; break;
            case Basis::Homogeneous: exp = &tab.h_in_p[static_cast<std::size_t>(idx)]; break;
            case Basis::Monomial: exp = &tab.m_in_p[static_cast<std::size_t>(idx)]; break;
            case Basis::Schur: {
                for (std::size_t r = 0; r < tab.parts.size(); ++r) {
                    const Int& chi = tab.chi[static_cast<std::size_t>(idx)][r];
                    if (chi == 0) continue;
                    QTRational v = c * QTRational(Rat(chi) / Rat(tab.z[r]));
                    out.add_term(tab.parts[r], v);
                }
                continue;
            }
            default: throw std::logic_error("to_p: unexpected basis");
        }
        for (const auto& [rho, coeff] : *exp) out.add_term(rho, c * QTRational(coeff));
    }
    return out;
}

SymFunc SymEngine::convert(const SymFunc& f, Basis target) const {
    if (f.basis == target) return f;
    if (target == Basis::Macdonald || f.basis == Basis::Macdonald)
        throw std::invalid_argument("SymEngine::convert: Macdonald basis needs MacdonaldOps");
    SymFunc fp = to_p(f);
    if (target == Basis::PowerSum) return fp;
    SymFunc out(target);
    for (int n : fp.degrees()) {
        const Tables& tab = tables(n);
        SymFunc comp = fp.homogeneous_part(n);
        const int P = static_cast<int>(tab.parts.size());
        for (int l = 0; l < P; ++l) {
            const Partition& lambda = tab.parts[static_cast<std::size_t>(l)];
            QTRational acc;
            for (const auto& [rho, c] : comp.terms) {
                int r = tab.index.at(rho);
                switch (target) {
                    case Basis::Schur:
                        acc += c * QTRational(Rat(tab.chi[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)]));
                        break;
                    case Basis::Monomial: {
                        auto itc = tab.h_in_p[static_cast<std::size_t>(l)].find(rho);
                        if (itc != tab.h_in_p[static_cast<std::size_t>(l)].end())
                            acc += c * QTRational(Rat(tab.z[static_cast<std::size_t>(r)]) * itc->second);
                        break;
                    }
                    case Basis::Homogeneous: {
                        auto itc = tab.m_in_p[static_cast<std::size_t>(l)].find(rho);
                        if (itc != tab.m_in_p[static_cast<std::size_t>(l)].end())
                            acc += c * QTRational(Rat(tab.z[static_cast<std::size_t>(r)]) * itc->second);
                        break;
                    }
                    case Basis::Elementary: {
                        auto itc = tab.m_in_p[static_cast<std::size_t>(l)].find(rho);
                        if (itc != tab.m_in_p[static_cast<std::size_t>(l)].end()) {
                            Rat v = Rat(tab.z[static_cast<std::size_t>(r)]) * itc->second;
                            if (epsilon(rho) < 0) v = -v;
                            acc += c * QTRational(v);
                        }
                        break;
                    }
                    default: throw std::logic_error("convert: unexpected target");
                }
            }
            if (!acc.is_zero()) out.add_term(lambda, acc);
        }
    }
    return out;
}

SymFunc SymEngine::multiply(const SymFunc& f, const SymFunc& g) const {
    check_degree(f.max_degree() + g.max_degree());
    SymFunc fp = to_p(f), gp = to_p(g);
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, cf] : fp.terms)
        for (const auto& [nu, cg] : gp.terms)
            out.add_term(union_partition(mu, nu), cf * cg);
    return out;
}

SymFunc SymEngine::power(const SymFunc& f, int e) const {
    SymFunc r = one();
    for (int i = 0; i < e; ++i) r = multiply(r, f);
    return r;
}

QTRational SymEngine::hall_inner(const SymFunc& f, const SymFunc& g) const {
    SymFunc fp = to_p(f), gp = to_p(g);
    QTRational acc;
    for (const auto& [mu, cf] : fp.terms) {
        auto it = gp.terms.find(mu);
        if (it == gp.terms.end()) continue;
        acc += cf * it->second * QTRational(Rat(mu.z_factor()));
    }
    return acc;
}

QTRational SymEngine::star_inner(const SymFunc& f, const SymFunc& g) const {
    // <f,g>_* = <f, omega g[MX]>; diagonal on p:
    // <p_mu,p_mu>_* = z_mu * prod_i (-1)^{mu_i - 1} (1-q^{mu_i})(1-t^{mu_i})
    SymFunc fp = to_p(f), gp = to_p(g);
    QTRational acc;
    for (const auto& [mu, cf] : fp.terms) {
        auto it = gp.terms.find(mu);
        if (it == gp.terms.end()) continue;
        MPoly factor(Rat(mu.z_factor()));
        for (int part : mu.parts()) {
            MPoly m(1);
            m -= MPoly::var_q(static_cast<std::uint32_t>(part));
            MPoly mt(1);
            mt -= MPoly::var_t(static_cast<std::uint32_t>(part));
            factor *= m * mt;
        }
        if (epsilon(mu) < 0) factor = -factor;
        acc += cf * it->second * QTRational(factor);
    }
    return acc;
}

SymFunc SymEngine::omega(const SymFunc& f) const {
    SymFunc fp = to_p(f);
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, c] : fp.terms) {
        QTRational v = c;
        if (epsilon(mu) < 0) v = -v;
        out.add_term(mu, v);
    }
    return f.basis == Basis::PowerSum ? out : convert(out, f.basis);
}

SymFunc SymEngine::plethysm_substitute(const SymFunc& f,
                                       const std::function<QTRational(int)>& scale) const {
    SymFunc fp = to_p(f);
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, c] : fp.terms) {
        QTRational v = c;
        for (int part : mu.parts()) v *= scale(part);
        out.add_term(mu, v);
    }
    return out;
}

QTRational SymEngine::plethysm_eval(const SymFunc& f,
                                    const std::function<QTRational(int)>& value) const {
    SymFunc fp = to_p(f);
    QTRational acc;
    for (const auto& [mu, c] : fp.terms) {
        QTRational v = c;
        for (int part : mu.parts()) v *= value(part);
        acc += v;
    }
    return acc;
}

QTRational SymEngine::eval_alphabet(const SymFunc& f, const MPoly& alphabet) const {
    return plethysm_eval(f, [&](int k) {
        return QTRational(alphabet.frobenius(static_cast<std::uint32_t>(k)));
    });
}

SymFunc SymEngine::hperp(int m, const SymFunc& f) const {
    if (m < 0) throw std::invalid_argument("hperp: negative strip size");
    if (m == 0) return f;
    SymFunc fs = convert(f, Basis::Schur);
    SymFunc out(Basis::Schur);
    for (const auto& [lambda, c] : fs.terms) {
        if (lambda.size() < m) continue;
        // enumerate mu with lambda/mu a horizontal m-strip:
        // lambda_{i+1} <= mu_i <= lambda_i
        std::vector<int> mu_parts(static_cast<std::size_t>(lambda.length()));
        std::function<void(int, int)> rec = [&](int row, int removed) {
            if (row == lambda.length()) {
                if (removed != m) return;
                std::vector<int> cleaned;
                for (int p : mu_parts)
                    if (p > 0) cleaned.push_back(p);
                out.add_term(Partition(std::move(cleaned)), c);
                return;
            }
            int lo = lambda.part(row + 1);
            int hi = lambda.part(row);
            for (int v = hi; v >= lo; --v) {
                int rem = removed + (hi - v);
                if (rem > m) break;
                mu_parts[static_cast<std::size_t>(row)] = v;
                rec(row + 1, rem);
            }
        };
        rec(0, 0);
    }
    return out;
}

}  // namespace qtcomb
