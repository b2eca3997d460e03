#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qtcomb/partition.hpp"
#include "qtcomb/qtrational.hpp"

namespace qtcomb {

enum class Basis : char {
    Monomial = 'm',
    Elementary = 'e',
    Homogeneous = 'h',
    PowerSum = 'p',
    Schur = 's',
    Macdonald = 'H',
};

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// Finite linear combination of basis elements indexed by partitions, with
// QTRational coefficients.  No zero coefficients are stored; mixed degrees
// are allowed (the map keys carry the grading).
struct SymFunc {
    Basis basis = Basis::PowerSum;
    std::map<Partition, QTRational> terms;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis(b) {}

    bool is_zero() const { return terms.empty(); }
    int max_degree() const;
    bool is_homogeneous() const;  // true also for 0
    SymFunc homogeneous_part(int n) const;
    std::vector<int> degrees() const;

    void add_term(const Partition& mu, const QTRational& c);
    SymFunc& operator+=(const SymFunc& o);  // same basis
    SymFunc& operator-=(const SymFunc& o);
    SymFunc operator-() const;
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc& scale(const QTRational& c);
    // zero compares equal across bases
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        if (a.terms.empty() && b.terms.empty()) return true;
        return a.basis == b.basis && a.terms == b.terms;
    }

    std::string str() const;             // e.g. "s[2] + q*s[1,1]"
    std::string to_json_string() const;  // {"basis":"s","terms":[...]}
    static SymFunc from_json_string(const std::string& text);
};

// Exact symmetric-function algebra over Q(q,t) up to a fixed degree bound.
// Transition tables are built lazily per degree and cached; construction is
// guarded, all query paths after that are read-only.
class SymEngine {
public:
    explicit SymEngine(int degree_bound = 8);
    ~SymEngine();
    SymEngine(const SymEngine&) = delete;
    SymEngine& operator=(const SymEngine&) = delete;

    int degree_bound() const { return bound_; }
    const std::vector<Partition>& partitions(int n) const;

    // basis constructors
    SymFunc one() const;
    SymFunc e(int n) const;
    SymFunc h(int n) const;
    SymFunc p(int n) const;
    SymFunc basis_unit(Basis b, const Partition& mu) const;

    // conversions among the classical bases (m, e, h, p, s)
    SymFunc to_p(const SymFunc& f) const;
    SymFunc convert(const SymFunc& f, Basis target) const;

    SymFunc multiply(const SymFunc& f, const SymFunc& g) const;
    SymFunc power(const SymFunc& f, int e) const;

    QTRational hall_inner(const SymFunc& f, const SymFunc& g) const;
    QTRational star_inner(const SymFunc& f, const SymFunc& g) const;
    SymFunc omega(const SymFunc& f) const;

    // plethystic substitution p_k -> scale(k) * p_k
    SymFunc plethysm_substitute(const SymFunc& f,
                                const std::function<QTRational(int)>& scale) const;
    // full evaluation p_k -> value(k); result is a scalar
    QTRational plethysm_eval(const SymFunc& f,
                             const std::function<QTRational(int)>& value) const;
    // f[A] for an alphabet A given as an integer-coefficient monomial sum
    // (p_k[A] scales exponents by k)
    QTRational eval_alphabet(const SymFunc& f, const MPoly& alphabet) const;

    // adjoint of multiplication by h_m (Schur skewing by horizontal strips)
    SymFunc hperp(int m, const SymFunc& f) const;

    // Murnaghan-Nakayama character chi^lambda(mu)
    Int character(const Partition& lambda, const Partition& mu) const;

    void check_degree(int n) const;  // throws if n exceeds the bound

private:
    struct Tables;
    const Tables& tables(int n) const;
    std::map<Partition, Rat> poly_to_p(int k, bool elementary) const;

    int bound_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<Tables>> tables_;
    mutable std::map<int, std::vector<Partition>> partitions_;
    mutable std::map<std::pair<Partition, Partition>, Int> char_memo_;
};

}  // namespace qtcomb
