#pragma once

#include <iosfwd>
#include <optional>

#include "qtcomb/enumerate.hpp"
#include "qtcomb/macdonald.hpp"

namespace qtcomb {

// Structured outcome of one verification run.
struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string category;  // "theorem" | "conjectural"
    std::string status;    // "equal" | "unequal" | "conditional-unmet"
    std::string lhs, rhs;  // canonical polynomial / symfunc text
    double elapsed_ms = 0.0;
    long element_count = -1;  // enumerated objects, when applicable

    bool equal() const { return status == "equal"; }
    std::string to_json_string() const;
    std::string to_text() const;
};

struct RunSummary {
    long checked = 0, equal = 0, unequal = 0, conditional_unmet = 0;
    std::string to_json_string() const;
    std::string to_text() const;
};

struct RunConfig {
    std::string identity;
    int n_max = 4;
    int degree_bound = 8;
    std::optional<int> k, d, m, r;  // restrict sweeps when set
    int jobs = 1;
    std::string format = "text";  // text | json
    std::string out_path;         // empty = stdout
};

// Evaluates the algebraic and combinatorial recursions and the scalar
// product identities, comparing both sides exactly.  All recursion RHS
// evaluators consume memoized direct values, so a failure localizes to one
// tuple.  Memo tables are guarded; lookups copy out, computation happens
// outside the locks.
class IdentityChecker {
public:
    explicit IdentityChecker(int degree_bound = 8);

    const SymEngine& engine() const { return eng_; }
    const MacdonaldOps& macdonald() const { return mac_; }

    // --- symmetric-function side ---------------------------------------
    SymFunc theta_nabla_E(int n, int k, int r);         // Theta_{e_k} nabla E_{n-k,r}
    SymFunc theta_nabla_E_square(int n, int k, int r);  // with [n-k]_q/[r]_q
    SymFunc theta_nabla_e(int n, int k);                // Theta_{e_k} nabla e_{n-k}

    // <Theta_{e_k} nabla E_{n-k,r}, e_{n-d} h_d>; values land in N[q,t]
    // (asserted on insertion)
    QTRational lhs_schroeder(int n, int k, int r, int d);
    QTRational lhs_schroeder_square(int n, int k, int r, int d);
    // independent route <Delta_{h_k} Delta_{e_{n-k-d}} E_{n-k,r}, e_{n-k}>
    QTRational lhs_schroeder_delta_route(int n, int k, int r, int d);
    // <Delta_{h_m} Theta_{e_k} nabla E_{n-k,r}, e_n>
    QTRational extended_catalan_scalar(int m, int n, int k, int r);

    QTRational rhs_alg_recursion(int n, int k, int r, int d);
    QTRational rhs_alg_recursion_square(int n, int k, int r, int d);
    QTRational rhs_recsf(int n, int k, int r, int d);

    // --- combinatorial side ---------------------------------------------
    Enumerator enumerator(const FamilyParams& params);  // cached
    MPoly enum_refined(const FamilyParams& params, int r);
    // D_qt / SQ'_qt of (n\r)^{.k,od}; zero outside the parameter range
    MPoly dyck_qt(int n, int r, int k, int d);
    MPoly square_qt(int n, int r, int k, int d);
    MPoly dyck_ext_qt(int m, int n, int r, int k);  // D_qt(m, n\r)^{.k}

    MPoly rhs_comb_recursion(int n, int k, int r, int d);
    MPoly rhs_comb_recursion_square(int n, int k, int r, int d);
    MPoly rhs_reccomb(int n, int k, int r, int d);

    // cached refined monomial aggregations (square-to-dyck comparisons)
    std::map<int, SymFunc> monomial_refined(const FamilyParams& params);

    bool check_chu_vandermonde(int r, int v, int j, MPoly* lhs = nullptr,
                               MPoly* rhs = nullptr);

    // --- sweep drivers ----------------------------------------------------
    static const std::vector<std::string>& identity_ids();
    std::vector<IdentityReport> run(const RunConfig& config);

    static RunSummary summarize(const std::vector<IdentityReport>& reports);

private:
    template <typename Key, typename Value, typename Fn>
    Value memoized(std::map<Key, Value>& cache, const Key& key, Fn&& compute);

    SymEngine eng_;
    MacdonaldOps mac_;
    std::mutex cache_mu_;
    std::map<std::tuple<int, int, int>, SymFunc> tne_cache_, tne_sq_cache_, tnee_cache_;
    std::map<std::tuple<int, int, int, int>, QTRational> schroeder_table_, schroeder_sq_table_;
    std::map<std::tuple<int, int, int, int>, QTRational> extcat_table_;
    std::map<FamilyParams, Enumerator> enum_cache_;
    std::map<FamilyParams, std::map<int, SymFunc>> monexp_cache_;
};

void write_reports(std::ostream& os, const std::vector<IdentityReport>& reports,
                   const std::string& format);

}  // namespace qtcomb
