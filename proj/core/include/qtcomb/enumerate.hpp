#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qtcomb/paths.hpp"
#include "qtcomb/symfunc.hpp"

namespace qtcomb {

// Path families.  LD/LSQ/LSQPrime carry arbitrary partial labellings; the
// peak families (D/SQ' with circle decorations) are realized through the
// labelled model: the reading word is a shuffle of m zeros, the string
// 1..n-d and the string n,n-1,..,n-d+1, whose d biggest labels sit on peaks.
enum class Family { LD, LSQ, LSQPrime, DPeak, SQPrimePeak };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct FamilyParams {
    Family family = Family::DPeak;
    int zeros = 0;      // m
    int positives = 0;  // n
    int valleys = 0;    // k = decorated contractible valleys
    int peaks = 0;      // d = decorated peaks (peak families only)
    // positive labels range over 1..label_max; -1 means "positives"
    // (content aggregation never needs more values than the degree)
    int label_max = -1;

    friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

// Visits every element of the family exactly once.
void enumerate_paths(const FamilyParams& params,
                     const std::function<void(const DecoratedPath&)>& visit);
std::vector<DecoratedPath> collect_paths(const FamilyParams& params);

// Membership test for a concrete decorated path (labels as given).
bool family_contains(const FamilyParams& params, const DecoratedPath& p);

// q,t-enumerator sum q^dinv t^area, refined by the r statistic
// (positive-labelled non-decorated-valley steps on the base diagonal).
struct Enumerator {
    MPoly total;
    std::map<int, MPoly> by_r;
    long count = 0;
};
Enumerator qt_enumerator(const FamilyParams& params);

// Aggregation of q^dinv t^area x^w by dominant label content, as a
// monomial-basis symmetric function.  Soundness of the aggregation is the
// job of symmetry_check.
SymFunc monomial_expansion(const FamilyParams& params);
std::map<int, SymFunc> monomial_expansion_refined(const FamilyParams& params);

// Expands the labelled sum as an honest polynomial in x_1..x_nvars (no
// aggregation) and tests invariance under all adjacent transpositions.
bool symmetry_check(const FamilyParams& params, int n_vars);
std::map<int, bool> symmetry_check_refined(const FamilyParams& params, int n_vars);

// Pushing algorithm on an element of D(n\r)^{.k,od}: deletes decorated peaks
// on the main diagonal (p of them, i also decorated valleys) and swaps the
// N/E pair of the remaining decorated peaks, which become zero-labelled
// valleys.  The image lies in D(d-p, n-d \ r-p+i)^{.k-i}.
struct PushResult {
    DecoratedPath image;
    int removed_peaks = 0;      // p
    int removed_decorated = 0;  // i
};
PushResult pushing_algorithm(const DecoratedPath& p, const FamilyParams& params);

}  // namespace qtcomb
