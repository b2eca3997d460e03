#include <doctest.h>

#include <set>

#include "qtcomb/enumerate.hpp"

using namespace qtcomb;

namespace {

// the size-8 square path of the paper's running example
const char* kFigurePath = "NEEEENENNENNNENE";

DecoratedPath figure2_left() {
    DecoratedPath p;
    p.path = SquarePath(kFigurePath);
    p.labels = {2, 0, 2, 4, 0, 1, 3, 4};
    p.dv = {2, 8};
    return p;
}

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace

TEST_CASE("area word and shift") {
    SquarePath fig(kFigurePath);
    CHECK(fig.area_word() == std::vector<int>{0, -3, -3, -2, -2, -1, 0, 0});
    CHECK(fig.shift() == 3);
    CHECK(SquarePath("NENE").area_word() == std::vector<int>{0, 0});
    CHECK(SquarePath("NNEE").area_word() == std::vector<int>{0, 1});
    CHECK(SquarePath("ENNE").shift() == 1);
    CHECK(SquarePath("NENE").is_dyck());
    CHECK_THROWS(SquarePath("NEEN"));   // ends north
    CHECK_THROWS(SquarePath("NE E"));   // bad alphabet
    CHECK_THROWS(SquarePath("NNE"));    // unbalanced
}

TEST_CASE("figure statistics") {
    DecoratedPath p = figure2_left();
    CHECK(p.is_valid_labelling());
    CHECK(p.zero_count() == 2);
    CHECK(p.area() == 13);
    std::vector<int> rw = p.reading_word();
    CHECK(rw == std::vector<int>{0, 2, 4, 0, 1, 2, 3, 4});
    CHECK(p.contractible_valleys() == std::vector<int>{2, 3, 8});
    CHECK(p.decorations_valid());
    CHECK(p.has_free_base_label());
    // Under the printed dinv definition the example's breakdown gains one
    // primary pair, (7,8), on top of the listed (1,7), (1,8): the secondary
    // (1,6), bonus rows {3,4,6} and the two decorated valleys match.
    DinvBreakdown b = p.dinv_breakdown();
    CHECK(b.primary == 3);
    CHECK(b.secondary == 1);
    CHECK(b.bonus == 3);
    CHECK(b.decorated == 2);
    CHECK(p.dinv() == 5);

    // rise-decorated companion (figure right): area drops by the decorated
    // rise rows' contributions
    DecoratedPath r;
    r.path = SquarePath(kFigurePath);
    r.labels = {2, 1, 0, 4, 0, 1, 3, 4};
    r.dr = {4, 6};
    CHECK(r.path.rise_rows() == std::vector<int>{4, 6, 7});
    CHECK(r.decorations_valid());
    CHECK(r.area() == 10);
}

TEST_CASE("contractible valleys on tiny paths") {
    DecoratedPath a;
    a.path = SquarePath("NNEE");
    a.labels = {1, 2};
    CHECK(a.contractible_valleys().empty());
    DecoratedPath b;
    b.path = SquarePath("NENE");
    b.labels = {1, 2};
    CHECK(b.contractible_valleys() == std::vector<int>{2});
    CHECK(b.dinv() == 1);  // one primary pair
    CHECK(a.dinv() == 0);
    b.dv = {2};
    CHECK(b.dinv() == 0);
    CHECK(b.diagonal_touch() == 1);
}

TEST_CASE("enumeration ground cases") {
    CHECK(collect_paths({Family::DPeak, 0, 0, 0, 0}).size() == 1);
    CHECK(collect_paths({Family::DPeak, 1, 0, 0, 0}).empty());
    CHECK(collect_paths({Family::DPeak, 0, 0, 1, 0}).empty());
    auto d2 = collect_paths({Family::DPeak, 0, 2, 0, 0});
    CHECK(d2.size() == 2);
    auto d22 = collect_paths({Family::DPeak, 0, 2, 0, 2});
    REQUIRE(d22.size() == 1);
    CHECK(d22[0].path.steps() == "NENE");
    CHECK(d22[0].labels == std::vector<int>{2, 1});
    CHECK(d22[0].area() == 0);
    CHECK(d22[0].dinv() == 0);
}

TEST_CASE("q,t-enumerators") {
    Enumerator d2 = qt_enumerator({Family::DPeak, 0, 2, 0, 0});
    CHECK(d2.total == MPoly::parse("q + t"));
    CHECK(d2.by_r.at(1) == MPoly::var_t());
    CHECK(d2.by_r.at(2) == MPoly::var_q());
    CHECK(qt_enumerator({Family::DPeak, 0, 2, 0, 2}).total.is_one());
    CHECK(qt_enumerator({Family::DPeak, 0, 0, 0, 0}).total.is_one());
    CHECK(qt_enumerator({Family::DPeak, 0, 0, 1, 0}).total.is_zero());
    // refined enumerators sum to the total
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (int d = 0; d <= n; ++d) {
                Enumerator e = qt_enumerator({Family::DPeak, 0, n, k, d});
                MPoly sum;
                for (const auto& [r, poly] : e.by_r) sum += poly;
                CHECK(sum == e.total);
            }
}

TEST_CASE("specialization q=t=1 counts elements, Catalan check") {
    for (int n = 0; n <= 8; ++n) {
        Enumerator e = qt_enumerator({Family::DPeak, 0, n, 0, 0});
        CHECK(e.total.eval_one() == Rat(catalan(n)));
        CHECK(e.count == catalan(n));
    }
}

TEST_CASE("statistics are nonnegative and decorations stay valid") {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 1; ++m)
            for (int k = 0; k <= 2; ++k)
                for (Family fam : {Family::DPeak, Family::SQPrimePeak}) {
                    enumerate_paths({fam, m, n, k, 1 <= n ? 1 : 0}, [&](const DecoratedPath& p) {
                        CHECK(p.dinv() >= 0);
                        CHECK(p.area() >= 0);
                        CHECK(p.is_valid_labelling());
                        CHECK(p.decorations_valid());
                    });
                }
}

TEST_CASE("family containments") {
    // LSQ' subset of LSQ, D subset of SQ' on full enumerations
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 1; ++k) {
            auto key = [](const DecoratedPath& p) {
                return p.to_json_string();
            };
            std::set<std::string> lsq;
            enumerate_paths({Family::LSQ, 0, n, k, 0},
                            [&](const DecoratedPath& p) { lsq.insert(key(p)); });
            long prime_count = 0;
            enumerate_paths({Family::LSQPrime, 0, n, k, 0}, [&](const DecoratedPath& p) {
                ++prime_count;
                CHECK(lsq.count(key(p)) == 1);
            });
            CHECK(prime_count <= static_cast<long>(lsq.size()));

            std::set<std::string> sqp;
            enumerate_paths({Family::SQPrimePeak, 0, n, k, 0},
                            [&](const DecoratedPath& p) { sqp.insert(key(p)); });
            enumerate_paths({Family::DPeak, 0, n, k, 0}, [&](const DecoratedPath& p) {
                CHECK(sqp.count(key(p)) == 1);
            });
        }
}

TEST_CASE("peak-model consistency") {
    enumerate_paths({Family::DPeak, 0, 4, 0, 2}, [&](const DecoratedPath& p) {
        std::vector<int> peaks = p.path.peak_rows();
        for (int i = 1; i <= p.size(); ++i)
            if (p.labels[static_cast<std::size_t>(i - 1)] > 2)
                CHECK(std::find(peaks.begin(), peaks.end(), i) != peaks.end());
        CHECK(family_contains({Family::DPeak, 0, 4, 0, 2}, p));
    });
}

TEST_CASE("membership checks") {
    DecoratedPath fig = figure2_left();
    CHECK(family_contains({Family::LSQPrime, 2, 6, 2, 0}, fig));
    CHECK(family_contains({Family::LSQ, 2, 6, 2, 0}, fig));
    CHECK(!family_contains({Family::LD, 2, 6, 2, 0}, fig));       // not a Dyck path
    CHECK(!family_contains({Family::LSQPrime, 2, 6, 1, 0}, fig)); // wrong k
    DecoratedPath bad = fig;
    bad.dv = {2, 7};  // row 7 is a rise, not a contractible valley
    CHECK(!family_contains({Family::LSQPrime, 2, 6, 2, 0}, bad));
}

TEST_CASE("json round trip") {
    DecoratedPath fig = figure2_left();
    DecoratedPath back = DecoratedPath::from_json_string(fig.to_json_string("LSQ'"));
    CHECK(back == fig);
}

TEST_CASE("monomial expansion") {
    SymFunc m1 = monomial_expansion({Family::LD, 0, 1, 0, 0});
    CHECK(m1.basis == Basis::Monomial);
    REQUIRE(m1.terms.size() == 1);
    CHECK(m1.terms.begin()->first == Partition({1}));
    CHECK(m1.terms.begin()->second.is_one());

    // at q = t = 1 the LSQ' aggregate counts the labelled square paths with
    // dominant content
    SymFunc sq = monomial_expansion({Family::LSQPrime, 0, 2, 0, 0});
    long direct = 0;
    enumerate_paths({Family::LSQPrime, 0, 2, 0, 0}, [&](const DecoratedPath& p) {
        std::vector<int> mult(3, 0);
        for (int v : p.labels) ++mult[static_cast<std::size_t>(v)];
        if (mult[1] >= mult[2]) ++direct;
    });
    Rat total(0);
    for (const auto& [mu, c] : sq.terms) total += c.eval_one();
    CHECK(total == Rat(direct));
}

TEST_CASE("symmetry checks at small sizes") {
    CHECK(symmetry_check({Family::LD, 0, 2, 0, 0}, 3));
    CHECK(symmetry_check({Family::LD, 1, 2, 1, 0}, 3));
    CHECK(symmetry_check({Family::LSQPrime, 0, 2, 0, 0}, 3));
    CHECK_THROWS(symmetry_check({Family::LD, 0, 3, 0, 0}, 2));
}

TEST_CASE("pushing algorithm") {
    // no decorated peaks: identity with (p,i) = (0,0)
    FamilyParams plain{Family::DPeak, 0, 3, 1, 0};
    enumerate_paths(plain, [&](const DecoratedPath& p) {
        PushResult res = pushing_algorithm(p, plain);
        CHECK(res.removed_peaks == 0);
        CHECK(res.removed_decorated == 0);
        CHECK(res.image == p);
    });

    // the single element of D(2)^{.0,o2} has both peaks on the diagonal
    FamilyParams both{Family::DPeak, 0, 2, 0, 2};
    auto elems = collect_paths(both);
    REQUIRE(elems.size() == 1);
    PushResult res = pushing_algorithm(elems[0], both);
    CHECK(res.removed_peaks == 2);
    CHECK(res.removed_decorated == 0);
    CHECK(res.image.size() == 0);

    // images land in the stated family with the stated statistics shift
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 1; ++k)
            for (int d = 0; d <= n; ++d) {
                FamilyParams fam{Family::DPeak, 0, n, k, d};
                enumerate_paths(fam, [&](const DecoratedPath& p) {
                    PushResult r = pushing_algorithm(p, fam);
                    FamilyParams image_fam{Family::DPeak, d - r.removed_peaks, n - d,
                                           k - r.removed_decorated, 0};
                    CHECK(family_contains(image_fam, r.image));
                    CHECK(r.image.area() == p.area() - (d - r.removed_peaks));
                });
            }
}
