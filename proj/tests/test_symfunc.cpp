#include <doctest.h>

#include <random>

#include "qtcomb/symfunc.hpp"

using namespace qtcomb;

namespace {

SymEngine& engine() {
    static SymEngine eng(8);
    return eng;
}

SymFunc schur(std::initializer_list<int> parts) {
    return engine().basis_unit(Basis::Schur, Partition(std::vector<int>(parts)));
}

SymFunc pbasis(std::initializer_list<int> parts) {
    return engine().basis_unit(Basis::PowerSum, Partition(std::vector<int>(parts)));
}

SymFunc random_symfunc(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    SymFunc f(Basis::PowerSum);
    for (const Partition& mu : engine().partitions(degree))
        f.add_term(mu, QTRational(coeff(rng)));
    return f;
}

}  // namespace

TEST_CASE("basic conversions") {
    SymEngine& eng = engine();
    CHECK(eng.convert(eng.e(2), Basis::Schur) == schur({1, 1}));
    // p_2 = s_2 - s_{11}, cross-checked through the monomial basis
    SymFunc p2s = eng.convert(eng.p(2), Basis::Schur);
    SymFunc expect = schur({2}) - schur({1, 1});
    CHECK(p2s == expect);
    CHECK(eng.convert(eng.p(2), Basis::Monomial) == eng.convert(expect, Basis::Monomial));
}

TEST_CASE("h_3 in the power-sum basis") {
    // Newton-recurrence oracle: 6 h_3 = p_1^3 + 3 p_2 p_1 + 2 p_3
    SymEngine& eng = engine();
    SymFunc h3p = eng.to_p(eng.h(3));
    SymFunc expect(Basis::PowerSum);
    expect.add_term(Partition({1, 1, 1}), QTRational(Rat(1, 6)));
    expect.add_term(Partition({2, 1}), QTRational(Rat(1, 2)));
    expect.add_term(Partition({3}), QTRational(Rat(1, 3)));
    CHECK(h3p == expect);
}

TEST_CASE("degree bound is enforced") {
    SymEngine small(3);
    CHECK_THROWS_AS(small.e(4), std::domain_error);
    CHECK_THROWS_AS(small.multiply(small.e(2), small.e(2)), std::domain_error);
}

TEST_CASE("multiplication") {
    SymEngine& eng = engine();
    CHECK(eng.multiply(eng.e(1), eng.e(1)) == pbasis({1, 1}));
    std::mt19937 rng(5);
    SymFunc f = random_symfunc(rng, 3);
    CHECK(eng.multiply(f, eng.one()) == f);
    // Pieri oracle: e_1 h_1 = s_2 + s_{11}
    SymFunc prod = eng.convert(eng.multiply(eng.e(1), eng.h(1)), Basis::Schur);
    CHECK(prod == schur({2}) + schur({1, 1}));
}

TEST_CASE("Hall scalar product") {
    SymEngine& eng = engine();
    CHECK(eng.hall_inner(schur({2, 1}), schur({2, 1})) == QTRational(1));
    CHECK(eng.hall_inner(schur({2}), schur({1, 1})).is_zero());
    // <p_mu, p_mu> = z_mu
    CHECK(eng.hall_inner(eng.p(2), eng.p(2)) == QTRational(2));
    for (const Partition& mu : eng.partitions(4)) {
        SymFunc pm = eng.basis_unit(Basis::PowerSum, mu);
        CHECK(eng.hall_inner(pm, pm) == QTRational(Rat(mu.z_factor())));
    }
    // Schur orthonormality at degree 4
    for (const Partition& a : eng.partitions(4))
        for (const Partition& b : eng.partitions(4)) {
            QTRational v = eng.hall_inner(eng.basis_unit(Basis::Schur, a),
                                          eng.basis_unit(Basis::Schur, b));
            CHECK(v == (a == b ? QTRational(1) : QTRational()));
        }
}

TEST_CASE("star scalar product on power sums") {
    SymEngine& eng = engine();
    MPoly M = (MPoly(1) - MPoly::var_q()) * (MPoly(1) - MPoly::var_t());
    CHECK(eng.star_inner(eng.p(1), eng.p(1)) == QTRational(M));
    // direct-expansion oracle: <f,g>_* = <f, omega g[MX]>
    std::mt19937 rng(11);
    for (int iter = 0; iter < 5; ++iter) {
        SymFunc f = random_symfunc(rng, 3), g = random_symfunc(rng, 3);
        SymFunc gmx = eng.plethysm_substitute(g, [](int k) {
            MPoly mq = MPoly(1) - MPoly::var_q(static_cast<std::uint32_t>(k));
            MPoly mt = MPoly(1) - MPoly::var_t(static_cast<std::uint32_t>(k));
            return QTRational(mq * mt);
        });
        CHECK(eng.star_inner(f, g) == eng.hall_inner(f, eng.omega(gmx)));
    }
}

TEST_CASE("omega") {
    SymEngine& eng = engine();
    CHECK(eng.omega(eng.e(3)) == eng.to_p(eng.h(3)));
    std::mt19937 rng(3);
    SymFunc f = random_symfunc(rng, 4);
    CHECK(eng.omega(eng.omega(f)) == f);
    // omega s_lambda = s_{lambda'}
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : eng.partitions(n)) {
            SymFunc got = eng.convert(eng.omega(eng.basis_unit(Basis::Schur, mu)), Basis::Schur);
            CHECK(got == eng.basis_unit(Basis::Schur, mu.conjugate()));
        }
}

TEST_CASE("plethystic substitution") {
    SymEngine& eng = engine();
    // p_k -> (1-q^k)(1-t^k) p_k is the MX alphabet rule
    SymFunc p3 = eng.p(3);
    SymFunc scaled = eng.plethysm_substitute(p3, [](int k) {
        MPoly mq = MPoly(1) - MPoly::var_q(static_cast<std::uint32_t>(k));
        MPoly mt = MPoly(1) - MPoly::var_t(static_cast<std::uint32_t>(k));
        return QTRational(mq * mt);
    });
    SymFunc expect = eng.p(3);
    expect.scale(QTRational((MPoly(1) - MPoly::var_q(3)) * (MPoly(1) - MPoly::var_t(3))));
    CHECK(scaled == expect);

    // e_1[1 + q] = 1 + q
    MPoly B = MPoly(1) + MPoly::var_q();
    CHECK(eng.eval_alphabet(eng.e(1), B) == QTRational(B));
    // e_2[1 + q] = q
    CHECK(eng.eval_alphabet(eng.e(2), B) == QTRational(MPoly::var_q()));
    // h_2[1 + q] = 1 + q + q^2
    CHECK(eng.eval_alphabet(eng.h(2), B) == QTRational(MPoly::parse("q^2 + q + 1")));
}

TEST_CASE("basis round trips are path independent") {
    SymEngine& eng = engine();
    std::mt19937 rng(2718);
    const Basis all[] = {Basis::Monomial, Basis::Elementary, Basis::Homogeneous,
                         Basis::PowerSum, Basis::Schur};
    for (int deg = 0; deg <= 5; ++deg) {
        SymFunc f = random_symfunc(rng, deg);
        for (Basis b1 : all)
            for (Basis b2 : all) {
                SymFunc via = eng.convert(eng.convert(f, b1), b2);
                CHECK(eng.convert(via, Basis::PowerSum) == f);
            }
    }
}

TEST_CASE("hperp skewing against the adjointness contract") {
    SymEngine& eng = engine();
    CHECK(eng.hperp(1, schur({2})) == schur({1}));
    std::mt19937 rng(31);
    SymFunc f = random_symfunc(rng, 4);
    CHECK(eng.to_p(eng.hperp(0, f)) == f);
    CHECK(eng.hperp(5, f).is_zero());
    // <h_m^perp f, g> = <f, h_m g> on full bases
    for (int m = 0; m <= 3; ++m) {
        for (const Partition& lam : eng.partitions(4)) {
            SymFunc fl = eng.basis_unit(Basis::Schur, lam);
            SymFunc skewed = eng.hperp(m, fl);
            for (const Partition& mu : eng.partitions(4 - m)) {
                SymFunc g = eng.basis_unit(Basis::Schur, mu);
                CHECK(eng.hall_inner(skewed, g) ==
                      eng.hall_inner(fl, eng.multiply(eng.h(m), g)));
            }
        }
    }
}

TEST_CASE("characters") {
    SymEngine& eng = engine();
    // trivial and sign characters
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& mu : eng.partitions(n)) {
            CHECK(eng.character(Partition({n}), mu) == 1);
            Int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
            std::vector<int> col(static_cast<std::size_t>(n), 1);
            CHECK(eng.character(Partition(col), mu) == sign);
        }
    }
    // column orthogonality via <s_lambda, s_sigma>
    CHECK(eng.character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(eng.character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(eng.character(Partition({2, 1}), Partition({2, 1})) == 0);
}

TEST_CASE("json round trip") {
    SymEngine& eng = engine();
    SymFunc f(Basis::Schur);
    f.add_term(Partition({2, 1}), QTRational(MPoly::parse("q*t + 1")));
    f.add_term(Partition({1, 1, 1}), QTRational(MPoly::var_t()));
    SymFunc back = SymFunc::from_json_string(f.to_json_string());
    CHECK(back == f);
    CHECK(f.to_json_string().find("\"basis\":\"s\"") != std::string::npos);
    (void)eng;
}
