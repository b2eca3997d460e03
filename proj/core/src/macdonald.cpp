#include "qtcomb/macdonald.hpp"

#include <stdexcept>

#include "qtcomb/qseries.hpp"

namespace qtcomb {

MPoly MacdonaldOps::B(const Partition& mu) const {
    MPoly b;
    for (const auto& c : mu.cells())
        b += MPoly::monomial(1, static_cast<std::uint32_t>(mu.coarm(c)),
                             static_cast<std::uint32_t>(mu.coleg(c)));
    return b;
}

MPoly MacdonaldOps::Pi(const Partition& mu) const {
    MPoly pi(1);
    for (const auto& c : mu.cells()) {
        if (c.row == 0 && c.col == 0) continue;  // mu / (1)
        MPoly f(1);
        f -= MPoly::monomial(1, static_cast<std::uint32_t>(mu.coarm(c)),
                             static_cast<std::uint32_t>(mu.coleg(c)));
        pi *= f;
    }
    return pi;
}

MPoly MacdonaldOps::w(const Partition& mu) const {
    MPoly r(1);
    for (const auto& c : mu.cells()) {
        int a = mu.arm(c), l = mu.leg(c);
        MPoly f1 = MPoly::var_q(static_cast<std::uint32_t>(a)) -
                   MPoly::var_t(static_cast<std::uint32_t>(l + 1));
        MPoly f2 = MPoly::var_t(static_cast<std::uint32_t>(l)) -
                   MPoly::var_q(static_cast<std::uint32_t>(a + 1));
        r *= f1 * f2;
    }
    return r;
}

// Build H~ through the classical chain: Gram-Schmidt on the monomial basis
// under the Macdonald inner product <p_l, p_l> = z_l prod (1-q^{l_i})/(1-t^{l_i})
// gives P_mu (unitriangular in any linear extension of dominance), the
// integral form is J_mu = prod_c (1 - q^{arm} t^{leg+1}) P_mu, and
// H~_mu = t^{n(mu)} J_mu[X/(1-t)] |_{t -> 1/t}.  The defining triangularity
// axioms and the star-orthogonality are verified by the test suites.
const MacdonaldOps::Degree& MacdonaldOps::degree(int n) const {
    eng_.check_degree(n);
    std::lock_guard<std::mutex> lock(mu_);
    auto found = degrees_.find(n);
    if (found != degrees_.end()) return found->second;

    Degree deg;
    deg.mus = eng_.partitions(n);
    const int P = static_cast<int>(deg.mus.size());

    auto qt_pairing = [](const SymFunc& a, const SymFunc& b) {
        QTRational acc;
        for (const auto& [rho, ca] : a.terms) {
            auto it = b.terms.find(rho);
            if (it == b.terms.end()) continue;
            MPoly num(Rat(rho.z_factor())), den(1);
            for (int part : rho.parts()) {
                num *= MPoly(1) - MPoly::var_q(static_cast<std::uint32_t>(part));
                den *= MPoly(1) - MPoly::var_t(static_cast<std::uint32_t>(part));
            }
            acc += ca * it->second * QTRational(num, den);
        }
        return acc;
    };

    // dominance-ascending linear extension: reverse of the descending-lex list
    std::vector<SymFunc> gs(static_cast<std::size_t>(P));
    std::vector<QTRational> norms(static_cast<std::size_t>(P));
    for (int idx = P - 1; idx >= 0; --idx) {
        const Partition& mu = deg.mus[static_cast<std::size_t>(idx)];
        SymFunc v = eng_.to_p(eng_.basis_unit(Basis::Monomial, mu));
        for (int j = P - 1; j > idx; --j) {
            QTRational c = qt_pairing(v, gs[static_cast<std::size_t>(j)]);
            if (c.is_zero()) continue;
            SymFunc proj = gs[static_cast<std::size_t>(j)];
            proj.scale(c / norms[static_cast<std::size_t>(j)]);
            v -= proj;
        }
        norms[static_cast<std::size_t>(idx)] = qt_pairing(v, v);
        if (norms[static_cast<std::size_t>(idx)].is_zero())
            throw std::logic_error("MacdonaldOps: degenerate norm for " + mu.str());
        gs[static_cast<std::size_t>(idx)] = std::move(v);
    }

    for (int mi = 0; mi < P; ++mi) {
        const Partition& mu = deg.mus[static_cast<std::size_t>(mi)];
        // integral form
        MPoly c_mu(1);
        for (const auto& cell : mu.cells()) {
            MPoly f(1);
            f -= MPoly::monomial(1, static_cast<std::uint32_t>(mu.arm(cell)),
                                 static_cast<std::uint32_t>(mu.leg(cell) + 1));
            c_mu *= f;
        }
        SymFunc ht(Basis::PowerSum);
        for (const auto& [rho, c] : gs[static_cast<std::size_t>(mi)].terms) {
            // J coefficient, then the X/(1-t) plethysm on p_rho
            QTRational v = c * QTRational(c_mu);
            MPoly den(1);
            for (int part : rho.parts())
                den *= MPoly(1) - MPoly::var_t(static_cast<std::uint32_t>(part));
            v *= QTRational(MPoly(1), den);
            // t -> 1/t twist and the t^{n(mu)} renormalization
            v = v.subst_t_inverse();
            v *= QTRational(MPoly::var_t(static_cast<std::uint32_t>(mu.n_stat())));
            ht.add_term(rho, v);
        }
        deg.htilde_p.push_back(std::move(ht));
        deg.w.push_back(w(mu));
    }

    auto [it, ins] = degrees_.emplace(n, std::move(deg));
    return it->second;
}

const SymFunc& MacdonaldOps::htilde(const Partition& mu) const {
    const Degree& deg = degree(mu.size());
    for (std::size_t i = 0; i < deg.mus.size(); ++i)
        if (deg.mus[i] == mu) return deg.htilde_p[i];
    throw std::logic_error("MacdonaldOps::htilde: partition not found");
}

std::map<Partition, QTRational> MacdonaldOps::to_macdonald(const SymFunc& f) const {
    std::map<Partition, QTRational> out;
    SymFunc fp = eng_.to_p(f);
    for (int n : fp.degrees()) {
        SymFunc comp = fp.homogeneous_part(n);
        const Degree& deg = degree(n);
        for (std::size_t i = 0; i < deg.mus.size(); ++i) {
            QTRational c = eng_.star_inner(comp, deg.htilde_p[i]) / QTRational(deg.w[i]);
            if (!c.is_zero()) out.emplace(deg.mus[i], c);
        }
    }
    return out;
}

SymFunc MacdonaldOps::from_macdonald(const std::map<Partition, QTRational>& coeffs) const {
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, c] : coeffs) {
        SymFunc h = htilde(mu);
        h.scale(c);
        out += h;
    }
    return out;
}

SymFunc MacdonaldOps::from_macdonald(const SymFunc& f_in_H) const {
    if (f_in_H.basis != Basis::Macdonald)
        throw std::invalid_argument("from_macdonald: basis is not H");
    std::map<Partition, QTRational> coeffs(f_in_H.terms.begin(), f_in_H.terms.end());
    return from_macdonald(coeffs);
}

SymFunc MacdonaldOps::to_macdonald_basis(const SymFunc& f) const {
    SymFunc out(Basis::Macdonald);
    for (const auto& [mu, c] : to_macdonald(f)) out.add_term(mu, c);
    return out;
}

SymFunc MacdonaldOps::apply_eigen(
    const SymFunc& g, const std::function<QTRational(const Partition&)>& eigen) const {
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, c] : to_macdonald(g)) {
        QTRational v = c * eigen(mu);
        if (v.is_zero()) continue;
        SymFunc h = htilde(mu);
        h.scale(v);
        out += h;
    }
    return out;
}

SymFunc MacdonaldOps::nabla(const SymFunc& f) const {
    return apply_eigen(f, [&](const Partition& mu) {
        return QTRational(MPoly::monomial(1, static_cast<std::uint32_t>(mu.conjugate().n_stat()),
                                          static_cast<std::uint32_t>(mu.n_stat())));
    });
}

SymFunc MacdonaldOps::delta(const SymFunc& f, const SymFunc& g) const {
    SymFunc fp = eng_.to_p(f);
    return apply_eigen(g, [&](const Partition& mu) { return eng_.eval_alphabet(fp, B(mu)); });
}

SymFunc MacdonaldOps::delta_prime(const SymFunc& f, const SymFunc& g) const {
    SymFunc fp = eng_.to_p(f);
    return apply_eigen(g, [&](const Partition& mu) {
        MPoly alphabet = B(mu) - MPoly(1);
        return eng_.eval_alphabet(fp, alphabet);
    });
}

SymFunc MacdonaldOps::pi_op(const SymFunc& f, bool inverse) const {
    return apply_eigen(f, [&](const Partition& mu) {
        QTRational pi(Pi(mu));
        return inverse ? pi.inverse() : pi;
    });
}

SymFunc MacdonaldOps::theta(const SymFunc& f, const SymFunc& F) const {
    if (!f.is_homogeneous())
        throw std::invalid_argument("theta: f must be homogeneous");
    if (f.is_zero() || F.is_zero()) return SymFunc(Basis::PowerSum);
    const int k = f.max_degree();

    SymFunc out(Basis::PowerSum);
    for (int m : F.degrees()) {
        SymFunc Fm = F.homogeneous_part(m);
        if (m == 0) {
            if (k >= 1) continue;              // Theta_f kills scalars for deg f >= 1
            out += eng_.multiply(eng_.to_p(f), Fm);  // k == 0: plain product
            continue;
        }
        // Pi( f[X/M] * Pi^{-1} Fm )
        SymFunc fstar = eng_.plethysm_substitute(f, [](int j) {
            MPoly mq(1), mt(1);
            mq -= MPoly::var_q(static_cast<std::uint32_t>(j));
            mt -= MPoly::var_t(static_cast<std::uint32_t>(j));
            return QTRational(MPoly(1), mq * mt);
        });
        SymFunc inner = eng_.multiply(fstar, pi_op(Fm, true));
        out += pi_op(inner, false);
    }
    return out;
}

// E_{n,k} from the z-expansion of e_n[X(1-z)/(1-q)] in the triangular basis
// (z;q)_k / (q;q)_k.
const std::vector<SymFunc>& MacdonaldOps::e_family(int n) const {
    eng_.check_degree(n);
    std::lock_guard<std::mutex> lock(mu_);
    auto found = efam_.find(n);
    if (found != efam_.end()) return found->second;

    std::vector<SymFunc> E(static_cast<std::size_t>(n) + 1, SymFunc(Basis::PowerSum));
    if (n == 0) {
        E[0] = eng_.one();
    } else {
        SymFunc G = eng_.plethysm_substitute(eng_.e(n), [](int j) {
            MPoly nz(1), nq(1);
            nz -= MPoly::var_z(static_cast<std::uint32_t>(j));
            nq -= MPoly::var_q(static_cast<std::uint32_t>(j));
            return QTRational(nz, nq);
        });
        for (int k = n; k >= 1; --k) {
            // leading z^k coefficient of (z;q)_k/(q;q)_k is
            // (-1)^k q^{binom(k,2)} / (q;q)_k
            SymFunc zk(Basis::PowerSum);
            for (const auto& [mu, c] : G.terms) {
                if (c.den().uses_z())
                    throw std::logic_error("e_family: z in denominator");
                MPoly numk = c.num().z_coefficient(static_cast<std::uint32_t>(k));
                if (numk.is_zero()) continue;
                zk.add_term(mu, QTRational(std::move(numk), c.den()));
            }
            MPoly qfact = q_pochhammer(MPoly::var_q(), k);  // (q;q)_k
            QTRational unlead(qfact, MPoly::monomial(1, static_cast<std::uint32_t>(k * (k - 1) / 2)));
            if (k % 2 == 1) unlead = -unlead;
            zk.scale(unlead);
            E[static_cast<std::size_t>(k)] = zk;
            // G -= (z;q)_k/(q;q)_k * E_{n,k}
            QTRational basis_k(q_pochhammer(MPoly::var_z(), k), qfact);
            SymFunc sub = zk;
            sub.scale(basis_k);
            G -= sub;
        }
        if (!G.is_zero())
            throw std::logic_error("e_family: nonzero remainder at z-degree 0");
        for (const auto& Ek : E)
            for (const auto& [mu, c] : Ek.terms)
                if (c.uses_z()) throw std::logic_error("e_family: z leaked into E_{n,k}");
    }

    auto [it, ins] = efam_.emplace(n, std::move(E));
    return it->second;
}

SymFunc MacdonaldOps::e_family_square(int n, int r) const {
    if (n == 0 && r == 0) return eng_.one();
    if (r < 1 || r > n) return SymFunc(Basis::PowerSum);
    SymFunc Er = e_family(n)[static_cast<std::size_t>(r)];
    Er.scale(QTRational(q_int(n), q_int(r)));
    return Er;
}

SymFunc MacdonaldOps::omega_p(int n) const {
    if (n == 0) return eng_.one();
    return eng_.omega(eng_.p(n));
}

}  // namespace qtcomb
