#include "qtcomb/qseries.hpp"

#include <stdexcept>

namespace qtcomb {

MPoly q_int(int n) {
    if (n < 0) throw std::domain_error("q_int: negative argument");
    MPoly r;
    for (int i = 0; i < n; ++i) r += MPoly::var_q(static_cast<std::uint32_t>(i));
    return r;
}

MPoly q_factorial(int n) {
    if (n < 0) throw std::domain_error("q_factorial: negative argument");
    MPoly r(1);
    for (int i = 1; i <= n; ++i) r *= q_int(i);
    return r;
}

MPoly q_binom(int n, int k) {
    if (k < 0) return MPoly();
    if (k == 0) return MPoly(1);
    if (k > n) return MPoly();
    // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]; division-free
    MPoly a = q_binom(n - 1, k - 1);
    MPoly b = q_binom(n - 1, k);
    b.mul_monomial(1, Monomial{static_cast<std::uint32_t>(k), 0, 0});
    return a + b;
}

MPoly q_pochhammer(const MPoly& x, int n) {
    if (n < 0) throw std::domain_error("q_pochhammer: negative length");
    MPoly r(1);
    for (int i = 0; i < n; ++i) {
        MPoly f(1);
        MPoly xi = x;
        xi.mul_monomial(1, Monomial{static_cast<std::uint32_t>(i), 0, 0});
        f -= xi;
        r *= f;
    }
    return r;
}

const MPoly& QBinomTable::binom(int n, int k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(n, k);
    auto it = binom_.find(key);
    if (it == binom_.end()) it = binom_.emplace(key, q_binom(n, k)).first;
    return it->second;
}

const MPoly& QBinomTable::factorial(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fact_.find(n);
    if (it == fact_.end()) it = fact_.emplace(n, q_factorial(n)).first;
    return it->second;
}

QBinomTable& qbinom_table() {
    static QBinomTable table;
    return table;
}

}  // namespace qtcomb
