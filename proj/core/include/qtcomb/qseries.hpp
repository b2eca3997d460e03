#pragma once

#include <map>
#include <mutex>

#include "qtcomb/mpoly.hpp"

namespace qtcomb {

// q-analogues.  Conventions for out-of-range q-binomials (validated against
// the recursions that consume them):
//   binom(n,k)_q = 0 for k < 0,
//   binom(n,0)_q = 1 for every n (including negative),
//   binom(n,k)_q = 0 for k > n otherwise.
MPoly q_int(int n);                    // [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0
MPoly q_factorial(int n);              // [n]_q!
MPoly q_binom(int n, int k);
MPoly q_pochhammer(const MPoly& x, int n);  // (x;q)_n = prod_{i<n} (1 - x q^i)

// Memoized q-binomial table; concurrent reads are fine, inserts are locked.
class QBinomTable {
public:
    const MPoly& binom(int n, int k);
    const MPoly& factorial(int n);

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, MPoly> binom_;
    std::map<int, MPoly> fact_;
};

// shared process-wide table
QBinomTable& qbinom_table();

}  // namespace qtcomb
