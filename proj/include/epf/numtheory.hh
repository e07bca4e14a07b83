// Number-theoretic kernel: Moebius, Jordan totient, divisor lists, and the
// congruence-solution count behind the character formulas.
#ifndef EPF_NUMTHEORY_HH
#define EPF_NUMTHEORY_HH

#include <vector>

#include "epf/arith.hh"

namespace epf {

// Classical Moebius function; n >= 1.
int moebius(long n);

// J_2(m) = m^2 prod_{p|m} (1 - 1/p^2), exactly.
Int jordan_totient2(long m);

// Sorted list of positive divisors of n >= 1.
std::vector<long> divisors(long n);

Int binomial(unsigned long n, unsigned long k);

// 2-adic valuation of n >= 1.
int v2(long n);

// Number of (x_1,...,x_k) in {0,...,m-1}^k with sum a_i x_i = c (mod m):
// d*m^{k-1} if d | c else 0, where d = GCD(a_1,...,a_k,m). Closed form only;
// the enumeration oracle lives in tests.
Int count_congruence_solutions(const std::vector<long>& a, long c, long m);

}  // namespace epf

#endif
