// Closed-form orbit counts: o_{n,n} through the Jordan-totient machinery,
// o_{n,1} through the signed Moebius sum, the rational o_{a,b,1}, and the
// subset-sum cross-check. All intermediate values are exact rationals;
// integrality of the final counts is asserted at runtime.
#ifndef EPF_ORBITS_HH
#define EPF_ORBITS_HH

#include <optional>

#include "epf/arith.hh"

namespace epf {

// f_n(d) = 1/2 if d even and n/d odd, else 1. Rejects d not dividing n.
Rat f_weight(long n, long d);

// F(m,e) = sum_{d|m} mu(m/d) f_{me}(d) d^2, evaluated in closed form
// (J_2(m), or J_2(m)/3 when e odd and m even) and asserted against the
// defining sum.
Int F_of(long m, long e);

// a_n = (1/n^2) sum_{d|n} mu(n/d) C(2d-1,d); not integral in general.
Rat a_n(long n);

// o_{n,n} = (1/n^2) sum_{e|n} C(2e-1,e) F(n/e,e).
Int orbits_cn(long n);

// o_{n,1} = (1/n^2) sum_{d|n} (-1)^{n+d} mu(n/d) C(2d-1,d); also computed
// through the case split a_n + a_{n/2}/2 (n = 2 mod 4) and compared.
Int orbits_c1(long n);

// o_{a,b,1} = (1/b^2) sum_{d|b} (-1)^{k(b+d)} mu(b/d) C((k+1)d-1, kd),
// for a = kb-1 with GCD(a,b) = 1.
Int orbits_rational_c1(long a, long b);

// n * o_{n,1} = #{S subset of [2n-1] : |S| = n, sum(S) = 1 (mod n)},
// verified by direct enumeration; n <= 12.
bool subset_sum_check(int n);

struct OrbitReport {
    long n = 0, c = 0;  // classical parameters; c = 0 when rational
    long a = 0, b = 0;  // rational parameters; 0 when classical
    Int formula_count;
    std::optional<Int> oracle_count;
};

}  // namespace epf

#endif
