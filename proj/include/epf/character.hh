// Closed-form characters of the extended parking actions: the general
// (n,c) formula, its c=1 and c=n specializations (kept as independent code
// paths so they cross-check the general formula), and the rational c=1 case.
#ifndef EPF_CHARACTER_HH
#define EPF_CHARACTER_HH

#include <map>

#include "epf/arith.hh"
#include "epf/partition.hh"

namespace epf {

// Class function of a degree-n representation, defined on all lambda |- n.
struct CharacterVector {
    int n = 0;
    std::map<Partition, Int> values;

    bool operator==(const CharacterVector& o) const { return n == o.n && values == o.values; }
};

// chi_{n,c} at cycle type lambda. With d = GCD(lambda), ell = ell(lambda):
//   d even, n/d odd,  d|2c  ->  d^2 n^{ell-2} / 2
//   d even, n/d even, d|c   ->  d^2 n^{ell-2}
//   d odd,            d|c   ->  d^2 n^{ell-2}
//   otherwise 0.
// Evaluated as an exact rational (ell = 1 makes the power negative);
// integrality of the result is asserted.
Int chi(int n, int c, const Partition& lambda);

// c = 1: n^{ell-2} if d = 1; 2 n^{ell-2} if d = 2 and n = 2 (mod 4); else 0.
Int chi_c1(int n, const Partition& lambda);

// c = n: f_n(d) d^2 n^{ell-2} with f_n(d) = 1/2 iff d even and n/d odd.
Int chi_cn(int n, const Partition& lambda);

// Rational family, c = 1, a = kb-1: with d = GCD(lambda_1,...,lambda_ell,b):
// b^{ell-2} if d = 1; 2 b^{ell-2} if d = 2, b = 2 (mod 4), k odd; else 0.
Int chi_rational(int a, int b, const Partition& lambda);

// Full character vector of tau_{n,c}.
CharacterVector character_vector(int n, int c);

}  // namespace epf

#endif
