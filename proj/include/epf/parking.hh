// Classical and rational parking functions, the Pollak bijection, Catalan
// counts, the character of the plain permutation action, and area.
#ifndef EPF_PARKING_HH
#define EPF_PARKING_HH

#include <span>
#include <vector>

#include "epf/arith.hh"
#include "epf/partition.hh"

namespace epf {

// Weakly increasing rearrangement z satisfies z_i <= i-1. Empty sequences
// park vacuously.
bool is_parking(std::span<const int> x);

// All of PF_n in lexicographic order; |PF_n| = (n+1)^{n-1}.
std::vector<std::vector<int>> enumerate_pf(int n);

// (x_2-x_1, ..., x_n-x_{n-1}) mod (n+1). Rejects non-parking input.
std::vector<int> pollak_forward(std::span<const int> x);

// The unique parking function (y, y+a_1, ..., y+a_1+...+a_{n-1}) mod (n+1)
// over shifts y; n = alpha.size() + 1.
std::vector<int> pollak_inverse(std::span<const int> alpha);

// Rational bound test via cross-multiplication a*z_i <= (i-1)*b.
// GCD(a,b) = 1 required. PF_{a,a+1} coincides with PF_a.
bool is_rational_parking(std::span<const int> x, int a, int b);

// All of PF_{a,b} in lexicographic order; |PF_{a,b}| = b^{a-1}.
std::vector<std::vector<int>> enumerate_rational(int a, int b);

Int catalan(int n);
Int rational_catalan(int a, int b);

// chi_{rho_n} at cycle type lambda: (n+1)^{ell(lambda)-1}.
Int classical_character(int n, const Partition& lambda);

// area(x) = C(n,2) - sum x_i for x in PF_n.
long area(std::span<const int> x);

}  // namespace epf

#endif
