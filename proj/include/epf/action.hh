// The extended parking-function sets PF^_{n,c} and PF^_{a,b,c}, the
// shift-corrected S_n action on them, and the brute-force oracles (fixed
// point counts, Burnside orbit counts, orbit decomposition) that every
// closed-form result is checked against.
#ifndef EPF_ACTION_HH
#define EPF_ACTION_HH

#include <string>
#include <vector>

#include "epf/arith.hh"
#include "epf/partition.hh"

namespace epf {

// Permutation of [n] in one-line notation, stored 0-based: img[i] = pi(i+1)-1.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    // Parses "1432" (all points < 10) or "1,4,3,2".
    static Perm from_one_line(const std::string& s);
    // Canonical representative of cycle type lambda in S_n:
    // (1,...,lambda_1)(lambda_1+1,...,lambda_1+lambda_2)...
    static Perm cycle_type_rep(const Partition& lambda);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }  // 0-based
    const std::vector<int>& images() const { return img_; }

    // Left-to-right product: compose(s, p)(i) = p(s(i)), i.e. "first s, then
    // p". With the coordinate action x -> (x_{pi(1)},...,x_{pi(n)}) this is
    // the convention under which apply(compose(s,p), x) = apply(s, apply(p, x)).
    static Perm compose(const Perm& s, const Perm& p);

    Partition cycle_type() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }

  private:
    std::vector<int> img_;
};

// Element of PF^_{n,c} (modulus n) or PF^_{a,b,c} (modulus b): the first
// size-1 coordinates form a (rational) parking function and the coordinate
// sum is target mod modulus.
struct ExtendedPF {
    std::vector<int> coords;
    int modulus = 0;
    int target = 0;

    bool operator==(const ExtendedPF& o) const {
        return coords == o.coords && modulus == o.modulus && target == o.target;
    }
    bool operator<(const ExtendedPF& o) const { return coords < o.coords; }
};

// All n^{n-2} elements of PF^_{n,c}, ordered by the underlying PF_{n-1}
// lexicographic order. 1 <= c <= n.
std::vector<ExtendedPF> build_epf_set(int n, int c);

// All b^{a-1} elements of PF^_{a,b,c}, same ordering principle.
// Needs GCD(a,b) = 1; the action additionally needs b | (a+1).
std::vector<ExtendedPF> build_epf_set_rational(int a, int b, int c);

// tau_{n,c}: permute coordinates by pi, then add the unique constant shift
// making the first n-1 coordinates park again.
ExtendedPF apply(const Perm& pi, const ExtendedPF& x);

// tau_{a,b,c}; rejects b not dividing a+1 (the action does not close otherwise).
ExtendedPF apply_rational(const Perm& pi, const ExtendedPF& x, int a, int b);

// Fixed points of the canonical cycle-type representative on PF^_{n,c}.
Int brute_character(int n, int c, const Partition& lambda);
Int brute_character_rational(int a, int b, int c, const Partition& lambda);

// Orbit count as the z_lambda-weighted average of fixed points.
Int burnside_orbit_count(int n, int c);
Int burnside_orbit_count_rational(int a, int b, int c);

// Explicit orbits under adjacent transpositions plus the long cycle,
// as sorted lists of elements; deterministic order.
std::vector<std::vector<ExtendedPF>> orbit_decomposition(int n, int c);

}  // namespace epf

#endif
