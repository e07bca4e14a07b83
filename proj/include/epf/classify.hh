// Divisor-indexed classification of the tau_{n,c} up to isomorphism:
// the index set D_n, the fibers C_{n,k}, and the area-statistic class.
#ifndef EPF_CLASSIFY_HH
#define EPF_CLASSIFY_HH

#include <map>
#include <vector>

namespace epf {

// D_n = {k | n : n/k = n (mod 2)}, sorted.
std::vector<long> d_set(long n);

// C_{n,k} = {m in [n] : GCD(n,m) in {k,2k} if n/k = 2 (mod 4), else = k}.
// Rejects k not in D_n.
std::vector<long> c_set(long n, long k);

// |D_n|, cross-checked against #{d | n : d != 2 (mod 4)}.
long class_count(long n);

// Isomorphism-class assignment: each c in [n] mapped to the unique k in D_n
// with c in C_{n,k}; the fibers partition [n].
struct Classification {
    long n = 0;
    std::map<long, long> class_index;  // c -> k
    long count = 0;                    // |D_n|
};

Classification classify(long n);

// The residue c = C(n-1,2) (mod n), normalized to [n]: the class whose last
// coordinate records the area statistic mod n.
int area_class(int n);

// chi(n, area_class(n), .) = chi(n, 1, .) on all classes.
bool verify_area_iso(int n);

}  // namespace epf

#endif
