// Integer partitions: the index set for conjugacy classes of S_n and for
// every symmetric-function basis used here.
#ifndef EPF_PARTITION_HH
#define EPF_PARTITION_HH

#include <string>
#include <vector>

#include "epf/arith.hh"

namespace epf {

class Partition {
  public:
    Partition() = default;
    // parts must be weakly decreasing and strictly positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }                           // size
    int ell() const { return static_cast<int>(parts_.size()); }  // length
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    Partition conjugate() const;

    // Multiplicity of a part equal to 1 removed; precondition: one exists.
    Partition drop_one_part_1() const;
    bool has_part_1() const { return !parts_.empty() && parts_.back() == 1; }

    // Serialized key form, e.g. "3+3"; the empty partition is "0".
    std::string key() const;
    static Partition from_key(const std::string& key);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Canonical table order: reverse-lexicographic, i.e. (n) first, (1^n)
    // last among partitions of equal size. Maps keyed on Partition iterate
    // in this order.
    bool operator<(const Partition& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return parts_ > o.parts_;
    }

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n in reverse-lexicographic order; n = 0 yields the
// single empty partition.
std::vector<Partition> partitions_of(int n);

// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda.
Int z_of(const Partition& lambda);

// GCD of all parts; 0 for the empty partition.
int gcd_of_partition(const Partition& lambda);

// b(lambda') = sum_i C(lambda_i, 2).
Int b_stat(const Partition& lambda);

}  // namespace epf

#endif
