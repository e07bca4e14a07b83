// Frobenius characteristics and exact symmetric-function basis changes
// between the power-sum, complete-homogeneous and Schur bases, plus
// positivity and multiplicity queries.
#ifndef EPF_SYMFUN_HH
#define EPF_SYMFUN_HH

#include <map>
#include <vector>

#include "epf/arith.hh"
#include "epf/character.hh"
#include "epf/partition.hh"

namespace epf {

enum class Basis { p, h, s };

// Basis-tagged sparse map from partitions of `degree` to exact rationals.
// Zero coefficients are not stored.
struct SymFun {
    int degree = 0;
    Basis basis = Basis::p;
    std::map<Partition, Rat> coeffs;

    Rat coeff(const Partition& lambda) const {
        auto it = coeffs.find(lambda);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    void set(const Partition& lambda, Rat v) {
        if (v == 0)
            coeffs.erase(lambda);
        else
            coeffs[lambda] = std::move(v);
    }
    bool operator==(const SymFun& o) const {
        return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
    }
};

// Irreducible character table of S_n, computed by the Murnaghan-Nakayama
// border-strip recursion. Rows and columns are indexed by partitions of n
// in the canonical reverse-lexicographic order.
class CharacterTable {
  public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition>& parts() const { return parts_; }
    // chi^mu(lambda)
    long long value(const Partition& mu, const Partition& lambda) const;
    long long value_at(size_t mu_idx, size_t lambda_idx) const {
        return table_[mu_idx][lambda_idx];
    }
    size_t index_of(const Partition& p) const;

    // Row orthogonality: sum_lambda chi^mu chi^nu / z_lambda = delta_{mu,nu}.
    bool check_orthogonality() const;

  private:
    int n_;
    std::vector<Partition> parts_;
    std::vector<std::vector<long long>> table_;
};

// Shared, lazily built tables; n is capped by `configured_bound`.
const CharacterTable& character_table(int n, int configured_bound = 12);

// Frob(chi) = sum_lambda chi(lambda) p_lambda / z_lambda.
SymFun frobenius(const CharacterVector& chi);

// Basis changes; inputs must be in the p basis (to_h, to_schur) or h basis
// (h_to_p). Schur coefficients of a non-representation come out fractional
// or negative; they are returned as-is rather than aborting.
SymFun to_schur(const SymFun& f);
SymFun to_h(const SymFun& f);
SymFun h_to_p(const SymFun& f);

// [s_mu] f as an exact integer; throws integrality_error if fractional.
Int multiplicity(const SymFun& f, const Partition& mu);

bool is_h_positive(const SymFun& f);
bool is_schur_positive(const SymFun& f);

// Cat_{n-1} - o_{n,1}, the multiplicity of the standard representation in
// tau_{n,1}.
Int standard_multiplicity(int n);

// Substitute p_lambda -> n^{ell(lambda)} in a p-basis element.
Rat principal_specialization(const SymFun& f, int n);

}  // namespace epf

#endif
