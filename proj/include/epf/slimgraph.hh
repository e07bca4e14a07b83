// The Berget-Rhoades space V_n: the span of edge-difference products p(G)
// over subgraphs G of K_n with connected complement, with exact rational
// row reduction, trace computation for the variable-relabeling action, and
// the checks against the extended parking-function characters.
#ifndef EPF_SLIMGRAPH_HH
#define EPF_SLIMGRAPH_HH

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epf/action.hh"
#include "epf/arith.hh"
#include "epf/partition.hh"

namespace epf {

// Subgraph of K_n as a bitmask over the C(n,2) unordered pairs in
// lexicographic (i,j) order, i < j, 0-based vertices.
struct LabeledGraph {
    int n = 0;
    std::uint32_t edges = 0;
};

int edge_count(int n);
int edge_index(int i, int j, int n);
std::pair<int, int> edge_pair(int e, int n);

// Packed monomial: total degree in the top byte, then one nibble per
// variable with x_1 in the most significant position, so that plain integer
// comparison is graded lexicographic order with x_1 > ... > x_n.
// Requires nvars <= 8 and every exponent < 16.
using Mono = std::uint64_t;

Mono mono_pack(const std::vector<int>& exps);
std::vector<int> mono_unpack(Mono m, int nvars);
// Exponent vector of the image under variable relabeling by pi:
// e'_j = e_{pi(j)}.
Mono mono_permute(Mono m, const Perm& pi, int nvars);
std::string mono_str(Mono m, int nvars);

// Sparse exact-rational polynomial in nvars variables. Terms are kept in
// descending monomial order, so begin() is the leading term.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int i);  // 0-based x_{i+1}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Rat, std::greater<Mono>>& terms() const { return terms_; }

    Rat coeff(Mono m) const;
    void set_coeff(Mono m, const Rat& c);
    Mono leading_mono() const;  // requires non-zero

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rat& c);
    // this -= c * o
    void sub_scaled(const MultiPoly& o, const Rat& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }

    MultiPoly relabel(const Perm& pi) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    std::string str() const;

  private:
    int nvars_ = 0;
    std::map<Mono, Rat, std::greater<Mono>> terms_;
};

// All subgraphs of K_n whose complement is connected, in bitmask order.
// Resource-bounded: refuses n above the bound (the n = 6 instance is the
// intended maximum and already takes a while to reduce).
std::vector<LabeledGraph> enumerate_slim(int n, int bound = 6);

// prod_{ij in E(G), i<j} (x_{i+1} - x_{j+1}); empty product = 1.
MultiPoly graph_poly(const LabeledGraph& g);

// Row-reduced exact-rational basis in reduced echelon form: rows are monic,
// each pivot monomial occurs in exactly one row.
class SpanBasis {
  public:
    explicit SpanBasis(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    size_t dimension() const { return rows_.size(); }
    const std::vector<MultiPoly>& rows() const { return rows_; }
    const std::map<Mono, size_t, std::greater<Mono>>& pivots() const { return pivots_; }

    // Normal form of w against the basis.
    MultiPoly reduce(const MultiPoly& w) const;
    bool contains(const MultiPoly& w) const { return reduce(w).is_zero(); }
    // Inserts w if independent; returns whether the dimension grew.
    bool insert(MultiPoly w);
    // Coordinates of w in the basis rows, or nullopt if w is outside the span.
    std::optional<std::vector<Rat>> express(const MultiPoly& w) const;

  private:
    int nvars_;
    std::vector<MultiPoly> rows_;
    std::map<Mono, size_t, std::greater<Mono>> pivots_;
};

// Reduced basis of span{p(G) : G slim}. Always performs the full pass over
// every slim graph so that rank excess would be detected; when `progress`
// is set, prints a coarse progress line per 4096 graphs (the n = 6 run is
// long). Polynomial expansion runs on `workers` threads (0 = take the
// EPF_WORKERS environment variable, default 1); row insertion stays in
// graph order, so the result does not depend on the worker count.
SpanBasis build_Vn(int n, bool progress = false, int workers = 0);

// Trace of the canonical cycle-type-lambda permutation on V_n, obtained by
// expressing each relabeled basis row in the basis and summing the diagonal
// coordinates. Throws if a relabeled row leaves the span.
Int sigma_character(const SpanBasis& basis, const Partition& lambda);

struct ConjectureRow {
    Partition lambda;
    Int sigma;
    Int chi;
};
struct ConjectureReport {
    int n = 0;
    Int dimension;
    Int expected_dimension;
    std::vector<ConjectureRow> rows;
    bool pass = false;
};

// dim V_n = n^{n-2} and sigma(lambda) = chi_{n,1}(lambda) for all lambda.
// A mismatch is a reported finding, not an exception.
ConjectureReport verify_conjecture(int n, bool progress = false);
ConjectureReport verify_conjecture(const SpanBasis& basis);

struct TableCheck {
    std::string label;
    bool ok = false;
};
struct TableReport {
    int n = 0;
    std::vector<TableCheck> checks;
    bool pass = false;
};

// Membership of the tabulated orbit-representative polynomials in V_n for
// n in {3,4,5}; for n = 3 additionally checks that the displayed basis map
// commutes with every permutation of S_3.
TableReport verify_table(int n);

}  // namespace epf

#endif
