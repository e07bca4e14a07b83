#include "epf/slimgraph.hh"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <sstream>
#include <stdexcept>

#include <span>

#include "epf/character.hh"
#include "epf/parking.hh"

namespace epf {

namespace {
constexpr int kMaxVars = 8;
constexpr unsigned kDegShift = 32;
constexpr Mono kExpMask = 0xF;

int shift_for(int var) { return 4 * (kMaxVars - 1 - var); }
}  // namespace

int edge_count(int n) { return n * (n - 1) / 2; }

int edge_index(int i, int j, int n) {
    // lexicographic (i,j), i < j
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> edge_pair(int e, int n) {
    for (int i = 0; i < n; ++i) {
        const int row = n - 1 - i;
        if (e < row) return {i, i + 1 + e};
        e -= row;
    }
    throw std::invalid_argument("edge_pair: index out of range");
}

Mono mono_pack(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("mono_pack: at most 8 variables");
    Mono m = 0;
    unsigned deg = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 15)
            throw std::invalid_argument("mono_pack: exponent out of range");
        deg += static_cast<unsigned>(exps[i]);
        m |= static_cast<Mono>(exps[i]) << shift_for(static_cast<int>(i));
    }
    return m | (static_cast<Mono>(deg) << kDegShift);
}

std::vector<int> mono_unpack(Mono m, int nvars) {
    std::vector<int> e(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
        e[static_cast<size_t>(i)] = static_cast<int>((m >> shift_for(i)) & kExpMask);
    return e;
}

Mono mono_permute(Mono m, const Perm& pi, int nvars) {
    const auto e = mono_unpack(m, nvars);
    std::vector<int> out(static_cast<size_t>(nvars));
    for (int j = 0; j < nvars; ++j) out[static_cast<size_t>(j)] = e[static_cast<size_t>(pi(j))];
    return mono_pack(out);
}

std::string mono_str(Mono m, int nvars) {
    if (m == 0) return "1";
    std::ostringstream os;
    const auto e = mono_unpack(m, nvars);
    bool first = true;
    for (int i = 0; i < nvars; ++i) {
        if (!e[static_cast<size_t>(i)]) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (e[static_cast<size_t>(i)] > 1) os << "^" << e[static_cast<size_t>(i)];
        first = false;
    }
    return os.str();
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[0] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    MultiPoly p(nvars);
    p.terms_[mono_pack(e)] = 1;
    return p;
}

Rat MultiPoly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::set_coeff(Mono m, const Rat& c) {
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

Mono MultiPoly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading_mono of zero polynomial");
    return terms_.begin()->first;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    sub_scaled(o, Rat(1));
    return *this;
}

void MultiPoly::sub_scaled(const MultiPoly& o, const Rat& c) {
    if (c == 0) return;
    for (const auto& [m, oc] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, Rat(0));
        it->second -= c * oc;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            // Packed keys add componentwise: nibbles cannot carry while every
            // exponent stays below 16.
            const Mono m = ma + mb;
            auto [it, fresh] = out.terms_.emplace(m, Rat(0));
            it->second += ca * cb;
            if (it->second == 0) out.terms_.erase(it);
        }
    return out;
}

MultiPoly MultiPoly::relabel(const Perm& pi) const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_[mono_permute(m, pi, nvars_)] = c;
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << rat_str(c);
        if (m != 0) os << "*" << mono_str(m, nvars_);
        first = false;
    }
    return os.str();
}

namespace {

bool complement_connected(int n, std::uint32_t edges) {
    if (n == 1) return true;
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v)
            v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        return v;
    };
    int comps = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (edges & (1u << edge_index(i, j, n))) continue;  // edge absent in complement
            const int a = find(i), b = find(j);
            if (a != b) {
                parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
                --comps;
            }
        }
    return comps == 1;
}

}  // namespace

std::vector<LabeledGraph> enumerate_slim(int n, int bound) {
    if (n < 1) throw std::invalid_argument("enumerate_slim: n must be >= 1");
    if (n > bound) throw std::invalid_argument("enumerate_slim: n exceeds the resource bound");
    const int e = edge_count(n);
    std::vector<LabeledGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask)
        if (complement_connected(n, mask)) out.push_back(LabeledGraph{n, mask});
    return out;
}

MultiPoly graph_poly(const LabeledGraph& g) {
    MultiPoly p = MultiPoly::constant(g.n, Rat(1));
    for (int e = 0; e < edge_count(g.n); ++e) {
        if (!(g.edges & (1u << e))) continue;
        const auto [i, j] = edge_pair(e, g.n);
        p = p * (MultiPoly::variable(g.n, i) - MultiPoly::variable(g.n, j));
    }
    return p;
}

MultiPoly SpanBasis::reduce(const MultiPoly& w) const {
    MultiPoly r = w;
    // Descending scan; subtracting a monic row removes the current monomial
    // and only touches strictly smaller ones, so the scan never revisits.
    auto it = r.terms().begin();
    while (it != r.terms().end()) {
        const Mono m = it->first;
        auto p = pivots_.find(m);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const Rat c = it->second;
        r.sub_scaled(rows_[p->second], c);
        it = r.terms().upper_bound(m);
    }
    return r;
}

bool SpanBasis::insert(MultiPoly w) {
    MultiPoly r = reduce(w);
    if (r.is_zero()) return false;
    const Mono pivot = r.leading_mono();
    Rat lead = r.coeff(pivot);
    r *= Rat(1) / lead;
    // Back-eliminate the new pivot: only rows with larger pivots can carry it.
    for (auto& row : rows_) {
        const Rat c = row.coeff(pivot);
        if (c != 0) row.sub_scaled(r, c);
    }
    pivots_[pivot] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
}

std::optional<std::vector<Rat>> SpanBasis::express(const MultiPoly& w) const {
    // Reduced echelon form: the coordinate on row j is the coefficient of
    // pivot_j in w. The subtraction pass verifies consistency.
    std::vector<Rat> coords(rows_.size(), Rat(0));
    MultiPoly r = w;
    auto it = r.terms().begin();
    while (it != r.terms().end()) {
        const Mono m = it->first;
        auto p = pivots_.find(m);
        if (p == pivots_.end()) return std::nullopt;
        const Rat c = it->second;
        coords[p->second] = c;
        r.sub_scaled(rows_[p->second], c);
        it = r.terms().upper_bound(m);
    }
    return coords;
}

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("EPF_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

}  // namespace

SpanBasis build_Vn(int n, bool progress, int workers) {
    const auto graphs = enumerate_slim(n);
    const int nthreads = resolve_workers(workers);
    SpanBasis basis(n);
    size_t done = 0;
    // Expansion is independent per graph and parallelizes; insertion is a
    // serial pass in graph order, so the basis is worker-count independent.
    constexpr size_t kBatch = 1024;
    std::vector<MultiPoly> batch;
    for (size_t start = 0; start < graphs.size(); start += kBatch) {
        const size_t stop = std::min(start + kBatch, graphs.size());
        batch.assign(stop - start, MultiPoly());
        if (nthreads <= 1 || stop - start < 64) {
            for (size_t i = start; i < stop; ++i) batch[i - start] = graph_poly(graphs[i]);
        } else {
            std::vector<std::thread> pool;
            std::atomic<size_t> next{start};
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back([&] {
                    for (size_t i = next.fetch_add(1); i < stop; i = next.fetch_add(1))
                        batch[i - start] = graph_poly(graphs[i]);
                });
            for (auto& th : pool) th.join();
        }
        for (auto& poly : batch) {
            basis.insert(std::move(poly));
            if (progress && (++done % 4096 == 0))
                std::fprintf(stderr, "reduced %zu/%zu graphs, rank %zu\n", done, graphs.size(),
                             basis.dimension());
        }
    }
    return basis;
}

Int sigma_character(const SpanBasis& basis, const Partition& lambda) {
    if (lambda.n() != basis.nvars())
        throw std::invalid_argument("sigma_character: lambda must be a partition of n");
    const Perm pi = Perm::cycle_type_rep(lambda);
    Rat trace(0);
    for (size_t j = 0; j < basis.dimension(); ++j) {
        const MultiPoly image = basis.rows()[j].relabel(pi);
        const auto coords = basis.express(image);
        if (!coords)
            throw std::logic_error("sigma_character: relabeled row left the span");
        trace += (*coords)[j];
    }
    return to_int(trace);
}

ConjectureReport verify_conjecture(int n, bool progress) {
    return verify_conjecture(build_Vn(n, progress));
}

ConjectureReport verify_conjecture(const SpanBasis& basis) {
    const int n = basis.nvars();
    ConjectureReport rep;
    rep.n = n;
    rep.dimension = Int(static_cast<unsigned long>(basis.dimension()));
    rep.expected_dimension = rat_pow(Int(n), n - 2).get_num();
    rep.pass = rep.dimension == rep.expected_dimension;
    for (const auto& lambda : partitions_of(n)) {
        ConjectureRow row{lambda, sigma_character(basis, lambda), chi_c1(n, lambda)};
        rep.pass = rep.pass && row.sigma == row.chi;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

struct TableEntry {
    std::string word;
    MultiPoly poly;
};

// Tabulated orbit-representative polynomials. Variables are 1-based in
// the display; MultiPoly::variable takes 0-based indices.
std::vector<TableEntry> table_entries(int n) {
    auto x = [n](int i) { return MultiPoly::variable(n, i - 1); };
    auto k = [n](long v) { return MultiPoly::constant(n, Rat(v)); };
    switch (n) {
        case 3:
            return {{"001", k(1) - k(2) * x(3) + x(1) + x(2)}};
        case 4:
            return {{"0003", k(1) - k(3) * x(4) + x(1) + x(2) + x(3)},
                    {"0012", (x(4) - x(1)) * (x(4) - x(2)) * (k(1) - k(2) * x(3) + x(1) + x(2))}};
        case 5:
            return {
                {"00001", k(1) - k(4) * x(5) + x(1) + x(2) + x(3) + x(4)},
                {"00033",
                 (k(-3) * x(4) + x(1) + x(2) + x(3)) * (k(-3) * x(5) + x(1) + x(2) + x(3))},
                {"01113", (x(1) - x(2)) * (x(1) - x(3)) * (x(1) - x(4))},
                {"00114", (x(5) - x(3)) * (x(5) - x(4)) * (k(-2) * x(3) + x(1) + x(2)) *
                              (k(-2) * x(4) + x(1) + x(2))},
                {"00123", (x(5) - x(1)) * (x(5) - x(2)) * (x(5) - x(3)) * (x(4) - x(1)) *
                              (x(4) - x(2)) * (k(1) - k(2) * x(3) + x(1) + x(2))},
            };
        default:
            throw std::invalid_argument("verify_table: table rows exist for n in {3,4,5}");
    }
}

ExtendedPF word_to_epf(const std::string& word, int n, int c) {
    std::vector<int> coords;
    for (char ch : word) coords.push_back(ch - '0');
    return ExtendedPF{coords, n, ((c % n) + n) % n};
}

}  // namespace

TableReport verify_table(int n) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("verify_table: table rows exist for n in {3,4,5}");
    TableReport rep;
    rep.n = n;
    rep.pass = true;
    const SpanBasis basis = build_Vn(n);
    // The table words sum to C(n-1,2) mod n: the area-statistic class, which
    // is isomorphic to the c=1 module.
    const int c = (n - 1) * (n - 2) / 2 % n;
    for (const auto& entry : table_entries(n)) {
        bool ok = basis.contains(entry.poly);
        {
            const auto epf = word_to_epf(entry.word, n, c);
            int sum = 0;
            for (int v : epf.coords) sum = (sum + v) % n;
            ok = ok && sum == epf.target &&
                 is_parking(std::span<const int>(epf.coords.data(), epf.coords.size() - 1));
        }
        rep.pass = rep.pass && ok;
        rep.checks.push_back({entry.word + " -> " + (ok ? "in" : "NOT in") + " V_" + std::to_string(n), ok});
    }

    if (n == 3) {
        // The displayed map 100 -> 1-2x_1+x_2+x_3 etc. must commute with the
        // full S_3 action.
        auto x = [n](int i) { return MultiPoly::variable(n, i - 1); };
        auto k = [n](long v) { return MultiPoly::constant(n, Rat(v)); };
        std::map<std::vector<int>, MultiPoly> phi;
        phi[{1, 0, 0}] = k(1) - k(2) * x(1) + x(2) + x(3);
        phi[{0, 1, 0}] = k(1) - k(2) * x(2) + x(1) + x(3);
        phi[{0, 0, 1}] = k(1) - k(2) * x(3) + x(1) + x(2);
        bool commutes = true;
        const auto perms = {Perm::from_one_line("123"), Perm::from_one_line("132"),
                            Perm::from_one_line("213"), Perm::from_one_line("231"),
                            Perm::from_one_line("312"), Perm::from_one_line("321")};
        for (const auto& pi : perms)
            for (const auto& [coords, poly] : phi) {
                const ExtendedPF image = apply(pi, ExtendedPF{coords, 3, 1});
                if (!(phi.at(image.coords) == poly.relabel(pi))) commutes = false;
            }
        rep.pass = rep.pass && commutes;
        rep.checks.push_back({"displayed n=3 map commutes with all of S_3", commutes});
    }
    return rep;
}

}  // namespace epf
