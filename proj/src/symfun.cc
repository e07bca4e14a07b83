#include "epf/symfun.hh"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "epf/orbits.hh"
#include "epf/parking.hh"

namespace epf {

namespace {

// Murnaghan-Nakayama via beta-sets: removing a border strip of size k from
// mu is removing k from one beta-number so that the result is again a
// beta-set; the crossing count gives the sign.
long long mn_recurse(const std::vector<int>& mu, const std::vector<int>& lam, size_t idx) {
    if (idx == lam.size()) return mu.empty() ? 1 : 0;
    const int k = lam[idx];
    const int rows = static_cast<int>(mu.size());
    std::vector<int> beta(static_cast<size_t>(rows));
    for (int j = 0; j < rows; ++j) beta[static_cast<size_t>(j)] = mu[static_cast<size_t>(j)] + (rows - 1 - j);

    long long total = 0;
    for (int j = 0; j < rows; ++j) {
        const int nb = beta[static_cast<size_t>(j)] - k;
        if (nb < 0) continue;
        bool clash = false;
        int crossings = 0;
        for (int i = 0; i < rows; ++i) {
            if (i == j) continue;
            const int bi = beta[static_cast<size_t>(i)];
            if (bi == nb) clash = true;
            if (bi > nb && bi < beta[static_cast<size_t>(j)]) ++crossings;
        }
        if (clash) continue;

        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(j)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nmu;
        for (int i = 0; i < rows; ++i) {
            int part = nbeta[static_cast<size_t>(i)] - (rows - 1 - i);
            if (part > 0) nmu.push_back(part);
        }
        const long long sub = mn_recurse(nmu, lam, idx + 1);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    return total;
}

void require_basis(const SymFun& f, Basis b, const char* who) {
    if (f.basis != b) throw std::invalid_argument(std::string(who) + ": wrong input basis");
}

// p-expansions of h_mu for all mu |- n, built multiplicatively from
// h_k = sum_{nu |- k} p_nu / z_nu.
std::map<Partition, std::map<Partition, Rat>> h_to_p_expansions(int n) {
    std::vector<std::map<Partition, Rat>> hk(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        for (const auto& nu : partitions_of(k)) {
            Rat c(1);
            c /= Rat(z_of(nu));
            hk[static_cast<size_t>(k)][nu] = c;
        }

    auto multiply = [](const std::map<Partition, Rat>& f, const std::map<Partition, Rat>& g) {
        std::map<Partition, Rat> out;
        for (const auto& [alpha, ca] : f)
            for (const auto& [beta, cb] : g) {
                std::vector<int> parts = alpha.parts();
                parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
                std::sort(parts.rbegin(), parts.rend());
                out[Partition(parts)] += ca * cb;
            }
        return out;
    };

    std::map<Partition, std::map<Partition, Rat>> out;
    for (const auto& mu : partitions_of(n)) {
        std::map<Partition, Rat> acc = hk[0];  // the constant 1
        for (int part : mu.parts()) acc = multiply(acc, hk[static_cast<size_t>(part)]);
        out[mu] = std::move(acc);
    }
    return out;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
    table_.resize(parts_.size(), std::vector<long long>(parts_.size(), 0));
    for (size_t m = 0; m < parts_.size(); ++m)
        for (size_t l = 0; l < parts_.size(); ++l)
            table_[m][l] = mn_recurse(parts_[m].parts(), parts_[l].parts(), 0);
}

size_t CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), p);
    if (it == parts_.end() || !(*it == p))
        throw std::invalid_argument("CharacterTable: not a partition of n");
    return static_cast<size_t>(it - parts_.begin());
}

long long CharacterTable::value(const Partition& mu, const Partition& lambda) const {
    return table_[index_of(mu)][index_of(lambda)];
}

bool CharacterTable::check_orthogonality() const {
    for (size_t m = 0; m < parts_.size(); ++m)
        for (size_t v = m; v < parts_.size(); ++v) {
            Rat s(0);
            for (size_t l = 0; l < parts_.size(); ++l) {
                Rat term(Int(static_cast<long>(table_[m][l])) * Int(static_cast<long>(table_[v][l])));
                term /= Rat(z_of(parts_[l]));
                s += term;
            }
            if (s != Rat(m == v ? 1 : 0)) return false;
        }
    return true;
}

const CharacterTable& character_table(int n, int configured_bound) {
    if (n < 0 || n > configured_bound)
        throw std::invalid_argument("character_table: n exceeds configured bound");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<CharacterTable>(n);
    return *slot;
}

SymFun frobenius(const CharacterVector& chi) {
    SymFun f;
    f.degree = chi.n;
    f.basis = Basis::p;
    for (const auto& [lambda, value] : chi.values) {
        Rat c(value);
        c /= Rat(z_of(lambda));
        f.set(lambda, c);
    }
    return f;
}

SymFun to_schur(const SymFun& f) {
    require_basis(f, Basis::p, "to_schur");
    const CharacterTable& tab = character_table(f.degree);
    SymFun out;
    out.degree = f.degree;
    out.basis = Basis::s;
    for (const auto& mu : tab.parts()) {
        Rat c(0);
        for (const auto& [lambda, a] : f.coeffs)
            c += a * Rat(Int(static_cast<long>(tab.value(mu, lambda))));
        out.set(mu, c);
    }
    return out;
}

SymFun to_h(const SymFun& f) {
    require_basis(f, Basis::p, "to_h");
    const auto hp = h_to_p_expansions(f.degree);
    const auto parts = partitions_of(f.degree);

    // [p_lambda] h_mu is nonzero only when lambda refines mu, and a
    // refinement never precedes mu in reverse-lexicographic order, so the
    // system is triangular: solve by forward substitution.
    SymFun out;
    out.degree = f.degree;
    out.basis = Basis::h;
    std::map<Partition, Rat> c;
    for (const auto& lambda : parts) {
        Rat rhs = f.coeff(lambda);
        for (const auto& [mu, cmu] : c) {
            auto it = hp.at(mu).find(lambda);
            if (it != hp.at(mu).end()) rhs -= cmu * it->second;
        }
        const Rat pivot = hp.at(lambda).at(lambda);
        if (pivot == 0) throw std::logic_error("to_h: zero pivot; triangularity violated");
        c[lambda] = rhs / pivot;
    }
    for (auto& [mu, cmu] : c) out.set(mu, cmu);
    return out;
}

SymFun h_to_p(const SymFun& f) {
    require_basis(f, Basis::h, "h_to_p");
    const auto hp = h_to_p_expansions(f.degree);
    SymFun out;
    out.degree = f.degree;
    out.basis = Basis::p;
    for (const auto& [mu, cmu] : f.coeffs)
        for (const auto& [lambda, v] : hp.at(mu)) out.set(lambda, out.coeff(lambda) + cmu * v);
    return out;
}

Int multiplicity(const SymFun& f, const Partition& mu) {
    const SymFun s = f.basis == Basis::s ? f : to_schur(f);
    return to_int(s.coeff(mu));
}

bool is_h_positive(const SymFun& f) {
    const SymFun h = f.basis == Basis::h ? f : to_h(f);
    return std::all_of(h.coeffs.begin(), h.coeffs.end(),
                       [](const auto& kv) { return kv.second >= 0; });
}

bool is_schur_positive(const SymFun& f) {
    const SymFun s = f.basis == Basis::s ? f : to_schur(f);
    return std::all_of(s.coeffs.begin(), s.coeffs.end(),
                       [](const auto& kv) { return kv.second >= 0 && is_integer(kv.second); });
}

Int standard_multiplicity(int n) {
    if (n < 2) throw std::invalid_argument("standard_multiplicity: n must be >= 2");
    return catalan(n - 1) - orbits_c1(n);
}

Rat principal_specialization(const SymFun& f, int n) {
    require_basis(f, Basis::p, "principal_specialization");
    Rat s(0);
    for (const auto& [lambda, a] : f.coeffs)
        s += a * Rat(int_pow(Int(n), static_cast<unsigned long>(lambda.ell())));
    return s;
}

}  // namespace epf
