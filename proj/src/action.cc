#include "epf/action.hh"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "epf/parking.hh"

namespace epf {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Perm: images must be a bijection of [n]");
        seen[static_cast<size_t>(v)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::from_one_line(const std::string& s) {
    std::vector<int> img;
    if (s.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            img.push_back(std::stoi(s.substr(pos, next - pos)) - 1);
            pos = next + 1;
        }
    } else {
        for (char ch : s) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("Perm: digits 1-9 or comma-separated values");
            img.push_back(ch - '1');
        }
    }
    return Perm(std::move(img));
}

Perm Perm::cycle_type_rep(const Partition& lambda) {
    std::vector<int> img(static_cast<size_t>(lambda.n()));
    int start = 0;
    for (int len : lambda.parts()) {
        for (int i = 0; i < len; ++i)
            img[static_cast<size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& s, const Perm& p) {
    if (s.size() != p.size()) throw std::invalid_argument("Perm::compose: size mismatch");
    std::vector<int> img(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) img[static_cast<size_t>(i)] = p(s(i));
    return Perm(std::move(img));
}

Partition Perm::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(img_[j]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

namespace {

int normalize_target(int c, int m) { return ((c % m) + m) % m; }

ExtendedPF extend(std::vector<int> pf, int modulus, int c) {
    int sum = 0;
    for (int v : pf) sum = (sum + v) % modulus;
    pf.push_back(normalize_target(c - sum, modulus));
    return ExtendedPF{std::move(pf), modulus, normalize_target(c, modulus)};
}

// Shared core: permute, then scan shifts until the first len-1 coordinates
// form an (a,b)-parking function; the generalized Pollak theorem guarantees
// exactly one shift works. Classical PF_{n-1} is the (n-1, n) case.
ExtendedPF apply_impl(const Perm& pi, const ExtendedPF& x, int a, int b) {
    const int len = static_cast<int>(x.coords.size());
    if (pi.size() != len) throw std::invalid_argument("apply: permutation size mismatch");
    std::vector<int> permuted(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        permuted[static_cast<size_t>(i)] = x.coords[static_cast<size_t>(pi(i))];
    std::vector<int> shifted(static_cast<size_t>(len));
    for (int y = 0; y < b; ++y) {
        for (int i = 0; i < len; ++i)
            shifted[static_cast<size_t>(i)] = (permuted[static_cast<size_t>(i)] + y) % b;
        if (is_rational_parking(std::span<const int>(shifted.data(), static_cast<size_t>(a)), a, b))
            return ExtendedPF{shifted, x.modulus, x.target};
    }
    throw std::logic_error("apply: no shift parks; Pollak bijection violated");
}

}  // namespace

std::vector<ExtendedPF> build_epf_set(int n, int c) {
    if (n < 1) throw std::invalid_argument("build_epf_set: n must be >= 1");
    if (c < 1 || c > n) throw std::invalid_argument("build_epf_set: need 1 <= c <= n");
    std::vector<ExtendedPF> out;
    if (n == 1) {
        out.push_back(ExtendedPF{{0}, 1, 0});
        return out;
    }
    for (auto& pf : enumerate_pf(n - 1)) out.push_back(extend(std::move(pf), n, c));
    return out;
}

std::vector<ExtendedPF> build_epf_set_rational(int a, int b, int c) {
    if (c < 1 || c > b) throw std::invalid_argument("build_epf_set_rational: need 1 <= c <= b");
    std::vector<ExtendedPF> out;
    for (auto& pf : enumerate_rational(a, b)) out.push_back(extend(std::move(pf), b, c));
    return out;
}

ExtendedPF apply(const Perm& pi, const ExtendedPF& x) {
    const int n = static_cast<int>(x.coords.size());
    if (x.modulus != n) throw std::invalid_argument("apply: classical element must have modulus n");
    if (n == 1) {
        if (pi.size() != 1) throw std::invalid_argument("apply: permutation size mismatch");
        return x;
    }
    return apply_impl(pi, x, n - 1, n);
}

ExtendedPF apply_rational(const Perm& pi, const ExtendedPF& x, int a, int b) {
    if (std::gcd(a, b) != 1) throw std::invalid_argument("apply_rational: need GCD(a,b) = 1");
    if ((a + 1) % b != 0)
        throw std::invalid_argument("apply_rational: need b | (a+1)");
    if (x.modulus != b || static_cast<int>(x.coords.size()) != a + 1)
        throw std::invalid_argument("apply_rational: element shape mismatch");
    return apply_impl(pi, x, a, b);
}

namespace {

Int count_fixed(const std::vector<ExtendedPF>& set, const Perm& pi, int a, int b) {
    Int count = 0;
    for (const auto& x : set)
        if (apply_impl(pi, x, a, b) == x) ++count;
    return count;
}

Int burnside(const std::vector<ExtendedPF>& set, int points, int a, int b) {
    // Orbit count = sum over cycle types of #fix / z_lambda.
    Rat total = 0;
    for (const auto& lambda : partitions_of(points)) {
        Rat term(count_fixed(set, Perm::cycle_type_rep(lambda), a, b));
        term /= Rat(z_of(lambda));
        total += term;
    }
    return to_int(total);
}

}  // namespace

Int brute_character(int n, int c, const Partition& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("brute_character: lambda must be a partition of n");
    if (n == 1) return 1;
    return count_fixed(build_epf_set(n, c), Perm::cycle_type_rep(lambda), n - 1, n);
}

Int brute_character_rational(int a, int b, int c, const Partition& lambda) {
    if (lambda.n() != a + 1)
        throw std::invalid_argument("brute_character_rational: lambda must be a partition of a+1");
    if ((a + 1) % b != 0)
        throw std::invalid_argument("brute_character_rational: need b | (a+1)");
    return count_fixed(build_epf_set_rational(a, b, c), Perm::cycle_type_rep(lambda), a, b);
}

Int burnside_orbit_count(int n, int c) {
    if (n == 1) return 1;
    return burnside(build_epf_set(n, c), n, n - 1, n);
}

Int burnside_orbit_count_rational(int a, int b, int c) {
    if ((a + 1) % b != 0)
        throw std::invalid_argument("burnside_orbit_count_rational: need b | (a+1)");
    return burnside(build_epf_set_rational(a, b, c), a + 1, a, b);
}

std::vector<std::vector<ExtendedPF>> orbit_decomposition(int n, int c) {
    auto set = build_epf_set(n, c);
    std::map<ExtendedPF, size_t> index;
    for (size_t i = 0; i < set.size(); ++i) index[set[i]] = i;

    std::vector<size_t> parent(set.size());
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };

    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) {
        auto img = Perm::identity(n).images();
        std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(i + 1)]);
        gens.push_back(Perm(std::move(img)));
    }
    if (n > 1) gens.push_back(Perm::cycle_type_rep(Partition({n})));

    for (size_t i = 0; i < set.size(); ++i) {
        for (const auto& g : gens) {
            size_t j = index.at(apply(g, set[i]));
            size_t ri = find(i), rj = find(j);
            if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
        }
    }

    std::map<size_t, std::vector<ExtendedPF>> buckets;
    for (size_t i = 0; i < set.size(); ++i) buckets[find(i)].push_back(set[i]);
    std::vector<std::vector<ExtendedPF>> orbits;
    for (auto& [root, elems] : buckets) {
        std::sort(elems.begin(), elems.end());
        orbits.push_back(std::move(elems));
    }
    return orbits;
}

}  // namespace epf
