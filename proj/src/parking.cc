#include "epf/parking.hh"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "epf/numtheory.hh"

namespace epf {

bool is_parking(std::span<const int> x) {
    std::vector<int> z(x.begin(), x.end());
    std::sort(z.begin(), z.end());
    for (size_t i = 0; i < z.size(); ++i)
        if (z[i] < 0 || z[i] > static_cast<int>(i)) return false;
    return true;
}

bool is_rational_parking(std::span<const int> x, int a, int b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("is_rational_parking: need coprime a,b >= 1");
    if (x.size() != static_cast<size_t>(a))
        throw std::invalid_argument("is_rational_parking: length must equal a");
    std::vector<int> z(x.begin(), x.end());
    std::sort(z.begin(), z.end());
    for (size_t i = 0; i < z.size(); ++i) {
        // z_i <= (i-1)b/a with 1-based i, kept exact.
        if (z[i] < 0 || static_cast<long>(a) * z[i] > static_cast<long>(i) * b)
            return false;
    }
    return true;
}

namespace {

// Odometer over {0,...,hi-1}^len in lexicographic order, filtered.
template <typename Pred>
std::vector<std::vector<int>> enumerate_filtered(int len, int hi, Pred keep) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(static_cast<size_t>(len), 0);
    while (true) {
        if (keep(x)) out.push_back(x);
        int i = len - 1;
        while (i >= 0 && x[static_cast<size_t>(i)] == hi - 1) x[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++x[static_cast<size_t>(i)];
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_pf(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_pf: n must be >= 1");
    return enumerate_filtered(n, n, [](const std::vector<int>& x) { return is_parking(x); });
}

std::vector<std::vector<int>> enumerate_rational(int a, int b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("enumerate_rational: need coprime a,b >= 1");
    return enumerate_filtered(
        a, b, [a, b](const std::vector<int>& x) { return is_rational_parking(x, a, b); });
}

std::vector<int> pollak_forward(std::span<const int> x) {
    if (!is_parking(x)) throw std::invalid_argument("pollak_forward: not a parking function");
    const int m = static_cast<int>(x.size()) + 1;
    std::vector<int> alpha;
    for (size_t i = 1; i < x.size(); ++i)
        alpha.push_back(((x[i] - x[i - 1]) % m + m) % m);
    return alpha;
}

std::vector<int> pollak_inverse(std::span<const int> alpha) {
    const int n = static_cast<int>(alpha.size()) + 1;
    const int m = n + 1;
    std::vector<int> x(static_cast<size_t>(n));
    for (int y = 0; y < m; ++y) {
        x[0] = y;
        for (size_t i = 1; i < x.size(); ++i) x[i] = (x[i - 1] + alpha[i - 1]) % m;
        if (is_parking(x)) return x;
    }
    throw std::logic_error("pollak_inverse: no shift parks; Pollak bijection violated");
}

Int catalan(int n) {
    if (n < 1) throw std::invalid_argument("catalan: n must be >= 1");
    return binomial(2 * n, n) / (n + 1);
}

Int rational_catalan(int a, int b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("rational_catalan: need coprime a,b >= 1");
    return binomial(a + b, b) / (a + b);
}

Int classical_character(int n, const Partition& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("classical_character: lambda must be a partition of n");
    return int_pow(Int(n + 1), static_cast<unsigned long>(lambda.ell() - 1));
}

long area(std::span<const int> x) {
    if (!is_parking(x)) throw std::invalid_argument("area: not a parking function");
    const long n = static_cast<long>(x.size());
    long s = 0;
    for (int xi : x) s += xi;
    return n * (n - 1) / 2 - s;
}

}  // namespace epf
