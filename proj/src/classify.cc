#include "epf/classify.hh"

#include <numeric>
#include <stdexcept>

#include "epf/character.hh"
#include "epf/numtheory.hh"

namespace epf {

std::vector<long> d_set(long n) {
    if (n < 1) throw std::invalid_argument("d_set: n must be >= 1");
    std::vector<long> out;
    for (long k : divisors(n))
        if ((n / k) % 2 == n % 2) out.push_back(k);
    return out;
}

std::vector<long> c_set(long n, long k) {
    const auto dn = d_set(n);
    if (std::find(dn.begin(), dn.end(), k) == dn.end())
        throw std::invalid_argument("c_set: k not in D_n");
    const bool two_mod_4 = (n / k) % 4 == 2;
    std::vector<long> out;
    for (long m = 1; m <= n; ++m) {
        const long g = std::gcd(n, m);
        if (g == k || (two_mod_4 && g == 2 * k)) out.push_back(m);
    }
    return out;
}

long class_count(long n) {
    const long count = static_cast<long>(d_set(n).size());
    long check = 0;
    for (long d : divisors(n))
        if (d % 4 != 2) ++check;
    if (check != count)
        throw std::logic_error("class_count: |D_n| disagrees with the mod-4 divisor count");
    return count;
}

Classification classify(long n) {
    Classification cl;
    cl.n = n;
    cl.count = class_count(n);
    for (long c = 1; c <= n; ++c) {
        long g = std::gcd(n, c);
        // n odd, or n and n/g both even: k = g; else (n even, n/g odd) the
        // class index halves.
        long k = (n % 2 == 0 && (n / g) % 2 == 1) ? g / 2 : g;
        cl.class_index[c] = k;
    }
    return cl;
}

int area_class(int n) {
    if (n < 2) throw std::invalid_argument("area_class: n must be >= 2");
    const long binom = static_cast<long>(n - 1) * (n - 2) / 2;
    const int r = static_cast<int>(binom % n);
    return r == 0 ? n : r;
}

bool verify_area_iso(int n) {
    const int c = area_class(n);
    for (const auto& lambda : partitions_of(n))
        if (chi(n, c, lambda) != chi(n, 1, lambda)) return false;
    return true;
}

}  // namespace epf
