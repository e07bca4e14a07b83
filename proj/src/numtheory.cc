#include "epf/numtheory.hh"

#include <numeric>
#include <stdexcept>

namespace epf {

namespace {

// Trial division; inputs stay small (n <= a few thousand in practice).
std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

}  // namespace

int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

Int jordan_totient2(long m) {
    if (m < 1) throw std::invalid_argument("jordan_totient2: m must be >= 1");
    // J_2(m) = prod over p^e || m of p^{2e-2} (p^2 - 1).
    Int j = 1;
    for (auto [p, e] : factorize(m)) {
        Int pp(p);
        j *= int_pow(pp, 2 * static_cast<unsigned long>(e) - 2) * (pp * pp - 1);
    }
    return j;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

int v2(long n) {
    if (n < 1) throw std::invalid_argument("v2: n must be >= 1");
    int v = 0;
    while (n % 2 == 0) n /= 2, ++v;
    return v;
}

Int count_congruence_solutions(const std::vector<long>& a, long c, long m) {
    if (a.empty()) throw std::invalid_argument("count_congruence_solutions: k >= 1");
    if (m < 1) throw std::invalid_argument("count_congruence_solutions: m >= 1");
    long d = m;
    for (long ai : a) d = std::gcd(d, ai);
    if (((c % d) + d) % d != 0) return 0;
    return Int(d) * int_pow(Int(m), static_cast<unsigned long>(a.size()) - 1);
}

}  // namespace epf
