#include "epf/orbits.hh"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "epf/numtheory.hh"

namespace epf {

Rat f_weight(long n, long d) {
    if (n < 1 || d < 1 || n % d != 0) throw std::invalid_argument("f_weight: need d | n");
    if (d % 2 == 0 && (n / d) % 2 == 1) return Rat(1, 2);
    return Rat(1);
}

Int F_of(long m, long e) {
    if (m < 1 || e < 1) throw std::invalid_argument("F_of: need m, e >= 1");
    const long n = m * e;
    Rat sum(0);
    for (long d : divisors(m)) sum += Rat(moebius(m / d)) * f_weight(n, d) * Rat(Int(d) * d);

    Int closed = jordan_totient2(m);
    if (e % 2 == 1 && m % 2 == 0) {
        if (closed % 3 != 0) throw integrality_error("F_of: J_2(m) not divisible by 3");
        closed /= 3;
    }
    if (Rat(closed) != sum)
        throw std::logic_error("F_of: closed form disagrees with the defining Moebius sum");
    return closed;
}

Rat a_n(long n) {
    if (n < 1) throw std::invalid_argument("a_n: n must be >= 1");
    Rat sum(0);
    for (long d : divisors(n))
        sum += Rat(moebius(n / d)) * Rat(binomial(2 * static_cast<unsigned long>(d) - 1,
                                                  static_cast<unsigned long>(d)));
    return sum / Rat(Int(n) * n);
}

Int orbits_cn(long n) {
    if (n < 1) throw std::invalid_argument("orbits_cn: n must be >= 1");
    Rat sum(0);
    for (long e : divisors(n))
        sum += Rat(binomial(2 * static_cast<unsigned long>(e) - 1, static_cast<unsigned long>(e))) *
               Rat(F_of(n / e, e));
    return to_int(sum / Rat(Int(n) * n));
}

Int orbits_c1(long n) {
    if (n < 1) throw std::invalid_argument("orbits_c1: n must be >= 1");
    Rat sum(0);
    for (long d : divisors(n)) {
        const int sign = (n + d) % 2 == 0 ? 1 : -1;
        sum += Rat(sign * moebius(n / d)) *
               Rat(binomial(2 * static_cast<unsigned long>(d) - 1, static_cast<unsigned long>(d)));
    }
    const Int direct = to_int(sum / Rat(Int(n) * n));

    // Independent route: the case split obtained before the signs are folded
    // into a single sum.
    Rat split = a_n(n);
    if (n % 4 == 2) split += a_n(n / 2) / 2;
    if (Rat(direct) != split)
        throw std::logic_error("orbits_c1: signed sum disagrees with the case split");
    return direct;
}

Int orbits_rational_c1(long a, long b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("orbits_rational_c1: need coprime a,b >= 1");
    if ((a + 1) % b != 0) throw std::invalid_argument("orbits_rational_c1: need b | (a+1)");
    const long k = (a + 1) / b;
    Rat sum(0);
    for (long d : divisors(b)) {
        const int sign = (k * (b + d)) % 2 == 0 ? 1 : -1;
        sum += Rat(sign * moebius(b / d)) *
               Rat(binomial(static_cast<unsigned long>((k + 1) * d - 1),
                            static_cast<unsigned long>(k * d)));
    }
    return to_int(sum / Rat(Int(b) * b));
}

bool subset_sum_check(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("subset_sum_check: need 1 <= n <= 12");
    const int universe = 2 * n - 1;
    Int matching = 0;
    // Lexicographic n-subsets of [2n-1].
    std::vector<int> s(static_cast<size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    while (true) {
        long sum = 0;
        for (int v : s) sum += v;
        if (sum % n == 1 % n) ++matching;
        int i = n - 1;
        while (i >= 0 && s[static_cast<size_t>(i)] == universe - (n - 1 - i)) --i;
        if (i < 0) break;
        ++s[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
    }
    return matching == Int(n) * orbits_c1(n);
}

}  // namespace epf
