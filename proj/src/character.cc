#include "epf/character.hh"

#include <numeric>
#include <stdexcept>

namespace epf {

namespace {

// d^2 n^{ell-2}, exact; the branch conditions guarantee the final value is
// integral (for ell = 1 necessarily d = n).
Rat base_value(int n, int d, int ell) {
    return Rat(Int(d) * d) * rat_pow(Int(n), ell - 2);
}

void check_lambda(int n, const Partition& lambda, const char* who) {
    if (lambda.n() != n || lambda.ell() == 0)
        throw std::invalid_argument(std::string(who) + ": lambda must be a partition of n >= 1");
}

}  // namespace

Int chi(int n, int c, const Partition& lambda) {
    check_lambda(n, lambda, "chi");
    if (c < 1 || c > n) throw std::invalid_argument("chi: need 1 <= c <= n");
    const int d = gcd_of_partition(lambda);
    const int ell = lambda.ell();
    if (d % 2 == 0) {
        if ((n / d) % 2 == 1) {
            if ((2 * c) % d == 0) return to_int(base_value(n, d, ell) / 2);
            return 0;
        }
        if (c % d == 0) return to_int(base_value(n, d, ell));
        return 0;
    }
    if (c % d == 0) return to_int(base_value(n, d, ell));
    return 0;
}

Int chi_c1(int n, const Partition& lambda) {
    check_lambda(n, lambda, "chi_c1");
    const int d = gcd_of_partition(lambda);
    const int ell = lambda.ell();
    if (d == 1) return to_int(rat_pow(Int(n), ell - 2));
    if (d == 2 && n % 4 == 2) return to_int(2 * rat_pow(Int(n), ell - 2));
    return 0;
}

Int chi_cn(int n, const Partition& lambda) {
    check_lambda(n, lambda, "chi_cn");
    const int d = gcd_of_partition(lambda);
    Rat v = base_value(n, d, lambda.ell());
    if (d % 2 == 0 && (n / d) % 2 == 1) v /= 2;
    return to_int(v);
}

Int chi_rational(int a, int b, const Partition& lambda) {
    if (std::gcd(a, b) != 1) throw std::invalid_argument("chi_rational: need GCD(a,b) = 1");
    if ((a + 1) % b != 0) throw std::invalid_argument("chi_rational: need b | (a+1)");
    if (lambda.n() != a + 1 || lambda.ell() == 0)
        throw std::invalid_argument("chi_rational: lambda must be a partition of a+1");
    const int k = (a + 1) / b;
    const int d = std::gcd(gcd_of_partition(lambda), b);
    const int ell = lambda.ell();
    if (d == 1) return to_int(rat_pow(Int(b), ell - 2));
    if (d == 2 && b % 4 == 2 && k % 2 == 1) return to_int(2 * rat_pow(Int(b), ell - 2));
    return 0;
}

CharacterVector character_vector(int n, int c) {
    CharacterVector cv;
    cv.n = n;
    for (const auto& lambda : partitions_of(n)) cv.values.emplace(lambda, chi(n, c, lambda));
    return cv;
}

}  // namespace epf
