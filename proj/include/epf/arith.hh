// Exact arithmetic carriers. Every count and coefficient in this library is
// an arbitrary-precision integer or a rational in lowest terms; no floating
// point anywhere.
#ifndef EPF_ARITH_HH
#define EPF_ARITH_HH

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace epf {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a value that must be an integer (orbit count, character value)
// comes out fractional. Reaching this means a formula was applied outside
// its stated branch conditions.
struct integrality_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e as an exact rational; e may be negative.
inline Rat rat_pow(const Int& base, long e) {
    if (e >= 0) return Rat(int_pow(base, static_cast<unsigned long>(e)));
    if (base == 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
    Rat r(1, int_pow(base, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q))
        throw integrality_error("expected integer, got " + q.get_str());
    return q.get_num();
}

// Decimal string; rationals render as "num/den", integers without the "/1".
inline std::string rat_str(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

}  // namespace epf

#endif
