#pragma once

#include <gmpxx.h>

#include <string>

#include "digitsum/error.hpp"

namespace digitsum {

// Arbitrary-precision values. Natural is used non-negative throughout;
// functions taking one check the sign at the boundary.
using Natural = mpz_class;
using Rational = mpq_class;

inline Natural pow_nat(const Natural& base, unsigned long exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Natural pow_nat(unsigned long base, unsigned long exp) {
    Natural r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline void require_nonneg(const Natural& n, const char* what) {
    if (sgn(n) < 0) fail(errc::precondition, std::string(what) + " must be non-negative");
}

inline bool fits_ulong(const Natural& n) { return n.fits_ulong_p(); }

inline unsigned long to_ulong_checked(const Natural& n, const char* what) {
    if (sgn(n) < 0 || !n.fits_ulong_p())
        fail(errc::range_error, std::string(what) + " out of machine range: " + n.get_str());
    return n.get_ui();
}

}  // namespace digitsum
