#include "digitsum/digits.hpp"

#include <climits>

namespace digitsum::digits {

namespace {

void check_base(unsigned long base) {
    if (base < 2) fail(errc::invalid_base, "base must be >= 2, got " + std::to_string(base));
}

// Largest w with base^w representable in an unsigned long, so digits can be
// peeled w at a time from a single machine-word remainder.
unsigned chunk_width(unsigned long base, unsigned long& chunk_out) {
    unsigned long chunk = base;
    unsigned w = 1;
    while (chunk <= ULONG_MAX / base) {
        chunk *= base;
        ++w;
    }
    chunk_out = chunk;
    return w;
}

}  // namespace

DigitExpansion to_base(const Natural& n, unsigned long base) {
    check_base(base);
    require_nonneg(n, "value");
    DigitExpansion e;
    e.base = base;
    if (sgn(n) == 0) return e;

    unsigned long chunk = 0;
    const unsigned w = chunk_width(base, chunk);
    Natural cur = n;
    while (sgn(cur) > 0) {
        unsigned long rem = mpz_tdiv_q_ui(cur.get_mpz_t(), cur.get_mpz_t(), chunk);
        if (sgn(cur) > 0) {
            for (unsigned i = 0; i < w; ++i) {
                e.digits.push_back(rem % base);
                rem /= base;
            }
        } else {
            while (rem > 0) {
                e.digits.push_back(rem % base);
                rem /= base;
            }
        }
    }
    return e;
}

Natural from_base(const DigitExpansion& e) {
    check_base(e.base);
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        if (e.digits[i] >= e.base)
            fail(errc::malformed_expansion,
                 "digit " + std::to_string(e.digits[i]) + " at index " + std::to_string(i) +
                     " out of range for base " + std::to_string(e.base));
    }
    if (!e.digits.empty() && e.digits.back() == 0)
        fail(errc::malformed_expansion, "highest stored digit is zero");

    Natural v = 0;
    for (std::size_t i = e.digits.size(); i-- > 0;) {
        v *= e.base;
        v += e.digits[i];
    }
    return v;
}

Natural digit_sum(const Natural& n, unsigned long base) {
    const DigitExpansion e = to_base(n, base);
    Natural s = 0;
    for (unsigned long d : e.digits) s += d;
    return s;
}

Natural nonzero_count(const Natural& n, unsigned long base) {
    const DigitExpansion e = to_base(n, base);
    unsigned long c = 0;
    for (unsigned long d : e.digits)
        if (d != 0) ++c;
    return Natural(c);
}

std::vector<Natural> block_split(const Natural& n, unsigned long base, unsigned long width) {
    check_base(base);
    if (width < 1) fail(errc::invalid_width, "block width must be >= 1");
    require_nonneg(n, "value");

    const Natural blk = pow_nat(base, width);
    std::vector<Natural> out;
    Natural cur = n;
    Natural rem;
    while (sgn(cur) > 0) {
        mpz_tdiv_qr(cur.get_mpz_t(), rem.get_mpz_t(), cur.get_mpz_t(), blk.get_mpz_t());
        out.push_back(rem);
    }
    return out;
}

Natural block_fold(const Natural& n, unsigned long base, unsigned long width) {
    Natural s = 0;
    for (const Natural& b : block_split(n, base, width)) s += b;
    return s;
}

std::string to_string_msd(const DigitExpansion& e) {
    if (e.digits.empty()) return "0";
    static const char* alnum = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::string out;
    if (e.base <= 36) {
        for (std::size_t i = e.digits.size(); i-- > 0;) out.push_back(alnum[e.digits[i]]);
    } else {
        for (std::size_t i = e.digits.size(); i-- > 0;) {
            out += std::to_string(e.digits[i]);
            if (i != 0) out.push_back('.');
        }
    }
    return out;
}

}  // namespace digitsum::digits
