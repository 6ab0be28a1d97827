#pragma once

#include <string>
#include <vector>

#include "digitsum/natural.hpp"

namespace digitsum::digits {

// Base-b expansion, little-endian: digits[i] multiplies base^i.
// Zero is the empty sequence; the highest stored digit is never zero.
struct DigitExpansion {
    unsigned long base = 10;
    std::vector<unsigned long> digits;

    std::size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
};

DigitExpansion to_base(const Natural& n, unsigned long base);
Natural from_base(const DigitExpansion& e);

// s_b(n): sum of the base-b digits.
Natural digit_sum(const Natural& n, unsigned long base);

// c_b(n): number of nonzero base-b digits.
Natural nonzero_count(const Natural& n, unsigned long base);

// Width-r block decomposition: n = sum B_i * base^(width*i), 0 <= B_i < base^width,
// least-significant block first. n = 0 gives the empty sequence.
std::vector<Natural> block_split(const Natural& n, unsigned long base, unsigned long width);

// Block-sum operator G: sum of the width-r blocks. G(n) is congruent to n
// mod base^r - 1, G(n) < n for n >= base^r and G(n) = n below that.
Natural block_fold(const Natural& n, unsigned long base, unsigned long width);

// Most-significant-first rendering: for base <= 36 a compact alphanumeric
// string, otherwise dot-separated decimal digit values. Zero renders as "0".
std::string to_string_msd(const DigitExpansion& e);

}  // namespace digitsum::digits
