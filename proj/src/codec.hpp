#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace arclab {

// Coder state [low, high] with 0 <= low < high <= 1. After a message with a
// ones and b zeros at parameter p, high - low == p^a * q^b exactly.
struct Interval {
    Rational low;
    Rational high;

    Interval() : low(0), high(1) {}
    Interval(Rational lo, Rational hi);

    Rational length() const { return high - low; }
    Rational midpoint() const { return (low + high) / Rational(2); }
};

struct EncodeResult {
    Interval final_interval;
    std::vector<Interval> trace;  // one interval per processed bit, nested
};

// Throws std::domain_error unless 0 < p < 1.
void require_probability(const Rational& p);

// Throws std::invalid_argument if bits contains anything but '0'/'1'.
void require_bits(std::string_view bits);

// One coder step: split at s = low + q*(high-low); bit 0 keeps [low, s],
// bit 1 keeps [s, high].
Interval refine(const Interval& iv, int bit, const Rational& p);

EncodeResult encode(std::string_view message, const Rational& p);

// Replays the split rule n times against `value` in [0,1); a value equal to
// the split point takes the upper (1) branch. Any value in [low, high) of
// encode(M, p) decodes back to M.
std::string decode(const Rational& value, std::size_t n, const Rational& p);

// Prefix of high's expansion at the first bit position where the expansions
// of low and high disagree. The upper endpoint 1 is treated as 0.111...;
// the result's value always lies in [low, high].
std::string first_disagreement_codeword(const Interval& iv);

// Shortest prefix w of the midpoint's expansion with dyadic_value(w) inside
// [low, high].
std::string midpoint_codeword(const Interval& iv);

// Shortest w (ties to the smallest dyadic value) whose dyadic interval
// [value(w), value(w) + 2^-|w|] fits inside [low, high]: the uniquely
// decodable stream codeword.
std::string subinterval_codeword(const Interval& iv);

}  // namespace arclab
