#include "codec.hpp"

#include <stdexcept>

namespace arclab {

Interval::Interval(Rational lo, Rational hi) : low(std::move(lo)), high(std::move(hi)) {
    if (low.sign() < 0 || !(low < high) || high > Rational(1))
        throw std::domain_error("interval: endpoints must satisfy 0 <= low < high <= 1");
}

void require_probability(const Rational& p) {
    if (!(p > Rational(0) && p < Rational(1)))
        throw std::domain_error("p must lie strictly inside (0,1)");
}

void require_bits(std::string_view bits) {
    for (char c : bits)
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit strings may contain only '0' and '1'");
}

Interval refine(const Interval& iv, int bit, const Rational& p) {
    Rational q = Rational(1) - p;
    Rational split = iv.low + q * (iv.high - iv.low);
    if (bit == 0) return Interval(iv.low, std::move(split));
    return Interval(std::move(split), iv.high);
}

EncodeResult encode(std::string_view message, const Rational& p) {
    require_probability(p);
    require_bits(message);
    EncodeResult result;
    result.trace.reserve(message.size());
    Interval iv;
    for (char c : message) {
        iv = refine(iv, c - '0', p);
        result.trace.push_back(iv);
    }
    result.final_interval = std::move(iv);
    return result;
}

std::string decode(const Rational& value, std::size_t n, const Rational& p) {
    require_probability(p);
    if (value.sign() < 0 || value >= Rational(1))
        throw std::domain_error("decode: value must lie in [0,1)");
    Rational q = Rational(1) - p;
    Interval iv;
    std::string message;
    message.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational split = iv.low + q * (iv.high - iv.low);
        if (value < split) {
            message.push_back('0');
            iv.high = std::move(split);
        } else {
            message.push_back('1');
            iv.low = std::move(split);
        }
    }
    return message;
}

namespace {

// Streams the binary digits of a rational in [0,1]; a value of exactly 1
// yields the non-terminating all-ones tail 0.111..., which is the right
// convention for comparing against an upper endpoint.
class BitStream {
public:
    explicit BitStream(const Rational& r) : num_(r.num()), den_(r.den()) {}

    int next() {
        num_ <<= 1;
        if (num_ >= den_) {
            num_ -= den_;
            return 1;
        }
        return 0;
    }

private:
    mpz_class num_;
    mpz_class den_;
};

}  // namespace

std::string first_disagreement_codeword(const Interval& iv) {
    BitStream lo(iv.low);
    BitStream hi(iv.high);
    std::string prefix;
    for (;;) {
        int a = lo.next();
        int b = hi.next();
        prefix.push_back(static_cast<char>('0' + b));
        if (a != b) return prefix;
    }
}

std::string midpoint_codeword(const Interval& iv) {
    if (iv.low.is_zero()) return "";  // the empty prefix has value 0
    Rational mid = iv.midpoint();
    BitStream bits(mid);
    // acc tracks floor(mid * 2^k); the prefix value acc/2^k never exceeds mid,
    // so only the lower endpoint constrains the search.
    mpz_class acc(0);
    mpz_class low_num_shifted = iv.low.num();
    std::string prefix;
    for (;;) {
        int b = bits.next();
        acc <<= 1;
        acc += b;
        low_num_shifted <<= 1;
        prefix.push_back(static_cast<char>('0' + b));
        if (acc * iv.low.den() >= low_num_shifted) return prefix;
    }
}

namespace {

// Smallest k >= 0 with r >= 2^-k, i.e. num << k >= den. The bit lengths pin
// the answer to within one, so at most two exact comparisons are needed.
std::size_t min_covering_exponent(const Rational& r) {
    std::size_t nb = mpz_sizeinbase(r.num().get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(r.den().get_mpz_t(), 2);
    std::size_t k = db > nb + 1 ? db - nb - 1 : 0;
    for (;; ++k) {
        mpz_class shifted = r.num() << k;
        if (shifted >= r.den()) return k;
    }
}

}  // namespace

std::string subinterval_codeword(const Interval& iv) {
    // Smallest k admitting an integer j with low <= j/2^k and (j+1)/2^k <= high,
    // i.e. ceil(low*2^k) + 1 <= floor(high*2^k). A dyadic interval of width
    // 2^-k must fit, so k starts where 2^-k <= high - low first holds.
    std::size_t k = min_covering_exponent(iv.length());
    for (;; ++k) {
        mpz_class j = ceil_shift(iv.low, k);
        mpz_class j_hi = floor_shift(iv.high, k);
        if (j + 1 <= j_hi) {
            std::string bits(k, '0');
            for (std::size_t pos = k; pos-- > 0 && sgn(j) != 0;) {
                if (mpz_odd_p(j.get_mpz_t())) bits[pos] = '1';
                j >>= 1;
            }
            return bits;
        }
    }
}

}  // namespace arclab
