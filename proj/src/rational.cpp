#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace arclab {

namespace {

void require_nonzero_den(const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("rational: division by zero");
}

}  // namespace

Rational::Rational(long n, long d) {
    require_nonzero_den(mpz_class(d));
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) {
    require_nonzero_den(d);
    v_ = mpq_class(std::move(n));
    v_ /= mpq_class(std::move(d));  // mpq division canonicalizes and fixes the sign
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    // strict grammar: '-'? digits ('/' digits)?
    auto bad = [&] {
        throw std::invalid_argument("rational: malformed value '" + std::string(text) +
                                    "' (expected \"a/b\" or an integer)");
    };
    if (text.empty()) bad();
    std::size_t i = 0;
    if (text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) bad();
    mpz_class num(std::string(text.substr(0, i)), 10);
    mpz_class den(1);
    if (i < text.size()) {
        if (text[i] != '/') bad();
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) bad();
        den = mpz_class(std::string(text.substr(den_begin)), 10);
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), num().get_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), den().get_mpz_t(), e);
    return Rational(std::move(r));  // powers of a canonical fraction stay canonical
}

double Rational::to_double() const { return v_.get_d(); }

Rational pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) return Rational(1) / Rational(p);
    return Rational(p);
}

mpz_class floor_shift(const Rational& r, std::size_t k) {
    mpz_class shifted = r.num() << k;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), r.den().get_mpz_t());
    return q;
}

mpz_class ceil_shift(const Rational& r, std::size_t k) {
    mpz_class shifted = r.num() << k;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), r.den().get_mpz_t());
    return q;
}

std::string binary_expansion(const Rational& r, std::size_t k) {
    if (r.sign() < 0 || r >= Rational(1))
        throw std::domain_error("binary_expansion: value must lie in [0,1)");
    if (k == 0) throw std::domain_error("binary_expansion: bit count must be positive");
    // The k-bit truncation floor(r * 2^k), written MSB first. Flooring yields
    // the terminating expansion for dyadic r automatically.
    mpz_class t = floor_shift(r, k);
    std::string bits(k, '0');
    for (std::size_t pos = k; pos-- > 0 && sgn(t) != 0;) {
        if (mpz_odd_p(t.get_mpz_t())) bits[pos] = '1';
        t >>= 1;
    }
    return bits;
}

Rational dyadic_value(std::string_view bits) {
    mpz_class acc(0);
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("dyadic_value: bit strings may contain only '0' and '1'");
        acc <<= 1;
        if (c == '1') acc += 1;
    }
    mpz_class den(1);
    den <<= bits.size();
    return Rational(std::move(acc), std::move(den));
}

}  // namespace arclab
