#include "matrix.hpp"

#include <stdexcept>

namespace arclab {

RationalMatrix RationalMatrix::identity(std::size_t order) {
    RationalMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.at(i, i) = Rational(1);
    return m;
}

namespace {

void require_same_order(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("matrix: order mismatch");
}

}  // namespace

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    require_same_order(*this, o);
    RationalMatrix r(order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    require_same_order(*this, o);
    RationalMatrix r(order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    require_same_order(*this, o);
    RationalMatrix r(order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t k = 0; k < order_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < order_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
    if (v.size() != order_) throw std::invalid_argument("matrix: vector length mismatch");
    std::vector<Rational> r(order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

RationalMatrix RationalMatrix::pow(unsigned long n) const {
    RationalMatrix result = identity(order_);
    RationalMatrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

bool RationalMatrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = i + 1; j < order_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool RationalMatrix::is_upper_triangular() const {
    for (std::size_t i = 1; i < order_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

}  // namespace arclab
