#pragma once

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace arclab {

// Dense square matrix of exact rationals, row-major. Sized for the moment
// matrices here (order rarely above a dozen), not for general linear algebra.
class RationalMatrix {
public:
    RationalMatrix() : order_(0) {}
    explicit RationalMatrix(std::size_t order) : order_(order), data_(order * order) {}

    static RationalMatrix identity(std::size_t order);

    std::size_t order() const { return order_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    bool operator==(const RationalMatrix& o) const = default;

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    // Exact power by repeated squaring; pow(0) is the identity.
    RationalMatrix pow(unsigned long n) const;

    bool is_lower_triangular() const;
    bool is_upper_triangular() const;

private:
    std::size_t order_;
    std::vector<Rational> data_;
};

}  // namespace arclab
