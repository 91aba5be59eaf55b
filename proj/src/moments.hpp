#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace arclab {

// Spectral analysis of the moment recurrence for the coder interval [X_n, Y_n]
// under Bernoulli(p) input bits. Order-m mixed moments live in a vector whose
// component r (r = 0..m) is E[X^(m-r) Y^r]; one input bit advances the vector
// by the (m+1)x(m+1) doubly stochastic matrix W_m. Everything here is exact.

// One-step moment matrix W_m; also its split W_m = U_m + L_m into the upper
// and lower triangular parts with closed-form entries
//   (L_m)_ij = C(i, i-j) p^(i-j) q^(j+1)
//   (U_m)_ij = C(m-i, j-i) p^(m+1-j) q^(j-i)
// Require m >= 1 and 0 < p < 1.
RationalMatrix build_w(unsigned m, const Rational& p);
RationalMatrix build_u(unsigned m, const Rational& p);
RationalMatrix build_l(unsigned m, const Rational& p);

// Modal matrix of U_m, (P_m)_ij = C(m-i, j-i), and its inverse
// (P_m^-1)_ij = (-1)^(i-j) C(m-i, j-i); integer, unit upper triangular.
RationalMatrix modal_matrix(unsigned m);
RationalMatrix modal_inverse(unsigned m);

struct SpectrumReport {
    std::vector<Rational> eigenvalues;    // {p^k + q^k : k = 1..m+1}, decreasing
    RationalMatrix modal;                 // P_m
    RationalMatrix modal_inverse;         // P_m^-1
    RationalMatrix triangular_conjugate;  // P_m^-1 W_m P_m, lower triangular
};

// Conjugates W_m by the modal matrix and verifies the closed forms on the way:
// P^-1 L P must equal C(i,j) p^(i-j) q^(m+1-i) entrywise and P^-1 U P must be
// diag(p^(m+1-j)). A mismatch means an implementation bug (std::logic_error).
SpectrumReport conjugate(unsigned m, const Rational& p);

// {p^k + q^k : k = 1..m+1} in decreasing order, cross-checked against the
// diagonal of the triangular conjugate.
std::vector<Rational> eigenvalues(unsigned m, const Rational& p);

// W_m^n applied to the initial vector (0,...,0,1): the exact mixed moments of
// (X_n, Y_n) of total order m.
std::vector<Rational> moment_vector(unsigned m, unsigned long n, const Rational& p);

// (E[X_n], E[Y_n]) = ((1 - (1-2pq)^n)/2, (1 + (1-2pq)^n)/2).
std::pair<Rational, Rational> mean_closed_form(unsigned long n, const Rational& p);

// E[(Y_n - X_n)^k] = (p^(k+1) + q^(k+1))^n, k >= 1.
Rational length_moment(unsigned long n, const Rational& p, unsigned k);

// 2x2 matrix [[V[X], Cov], [Cov, V[Y]]] assembled from the order-2 moment
// vector and the closed-form means; verifies on the way that
// V[X]+V[Y]-2Cov matches the length-moment route exactly.
RationalMatrix variance_covariance(unsigned long n, const Rational& p);

// The spectral projector of the eigenvalue 1: all entries 1/(m+1).
RationalMatrix principal_idempotent(unsigned m);

struct AsymptoticCheck {
    Rational deviation;                 // max_ij |(W_m^n)_ij - 1/(m+1)|
    std::optional<Rational> prev_deviation;  // same at n-1 (absent for n = 0)
    std::optional<Rational> ratio;      // deviation / prev_deviation
};

// Measures how fast W_m^n flattens to the constant matrix; the ratio between
// consecutive deviations approaches 1 - 2pq.
AsymptoticCheck asymptotic_check(unsigned m, const Rational& p, unsigned long n);

struct StochasticityReport {
    bool rows_ok = true;
    bool cols_ok = true;
    bool strictly_positive = true;
    int bad_row = -1;           // first row whose sum is not 1
    int bad_col = -1;           // first column whose sum is not 1
    int nonpositive_row = -1;   // first entry <= 0, if any
    int nonpositive_col = -1;

    bool doubly_stochastic() const { return rows_ok && cols_ok; }
    bool regular() const { return doubly_stochastic() && strictly_positive; }
};

// Exact row/column sums and positivity; no tolerances anywhere.
StochasticityReport stochasticity_check(const RationalMatrix& m);

}  // namespace arclab
