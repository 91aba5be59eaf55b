#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "moments.hpp"
#include "sim.hpp"

using namespace arclab;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<const char*>>& rows) {
    RationalMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = Rational::parse(rows[i][j]);
    return m;
}

// One nonzero kernel vector of a singular matrix, by exact Gauss-Jordan.
std::vector<Rational> kernel_vector(RationalMatrix a) {
    const std::size_t n = a.order();
    std::vector<long> pivot_row_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a.at(sel, col).is_zero()) ++sel;
        if (sel == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(row, j));
        Rational pivot = a.at(row, col);
        for (std::size_t j = 0; j < n; ++j) a.at(row, j) /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Rational factor = a.at(r, col);
            for (std::size_t j = 0; j < n; ++j) a.at(r, j) -= factor * a.at(row, j);
        }
        pivot_row_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::size_t free_col = n;
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] < 0) {
            free_col = col;
            break;
        }
    REQUIRE(free_col < n);  // matrix must be singular
    std::vector<Rational> x(n);
    x[free_col] = Rational(1);
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] >= 0)
            x[col] = -a.at(static_cast<std::size_t>(pivot_row_of_col[col]), free_col);
    return x;
}

}  // namespace

TEST_CASE("one-step moment matrices match their displayed forms") {
    Rational p(2, 7), q(5, 7);
    RationalMatrix w1 = build_w(1, p);
    CHECK(w1.at(0, 0) == p * p + q);
    CHECK(w1.at(0, 1) == p * q);
    CHECK(w1.at(1, 0) == p * q);
    CHECK(w1.at(1, 1) == p + q * q);

    CHECK(build_w(1, Rational(1, 2)) ==
          from_rows({{"3/4", "1/4"}, {"1/4", "3/4"}}));

    RationalMatrix w2 = build_w(2, p);
    RationalMatrix expected(3);
    expected.at(0, 0) = p.pow(3) + q;
    expected.at(0, 1) = Rational(2) * p * p * q;
    expected.at(0, 2) = p * q * q;
    expected.at(1, 0) = p * q;
    expected.at(1, 1) = p * p + q * q;
    expected.at(1, 2) = p * q;
    expected.at(2, 0) = p * p * q;
    expected.at(2, 1) = Rational(2) * p * q * q;
    expected.at(2, 2) = p + q.pow(3);
    CHECK(w2 == expected);

    CHECK_THROWS_AS(build_w(0, p), std::domain_error);
    CHECK_THROWS_AS(build_w(2, Rational(1)), std::domain_error);
}

TEST_CASE("triangular split U + L = W") {
    Rational p(2, 7), q(5, 7);
    RationalMatrix l1 = build_l(1, p);
    CHECK(l1.at(0, 0) == q);
    CHECK(l1.at(0, 1) == Rational(0));
    CHECK(l1.at(1, 0) == p * q);
    CHECK(l1.at(1, 1) == q * q);
    RationalMatrix u1 = build_u(1, p);
    CHECK(u1.at(0, 0) == p * p);
    CHECK(u1.at(0, 1) == p * q);
    CHECK(u1.at(1, 0) == Rational(0));
    CHECK(u1.at(1, 1) == p);

    for (unsigned m = 1; m <= 8; ++m)
        for (const Rational& pp : {Rational(1, 3), Rational(2, 5), Rational(9, 10)}) {
            RationalMatrix l = build_l(m, pp);
            RationalMatrix u = build_u(m, pp);
            CHECK(l.is_lower_triangular());
            CHECK(u.is_upper_triangular());
            CHECK(l + u == build_w(m, pp));
        }
}

TEST_CASE("modal matrices") {
    CHECK(modal_matrix(1) == from_rows({{"1", "1"}, {"0", "1"}}));
    CHECK(modal_inverse(1) == from_rows({{"1", "-1"}, {"0", "1"}}));
    CHECK(modal_matrix(2) == from_rows({{"1", "2", "1"}, {"0", "1", "1"}, {"0", "0", "1"}}));
    for (unsigned m = 1; m <= 8; ++m) {
        RationalMatrix pm = modal_matrix(m);
        CHECK(pm * modal_inverse(m) == RationalMatrix::identity(m + 1));
        CHECK(pm.is_upper_triangular());
        for (unsigned j = 0; j <= m; ++j) CHECK(pm.at(j, j) == Rational(1));
    }
}

TEST_CASE("conjugation by the modal matrix") {
    Rational p(2, 7), q(5, 7);
    SpectrumReport spectrum = conjugate(1, p);
    RationalMatrix t = modal_inverse(1) * build_l(1, p) * modal_matrix(1);
    CHECK(t == from_rows({{(q * q).str().c_str(), "0"}, {(p * q).str().c_str(), q.str().c_str()}}));
    RationalMatrix d = modal_inverse(1) * build_u(1, p) * modal_matrix(1);
    CHECK(d.at(0, 0) == p * p);
    CHECK(d.at(0, 1) == Rational(0));
    CHECK(d.at(1, 0) == Rational(0));
    CHECK(d.at(1, 1) == p);
    CHECK(spectrum.triangular_conjugate == t + d);

    for (unsigned m = 1; m <= 6; ++m) {
        SpectrumReport s = conjugate(m, Rational(1, 2));
        CHECK(s.triangular_conjugate.is_lower_triangular());
        for (unsigned j = 0; j <= m; ++j) {
            // at p = 1/2 the diagonal collapses to powers of two: 2^(j-m)
            CHECK(s.triangular_conjugate.at(j, j) ==
                  pow2(static_cast<long>(j) - static_cast<long>(m)));
            CHECK(s.triangular_conjugate.at(j, j) == s.eigenvalues[m - j]);
        }
    }
}

TEST_CASE("eigenvalues") {
    CHECK(eigenvalues(2, Rational(1, 3)) ==
          std::vector<Rational>{Rational(1), Rational(5, 9), Rational(1, 3)});
    Rational p(2, 7), q(5, 7);
    CHECK(eigenvalues(1, p) ==
          std::vector<Rational>{Rational(1), Rational(1) - Rational(2) * p * q});
    CHECK(eigenvalues(3, Rational(1, 2)) ==
          std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)});
}

TEST_CASE("non-principal eigenvectors are perpendicular to the all-ones vector") {
    for (unsigned m = 1; m <= 4; ++m)
        for (const Rational& p : {Rational(1, 3), Rational(2, 5)}) {
            RationalMatrix w = build_w(m, p);
            std::vector<Rational> lambdas = eigenvalues(m, p);
            for (unsigned k = 1; k <= m; ++k) {  // skip the principal eigenvalue 1
                RationalMatrix shifted = w;
                for (unsigned i = 0; i <= m; ++i)
                    shifted.at(i, i) -= lambdas[k];
                std::vector<Rational> x = kernel_vector(shifted);
                // really an eigenvector
                std::vector<Rational> wx = w * x;
                Rational sum(0);
                for (unsigned i = 0; i <= m; ++i) {
                    CHECK(wx[i] == lambdas[k] * x[i]);
                    sum += x[i];
                }
                CHECK(sum == Rational(0));
            }
            // the all-ones vector is a right eigenvector for 1; columns too
            std::vector<Rational> ones(m + 1, Rational(1));
            CHECK(w * ones == ones);
        }
}

TEST_CASE("moment vector propagation") {
    Rational p(2, 5);
    CHECK(moment_vector(1, 0, p) == std::vector<Rational>{Rational(0), Rational(1)});
    for (unsigned n = 0; n <= 60; ++n) {
        auto [ex, ey] = mean_closed_form(n, p);
        CHECK(moment_vector(1, n, p) == std::vector<Rational>{ex, ey});
    }
    CHECK(moment_vector(2, 8, p) == brute_force_moments(2, 8, p));
}

TEST_CASE("swapping p and q mirrors the interval: E_q[X^i Y^j] = E_p[(1-Y)^i (1-X)^j]") {
    Rational p(2, 7), q(5, 7);
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n : {1u, 4u, 9u}) {
            // mixed moments under p for all total orders up to m
            auto mixed_p = [&](unsigned x_exp, unsigned y_exp) {
                if (x_exp + y_exp == 0) return Rational(1);
                return moment_vector(x_exp + y_exp, n, p)[y_exp];
            };
            std::vector<Rational> under_q = moment_vector(m, n, q);
            for (unsigned j = 0; j <= m; ++j) {
                unsigned i = m - j;
                Rational rhs(0);
                for (unsigned k = 0; k <= i; ++k)
                    for (unsigned l = 0; l <= j; ++l) {
                        Rational term = binomial(i, k) * binomial(j, l) * mixed_p(l, k);
                        rhs += ((k + l) % 2 == 0) ? term : -term;
                    }
                CHECK(under_q[j] == rhs);
            }
            // the first-moment vector is outright invariant: 1 - 2pq is
            // symmetric in the swap
            if (m == 1) CHECK(under_q == moment_vector(1, n, p));
        }
}

TEST_CASE("closed-form means") {
    CHECK(mean_closed_form(4, Rational(1, 2)) ==
          std::pair{Rational(15, 32), Rational(17, 32)});
    CHECK(mean_closed_form(0, Rational(2, 7)) == std::pair{Rational(0), Rational(1)});
    for (unsigned n : {1u, 5u, 20u}) {
        auto [ex, ey] = mean_closed_form(n, Rational(1, 3));
        CHECK((ex - Rational(1, 2)).abs() == Rational(5, 9).pow(n) / Rational(2));
        CHECK((ey - Rational(1, 2)).abs() == Rational(5, 9).pow(n) / Rational(2));
    }
}

TEST_CASE("length moments") {
    for (unsigned n : {0u, 1u, 7u}) {
        CHECK(length_moment(n, Rational(1, 2), 1) == pow2(-static_cast<long>(n)));
        CHECK(length_moment(n, Rational(1, 3), 1) == Rational(5, 9).pow(n));
    }
    // k = 2 at p = 1/3: p^3 + q^3 = 1/3, and the matrix route agrees
    CHECK(length_moment(3, Rational(1, 3), 2) == Rational(1, 27));
    std::vector<Rational> m2 = moment_vector(2, 3, Rational(1, 3));
    CHECK(m2[0] - Rational(2) * m2[1] + m2[2] == Rational(1, 27));
    CHECK_THROWS_AS(length_moment(3, Rational(1, 3), 0), std::domain_error);
}

TEST_CASE("variance and covariance") {
    RationalMatrix at0 = variance_covariance(0, Rational(2, 5));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(at0.at(i, j) == Rational(0));

    // the two variance routes agree (also asserted inside the builder)
    RationalMatrix vc = variance_covariance(5, Rational(2, 5));
    Rational var_len = vc.at(0, 0) + vc.at(1, 1) - Rational(2) * vc.at(0, 1);
    Rational p(2, 5), q(3, 5);
    CHECK(var_len == (p.pow(3) + q.pow(3)).pow(5) - (p.pow(2) + q.pow(2)).pow(10));

    // entries approach 1/12 and the deviation ratio locks onto an eigenvalue
    Rational twelfth(1, 12);
    Rational dev40 = (variance_covariance(40, Rational(1, 3)).at(0, 0) - twelfth).abs();
    Rational dev41 = (variance_covariance(41, Rational(1, 3)).at(0, 0) - twelfth).abs();
    Rational ratio = dev41 / dev40;
    Rational tol(1, 1000000);
    bool locks = (ratio - Rational(5, 9)).abs() < tol || (ratio - Rational(1, 3)).abs() < tol;
    CHECK(locks);
    CHECK(dev40 < Rational(4) * Rational(5, 9).pow(40));
}

TEST_CASE("principal idempotent and the order-1 spectral expansion") {
    RationalMatrix j2 = principal_idempotent(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(j2.at(i, j) == Rational(1, 3));

    Rational p(2, 7), q(5, 7);
    Rational lambda2 = Rational(1) - Rational(2) * p * q;
    for (unsigned n : {0u, 1u, 2u, 9u, 33u}) {
        RationalMatrix wn = build_w(1, p).pow(n);
        Rational half(1, 2);
        Rational t = lambda2.pow(n) * half;
        CHECK(wn.at(0, 0) == half + t);
        CHECK(wn.at(0, 1) == half - t);
        CHECK(wn.at(1, 0) == half - t);
        CHECK(wn.at(1, 1) == half + t);
    }
}

TEST_CASE("flattening of matrix powers") {
    AsymptoticCheck at0 = asymptotic_check(3, Rational(1, 2), 0);
    CHECK(at0.deviation == Rational(3, 4));
    CHECK_FALSE(at0.ratio.has_value());

    AsymptoticCheck at40 = asymptotic_check(3, Rational(1, 2), 40);
    CHECK(at40.deviation <= Rational(4) * pow2(-40));
    Rational lambda2(1, 2);
    CHECK((*at40.ratio - lambda2).abs() < Rational(1, 1000000));

    // component-wise the moment vector flattens to 1/(m+1) at the same rate
    Rational quarter(1, 4);
    std::vector<Rational> v49 = moment_vector(3, 49, Rational(2, 5));
    std::vector<Rational> v50 = moment_vector(3, 50, Rational(2, 5));
    Rational l2 = Rational(1) - Rational(2) * Rational(2, 5) * Rational(3, 5);
    Rational r = (v50[0] - quarter).abs() / (v49[0] - quarter).abs();
    CHECK((r - l2).abs() < Rational(1, 1000000));
}

TEST_CASE("stochasticity reports") {
    for (unsigned m = 1; m <= 10; ++m)
        for (const Rational& p :
             {Rational(1, 3), Rational(1, 2), Rational(2, 5), Rational(9, 10)}) {
            StochasticityReport rep = stochasticity_check(build_w(m, p));
            CHECK(rep.doubly_stochastic());
            CHECK(rep.regular());
        }

    StochasticityReport l_alone = stochasticity_check(build_l(3, Rational(1, 3)));
    CHECK_FALSE(l_alone.cols_ok);
    CHECK_FALSE(l_alone.doubly_stochastic());
    CHECK(l_alone.bad_col >= 0);

    StochasticityReport ident = stochasticity_check(RationalMatrix::identity(4));
    CHECK(ident.doubly_stochastic());
    CHECK_FALSE(ident.strictly_positive);
    CHECK_FALSE(ident.regular());
}

TEST_CASE("log-deviation of the mean falls on a straight line of slope log(1-2pq)") {
    for (const Rational& p : {Rational(1, 3), Rational(2, 5)}) {
        Rational lambda2 = Rational(1) - Rational(2) * p * (Rational(1) - p);
        double sum_n = 0, sum_y = 0, sum_nn = 0, sum_ny = 0;
        int count = 0;
        for (unsigned n = 1; n <= 40; ++n) {
            auto [ex, ey] = mean_closed_form(n, p);
            double y = std::log((ex - Rational(1, 2)).abs().to_double());
            sum_n += n;
            sum_y += y;
            sum_nn += static_cast<double>(n) * n;
            sum_ny += n * y;
            ++count;
        }
        double slope = (count * sum_ny - sum_n * sum_y) / (count * sum_nn - sum_n * sum_n);
        CHECK(std::abs(slope - std::log(lambda2.to_double())) < 1e-9);
    }
}
