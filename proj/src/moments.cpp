#include "moments.hpp"

#include <stdexcept>

#include "codec.hpp"

namespace arclab {

namespace {

void require_order(unsigned m) {
    if (m < 1) throw std::domain_error("moment order m must be at least 1");
}

}  // namespace

RationalMatrix build_w(unsigned m, const Rational& p) {
    require_order(m);
    require_probability(p);
    Rational q = Rational(1) - p;
    RationalMatrix w(m + 1);
    // Row r carries E[X^i Y^j] with i = m - r, j = r. Differentiating the
    // moment-generating recurrence puts weight
    //   q * C(j,k) p^k q^(j-k)   on column j - k   (k = 0..j)
    //   p * C(i,l) p^l q^(i-l)   on column m - l   (l = 0..i)
    // which stacks p^(i+1) + q^(j+1) on the diagonal.
    for (unsigned r = 0; r <= m; ++r) {
        unsigned j = r, i = m - r;
        for (unsigned k = 0; k <= j; ++k)
            w.at(r, j - k) += q * binomial(j, k) * p.pow(k) * q.pow(j - k);
        for (unsigned l = 0; l <= i; ++l)
            w.at(r, m - l) += p * binomial(i, l) * p.pow(l) * q.pow(i - l);
    }
    return w;
}

RationalMatrix build_l(unsigned m, const Rational& p) {
    require_order(m);
    require_probability(p);
    Rational q = Rational(1) - p;
    RationalMatrix l(m + 1);
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = 0; j <= i; ++j)
            l.at(i, j) = binomial(i, i - j) * p.pow(i - j) * q.pow(j + 1);
    return l;
}

RationalMatrix build_u(unsigned m, const Rational& p) {
    require_order(m);
    require_probability(p);
    Rational q = Rational(1) - p;
    RationalMatrix u(m + 1);
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = i; j <= m; ++j)
            u.at(i, j) = binomial(m - i, j - i) * p.pow(m + 1 - j) * q.pow(j - i);
    return u;
}

RationalMatrix modal_matrix(unsigned m) {
    require_order(m);
    RationalMatrix pm(m + 1);
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = i; j <= m; ++j) pm.at(i, j) = binomial(m - i, j - i);
    return pm;
}

RationalMatrix modal_inverse(unsigned m) {
    require_order(m);
    RationalMatrix inv(m + 1);
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = i; j <= m; ++j) {
            Rational b = binomial(m - i, j - i);
            inv.at(i, j) = ((j - i) % 2 == 0) ? b : -b;
        }
    return inv;
}

SpectrumReport conjugate(unsigned m, const Rational& p) {
    require_order(m);
    require_probability(p);
    Rational q = Rational(1) - p;
    RationalMatrix pm = modal_matrix(m);
    RationalMatrix pinv = modal_inverse(m);
    if (!(pm * pinv == RationalMatrix::identity(m + 1)))
        throw std::logic_error("modal matrix inverse check failed");

    RationalMatrix t = pinv * build_l(m, p) * pm;
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = 0; j <= m; ++j) {
            Rational expected =
                j <= i ? binomial(i, j) * p.pow(i - j) * q.pow(m + 1 - i) : Rational(0);
            if (t.at(i, j) != expected)
                throw std::logic_error("conjugated lower part deviates from its closed form");
        }

    RationalMatrix d = pinv * build_u(m, p) * pm;
    for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = 0; j <= m; ++j) {
            Rational expected = i == j ? p.pow(m + 1 - j) : Rational(0);
            if (d.at(i, j) != expected)
                throw std::logic_error("conjugated upper part is not the expected diagonal");
        }

    SpectrumReport report;
    report.modal = std::move(pm);
    report.modal_inverse = std::move(pinv);
    report.triangular_conjugate = t + d;  // = P^-1 W P, lower triangular
    report.eigenvalues.reserve(m + 1);
    for (unsigned k = 1; k <= m + 1; ++k) report.eigenvalues.push_back(p.pow(k) + q.pow(k));
    return report;
}

std::vector<Rational> eigenvalues(unsigned m, const Rational& p) {
    SpectrumReport report = conjugate(m, p);
    // The triangular conjugate carries the spectrum on its diagonal in
    // reverse order; the closed form must agree exactly.
    for (unsigned j = 0; j <= m; ++j)
        if (report.triangular_conjugate.at(j, j) != report.eigenvalues[m - j])
            throw std::logic_error("eigenvalue closed form disagrees with triangularization");
    return std::move(report.eigenvalues);
}

std::vector<Rational> moment_vector(unsigned m, unsigned long n, const Rational& p) {
    RationalMatrix wn = build_w(m, p).pow(n);
    std::vector<Rational> initial(m + 1);
    initial[m] = Rational(1);  // X_0 = 0, Y_0 = 1
    return wn * initial;
}

std::pair<Rational, Rational> mean_closed_form(unsigned long n, const Rational& p) {
    require_probability(p);
    Rational q = Rational(1) - p;
    Rational lambda2 = Rational(1) - Rational(2) * p * q;
    Rational t = lambda2.pow(n);
    Rational half(1, 2);
    return {half * (Rational(1) - t), half * (Rational(1) + t)};
}

Rational length_moment(unsigned long n, const Rational& p, unsigned k) {
    require_probability(p);
    if (k < 1) throw std::domain_error("length moment order k must be at least 1");
    Rational q = Rational(1) - p;
    return (p.pow(k + 1) + q.pow(k + 1)).pow(n);
}

RationalMatrix variance_covariance(unsigned long n, const Rational& p) {
    std::vector<Rational> m2 = moment_vector(2, n, p);  // (E[X^2], E[XY], E[Y^2])
    auto [ex, ey] = mean_closed_form(n, p);
    Rational var_x = m2[0] - ex * ex;
    Rational var_y = m2[2] - ey * ey;
    Rational cov = m2[1] - ex * ey;

    Rational var_len = var_x + var_y - Rational(2) * cov;
    Rational el = length_moment(n, p, 1);
    if (var_len != length_moment(n, p, 2) - el * el)
        throw std::logic_error("variance of the interval length disagrees between routes");

    RationalMatrix cov_matrix(2);
    cov_matrix.at(0, 0) = std::move(var_x);
    cov_matrix.at(0, 1) = cov;
    cov_matrix.at(1, 0) = std::move(cov);
    cov_matrix.at(1, 1) = std::move(var_y);
    return cov_matrix;
}

RationalMatrix principal_idempotent(unsigned m) {
    require_order(m);
    RationalMatrix j(m + 1);
    Rational cell(1, static_cast<long>(m) + 1);
    for (unsigned r = 0; r <= m; ++r)
        for (unsigned c = 0; c <= m; ++c) j.at(r, c) = cell;
    return j;
}

namespace {

Rational max_deviation_from_flat(const RationalMatrix& m) {
    Rational limit(1, static_cast<long>(m.order()));
    Rational best(0);
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) {
            Rational d = (m.at(i, j) - limit).abs();
            if (d > best) best = std::move(d);
        }
    return best;
}

}  // namespace

AsymptoticCheck asymptotic_check(unsigned m, const Rational& p, unsigned long n) {
    RationalMatrix w = build_w(m, p);
    AsymptoticCheck out;
    if (n == 0) {
        out.deviation = max_deviation_from_flat(RationalMatrix::identity(m + 1));
        return out;
    }
    RationalMatrix prev = w.pow(n - 1);
    out.prev_deviation = max_deviation_from_flat(prev);
    out.deviation = max_deviation_from_flat(prev * w);
    if (!out.prev_deviation->is_zero()) out.ratio = out.deviation / *out.prev_deviation;
    return out;
}

StochasticityReport stochasticity_check(const RationalMatrix& m) {
    StochasticityReport report;
    Rational one(1);
    for (std::size_t i = 0; i < m.order(); ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < m.order(); ++j) sum += m.at(i, j);
        if (sum != one) {
            report.rows_ok = false;
            if (report.bad_row < 0) report.bad_row = static_cast<int>(i);
        }
    }
    for (std::size_t j = 0; j < m.order(); ++j) {
        Rational sum(0);
        for (std::size_t i = 0; i < m.order(); ++i) sum += m.at(i, j);
        if (sum != one) {
            report.cols_ok = false;
            if (report.bad_col < 0) report.bad_col = static_cast<int>(j);
        }
    }
    for (std::size_t i = 0; i < m.order() && report.strictly_positive; ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (m.at(i, j).sign() <= 0) {
                report.strictly_positive = false;
                report.nonpositive_row = static_cast<int>(i);
                report.nonpositive_col = static_cast<int>(j);
                break;
            }
    return report;
}

}  // namespace arclab
