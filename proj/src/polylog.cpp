#include "grasslog/polylog.hpp"

#include <cmath>
#include <vector>

#include "grasslog/errors.hpp"
#include "grasslog/rational.hpp"

namespace grasslog {

namespace {

bool on_cut(Cd z) { return z.imag() == 0.0 && z.real() > 1.0; }

// Direct series, valid and fast for |z| <= 1/2.
Cd li_series(int n, Cd z) {
    Cd sum = 0.0, zk = z;
    for (int k = 1; k <= 200; ++k) {
        Cd term = zk / std::pow(static_cast<double>(k), n);
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
        zk *= z;
    }
    return sum;
}

const std::vector<double>& bernoulli_table() {
    static const std::vector<double> table = [] {
        // B_m via sum_{j<=m} C(m+1,j) B_j = 0, computed exactly.
        const int kMax = 128;
        std::vector<Rational> b(kMax + 1);
        b[0] = Rational(1);
        for (int m = 1; m <= kMax; ++m) {
            Rational acc(0);
            for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[j];
            b[m] = -acc / binomial(m + 1, m);
        }
        std::vector<double> d(kMax + 1);
        for (int m = 0; m <= kMax; ++m) d[m] = b[m].to_double();
        return d;
    }();
    return table;
}

// Li_n(e^mu) around z = 1 (|mu| < 2pi); the ln(-mu) branch matches the
// principal Li_n branch on either side of the cut.
Cd li2_log_series(Cd mu) {
    Cd lognegmu = std::log(-mu);
    Cd sum = kZeta2 + mu * (1.0 - lognegmu) - mu * mu / 4.0;
    Cd mupow = mu * mu * mu; // mu^(2m+1), m = 1
    for (int m = 1; m <= 60; ++m) {
        double coef = -bernoulli(2 * m) / (2.0 * m);
        Cd term = coef * mupow / factorial(2 * m + 1).to_double();
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        mupow *= mu * mu;
    }
    return sum;
}

Cd li3_log_series(Cd mu) {
    Cd lognegmu = std::log(-mu);
    Cd sum = kZeta3 + kZeta2 * mu + mu * mu * (1.5 - lognegmu) / 2.0 -
             mu * mu * mu / 12.0;
    Cd mupow = mu * mu * mu * mu; // mu^(2m+2), m = 1
    for (int m = 1; m <= 60; ++m) {
        double coef = -bernoulli(2 * m) / (2.0 * m);
        Cd term = coef * mupow / factorial(2 * m + 2).to_double();
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        mupow *= mu * mu;
    }
    return sum;
}

Cd li2_impl(Cd z) {
    double r = std::abs(z);
    if (r <= 0.5) return li_series(2, z);
    if (r >= 2.0) {
        // Li2(z) = -Li2(1/z) - zeta(2) - log^2(-z)/2
        Cd L = std::log(-z);
        return -li_series(2, 1.0 / z) - kZeta2 - 0.5 * L * L;
    }
    Cd mu = std::log(z);
    if (std::abs(mu) < 1e-300) return Cd(kZeta2, 0.0);
    return li2_log_series(mu);
}

Cd li3_impl(Cd z) {
    double r = std::abs(z);
    if (r <= 0.5) return li_series(3, z);
    if (r >= 2.0) {
        // Li3(z) = Li3(1/z) - log^3(-z)/6 - zeta(2) log(-z)
        Cd L = std::log(-z);
        return li_series(3, 1.0 / z) - L * L * L / 6.0 - kZeta2 * L;
    }
    Cd mu = std::log(z);
    if (std::abs(mu) < 1e-300) return Cd(kZeta3, 0.0);
    return li3_log_series(mu);
}

} // namespace

double bernoulli(int n) {
    if (n < 0 || n > 128) throw DomainError("bernoulli: n out of range");
    return bernoulli_table()[static_cast<std::size_t>(n)];
}

Cd li(int n, Cd z) {
    if (n < 1 || n > 3) throw DomainError("li: weight must be 1, 2 or 3");
    if (on_cut(z)) throw CutError("li: z on the cut (1, inf); take a one-sided limit instead");
    if (n == 1) {
        if (z == Cd(1.0, 0.0)) throw DomainError("li: Li_1 pole at z = 1");
        return -std::log(1.0 - z);
    }
    return n == 2 ? li2_impl(z) : li3_impl(z);
}

double bloch_wigner(Cd z) {
    if (z.imag() == 0.0) return 0.0; // continuous limit on the real line
    if (std::abs(z) >= 2.0) {
        // D(1/z) = -D(z) keeps the inversion branch bookkeeping out of arg().
        Cd w = 1.0 / z;
        return -(std::imag(li2_impl(w)) + std::arg(1.0 - w) * std::log(std::abs(w)));
    }
    return std::imag(li2_impl(z)) + std::arg(1.0 - z) * std::log(std::abs(z));
}

double sv_trilog(Cd z) {
    if (z == Cd(0.0, 0.0)) return 0.0;
    if (z == Cd(1.0, 0.0)) return kZeta3;
    if (z.imag() == 0.0 && z.real() > 1.0) {
        // Real cut: both one-sided limits agree with the value at 1/z in (0,1).
        return sv_trilog(1.0 / z);
    }
    double la = std::log(std::abs(z));
    double l1 = std::log(std::abs(1.0 - z));
    return std::real(li3_impl(z)) - la * std::real(li2_impl(z)) - la * la * l1 / 3.0;
}

} // namespace grasslog
