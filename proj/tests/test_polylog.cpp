#include "doctest.h"

#include <cmath>
#include <complex>

#include "grasslog/errors.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/rng.hpp"

using namespace grasslog;

namespace {

// Independent series oracles, kept free of the implementation's reduction
// machinery: plain truncated sums with an explicit tail bound.
Cd li_series_oracle(int n, Cd z, int terms) {
    Cd sum = 0.0, zk = z;
    for (int k = 1; k <= terms; ++k) {
        sum += zk / std::pow(static_cast<double>(k), n);
        zk *= z;
    }
    return sum;
}

double zeta_oracle(int n, int terms, double* tail_bound) {
    double s = 0.0;
    for (int k = 1; k <= terms; ++k) s += 1.0 / std::pow(static_cast<double>(k), n);
    // integral bounds: tail in (int_{T+1}, int_T) of x^-n
    *tail_bound = 1.0 / ((n - 1) * std::pow(static_cast<double>(terms), n - 1));
    return s + 0.5 * (*tail_bound + 1.0 / ((n - 1) * std::pow(static_cast<double>(terms + 1), n - 1)));
}

double catalan_oracle() {
    // Im Li2(i) = sum (-1)^k / (2k+1)^2
    double s = 0.0;
    for (int k = 0; k < 4000; ++k)
        s += (k % 2 == 0 ? 1.0 : -1.0) / ((2.0 * k + 1) * (2.0 * k + 1));
    return s;
}

} // namespace

TEST_SUITE_BEGIN("polylog");

TEST_CASE("li matches the direct series on |z| <= 1/2") {
    Rng rng(101);
    for (int n = 1; n <= 3; ++n) {
        double worst = 0.0;
        for (int c = 0; c < 1000; ++c) {
            double r = 0.5 * std::sqrt(rng.uniform());
            double th = 2 * M_PI * rng.uniform();
            Cd z = std::polar(r, th);
            Cd want = (n == 1) ? -std::log(1.0 - z) : li_series_oracle(n, z, 500);
            Cd got = li(n, z);
            worst = std::max(worst, std::abs(got - want) / (std::abs(want) + 1e-300));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("li special values against series oracles") {
    CHECK(li(2, Cd(0, 0)) == Cd(0, 0));
    double tail = 0.0;
    double z2 = zeta_oracle(2, 200, &tail);
    CHECK(std::abs(li(2, Cd(1, 0)).real() - z2) <= tail);
    CHECK(li(2, Cd(1, 0)).imag() == doctest::Approx(0.0));
    // Li3(-1) = -sum (-1)^{k+1}/k^3 (alternating oracle, 300 terms)
    double alt = 0.0;
    for (int k = 1; k <= 300; ++k) alt += (k % 2 ? -1.0 : 1.0) / (static_cast<double>(k) * k * k);
    CHECK(li(3, Cd(-1, 0)).real() == doctest::Approx(alt).epsilon(1e-7));
    CHECK(li(3, Cd(-1, 0)).real() == doctest::Approx(-0.75 * kZeta3).epsilon(1e-13));
}

TEST_CASE("li errors: cut and weight domain") {
    CHECK_THROWS_AS(li(2, Cd(1.5, 0.0)), CutError);
    CHECK_THROWS_AS(li(3, Cd(100.0, 0.0)), CutError);
    CHECK_NOTHROW(li(2, Cd(1.5, 1e-9)));
    CHECK_THROWS_AS(li(4, Cd(0.1, 0.0)), DomainError);
    CHECK_THROWS_AS(li(0, Cd(0.1, 0.0)), DomainError);
    CHECK_THROWS_AS(li(1, Cd(1.0, 0.0)), DomainError);
}

TEST_CASE("li regime seams are continuous (identities verified on overlaps)") {
    Rng rng(102);
    for (int c = 0; c < 50; ++c) {
        double th = 2 * M_PI * rng.uniform();
        if (std::fabs(std::fmod(th, M_PI)) < 0.2) continue; // stay off the cut direction
        for (double r : {0.5, 2.0}) {
            // small enough that the function's own variation (|Li_{n-1}/z| dz)
            // stays below the mismatch tolerance
            Cd lo = std::polar(r - 1e-12, th), hi = std::polar(r + 1e-12, th);
            for (int n = 2; n <= 3; ++n)
                CHECK(std::abs(li(n, lo) - li(n, hi)) <= 1e-11 * (std::abs(li(n, lo)) + 1.0));
        }
    }
}

TEST_CASE("bloch_wigner: real axis, Catalan, antisymmetries") {
    for (double x : {-5.0, -1.0, 0.0, 0.4, 1.0, 3.7}) CHECK(bloch_wigner(Cd(x, 0)) == 0.0);
    CHECK(bloch_wigner(Cd(0, 1)) == doctest::Approx(catalan_oracle()).epsilon(1e-7));
    CHECK(bloch_wigner(Cd(0, 1)) == doctest::Approx(0.9159655941772190).epsilon(1e-12));
    Cd z(0.3, 0.7);
    CHECK(bloch_wigner(std::conj(z)) == doctest::Approx(-bloch_wigner(z)).epsilon(1e-14));

    // first pin the implementation against the series oracle on small |z|
    Rng rng(103);
    for (int c = 0; c < 200; ++c) {
        Cd w = std::polar(0.5 * rng.uniform() + 1e-3, 2 * M_PI * rng.uniform());
        double want = li_series_oracle(2, w, 500).imag() +
                      std::arg(1.0 - w) * std::log(std::abs(w));
        CHECK(bloch_wigner(w) == doctest::Approx(want).epsilon(1e-11));
    }
    // then the inversion and conjugation laws on a wide annulus
    double worst = 0.0;
    for (int c = 0; c < 1000; ++c) {
        Cd w = std::polar(std::pow(10.0, 2.0 * rng.uniform() - 1.0), 2 * M_PI * rng.uniform());
        if (std::fabs(w.imag()) < 1e-12) continue;
        worst = std::max(worst, std::fabs(bloch_wigner(1.0 / w) + bloch_wigner(w)));
        worst = std::max(worst, std::fabs(bloch_wigner(std::conj(w)) + bloch_wigner(w)));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("sv_trilog special values") {
    CHECK(sv_trilog(Cd(0, 0)) == 0.0);
    double tail = 0.0;
    double z3 = zeta_oracle(3, 200, &tail);
    CHECK(std::fabs(sv_trilog(Cd(1, 0)) - z3) <= 2 * tail);
    // L3(1/2) = (7/8) zeta(3): evaluate the defining expression with series
    // oracles before trusting the closed value.
    double li2h = li_series_oracle(2, Cd(0.5, 0), 400).real();
    double li3h = li_series_oracle(3, Cd(0.5, 0), 400).real();
    double want = li3h - std::log(0.5) * li2h -
                  std::log(0.5) * std::log(0.5) * std::log(0.5) / 3.0;
    CHECK(sv_trilog(Cd(0.5, 0)) == doctest::Approx(want).epsilon(1e-13));
    CHECK(sv_trilog(Cd(0.5, 0)) == doctest::Approx(0.875 * kZeta3).epsilon(1e-13));
    CHECK(sv_trilog(Cd(2.0, 0)) == doctest::Approx(0.875 * kZeta3).epsilon(1e-12));
}

TEST_CASE("sv_trilog inversion symmetry") {
    Rng rng(104);
    double worst = 0.0;
    for (int c = 0; c < 500; ++c) {
        Cd z = std::polar(std::pow(10.0, 2.0 * rng.uniform() - 1.0), 2 * M_PI * rng.uniform());
        if (z.imag() == 0.0) continue;
        worst = std::max(worst, std::fabs(sv_trilog(z) - sv_trilog(1.0 / z)) /
                                    (std::fabs(sv_trilog(z)) + 1e-3));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("sv_trilog continuity at the extension points") {
    // Near 1 the spec's 1e-6 at distance 1e-4 is attainable; near 0 and
    // infinity the function decays like |z| log^2|z|, so the same bound
    // needs distance 1e-9 (see the growth checks below).
    for (int k = 0; k < 20; ++k) {
        double th = 2 * M_PI * k / 20.0;
        CHECK(std::fabs(sv_trilog(Cd(1, 0) + std::polar(1e-4, th)) - kZeta3) <= 1e-6);
        CHECK(std::fabs(sv_trilog(std::polar(1e-9, th))) <= 1e-6);
        CHECK(std::fabs(sv_trilog(std::polar(1e9, th))) <= 1e-6);
        // growth envelope at the spec's original distance
        CHECK(std::fabs(sv_trilog(std::polar(1e-4, th))) <= 1e-4 * 9.3 * 9.3);
    }
}

TEST_SUITE_END();
