#include "doctest.h"

#include <cmath>

#include "grasslog/grassmannian.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/quadrature.hpp"
#include "grasslog/rng.hpp"

using namespace grasslog;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("orientation calibration: CP^1 area is +pi and stable") {
    Cp1Integrand fs;
    fs.kernel = Cp1Kernel::fubini_study;
    QuadratureEstimate est = integrate_cp1(fs, 60000, 1e-8);
    CHECK(est.value == doctest::Approx(M_PI).epsilon(1e-6));
    CHECK(est.value > 0.0);
    CHECK(orientation_calibrate() == orientation_tag());
    CHECK(orientation_calibrate() == orientation_calibrate()); // idempotent
}

TEST_CASE("custom kernels integrate through both charts") {
    // the FS kernel expressed as a custom callback must give the same area
    Cp1Integrand c;
    c.kernel = Cp1Kernel::custom;
    c.custom = [](int, Cd t) {
        double d = 1.0 + std::norm(t);
        return 1.0 / (d * d);
    };
    QuadratureEstimate est = integrate_cp1(c, 60000, 1e-8);
    CHECK(est.value == doctest::Approx(M_PI).epsilon(1e-6));
}

TEST_CASE("dilog kernel: the spec configuration with cross-ratio i") {
    // covectors (1,0),(0,1),(1,1),(1,-i): r = i, D(i) = Catalan
    ConfigurationF c(2, {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}, {{1, 0}, {1, 0}}, {{1, 0}, {0, -1}}});
    DilogResult r = grass_dilog(c, DilogMode::both, 200000, 1e-7);
    CHECK(r.closed == doctest::Approx(0.91596559417721901).epsilon(1e-12));
    CHECK(r.numeric->value == doctest::Approx(r.closed).epsilon(1e-6));
    CHECK_FALSE(r.numeric->budget_exceeded);
}

TEST_CASE("dilog coincidence on random generic configurations") {
    Rng rng(55);
    for (int c = 0; c < 5; ++c) {
        ConfigurationF cf = conditioned_float_configuration(rng, 2, 4, 1e3);
        DilogResult r = grass_dilog(cf, DilogMode::both, 100000, 1e-6);
        CHECK(std::fabs(r.numeric->value - r.closed) <= 1e-5);
    }
}

TEST_CASE("conjugating the covectors negates the dilog") {
    Rng rng(56);
    ConfigurationF cf = conditioned_float_configuration(rng, 2, 4, 1e3);
    auto vs = cf.vectors();
    for (auto& v : vs)
        for (auto& x : v) x = std::conj(x);
    DilogResult a = grass_dilog(cf, DilogMode::both, 100000, 1e-6);
    DilogResult b = grass_dilog(ConfigurationF(2, vs), DilogMode::both, 100000, 1e-6);
    CHECK(b.closed == doctest::Approx(-a.closed).epsilon(1e-12));
    CHECK(b.numeric->value == doctest::Approx(-a.numeric->value).epsilon(2e-5));
}

TEST_CASE("identically-zero wedge short-circuits to 0 +- 0") {
    ConfigurationF c(2, {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}, {{1, 0}, {1, 0}}, {{2, 0}, {2, 0}}});
    Cp1Integrand intg;
    intg.covectors = c.vectors();
    QuadratureEstimate est = integrate_cp1(intg, 1000, 1e-6);
    CHECK(est.value == 0.0);
    CHECK(est.sigma == 0.0);
}

TEST_CASE("coincident zero loci raise NonGenericError") {
    Cp1Integrand intg;
    intg.covectors = {{Cd(1, 0), Cd(0, 0)},
                      {Cd(2, 0), Cd(1e-10, 0)},
                      {Cd(1, 0), Cd(1, 0)},
                      {Cd(1, 0), Cd(-1, 0)}};
    CHECK_THROWS_AS(integrate_cp1(intg, 1000, 1e-6), NonGenericError);
}

TEST_CASE("budget exhaustion is flagged, estimate still returned") {
    Rng rng(57);
    ConfigurationF cf = conditioned_float_configuration(rng, 2, 4, 1e3);
    Cp1Integrand intg;
    intg.covectors = cf.vectors();
    QuadratureEstimate est = integrate_cp1(intg, 3000, 1e-12);
    CHECK(est.budget_exceeded);
    CHECK(std::isfinite(est.value));
}

TEST_CASE("cp2: repeated wedge form gives exact zero") {
    Rng rng(58);
    ConfigurationF cf = random_float_configuration(rng, 3, 6);
    auto vs = cf.vectors();
    vs[4] = vs[3];
    Cp2Integrand intg;
    intg.covectors = vs;
    QuadratureEstimate est = integrate_cp2(intg, 10000, 1);
    CHECK(est.value == 0.0);
    CHECK(std::fabs(est.value) <= 2 * est.sigma + 1e-30);
}

TEST_CASE("cp2: concurrent lines raise NonGenericError") {
    std::vector<std::vector<Cd>> vs = {{Cd(1, 0), Cd(0, 0), Cd(0, 0)},
                                       {Cd(0, 0), Cd(1, 0), Cd(0, 0)},
                                       {Cd(0, 0), Cd(0, 0), Cd(1, 0)},
                                       {Cd(1, 0), Cd(1, 0), Cd(0, 0)},
                                       {Cd(1, 0), Cd(-1, 0), Cd(0, 0)}, // concurrent with 0, 1, 3
                                       {Cd(1, 0), Cd(1, 0), Cd(1, 0)}};
    Cp2Integrand intg;
    intg.covectors = vs;
    CHECK_THROWS_AS(integrate_cp2(intg, 10000, 1), NonGenericError);
}

TEST_CASE("cp2: determinism and batch-sigma scaling") {
    Rng rng(59);
    ConfigurationF cf = conditioned_float_configuration(rng, 3, 6, 1e3);
    Cp2Integrand intg;
    intg.covectors = cf.vectors();
    QuadratureEstimate a = integrate_cp2(intg, 100000, 7);
    QuadratureEstimate b = integrate_cp2(intg, 100000, 7);
    CHECK(a.value == b.value);
    CHECK(a.sigma == b.sigma);
    QuadratureEstimate c = integrate_cp2(intg, 100000, 8);
    CHECK(a.value != c.value); // different seed, different scramble
    CHECK(std::fabs(a.value - c.value) <= 6 * (a.sigma + c.sigma));
    // doubling the budget should not grow sigma (monitored, not asserted hard)
    QuadratureEstimate d = integrate_cp2(intg, 200000, 7);
    MESSAGE("sigma ", a.sigma, " -> ", d.sigma, " after doubling the budget");
    CHECK(d.sigma <= 2.0 * a.sigma);
}

TEST_CASE("cp2 integral near the special stratum matches the closed form") {
    // perturbed special configuration at eps = 1e-2: nearly-degenerate lines
    Rng rng(61);
    ConfigurationQ base = special_config(GaussianRational(Rational(2)));
    std::vector<std::vector<GaussianRational>> dir(6);
    for (auto& row : dir) {
        row.resize(3);
        for (auto& x : row) x = rng.small_gaussian();
    }
    GaussianRational e(Rational(1, 100));
    auto v = base.vectors();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) v[i][j] += e * dir[i][j];
    ConfigurationQ pert(3, std::move(v));
    REQUIRE(pert.generic());
    TrilogReport rep = grass_trilog_closed(pert);
    Cp2Integrand intg;
    intg.covectors = to_float(pert).vectors();
    QuadratureEstimate est = integrate_cp2(intg, 1500000, 42);
    double scale = 2.0 / (3.0 * M_PI * M_PI) * orientation_tag();
    double numeric = est.value * scale, sigma = est.sigma * std::fabs(scale);
    CHECK(std::fabs(numeric - rep.closed) <= 3.0 * sigma + 1e-3);
}

TEST_CASE("cp2 integral meets the closed form inside 3 sigma") {
    Rng rng(60);
    ConfigurationF cf = conditioned_float_configuration(rng, 3, 6, 1e3);
    TrilogReport rep = grass_trilog_closed(cf);
    Cp2Integrand intg;
    intg.covectors = cf.vectors();
    QuadratureEstimate est = integrate_cp2(intg, 1500000, 42);
    double scale = 2.0 / (3.0 * M_PI * M_PI) * orientation_tag();
    double numeric = est.value * scale, sigma = est.sigma * std::fabs(scale);
    CHECK(std::fabs(numeric - rep.closed) <= std::max(3.0 * sigma, 1e-2 * std::fabs(rep.closed) + 1e-2));
}

TEST_SUITE_END();
