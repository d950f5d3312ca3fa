#include "doctest.h"

#include <cmath>

#include "grasslog/grassmannian.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/rng.hpp"

using namespace grasslog;

namespace {
GaussianRational gq(long num, long den = 1) { return GaussianRational(Rational(num, den)); }
} // namespace

TEST_SUITE_BEGIN("grassmannian");

TEST_CASE("special configuration determinants") {
    ConfigurationQ g3 = special_config(gq(2));
    CHECK(g3.delta({0, 1, 3}).is_zero());
    CHECK(g3.delta({0, 1, 2}) == gq(1));
    // det[(0,0,1),(0,1,1),(1,0,z)] expands to -1 (the cofactor expansion;
    // the sign is pinned here on purpose)
    CHECK(g3.delta({2, 4, 5}) == gq(-1));
    CHECK_FALSE(g3.generic());
    CHECK_THROWS_AS(special_config(gq(0)), DomainError);
    ConfigurationF g3f = special_config(Cd(2.0, 0.0));
    CHECK(std::abs(g3f.delta({1, 2, 4})) == 0.0);
}

TEST_CASE("lie_trilog: antisymmetry, invariance, memoization oracle") {
    Rng rng(71);
    ConfigurationQ cq = random_exact_configuration(rng, 3, 6);
    double base = lie_trilog(cq);
    // transposition negates
    auto vs = cq.vectors();
    std::swap(vs[0], vs[3]);
    CHECK(lie_trilog(ConfigurationQ(3, vs)) == doctest::Approx(-base).epsilon(1e-12));
    // straight 720-term loop without memoization agrees
    CHECK(lie_trilog(cq, false) == doctest::Approx(base).epsilon(1e-13));

    // GL3 + rescaling invariance (float backend)
    ConfigurationF cf = to_float(cq);
    double fbase = lie_trilog(cf);
    std::vector<std::vector<Cd>> g = {{Cd(1, 0.2), Cd(0.3, 0), Cd(0, -0.4)},
                                      {Cd(0, 0.7), Cd(1.1, 0), Cd(0.2, 0.1)},
                                      {Cd(0.4, 0), Cd(-0.3, 0.6), Cd(0.9, 0)}};
    std::vector<std::vector<Cd>> moved;
    for (const auto& v : cf.vectors()) {
        std::vector<Cd> nv(3, Cd(0, 0));
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) nv[r] += g[r][s] * v[s];
        moved.push_back(std::move(nv));
    }
    CHECK(lie_trilog(ConfigurationF(3, moved)) == doctest::Approx(fbase).epsilon(1e-10));
    auto scaled = cf.vectors();
    for (auto& x : scaled[4]) x *= Cd(0.2, -1.7);
    CHECK(lie_trilog(ConfigurationF(3, scaled)) == doctest::Approx(fbase).epsilon(1e-10));
}

TEST_CASE("a triple ratio landing exactly on 1 is rejected") {
    // built so that the identity permutation's ratio is exactly 1 while all
    // twenty maximal minors stay nonzero
    ConfigurationQ c(3, {{gq(1), gq(0), gq(0)},
                         {gq(0), gq(1), gq(0)},
                         {gq(0), gq(0), gq(1)},
                         {gq(1), gq(2), gq(3)},
                         {gq(4), gq(1), gq(2)},
                         {gq(3), gq(1), gq(5)}});
    REQUIRE(c.generic());
    CHECK(triple_ratio_arg(c) == gq(1));
    CHECK_THROWS_AS(lie_trilog(c), CrossRatioDegenerateError);
}

TEST_CASE("difference_term: log-shift cancellation and degeneracy") {
    Rng rng(72);
    ConfigurationQ cq = random_exact_configuration(rng, 3, 6);
    ConfigurationF cf = to_float(cq);
    double base = difference_term(cf);
    auto vs = cf.vectors();
    for (auto& x : vs[2]) x *= Cd(-3.1, 0.7);
    CHECK(difference_term(ConfigurationF(3, vs)) == doctest::Approx(base).epsilon(1e-10));
    CHECK(difference_term(cf.with_volume_form(Cd(0.01, 2.3))) ==
          doctest::Approx(base).epsilon(1e-10));
    auto dup = cf.vectors();
    dup[5] = dup[1];
    CHECK_THROWS_AS(difference_term(ConfigurationF(3, dup)), DegenerateError);
    CHECK_THROWS_AS(lie_trilog(ConfigurationF(3, dup)), DegenerateError);
}

TEST_CASE("grass_trilog_closed ties the three numbers together") {
    Rng rng(73);
    ConfigurationQ cq = random_exact_configuration(rng, 3, 6);
    TrilogReport r = grass_trilog_closed(cq);
    CHECK(r.closed == r.lie - r.diff_term);
    auto vs = cq.vectors();
    std::swap(vs[2], vs[5]);
    TrilogReport s = grass_trilog_closed(ConfigurationQ(3, vs));
    CHECK(s.closed == doctest::Approx(-r.closed).epsilon(1e-12));
}

TEST_CASE("grass_dilog closed side") {
    // real covectors give a real cross-ratio, so D vanishes
    ConfigurationF real(2, {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}, {{1, 0}, {1, 0}}, {{1, 0}, {3, 0}}});
    CHECK(grass_dilog(real, DilogMode::closed).closed == 0.0);
    // transposition antisymmetry, verified numerically rather than assumed
    Rng rng(74);
    ConfigurationF cf = conditioned_float_configuration(rng, 2, 4, 1e3);
    double base = grass_dilog(cf, DilogMode::closed).closed;
    auto vs = cf.vectors();
    std::swap(vs[0], vs[1]);
    CHECK(grass_dilog(ConfigurationF(2, vs), DilogMode::closed).closed ==
          doctest::Approx(-base).epsilon(1e-11));
    auto dup = cf.vectors();
    dup[3] = dup[0];
    CHECK_THROWS_AS(grass_dilog(ConfigurationF(2, dup), DilogMode::closed), DegenerateError);
}

TEST_CASE("special stratum extrapolation hits the classical trilogarithm") {
    const double eps[4] = {8e-3, 4e-3, 2e-3, 1e-3};
    double got = special_stratum_value(gq(1, 2), eps);
    CHECK(std::fabs(got - sv_trilog(Cd(0.5, 0))) <= 1e-3);
    double gotneg = special_stratum_value(gq(-1), eps);
    CHECK(std::fabs(gotneg - sv_trilog(Cd(-1, 0))) <= 1e-3);
    CHECK_THROWS_AS(special_stratum_value(gq(1, 2), std::span<const double>(eps, 1)), DomainError);
}

TEST_CASE("raw special_config restriction keeps the documented convention") {
    // On the displayed column order the closed form restricts to -L3(-z);
    // regression-pin that reading so the normalization stays visible.
    Rng rng(75);
    GaussianRational z = gq(1, 2);
    ConfigurationQ base = special_config(z);
    std::vector<std::vector<GaussianRational>> dir(6);
    for (auto& row : dir) {
        row.resize(3);
        for (auto& x : row) x = rng.small_gaussian();
    }
    const double eps[4] = {8e-3, 4e-3, 2e-3, 1e-3};
    std::vector<double> vals;
    for (double e : eps) {
        GaussianRational ge(Rational::from_double(e));
        auto v = base.vectors();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 3; ++j) v[i][j] += ge * dir[i][j];
        vals.push_back(grass_trilog_closed(ConfigurationQ(3, std::move(v))).closed);
    }
    std::vector<double> p(vals);
    for (std::size_t l = 1; l < p.size(); ++l)
        for (std::size_t i = 0; i + l < p.size(); ++i)
            p[i] = (eps[i] * p[i + 1] - eps[i + l] * p[i]) / (eps[i] - eps[i + l]);
    CHECK(std::fabs(p[0] - (-sv_trilog(Cd(-0.5, 0)))) <= 1e-3);
}

TEST_CASE("drop equation: 7 points in dim 3") {
    Rng rng(76);
    for (int trial = 0; trial < 3; ++trial) {
        ConfigurationQ pts = random_exact_configuration(rng, 3, 7);
        Residual r = check_drop_equation(pts, TrilogFn::closed);
        CHECK(r.residual <= 1e-8 * r.scale);
        // lie and diff are recorded without a contract; just exercise them
        CHECK(std::isfinite(check_drop_equation(pts, TrilogFn::lie).residual));
        CHECK(std::isfinite(check_drop_equation(pts, TrilogFn::diff).residual));
    }
    ConfigurationQ pts = random_exact_configuration(rng, 3, 7);
    auto vs = pts.vectors();
    vs[6] = vs[0];
    CHECK_THROWS_AS(check_drop_equation(ConfigurationQ(3, vs), TrilogFn::closed),
                    DegenerateError);
}

TEST_CASE("projection equation: 7 points in dim 4") {
    Rng rng(77);
    for (int trial = 0; trial < 3; ++trial) {
        ConfigurationQ pts = random_exact_configuration(rng, 4, 7);
        Residual r = check_projection_equation(pts, TrilogFn::closed);
        CHECK(r.residual <= 1e-8 * r.scale);
    }
    CHECK_THROWS_AS(check_projection_equation(random_exact_configuration(rng, 3, 7),
                                              TrilogFn::closed),
                    DomainError);
}

TEST_CASE("one-form difference identity along random directions") {
    Rng rng(78);
    for (int trial = 0; trial < 5; ++trial) {
        ConfigurationQ cq = random_exact_configuration(rng, 2, 5);
        ConfigurationF cf = to_float(cq);
        ConfigTangent w;
        w.dv.resize(5);
        for (auto& row : w.dv) {
            row.resize(2);
            for (auto& x : row) x = rng.complex_box();
        }
        Residual r = check_oneform_difference(cf, w);
        CHECK(r.residual <= 1e-9 * r.scale);
    }
    // zero direction: all three terms vanish
    ConfigurationF cf = to_float(random_exact_configuration(rng, 2, 5));
    ConfigTangent zero;
    zero.dv.assign(5, std::vector<Cd>(2, Cd(0, 0)));
    Residual r = check_oneform_difference(cf, zero);
    CHECK(r.residual == doctest::Approx(0.0));
}

TEST_CASE("weight-2 and weight-3 coincidence checks") {
    Rng rng(79);
    for (int trial = 0; trial < 5; ++trial) {
        ConfigurationQ c3 = random_exact_configuration(rng, 2, 3);
        ConfigurationF cf3 = to_float(c3);
        FunctionSystem probe{2, cf3.vectors(), 0};
        ChartPoint p;
        p.t = {Cd(0.37 + 0.05 * trial, -0.41)};
        Tangent w = {0.3, -0.8};
        bool ok = true;
        for (const auto& l : probe.forms)
            if (std::abs(l[0] * p.t[0] + l[1]) < 0.05) ok = false;
        if (!ok) continue;
        CHECK(check_weight2_oneform(cf3, p, w) <= 1e-12);

        ConfigurationQ c4 = random_exact_configuration(rng, 2, 4);
        ConfigurationF cf4 = to_float(c4);
        FunctionSystem probe4{2, cf4.vectors(), 0};
        ok = true;
        for (const auto& l : probe4.forms)
            if (std::abs(l[0] * p.t[0] + l[1]) < 0.05) ok = false;
        if (!ok) continue;
        std::vector<Tangent> ws = {{0.3, -0.8}, {-1.1, 0.2}};
        CHECK(check_weight3_twoform(cf4, p, ws) <= 1e-12);
        // swapping the tangent slots negates both sides; the residual stays 0
        std::vector<Tangent> sw = {ws[1], ws[0]};
        CHECK(check_weight3_twoform(cf4, p, sw) <= 1e-12);
    }
    // proportional covectors are rejected
    ConfigurationF dup(2, {{{1, 0}, {2, 0}}, {{2, 0}, {4, 0}}, {{0, 0}, {1, 0}}});
    ChartPoint p{{Cd(0.3, 0.4)}, 0};
    Tangent w = {1.0, -0.5};
    CHECK_THROWS_AS(check_weight2_oneform(dup, p, w), DegenerateError);
    ConfigurationF dup4(2, {{{1, 0}, {2, 0}}, {{2, 0}, {4, 0}}, {{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
    std::vector<Tangent> ws2 = {{1.0, -0.5}, {0.2, 0.9}};
    CHECK_THROWS_AS(check_weight3_twoform(dup4, p, ws2), DegenerateError);
}

TEST_SUITE_END();
