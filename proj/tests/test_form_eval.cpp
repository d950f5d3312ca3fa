#include "doctest.h"

#include <cmath>

#include "grasslog/config_forms.hpp"
#include "grasslog/form_eval.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/rng.hpp"

using namespace grasslog;

namespace {

FunctionSystem random_ratio_system(Rng& rng, int dim, int forms) {
    FunctionSystem fs;
    fs.dim = dim;
    fs.denom = 0;
    for (int i = 0; i < forms; ++i) {
        std::vector<Cd> l(static_cast<std::size_t>(dim));
        for (auto& x : l) x = rng.complex_box();
        fs.forms.push_back(std::move(l));
    }
    return fs;
}

ChartPoint point_off_loci(Rng& rng, const FunctionSystem& fs) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        ChartPoint p;
        for (int a = 0; a + 1 < fs.dim; ++a) p.t.push_back(rng.complex_box());
        bool ok = true;
        for (const auto& l : fs.forms) {
            Cd v = l.back();
            for (int a = 0; a + 1 < fs.dim; ++a) v += l[static_cast<std::size_t>(a)] * p.t[static_cast<std::size_t>(a)];
            if (std::abs(v) < 0.1) ok = false;
        }
        if (ok) return p;
    }
    throw std::runtime_error("no point found");
}

Tangent rand_tangent(Rng& rng, int dim) {
    Tangent w(2 * static_cast<std::size_t>(dim - 1));
    for (auto& x : w) x = rng.sym();
    return w;
}

} // namespace

TEST_SUITE_BEGIN("form_eval");

TEST_CASE("pi_n parity split") {
    CHECK(pi_n(1, Cd(3, 4)).value == 3.0);
    CHECK_FALSE(pi_n(1, Cd(3, 4)).parity_even());
    CHECK(pi_n(2, Cd(3, 4)).value == 4.0);
    CHECK(pi_n(2, Cd(3, 4)).parity_even());
    CHECK(pi_n(3, Cd(-2, 0)).value == -2.0);
}

TEST_CASE("dlog_abs and darg on the coordinate form") {
    // l(t) = t_1 on CP^2, p = (2, 3)
    std::vector<Cd> l = {Cd(1, 0), Cd(0, 0), Cd(0, 0)};
    ChartPoint p{{Cd(2, 0), Cd(3, 0)}, 0};
    Tangent re_dir = {1, 0, 0, 0};
    CHECK(dlog_abs(l, p, re_dir) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(darg(l, p, re_dir) == doctest::Approx(0.0));
    Tangent im_dir = {0, 1, 0, 0};
    CHECK(dlog_abs(l, p, im_dir) == doctest::Approx(0.0));
    CHECK(darg(l, p, im_dir) == doctest::Approx(0.5).epsilon(1e-15));
    // tangent along the circle |t_1| = const
    Tangent circle = {0, 2, 0, 0}; // i * t_1 direction at t_1 = 2
    CHECK(dlog_abs(l, p, circle) == doctest::Approx(0.0));
    // scaling l leaves both derivatives unchanged
    std::vector<Cd> l2 = {Cd(0, 5), Cd(0, 0), Cd(0, 0)};
    CHECK(dlog_abs(l2, p, re_dir) == doctest::Approx(dlog_abs(l, p, re_dir)));
    CHECK(darg(l2, p, re_dir) == doctest::Approx(darg(l, p, re_dir)));
    ChartPoint origin{{Cd(0, 0), Cd(0, 0)}, 0};
    CHECK_THROWS_AS(dlog_abs(l, origin, re_dir), SingularityError);
}

TEST_CASE("dlog_abs and darg match Richardson finite differences") {
    Rng rng(31);
    for (int c = 0; c < 30; ++c) {
        FunctionSystem fs = random_ratio_system(rng, 2, 2);
        ChartPoint p = point_off_loci(rng, fs);
        Tangent w = rand_tangent(rng, 2);
        const auto& l = fs.forms[0];
        auto at = [&](double h) {
            Cd t = p.t[0] + h * Cd(w[0], w[1]);
            return l[0] * t + l[1];
        };
        double h = 1e-6;
        double d1 = (std::log(std::abs(at(h))) - std::log(std::abs(at(-h)))) / (2 * h);
        double d2 = (std::log(std::abs(at(h / 2))) - std::log(std::abs(at(-h / 2)))) / h;
        CHECK(dlog_abs(l, p, w) == doctest::Approx((4 * d2 - d1) / 3).epsilon(1e-8));
        double a1 = (std::arg(at(h)) - std::arg(at(-h))) / (2 * h);
        double a2 = (std::arg(at(h / 2)) - std::arg(at(-h / 2))) / h;
        if (std::fabs(a1) < 1e5 && std::fabs(a2) < 1e5) // skip arg wraps
            CHECK(darg(l, p, w) == doctest::Approx((4 * a2 - a1) / 3).epsilon(1e-8));
    }
}

TEST_CASE("eval_r weight 2 equals the two-term hand expansion") {
    Rng rng(32);
    for (int c = 0; c < 10; ++c) {
        FunctionSystem fs = random_ratio_system(rng, 2, 3); // l_0, l_1, l_2 -> f_1, f_2
        ChartPoint p = point_off_loci(rng, fs);
        Tangent w = rand_tangent(rng, 2);
        std::vector<Tangent> ws = {w};
        double got = eval_r(fs, p, ws).value;
        // r_2(f_1, f_2) = -(log|f_1| darg f_2 - log|f_2| darg f_1), c_{0,2} = 1
        auto value_of = [&](std::size_t i) {
            return fs.forms[i][0] * p.t[0] + fs.forms[i][1];
        };
        double l1 = std::log(std::abs(value_of(1) / value_of(0)));
        double l2 = std::log(std::abs(value_of(2) / value_of(0)));
        auto darg_f = [&](std::size_t i) {
            Cd g = fs.forms[i][0] / value_of(i) - fs.forms[0][0] / value_of(0);
            return (g * Cd(w[0], w[1])).imag();
        };
        double want = -(l1 * darg_f(2) - l2 * darg_f(1));
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("eval_r vanishes when two function slots coincide") {
    Rng rng(33);
    FunctionSystem fs = random_ratio_system(rng, 2, 4);
    fs.forms[3] = fs.forms[2]; // f_2 = f_3
    ChartPoint p = point_off_loci(rng, fs);
    std::vector<Tangent> ws = {rand_tangent(rng, 2), rand_tangent(rng, 2)};
    CHECK(std::fabs(eval_r(fs, p, ws).value) <= 1e-14);
}

TEST_CASE("eval_r presentations agree and alternate correctly") {
    Rng rng(34);
    for (int m = 3; m <= 5; ++m) {
        int dim = (m == 3) ? 2 : 3;
        for (int c = 0; c < 20; ++c) {
            FunctionSystem fs = random_ratio_system(rng, dim, m + 1);
            ChartPoint p = point_off_loci(rng, fs);
            std::vector<Tangent> ws;
            for (int k = 0; k < m - 1; ++k) ws.push_back(rand_tangent(rng, dim));
            double a = eval_r(fs, p, ws, RPresentation::definition).value;
            double b = eval_r(fs, p, ws, RPresentation::holo).value;
            double d = eval_r(fs, p, ws, RPresentation::reduced).value;
            double scale = std::fabs(a) + 1.0;
            CHECK(std::fabs(a - b) <= 1e-9 * scale);
            CHECK(std::fabs(a - d) <= 1e-9 * scale);
            CHECK(eval_r(fs, p, ws).weight == m);
        }
    }
    // tangent-slot and function-slot antisymmetry
    FunctionSystem fs = random_ratio_system(rng, 2, 4);
    ChartPoint p = point_off_loci(rng, fs);
    std::vector<Tangent> ws = {rand_tangent(rng, 2), rand_tangent(rng, 2)};
    double base = eval_r(fs, p, ws).value;
    std::vector<Tangent> swapped = {ws[1], ws[0]};
    CHECK(eval_r(fs, p, swapped).value ==
          doctest::Approx(-base).epsilon(1e-14));
    std::swap(fs.forms[1], fs.forms[3]);
    CHECK(eval_r(fs, p, ws).value == doctest::Approx(-base).epsilon(1e-12));
}

TEST_CASE("eval_r guards") {
    Rng rng(35);
    FunctionSystem fs = random_ratio_system(rng, 2, 7);
    ChartPoint p = point_off_loci(rng, fs);
    std::vector<Tangent> ws = {rand_tangent(rng, 2)};
    CHECK_THROWS_AS(eval_r(fs, p, ws), SizeError); // m = 6 > 5
    FunctionSystem fs2 = random_ratio_system(rng, 2, 3);
    CHECK_THROWS_AS(eval_r(fs2, p, std::vector<Tangent>{}), IndexError);
    // evaluation on a zero locus
    FunctionSystem fs3{2, {{Cd(1, 0), Cd(0, 0)}, {Cd(0, 0), Cd(1, 0)}, {Cd(1, 0), Cd(1, 0)}}, 0};
    ChartPoint origin{{Cd(0, 0)}, 0}; // l_0(t) = t vanishes here
    CHECK_THROWS_AS(eval_r(fs3, origin, ws), SingularityError);
}

TEST_CASE("d_r_check: exterior derivative against -pi_m(dlog wedge)") {
    Rng rng(36);
    for (int m = 2; m <= 3; ++m) {
        int dim = (m == 2) ? 2 : 3;
        for (int c = 0; c < 50; ++c) {
            FunctionSystem fs = random_ratio_system(rng, dim, m + 1);
            ChartPoint p = point_off_loci(rng, fs);
            std::vector<Tangent> ws;
            for (int k = 0; k < m; ++k) ws.push_back(rand_tangent(rng, dim));
            auto [fd, rhs] = d_r_check(fs, p, ws);
            CHECK(std::fabs(fd.value - rhs.value) <= 1e-5 * (std::fabs(rhs.value) + 1.0));
        }
        // linearly dependent tangents: both sides vanish
        FunctionSystem fs = random_ratio_system(rng, dim, m + 1);
        ChartPoint p = point_off_loci(rng, fs);
        std::vector<Tangent> ws;
        Tangent w0 = rand_tangent(rng, dim);
        for (int k = 0; k < m; ++k) ws.push_back(w0);
        auto [fd, rhs] = d_r_check(fs, p, ws);
        CHECK(std::fabs(rhs.value) <= 1e-13);
        CHECK(std::fabs(fd.value) <= 1e-8);
    }
}

TEST_CASE("leray form of two linear functions") {
    // alpha_1(l1, l2) = l1 dl2 - l2 dl1
    std::vector<std::vector<Cd>> ls = {{Cd(2, 1), Cd(0, -1)}, {Cd(1, 0), Cd(3, 2)}};
    std::vector<Cd> z = {Cd(1, 1), Cd(-2, 0)};
    std::vector<std::vector<Cd>> ws = {{Cd(0.5, -0.25), Cd(1, 0)}};
    Cd l1 = ls[0][0] * z[0] + ls[0][1] * z[1];
    Cd l2 = ls[1][0] * z[0] + ls[1][1] * z[1];
    Cd dl1 = ls[0][0] * ws[0][0] + ls[0][1] * ws[0][1];
    Cd dl2 = ls[1][0] * ws[0][0] + ls[1][1] * ws[0][1];
    CHECK(std::abs(leray_form(ls, z, ws) - (l1 * dl2 - l2 * dl1)) <= 1e-14);
}

TEST_CASE("leray form equals Delta times the Euler contraction, exactly") {
    Rng rng(37);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<GaussianRational>> ls;
            for (int i = 0; i < n; ++i) {
                std::vector<GaussianRational> l(static_cast<std::size_t>(n));
                for (auto& x : l) x = rng.small_gaussian();
                ls.push_back(std::move(l));
            }
            std::vector<GaussianRational> z(static_cast<std::size_t>(n));
            for (auto& x : z) x = rng.small_gaussian();
            std::vector<std::vector<GaussianRational>> ws;
            for (int k = 0; k + 1 < n; ++k) {
                std::vector<GaussianRational> w(static_cast<std::size_t>(n));
                for (auto& x : w) x = rng.small_gaussian();
                ws.push_back(std::move(w));
            }
            GaussianRational lhs = leray_form(ls, z, ws);
            GaussianRational rhs =
                det(std::vector<std::vector<GaussianRational>>(ls)) * euler_contraction(z, ws);
            CHECK(lhs == rhs);
        }
        // linearly dependent forms: both sides vanish
        std::vector<std::vector<GaussianRational>> dep;
        std::vector<GaussianRational> base(static_cast<std::size_t>(n));
        for (auto& x : base) x = rng.small_gaussian();
        dep.push_back(base);
        for (auto& x : base) x *= GaussianRational(Rational(2));
        dep.push_back(base);
        for (int i = 2; i < n; ++i) {
            std::vector<GaussianRational> l(static_cast<std::size_t>(n));
            for (auto& x : l) x = rng.small_gaussian();
            dep.push_back(std::move(l));
        }
        std::vector<GaussianRational> z(static_cast<std::size_t>(n), GaussianRational(Rational(1)));
        std::vector<std::vector<GaussianRational>> ws;
        for (int k = 0; k + 1 < n; ++k) {
            std::vector<GaussianRational> w(static_cast<std::size_t>(n));
            for (auto& x : w) x = rng.small_gaussian();
            ws.push_back(std::move(w));
        }
        CHECK(leray_form(dep, z, ws) ==
              det(std::vector<std::vector<GaussianRational>>(dep)) * euler_contraction(z, ws));
        CHECK(det(std::vector<std::vector<GaussianRational>>(dep)).is_zero());
    }
}

TEST_CASE("weight-3 configuration one-forms: basic properties") {
    Rng rng(38);
    ConfigurationQ cq = random_exact_configuration(rng, 2, 5);
    ConfigurationF cf = to_float(cq);
    ConfigTangent zero;
    zero.dv.assign(5, std::vector<Cd>(2, Cd(0, 0)));
    CHECK(oneform_grass_13(cf, zero) == doctest::Approx(0.0));
    CHECK(oneform_lie_13(cf, zero) == doctest::Approx(0.0));
    // scaling flow: dv_i = l_i gives 0 by projective invariance
    ConfigTangent flow;
    flow.dv = cf.vectors();
    CHECK(std::fabs(oneform_grass_13(cf, flow)) <= 1e-10);
    CHECK(std::fabs(oneform_lie_13(cf, flow)) <= 1e-10);
    // repeated vector degenerates
    auto vs = cf.vectors();
    vs[3] = vs[0];
    ConfigTangent w;
    w.dv.assign(5, std::vector<Cd>(2, Cd(0.1, 0.2)));
    CHECK_THROWS_AS(oneform_grass_13(ConfigurationF(2, vs), w), DegenerateError);
    CHECK_THROWS_AS(oneform_lie_13(ConfigurationF(2, vs), w), DegenerateError);
}

TEST_CASE("regulator maps are the single-valued polylogarithms") {
    CHECK(regulator_r3_1(Cd(1, 0)) == doctest::Approx(kZeta3).epsilon(1e-13));
    CHECK(regulator_r3_1(Cd(0.5, 0)) == doctest::Approx(0.875 * kZeta3).epsilon(1e-13));
    CHECK(regulator_r2_1(Cd(0.77, 0)) == 0.0);
    CHECK(regulator_r2_1(Cd(0, 1)) == doctest::Approx(0.91596559417721901).epsilon(1e-12));
}

TEST_SUITE_END();
