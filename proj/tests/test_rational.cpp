#include "doctest.h"

#include "grasslog/alternation.hpp"
#include "grasslog/formal_sum.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/rational.hpp"
#include "grasslog/rng.hpp"

using namespace grasslog;

TEST_SUITE_BEGIN("rational");

TEST_CASE("rational arithmetic is canonical") {
    Rational a(2, 4), b(1, 2);
    CHECK(a == b);
    CHECK((a + b).str() == "1");
    CHECK((a - b).is_zero());
    CHECK((Rational(3, 7) * Rational(7, 3)).str() == "1");
    CHECK((Rational(1, 3) / Rational(2, 9)).str() == "3/2");
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::from_string("-22/7").to_double() == doctest::Approx(-22.0 / 7.0));
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational i(Rational(0), Rational(1));
    CHECK((i * i) == GaussianRational(Rational(-1)));
    GaussianRational z(Rational(3, 2), Rational(-1, 3));
    CHECK((z / z) == GaussianRational(Rational(1)));
    CHECK((z * z.conj()).im.is_zero());
    CHECK(z.norm2() == Rational(9, 4) + Rational(1, 9));
    CHECK_THROWS_AS(z / GaussianRational(Rational(0)), DomainError);
    CHECK(z.str() == "3/2-1/3i");
}

TEST_CASE("binomial, factorial, bernoulli") {
    CHECK(binomial(6, 3) == Rational(20));
    CHECK(binomial(5, 7).is_zero());
    CHECK(factorial(6) == Rational(720));
    CHECK(bernoulli(0) == doctest::Approx(1.0));
    CHECK(bernoulli(1) == doctest::Approx(-0.5));
    CHECK(bernoulli(2) == doctest::Approx(1.0 / 6.0));
    CHECK(bernoulli(3) == doctest::Approx(0.0));
    CHECK(bernoulli(12) == doctest::Approx(-691.0 / 2730.0));
}

TEST_CASE("permutation table: counts and signs") {
    CHECK(permutations(3).size() == 6);
    CHECK(permutations(6).size() == 720);
    // lexicographically first is the identity, second differs by one swap
    CHECK(permutations(3)[0].sign == 1);
    CHECK(permutations(3)[1].sign == -1);
    int sum = 0;
    for (const auto& sp : permutations(5)) sum += sp.sign;
    CHECK(sum == 0);
    CHECK_THROWS_AS(permutations(9), SizeError);
}

TEST_CASE("alternation kills symmetric evaluators, counts signs") {
    double c = alternate<double>(4, [](std::span<const std::uint8_t>) { return 3.7; });
    CHECK(c == doctest::Approx(0.0));
    // sign-reading probe: F(sigma) = sgn(sigma) summed over S_n gives n!
    for (int n : {2, 3, 4, 6}) {
        const auto& perms = permutations(n);
        std::size_t k = 0;
        double got = alternate<double>(n, [&](std::span<const std::uint8_t>) {
            return static_cast<double>(perms[k++].sign);
        });
        CHECK(got == doctest::Approx(factorial(n).to_double()));
    }
    CHECK_THROWS_AS(alternate<double>(9, [](std::span<const std::uint8_t>) { return 0.0; }),
                    SizeError);
}

TEST_CASE("alternation is relabeling-consistent at float precision") {
    Rng rng(5);
    double table[6][6];
    for (auto& row : table)
        for (auto& x : row) x = rng.sym();
    auto eval = [&](std::span<const std::uint8_t> s) {
        return table[s[0]][s[1]] * table[s[2]][s[3]] + table[s[4]][s[5]];
    };
    // composing with a transposition negates the alternation
    auto eval_swapped = [&](std::span<const std::uint8_t> s) {
        std::uint8_t t[6] = {s[1], s[0], s[2], s[3], s[4], s[5]};
        return eval(std::span<const std::uint8_t>(t, 6));
    };
    double a = alternate<double>(6, eval);
    double b = alternate<double>(6, eval_swapped);
    double term_scale = 0.0;
    for (const auto& sp : permutations(6))
        term_scale += std::fabs(eval(std::span<const std::uint8_t>(sp.p.data(), 6)));
    CHECK(std::fabs(a + b) <= 1e-14 * term_scale);
}

TEST_CASE("alternation of an evaluator with a repeated argument vanishes") {
    // two identical labels make the evaluator transposition-symmetric
    Rng rng(6);
    double logs[6];
    for (double& x : logs) x = rng.sym();
    logs[4] = logs[1];
    double term_scale = 0.0;
    double a = alternate<double>(6, [&](std::span<const std::uint8_t> s) {
        double v = logs[s[0]] * logs[s[1]] * logs[s[2]];
        term_scale += std::fabs(v);
        return v;
    });
    CHECK(std::fabs(a) <= 1e-14 * term_scale);
}

TEST_CASE("formal sums cancel exactly") {
    FormalSum<int> s;
    s.add(3, Rational(1, 2));
    s.add(3, Rational(1, 2));
    s.add(5, Rational(-2));
    CHECK(s.coefficient(3) == Rational(1));
    s.add(3, Rational(-1));
    CHECK(s.size() == 1);
    FormalSum<int> t = s - s;
    CHECK(t.is_zero());
}

TEST_SUITE_END();
