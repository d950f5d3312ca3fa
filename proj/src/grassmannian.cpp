#include "grasslog/grassmannian.hpp"

#include <cmath>

#include "grasslog/alternation.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/rng.hpp"

namespace grasslog {

namespace {

int triple_index(int i, int j, int k) { // i < j < k among 0..5
    static int table[6][6][6];
    static bool built = [] {
        int pos = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) table[a][b][c] = pos++;
        return true;
    }();
    (void)built;
    return table[i][j][k];
}

template <class K>
struct TripleDeltas {
    std::vector<K> d; // by triple_index of the sorted triple

    explicit TripleDeltas(const Configuration<K>& c) {
        if (c.dim() != 3 || c.size() != 6)
            throw DomainError("weight-3 functions need 6 vectors in dim 3");
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int e = b + 1; e < 6; ++e) {
                    int idx[3] = {a, b, e};
                    K v = c.delta(std::span<const int>(idx, 3));
                    if (ScalarOps<K>::is_zero(v))
                        throw DegenerateError("Delta(" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(e) +
                                              ") = 0");
                    d.push_back(std::move(v));
                }
    }

    // Signed lookup for an arbitrary index order.
    K get(int i, int j, int k) const {
        int a = i, b = j, e = k;
        bool neg = false;
        if (a > b) { std::swap(a, b); neg = !neg; }
        if (b > e) { std::swap(b, e); neg = !neg; }
        if (a > b) { std::swap(a, b); neg = !neg; }
        const K& v = d[static_cast<std::size_t>(triple_index(a, b, e))];
        return neg ? -v : v;
    }

    K ratio(std::span<const std::uint8_t> s) const {
        return (get(s[0], s[1], s[3]) * get(s[1], s[2], s[4]) * get(s[2], s[0], s[5])) /
               (get(s[0], s[1], s[4]) * get(s[1], s[2], s[5]) * get(s[2], s[0], s[3]));
    }
};

// Memoization keys: exact ratios compare exactly; float ratios are
// quantized at 1e-12 (the triple ratio has large stabilizer subgroups).
struct QuantKey {
    double re, im;
    bool operator<(const QuantKey& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
};
QuantKey quantize(Cd z) {
    return {std::nearbyint(z.real() * 1e12) * 1e-12, std::nearbyint(z.imag() * 1e12) * 1e-12};
}

template <class K, class Map, class KeyFn>
double lie_trilog_impl(const Configuration<K>& c, bool memoize, Map& memo, KeyFn&& key_of) {
    TripleDeltas<K> tab(c);
    double sum = alternate<double>(6, [&](std::span<const std::uint8_t> s) {
        K r = tab.ratio(s);
        if (r == K(1)) throw CrossRatioDegenerateError("lie_trilog: triple ratio = 1");
        if (!memoize) return sv_trilog(ScalarOps<K>::to_complex(r));
        auto key = key_of(r);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        double v = sv_trilog(ScalarOps<K>::to_complex(r));
        memo.emplace(std::move(key), v);
        return v;
    });
    return sum / 90.0;
}

template <class K>
double difference_term_impl(const Configuration<K>& c) {
    TripleDeltas<K> tab(c);
    std::vector<double> logs; // |Delta| is symmetric; no parity needed
    logs.reserve(20);
    for (std::size_t i = 0; i < tab.d.size(); ++i) {
        if constexpr (ScalarOps<K>::exact) {
            logs.push_back(0.5 * std::log(tab.d[i].norm2().to_double()));
        } else {
            logs.push_back(std::log(std::abs(tab.d[i])));
        }
    }
    auto L = [&](int i, int j, int k) {
        int a = i, b = j, e = k;
        if (a > b) std::swap(a, b);
        if (b > e) std::swap(b, e);
        if (a > b) std::swap(a, b);
        return logs[static_cast<std::size_t>(triple_index(a, b, e))];
    };
    double sum = alternate<double>(6, [&](std::span<const std::uint8_t> s) {
        return L(s[0], s[1], s[2]) * L(s[1], s[2], s[3]) * L(s[2], s[3], s[4]);
    });
    return sum / 9.0;
}

template <class K>
TrilogReport grass_trilog_closed_impl(const Configuration<K>& c) {
    TrilogReport r;
    r.lie = lie_trilog(c);
    r.diff_term = difference_term(c);
    r.closed = r.lie - r.diff_term;
    return r;
}

template <class K>
Residual functional_equation(const Configuration<K>& points, TrilogFn fn, bool project) {
    if (points.size() != 7) throw DomainError("functional equation: need 7 points");
    if (points.dim() != (project ? 4 : 3))
        throw DomainError(project ? "projection equation: dim must be 4"
                                  : "drop equation: dim must be 3");
    auto value = [&](const Configuration<K>& c) {
        switch (fn) {
            case TrilogFn::lie: return lie_trilog(c);
            case TrilogFn::diff: return difference_term(c);
            default: {
                TrilogReport r = grass_trilog_closed_impl(c);
                return r.closed;
            }
        }
    };
    double acc = 0.0, scale = 0.0;
    for (int i = 0; i < 7; ++i) {
        Configuration<K> sub = project ? points.project(i) : points.drop(i);
        double v = value(sub);
        acc += (i % 2 == 0) ? v : -v;
        scale += std::fabs(v);
    }
    return {std::fabs(acc), scale};
}

} // namespace

double lie_trilog(const ConfigurationF& c, bool memoize) {
    std::map<QuantKey, double> memo;
    return lie_trilog_impl(c, memoize, memo, [](const Cd& r) { return quantize(r); });
}

double lie_trilog(const ConfigurationQ& c, bool memoize) {
    std::map<GaussianRational, double> memo;
    return lie_trilog_impl(c, memoize, memo, [](const GaussianRational& r) { return r; });
}

double difference_term(const ConfigurationF& c) { return difference_term_impl(c); }
double difference_term(const ConfigurationQ& c) { return difference_term_impl(c); }

TrilogReport grass_trilog_closed(const ConfigurationF& c) { return grass_trilog_closed_impl(c); }
TrilogReport grass_trilog_closed(const ConfigurationQ& c) { return grass_trilog_closed_impl(c); }

DilogResult grass_dilog(const ConfigurationF& c, DilogMode mode, long long budget, double tol) {
    if (c.dim() != 2 || c.size() != 4)
        throw DomainError("grass_dilog: need 4 covectors in dim 2");
    DilogResult out;
    static const int pairs[4][2] = {{0, 2}, {1, 3}, {0, 3}, {1, 2}};
    for (const auto& p : pairs) {
        int idx[2] = {p[0], p[1]};
        if (std::abs(c.delta(std::span<const int>(idx, 2))) == 0.0)
            throw DegenerateError("grass_dilog: Delta(" + std::to_string(p[0]) + "," +
                                  std::to_string(p[1]) + ") = 0");
    }
    if (mode != DilogMode::numeric) out.closed = bloch_wigner(cross_ratio(c));
    if (mode != DilogMode::closed) {
        Cp1Integrand intg;
        intg.kernel = Cp1Kernel::dilog;
        intg.covectors = c.vectors();
        QuadratureEstimate est = integrate_cp1(intg, budget, tol);
        est.value *= -orientation_tag() / M_PI;
        est.sigma /= M_PI;
        out.numeric = est;
    }
    return out;
}

ConfigurationQ special_config(const GaussianRational& z) {
    if (z.is_zero()) throw DomainError("special_config: z = 0 is excluded");
    GaussianRational o(1), zero(0);
    std::vector<std::vector<GaussianRational>> v = {
        {o, zero, zero}, {zero, o, zero}, {zero, zero, o},
        {o, o, zero},    {zero, o, o},    {o, zero, z}};
    return ConfigurationQ(3, std::move(v));
}

ConfigurationF special_config(Cd z) {
    if (z == Cd(0.0, 0.0)) throw DomainError("special_config: z = 0 is excluded");
    std::vector<std::vector<Cd>> v = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                      {1, 1, 0}, {0, 1, 1}, {1, 0, z}};
    return ConfigurationF(3, std::move(v));
}

double special_stratum_value(const GaussianRational& z, std::span<const double> epsilons,
                             std::uint64_t direction_seed) {
    if (epsilons.size() < 2) throw DomainError("special_stratum_value: need >= 2 epsilons");
    // Stratum family normalized so that its closed-form restriction is the
    // classical single-valued trilogarithm of z: relative to special_config
    // the two middle columns are transposed (an odd relabeling, hence a sign)
    // and the parameter enters negated. On the raw special_config ordering
    // the restriction is -L3(-z) instead.
    GaussianRational o(1), nil(0);
    std::vector<std::vector<GaussianRational>> cols = {{o, nil, nil}, {nil, o, nil},
                                                       {nil, nil, o}, {nil, o, o},
                                                       {o, o, nil},   {o, nil, -z}};
    if (z.is_zero()) throw DomainError("special_stratum_value: z = 0 is excluded");
    ConfigurationQ base(3, std::move(cols));

    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(direction_seed + static_cast<std::uint64_t>(attempt));
        std::vector<std::vector<GaussianRational>> dir(6);
        for (auto& row : dir) {
            row.resize(3);
            for (auto& x : row) x = rng.small_gaussian();
        }
        try {
            std::vector<double> vals;
            for (double eps : epsilons) {
                GaussianRational e(Rational::from_double(eps));
                std::vector<std::vector<GaussianRational>> v = base.vectors();
                for (int i = 0; i < 6; ++i)
                    for (int j = 0; j < 3; ++j)
                        v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                            e * dir[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                ConfigurationQ pert(3, std::move(v));
                vals.push_back(grass_trilog_closed(pert).closed);
            }
            // Neville extrapolation of the polynomial through (eps_i, P_i) to 0.
            std::vector<double> p(vals);
            for (std::size_t level = 1; level < p.size(); ++level)
                for (std::size_t i = 0; i + level < p.size(); ++i) {
                    double e0 = epsilons[i], e1 = epsilons[i + level];
                    p[i] = (e0 * p[i + 1] - e1 * p[i]) / (e0 - e1);
                }
            return p[0];
        } catch (const DegenerateError&) {
            continue; // perturbation direction still degenerate; re-draw
        }
    }
    throw DegenerateError("special_stratum_value: no generic perturbation direction found");
}

Residual check_drop_equation(const ConfigurationQ& points, TrilogFn fn) {
    return functional_equation(points, fn, false);
}
Residual check_drop_equation(const ConfigurationF& points, TrilogFn fn) {
    return functional_equation(points, fn, false);
}
Residual check_projection_equation(const ConfigurationQ& points, TrilogFn fn) {
    return functional_equation(points, fn, true);
}
Residual check_projection_equation(const ConfigurationF& points, TrilogFn fn) {
    return functional_equation(points, fn, true);
}

Residual check_oneform_difference(const ConfigurationF& c, const ConfigTangent& w) {
    double g = oneform_grass_13(c, w);
    double l = oneform_lie_13(c, w);
    double d = logproduct_derivative(c, w) / 9.0;
    return {std::fabs(g - l - d), std::fabs(g) + std::fabs(l) + std::fabs(d) + 1e-30};
}

namespace {

void require_pairwise_independent(const ConfigurationF& c) {
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j) {
            int idx[2] = {i, j};
            Cd d = c.delta(std::span<const int>(idx, 2));
            double ni = std::sqrt(std::norm(c.vector(i)[0]) + std::norm(c.vector(i)[1]));
            double nj = std::sqrt(std::norm(c.vector(j)[0]) + std::norm(c.vector(j)[1]));
            if (std::abs(d) <= 1e-14 * ni * nj)
                throw DegenerateError("covectors " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are proportional");
        }
}

} // namespace

double check_weight2_oneform(const ConfigurationF& c, const ChartPoint& p, const Tangent& w) {
    if (c.dim() != 2 || c.size() != 3)
        throw DomainError("check_weight2_oneform: need 3 covectors in dim 2");
    require_pairwise_independent(c);
    std::vector<Tangent> ws = {w};
    double lhs = 0.5 * alternate<double>(3, [&](std::span<const std::uint8_t> s) {
        FunctionSystem raw{2, {c.vector(s[0]), c.vector(s[1])}, -1};
        return eval_r(raw, p, ws).value;
    });
    FunctionSystem ratio{2, c.vectors(), 0};
    double rhs = eval_r(ratio, p, ws).value;
    return std::fabs(lhs - rhs);
}

double check_weight3_twoform(const ConfigurationF& c, const ChartPoint& p,
                             std::span<const Tangent> ws) {
    if (c.dim() != 2 || c.size() != 4)
        throw DomainError("check_weight3_twoform: need 4 covectors in dim 2");
    if (ws.size() != 2) throw IndexError("check_weight3_twoform: need 2 tangent vectors");
    require_pairwise_independent(c);
    double lhs = -(1.0 / 6.0) * alternate<double>(4, [&](std::span<const std::uint8_t> s) {
        FunctionSystem raw{2, {c.vector(s[0]), c.vector(s[1]), c.vector(s[2])}, -1};
        return eval_r(raw, p, ws).value;
    });
    FunctionSystem ratio{2, c.vectors(), 0};
    double rhs = eval_r(ratio, p, ws).value;
    return std::fabs(lhs - rhs);
}

} // namespace grasslog
