#include "grasslog/form_eval.hpp"

#include <cmath>

#include "grasslog/alternation.hpp"

namespace grasslog {

namespace {

constexpr double kValueFloor = 1e-300;

Cd embed_value(const std::vector<Cd>& l, const ChartPoint& p) {
    const std::size_t n = l.size();
    Cd v = l[n - 1];
    for (std::size_t a = 0; a + 1 < n; ++a) v += l[a] * p.t[a];
    return v;
}

Cd tangent_complex(const Tangent& w, std::size_t a) {
    return {w[2 * a], w[2 * a + 1]};
}

// Per-function data at p: log|f_i| and the pairings <dlog f_i, w> for each
// supplied tangent vector.
struct EvalContext {
    int m = 0;
    std::vector<double> logabs;
    std::vector<std::vector<Cd>> pair; // [function][tangent]
};

EvalContext make_context(const FunctionSystem& fs, const ChartPoint& p,
                         std::span<const Tangent> ws) {
    const std::size_t n = static_cast<std::size_t>(fs.dim);
    if (p.t.size() != n - 1) throw IndexError("eval: chart point has wrong dimension");
    for (const auto& w : ws)
        if (w.size() != 2 * (n - 1)) throw IndexError("eval: tangent vector has wrong dimension");
    for (const auto& l : fs.forms)
        if (l.size() != n) throw IndexError("eval: covector has wrong dimension");

    std::vector<Cd> values(fs.forms.size());
    for (std::size_t i = 0; i < fs.forms.size(); ++i) {
        values[i] = embed_value(fs.forms[i], p);
        if (std::abs(values[i]) < kValueFloor)
            throw SingularityError("eval: form " + std::to_string(i) + " vanishes at the point");
    }

    EvalContext ctx;
    ctx.m = fs.function_count();
    ctx.logabs.resize(static_cast<std::size_t>(ctx.m));
    ctx.pair.assign(static_cast<std::size_t>(ctx.m), std::vector<Cd>(ws.size()));

    const bool ratio = fs.denom >= 0;
    const std::size_t d = ratio ? static_cast<std::size_t>(fs.denom) : 0;
    for (int i = 0; i < ctx.m; ++i) {
        std::size_t fi = ratio ? (static_cast<std::size_t>(i) >= d ? static_cast<std::size_t>(i) + 1
                                                                   : static_cast<std::size_t>(i))
                               : static_cast<std::size_t>(i);
        ctx.logabs[static_cast<std::size_t>(i)] =
            std::log(std::abs(values[fi])) - (ratio ? std::log(std::abs(values[d])) : 0.0);
        for (std::size_t k = 0; k < ws.size(); ++k) {
            Cd g = 0.0;
            for (std::size_t a = 0; a + 1 < n; ++a) {
                Cd grad = fs.forms[fi][a] / values[fi];
                if (ratio) grad -= fs.forms[d][a] / values[d];
                g += grad * tangent_complex(ws[k], a);
            }
            ctx.pair[static_cast<std::size_t>(i)][k] = g;
        }
    }
    return ctx;
}

double real_det(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    double r = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[piv][c])) piv = i;
        if (m[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            r = -r;
        }
        r *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            double f = m[i][c] / m[c][c];
            for (std::size_t j = c + 1; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return r;
}

Cd complex_det(std::vector<std::vector<Cd>> m) { return det(std::move(m)); }

double eval_definition(const EvalContext& ctx) {
    const int m = ctx.m;
    const int cols = m - 1;
    const int par = ((m - 1) / 2);
    std::vector<double> ckm;
    for (int k = 0; 2 * k + 1 <= m; ++k)
        ckm.push_back((binomial(m, 2 * k + 1) / factorial(m)).to_double());
    std::vector<double> terms;
    for (const auto& sp : permutations(m)) {
        for (int k = 0; 2 * k + 1 <= m; ++k) {
            double c = ckm[static_cast<std::size_t>(k)];
            double eps = ((par - k) % 2 == 0) ? 1.0 : -1.0;
            std::vector<std::vector<double>> M(static_cast<std::size_t>(cols),
                                               std::vector<double>(static_cast<std::size_t>(cols)));
            for (int s = 1; s <= cols; ++s) {
                std::size_t f = sp.p[static_cast<std::size_t>(s)];
                for (int w = 0; w < cols; ++w) {
                    Cd g = ctx.pair[f][static_cast<std::size_t>(w)];
                    M[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(w)] =
                        (s <= 2 * k) ? g.real() : g.imag();
                }
            }
            terms.push_back(-sp.sign * c * eps * ctx.logabs[sp.p[0]] * real_det(std::move(M)));
        }
    }
    return balanced_sum(std::move(terms));
}

double eval_holo(const EvalContext& ctx) {
    const int m = ctx.m;
    const int cols = m - 1;
    const double mfact = factorial(m).to_double();
    std::vector<Cd> terms;
    for (const auto& sp : permutations(m)) {
        for (int k = 1; k <= m; ++k) {
            double c = (((m - k - 1) % 2 + 2) % 2 == 0 ? 1.0 : -1.0) / mfact;
            std::vector<std::vector<Cd>> M(static_cast<std::size_t>(cols),
                                           std::vector<Cd>(static_cast<std::size_t>(cols)));
            for (int s = 1; s <= cols; ++s) {
                std::size_t f = sp.p[static_cast<std::size_t>(s)];
                for (int w = 0; w < cols; ++w) {
                    Cd g = ctx.pair[f][static_cast<std::size_t>(w)];
                    M[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(w)] =
                        (s <= k - 1) ? g : std::conj(g);
                }
            }
            terms.push_back(static_cast<double>(sp.sign) * c * ctx.logabs[sp.p[0]] *
                            complex_det(std::move(M)));
        }
    }
    Cd total = balanced_sum(std::move(terms));
    return (m % 2 == 1) ? total.real() : total.imag();
}

double eval_reduced(const EvalContext& ctx) {
    const int m = ctx.m;
    const int cols = m - 1;
    const double mfact = factorial(m).to_double();
    const bool even = (m % 2 == 0);
    const int nn = even ? m / 2 : (m + 1) / 2;
    std::vector<double> terms;
    for (const auto& sp : permutations(m)) {
        auto add_term = [&](int k, double coef) {
            std::vector<std::vector<Cd>> M(static_cast<std::size_t>(cols),
                                           std::vector<Cd>(static_cast<std::size_t>(cols)));
            for (int s = 1; s <= cols; ++s) {
                std::size_t f = sp.p[static_cast<std::size_t>(s)];
                for (int w = 0; w < cols; ++w) {
                    Cd g = ctx.pair[f][static_cast<std::size_t>(w)];
                    M[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(w)] =
                        (s <= k - 1) ? g : std::conj(g);
                }
            }
            Cd d = complex_det(std::move(M));
            terms.push_back(static_cast<double>(sp.sign) * coef * ctx.logabs[sp.p[0]] *
                            (even ? d.imag() : d.real()));
        };
        if (even) {
            for (int k = nn + 1; k <= m; ++k)
                add_term(k, 2.0 * ((k - 1) % 2 == 0 ? 1.0 : -1.0) / mfact);
        } else {
            add_term(nn, (nn % 2 == 0 ? 1.0 : -1.0) / mfact);
            for (int k = nn + 1; k <= m; ++k) add_term(k, 2.0 * (k % 2 == 0 ? 1.0 : -1.0) / mfact);
        }
    }
    return balanced_sum(std::move(terms));
}

} // namespace

FormValue pi_n(int n, Cd z) {
    if (n % 2 == 0) return {z.imag(), n};
    return {z.real(), n};
}

FormValue eval_r(const FunctionSystem& fs, const ChartPoint& p, std::span<const Tangent> ws,
                 RPresentation pres) {
    const int m = fs.function_count();
    if (m < 2 || m > 5) throw SizeError("eval_r: weight m must be in [2,5]");
    if (static_cast<int>(ws.size()) != m - 1)
        throw IndexError("eval_r: an (m-1)-form needs m-1 tangent vectors");
    EvalContext ctx = make_context(fs, p, ws);
    double v = 0.0;
    switch (pres) {
        case RPresentation::definition: v = eval_definition(ctx); break;
        case RPresentation::holo: v = eval_holo(ctx); break;
        case RPresentation::reduced: v = eval_reduced(ctx); break;
    }
    return {v, m};
}

std::pair<FormValue, FormValue> d_r_check(const FunctionSystem& fs, const ChartPoint& p,
                                          std::span<const Tangent> ws) {
    const int m = fs.function_count();
    if (static_cast<int>(ws.size()) != m)
        throw IndexError("d_r_check: the m-form needs m tangent vectors");
    const std::size_t nc = static_cast<std::size_t>(fs.dim) - 1;

    // stencil guard radius around the zero loci
    for (const auto& l : fs.forms) {
        Cd v = embed_value(l, p);
        double scale = 0.0;
        for (const Cd& a : l) scale += std::abs(a);
        if (std::abs(v) < 1e-6 * scale)
            throw SingularityError("d_r_check: stencil too close to a zero locus");
    }

    auto value_at = [&](const ChartPoint& q, int skip) {
        std::vector<Tangent> sub;
        sub.reserve(ws.size() - 1);
        for (int i = 0; i < m; ++i)
            if (i != skip) sub.push_back(ws[static_cast<std::size_t>(i)]);
        return eval_r(fs, q, sub, RPresentation::definition).value;
    };
    auto directional = [&](int i, double h) {
        ChartPoint plus = p, minus = p;
        for (std::size_t a = 0; a < nc; ++a) {
            Cd dw = tangent_complex(ws[static_cast<std::size_t>(i)], a);
            plus.t[a] += h * dw;
            minus.t[a] -= h * dw;
        }
        return (value_at(plus, i) - value_at(minus, i)) / (2.0 * h);
    };

    const double h = 1e-3;
    double fd = 0.0;
    for (int i = 0; i < m; ++i) {
        double d1 = directional(i, h);
        double d2 = directional(i, h / 2.0);
        double extrap = (4.0 * d2 - d1) / 3.0;
        fd += (i % 2 == 0 ? 1.0 : -1.0) * extrap;
    }

    EvalContext ctx = make_context(fs, p, ws);
    std::vector<std::vector<Cd>> M(static_cast<std::size_t>(m),
                                   std::vector<Cd>(static_cast<std::size_t>(m)));
    for (int j = 0; j < m; ++j)
        for (int w = 0; w < m; ++w)
            M[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)] =
                ctx.pair[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)];
    FormValue rhs = pi_n(m, complex_det(std::move(M)));
    rhs.value = -rhs.value;
    return {FormValue{fd, m}, rhs};
}

double dlog_abs(const std::vector<Cd>& l, const ChartPoint& p, const Tangent& w) {
    Cd v = embed_value(l, p);
    if (std::abs(v) < kValueFloor) throw SingularityError("dlog_abs: form vanishes at the point");
    Cd g = 0.0;
    for (std::size_t a = 0; a + 1 < l.size(); ++a) g += (l[a] / v) * tangent_complex(w, a);
    return g.real();
}

double darg(const std::vector<Cd>& l, const ChartPoint& p, const Tangent& w) {
    Cd v = embed_value(l, p);
    if (std::abs(v) < kValueFloor) throw SingularityError("darg: form vanishes at the point");
    Cd g = 0.0;
    for (std::size_t a = 0; a + 1 < l.size(); ++a) g += (l[a] / v) * tangent_complex(w, a);
    return g.imag();
}

} // namespace grasslog
