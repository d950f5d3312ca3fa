#include "grasslog/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "grasslog/errors.hpp"
#include "grasslog/rng.hpp"

namespace grasslog {

namespace {

constexpr double kTubeRhoMax = 0.04;   // d <= 0.2 around each line
constexpr double kDistCutoff = 1e-7;   // grading cutoff on the line distance
constexpr double kUniformShare = 0.5;  // budget share of the FS-uniform stratum

using C3 = std::array<Cd, 3>;

double halton(long long i, int base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

struct LineFrame {
    C3 b1, b2, n; // unitary basis, n spanning the orthogonal complement of the line
    double norm;  // |l_j|_2
};

Cd hdot(const C3& a, const C3& b) { // <a, b> = sum conj(a_k) b_k
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

C3 normalize(C3 v) {
    double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
    for (auto& x : v) x /= n;
    return v;
}

LineFrame make_frame(const std::vector<Cd>& l) {
    LineFrame fr;
    fr.norm = std::sqrt(std::norm(l[0]) + std::norm(l[1]) + std::norm(l[2]));
    fr.n = normalize({std::conj(l[0]), std::conj(l[1]), std::conj(l[2])});
    // complete with the two coordinate directions least aligned with n
    int worst = 0;
    double mx = std::norm(fr.n[0]);
    for (int k = 1; k < 3; ++k)
        if (std::norm(fr.n[k]) > mx) {
            mx = std::norm(fr.n[k]);
            worst = k;
        }
    int p = (worst + 1) % 3, q = (worst + 2) % 3;
    if (p > q) std::swap(p, q);
    C3 e1{}, e2{};
    e1[p] = 1.0;
    e2[q] = 1.0;
    Cd c = hdot(fr.n, e1);
    for (int k = 0; k < 3; ++k) e1[k] -= c * fr.n[k];
    fr.b1 = normalize(e1);
    c = hdot(fr.n, e2);
    Cd c2 = hdot(fr.b1, e2);
    for (int k = 0; k < 3; ++k) e2[k] -= c * fr.n[k] + c2 * fr.b1[k];
    fr.b2 = normalize(e2);
    return fr;
}

struct Cp2Context {
    const Cp2Integrand* intg;
    std::vector<LineFrame> frames;

    double line_distance(const C3& z, std::size_t j) const { // |z| = 1 assumed
        const auto& l = intg->covectors[j];
        return std::abs(l[0] * z[0] + l[1] * z[1] + l[2] * z[2]) / frames[j].norm;
    }

    // Integrand over the Fubini-Study probability measure:
    //   h = log|f_1| det4(dlog|f_j| rows) * pi^2 (1+|w|^2)^3 / 2
    double density_ratio(const C3& z) const {
        const auto& ls = intg->covectors;
        std::array<Cd, 6> v;
        for (std::size_t i = 0; i < 6; ++i) {
            v[i] = ls[i][0] * z[0] + ls[i][1] * z[1] + ls[i][2] * z[2];
            if (std::abs(v[i]) / frames[i].norm < kDistCutoff) return 0.0;
        }
        int k = 0;
        double mx = std::norm(z[0]);
        for (int i = 1; i < 3; ++i)
            if (std::norm(z[i]) > mx) {
                mx = std::norm(z[i]);
                k = i;
            }
        int a = (k == 0) ? 1 : 0;
        int b = (k == 2) ? 1 : 2;
        Cd zk = z[static_cast<std::size_t>(k)];
        Cd w1 = z[static_cast<std::size_t>(a)] / zk, w2 = z[static_cast<std::size_t>(b)] / zk;
        double m[4][4];
        for (int j = 2; j <= 5; ++j) {
            Cd vj = v[static_cast<std::size_t>(j)] / zk, v0 = v[0] / zk;
            Cd g1 = ls[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] / vj -
                    ls[0][static_cast<std::size_t>(a)] / v0;
            Cd g2 = ls[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] / vj -
                    ls[0][static_cast<std::size_t>(b)] / v0;
            m[j - 2][0] = g1.real();
            m[j - 2][1] = -g1.imag();
            m[j - 2][2] = g2.real();
            m[j - 2][3] = -g2.imag();
        }
        double det = 0.0;
        {
            double t[4][4];
            std::copy(&m[0][0], &m[0][0] + 16, &t[0][0]);
            det = 1.0;
            for (int c = 0; c < 4; ++c) {
                int piv = c;
                for (int r = c + 1; r < 4; ++r)
                    if (std::fabs(t[r][c]) > std::fabs(t[piv][c])) piv = r;
                if (t[piv][c] == 0.0) {
                    det = 0.0;
                    break;
                }
                if (piv != c) {
                    std::swap_ranges(t[piv], t[piv] + 4, t[c]);
                    det = -det;
                }
                det *= t[c][c];
                for (int r = c + 1; r < 4; ++r) {
                    double f = t[r][c] / t[c][c];
                    for (int cc = c + 1; cc < 4; ++cc) t[r][cc] -= f * t[c][cc];
                }
            }
        }
        double logf1 = std::log(std::abs(v[1]) / std::abs(v[0]));
        double fs = 1.0 + std::norm(w1) + std::norm(w2);
        return logf1 * det * fs * fs * fs * (M_PI * M_PI / 2.0);
    }

    // Mixture density (w.r.t. the FS probability measure) of the stratified
    // sampler: uniform share plus one graded tube per line. The tubes sample
    // the line distance as d = d_max v^2 with v uniform (Duffy grading), so
    // the density of rho = d^2 is g(rho) = rho^{-3/4} d_max^{-1/2} / (4(1-v0)).
    double mixture_density(const C3& z) const {
        double q = kUniformShare;
        const double d_max = std::sqrt(kTubeRhoMax);
        const double v0 = std::sqrt(kDistCutoff / d_max);
        for (std::size_t j = 0; j < 6; ++j) {
            double d = line_distance(z, j);
            double rho = d * d;
            double v = std::sqrt(d / d_max);
            if (v <= v0 || v >= 1.0) continue;
            double g = 1.0 / ((1.0 - v0) * 4.0 * d_max * d_max * v * v * v);
            q += (1.0 - kUniformShare) / 6.0 * g / (2.0 * (1.0 - rho));
        }
        return q;
    }
};

} // namespace

QuadratureEstimate integrate_cp2(const Cp2Integrand& intg, long long budget, std::uint64_t seed) {
    if (intg.covectors.size() != 6) throw IndexError("integrate_cp2: need 6 covectors");
    for (const auto& l : intg.covectors)
        if (l.size() != 3) throw IndexError("integrate_cp2: covectors must have dim 3");

    // Identically-zero wedge: two proportional forms among f_2..f_5.
    for (std::size_t i = 2; i <= 5; ++i)
        for (std::size_t j = i + 1; j <= 5; ++j) {
            const auto &a = intg.covectors[i], &b = intg.covectors[j];
            double cross = 0.0, na = 0.0, nb = 0.0;
            for (int p = 0; p < 3; ++p) {
                for (int q = p + 1; q < 3; ++q)
                    cross += std::norm(a[static_cast<std::size_t>(p)] * b[static_cast<std::size_t>(q)] -
                                       a[static_cast<std::size_t>(q)] * b[static_cast<std::size_t>(p)]);
                na += std::norm(a[static_cast<std::size_t>(p)]);
                nb += std::norm(b[static_cast<std::size_t>(p)]);
            }
            if (std::sqrt(cross) <= 1e-14 * std::sqrt(na * nb))
                return {0.0, 0.0, 0, "cp2-qmc", orientation_tag(), false};
        }

    // Genericity: pairwise distinct lines and no concurrent triples.
    {
        std::vector<std::vector<Cd>> ls = intg.covectors;
        ConfigurationF cfg(3, ls);
        for (const auto& s : subsets(6, 3)) {
            Cd d = cfg.delta(std::span<const int>(s.data(), s.size()));
            double scale = 1.0;
            for (int i : s) {
                double n2 = 0.0;
                for (const Cd& x : cfg.vector(i)) n2 += std::norm(x);
                scale *= std::sqrt(n2);
            }
            if (std::abs(d) < 1e-8 * scale)
                throw NonGenericError("integrate_cp2: lines " + std::to_string(s[0]) + "," +
                                      std::to_string(s[1]) + "," + std::to_string(s[2]) +
                                      " nearly concurrent");
        }
    }

    Cp2Context ctx;
    ctx.intg = &intg;
    for (const auto& l : intg.covectors) ctx.frames.push_back(make_frame(l));

    const int kBatches = 16;
    const long long per_batch = std::max<long long>(budget / kBatches, 16);
    const long long n_uniform = static_cast<long long>(per_batch * kUniformShare);
    const long long n_tube = (per_batch - n_uniform) / 6;

    Rng shift_rng(seed);
    std::array<double, 16 * 7 * 4> shifts{};
    for (auto& s : shifts) s = shift_rng.uniform();

    const double d_max = std::sqrt(kTubeRhoMax);
    const double v0 = std::sqrt(kDistCutoff / d_max);

    std::vector<double> batch_vals;
    long long samples = 0;
    for (int b = 0; b < kBatches; ++b) {
        auto shifted = [&](long long i, int comp, int dim) {
            double u = halton(i + 64, dim == 0 ? 2 : dim == 1 ? 3 : dim == 2 ? 5 : 7);
            double s = shifts[static_cast<std::size_t>((b * 7 + comp) * 4 + dim)];
            u += s;
            return u - std::floor(u);
        };

        double mean_uniform = 0.0;
        for (long long i = 0; i < n_uniform; ++i) {
            double u1 = shifted(i, 0, 0), u2 = shifted(i, 0, 1);
            double u3 = shifted(i, 0, 2), u4 = shifted(i, 0, 3);
            double s1 = 1.0 - std::sqrt(u1);
            double s2 = std::sqrt(u1) * u2;
            double s0 = 1.0 - s1 - s2;
            if (s0 < 0.0) s0 = 0.0;
            C3 z{std::sqrt(s0), std::sqrt(s1) * std::polar(1.0, 2.0 * M_PI * u3),
                 std::sqrt(s2) * std::polar(1.0, 2.0 * M_PI * u4)};
            double h = ctx.density_ratio(z);
            if (h != 0.0) mean_uniform += h / ctx.mixture_density(z);
        }
        if (n_uniform > 0) mean_uniform /= static_cast<double>(n_uniform);
        samples += n_uniform;

        double tube_total = 0.0;
        for (int j = 0; j < 6; ++j) {
            const LineFrame& fr = ctx.frames[static_cast<std::size_t>(j)];
            double mean_tube = 0.0;
            for (long long i = 0; i < n_tube; ++i) {
                double u1 = shifted(i, 1 + j, 0), u2 = shifted(i, 1 + j, 1);
                double u3 = shifted(i, 1 + j, 2), u4 = shifted(i, 1 + j, 3);
                double v = v0 + u3 * (1.0 - v0);
                double d = d_max * v * v;
                double rho = d * d;
                Cd along = std::polar(1.0, 2.0 * M_PI * u2);
                Cd off = std::polar(1.0, 2.0 * M_PI * u4);
                double c1 = std::sqrt((1.0 - rho) * (1.0 - u1));
                double c2 = std::sqrt((1.0 - rho) * u1);
                double c3 = std::sqrt(rho);
                C3 z;
                for (int k = 0; k < 3; ++k)
                    z[static_cast<std::size_t>(k)] = c1 * fr.b1[static_cast<std::size_t>(k)] +
                                                     c2 * along * fr.b2[static_cast<std::size_t>(k)] +
                                                     c3 * off * fr.n[static_cast<std::size_t>(k)];
                double h = ctx.density_ratio(z);
                if (h != 0.0) mean_tube += h / ctx.mixture_density(z);
            }
            if (n_tube > 0) mean_tube /= static_cast<double>(n_tube);
            samples += n_tube;
            tube_total += mean_tube;
        }

        batch_vals.push_back(kUniformShare * mean_uniform +
                             (1.0 - kUniformShare) / 6.0 * tube_total);
    }

    double mean = 0.0;
    for (double v : batch_vals) mean += v;
    mean /= static_cast<double>(batch_vals.size());
    double var = 0.0;
    for (double v : batch_vals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(batch_vals.size() - 1);
    double sigma = std::sqrt(var / static_cast<double>(batch_vals.size()));

    return {mean, sigma, samples, "cp2-qmc", orientation_tag(), false};
}

} // namespace grasslog
