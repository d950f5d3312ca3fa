#include "grasslog/config_forms.hpp"

#include <cmath>

#include "grasslog/alternation.hpp"
#include "grasslog/polylog.hpp"

namespace grasslog {

namespace {

// Pairwise determinants of a 5-point dim-2 configuration, their logs, and
// the directional logarithmic derivatives dDelta/Delta along w (symmetric
// in the pair order, unlike Delta itself).
struct PairTable {
    double logabs[5][5];
    Cd dlog[5][5];

    PairTable(const ConfigurationF& c, const ConfigTangent& w) {
        auto det2 = [](const std::vector<Cd>& a, const std::vector<Cd>& b) {
            return a[0] * b[1] - a[1] * b[0];
        };
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                const auto &vi = c.vector(i), &vj = c.vector(j);
                Cd d = c.volume_form() * det2(vi, vj);
                if (d == Cd(0.0, 0.0))
                    throw DegenerateError("Delta(" + std::to_string(i) + "," + std::to_string(j) +
                                          ") = 0");
                Cd dd = c.volume_form() *
                        (det2(w.dv[static_cast<std::size_t>(i)], vj) +
                         det2(vi, w.dv[static_cast<std::size_t>(j)]));
                logabs[i][j] = logabs[j][i] = std::log(std::abs(d));
                dlog[i][j] = dlog[j][i] = dd / d;
            }
    }

    // Cross-ratio r(a,b,c,e) = Delta(a,c) Delta(b,e) / (Delta(a,e) Delta(b,c))
    // and its directional dlog; the individual Deltas are all nonzero here.
    Cd cross(const ConfigurationF& cf, int a, int b, int c, int e) const {
        return cross_ratio(cf, a, b, c, e);
    }
    Cd cross_dlog(int a, int b, int c, int e) const {
        return dlog[a][c] + dlog[b][e] - dlog[a][e] - dlog[b][c];
    }
};

void check_shape(const ConfigurationF& c, const ConfigTangent& w) {
    if (c.dim() != 2 || c.size() != 5)
        throw DomainError("weight-3 one-forms need 5 vectors in dim 2");
    if (w.dv.size() != 5) throw IndexError("tangent has wrong number of slots");
    for (const auto& d : w.dv)
        if (d.size() != 2) throw IndexError("tangent slot has wrong dimension");
}

} // namespace

double regulator_r2_1(Cd x) { return bloch_wigner(x); }

double regulator_r3_1(Cd x) { return sv_trilog(x); }

double oneform_grass_13(const ConfigurationF& c, const ConfigTangent& w) {
    check_shape(c, w);
    PairTable tab(c, w);
    return alternate<double>(5, [&](std::span<const std::uint8_t> s) {
        int a = s[0], b = s[1], cc = s[2], e = s[4];
        double dilog = bloch_wigner(tab.cross(c, a, b, cc, e));
        // ihatL2 = i D and d i arg = i darg, so their product is -D darg.
        return -(1.0 / 12.0) * dilog * tab.dlog[b][e].imag() -
               (1.0 / 3.0) * tab.logabs[a][b] * tab.logabs[b][e] * tab.dlog[cc][e].real();
    });
}

double oneform_lie_13(const ConfigurationF& c, const ConfigTangent& w) {
    check_shape(c, w);
    PairTable tab(c, w);
    return alternate<double>(5, [&](std::span<const std::uint8_t> s) {
        int a = s[0], b = s[1], cc = s[2], e = s[4];
        Cd r = tab.cross(c, a, b, cc, e);
        if (r == Cd(0.0, 0.0) || r == Cd(1.0, 0.0))
            throw CrossRatioDegenerateError("cross-ratio degenerate at {0,1}");
        Cd dlog_r = tab.cross_dlog(a, b, cc, e);
        Cd dr = r * dlog_r;
        double dlog_1mr = (-dr / (1.0 - r)).real();
        double alpha = std::log(std::abs(r)) * dlog_1mr -
                       std::log(std::abs(1.0 - r)) * dlog_r.real();
        return -(1.0 / 12.0) * bloch_wigner(r) * tab.dlog[b][e].imag() -
               (1.0 / 36.0) * tab.logabs[b][e] * alpha;
    });
}

double logproduct_derivative(const ConfigurationF& c, const ConfigTangent& w) {
    check_shape(c, w);
    PairTable tab(c, w);
    return alternate<double>(5, [&](std::span<const std::uint8_t> s) {
        int a = s[0], b = s[1], cc = s[2], e = s[4];
        double L1 = tab.logabs[cc][e], L2 = tab.logabs[b][e], L3 = tab.logabs[a][cc];
        return tab.dlog[cc][e].real() * L2 * L3 + L1 * tab.dlog[b][e].real() * L3 +
               L1 * L2 * tab.dlog[a][cc].real();
    });
}

ConfigurationF to_float(const ConfigurationQ& c) {
    std::vector<std::vector<Cd>> v(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) {
        v[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(c.dim()));
        for (int j = 0; j < c.dim(); ++j)
            v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c.vector(i)[static_cast<std::size_t>(j)].to_complex();
    }
    return ConfigurationF(c.dim(), std::move(v), c.volume_form().to_complex());
}

} // namespace grasslog
