#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "grasslog/configuration.hpp"
#include "grasslog/errors.hpp"

namespace grasslog {

/// Linear forms l_0..l_m on V_n; the functions under evaluation are the
/// ratios f_i = l_i / l_denom on CP^{n-1} (denom = -1 treats the forms
/// themselves as the functions, used by the weight-2/3 coincidence checks).
struct FunctionSystem {
    int dim = 2;
    std::vector<std::vector<Cd>> forms;
    int denom = 0;

    int function_count() const {
        return static_cast<int>(forms.size()) - (denom >= 0 ? 1 : 0);
    }
};

/// Affine coordinates t of a point [t : 1] in the standard chart of CP^{n-1}.
struct ChartPoint {
    std::vector<Cd> t;
    int chart = 0;
};

/// Real tangent vector in chart coordinates, 2(n-1) components
/// (x_1, y_1, ..., x_{n-1}, y_{n-1}).
using Tangent = std::vector<double>;

/// R(n-1)-valued scalar stored as a real number plus the weight that fixes
/// its parity: real part for odd weight, i * stored for even weight.
struct FormValue {
    double value = 0.0;
    int weight = 0;
    bool parity_even() const { return weight % 2 == 0; }
};

FormValue pi_n(int n, Cd z);

enum class RPresentation { definition, holo, reduced };

/// Pointwise value of the (m-1)-form r_m(f_1,...,f_m) on m-1 tangent
/// vectors at p, in any of its three equivalent presentations.
FormValue eval_r(const FunctionSystem& fs, const ChartPoint& p,
                 std::span<const Tangent> ws,
                 RPresentation pres = RPresentation::definition);

/// (finite-difference exterior derivative of r_m at p on m tangent vectors,
///  -pi_m(dlog f_1 ^ ... ^ dlog f_m) at the same point).
std::pair<FormValue, FormValue> d_r_check(const FunctionSystem& fs, const ChartPoint& p,
                                          std::span<const Tangent> ws);

/// Re / Im of <grad l / l, w> at p, i.e. (d log|l|)(w) and (d arg l)(w).
double dlog_abs(const std::vector<Cd>& l, const ChartPoint& p, const Tangent& w);
double darg(const std::vector<Cd>& l, const ChartPoint& p, const Tangent& w);

/// Leray (n-1)-form of n linear functions on V_n, evaluated at z on n-1
/// complex tangent vectors:
///   alpha(l_1..l_n) = sum_i (-1)^{i-1} l_i(z) dl_1 ^ ... ^ hat(dl_i) ^ ... ^ dl_n.
template <class K>
K leray_form(const std::vector<std::vector<K>>& ls, const std::vector<K>& z,
             const std::vector<std::vector<K>>& ws) {
    const std::size_t n = ls.size();
    if (z.size() != n || ws.size() != n - 1)
        throw IndexError("leray_form: need n forms, point in V_n, n-1 tangents");
    auto pair_lw = [&](std::size_t j, std::size_t k) {
        K s(0);
        for (std::size_t a = 0; a < n; ++a) s += ls[j][a] * ws[k][a];
        return s;
    };
    K total(0);
    K sign(1);
    for (std::size_t i = 0; i < n; ++i) {
        K li(0);
        for (std::size_t a = 0; a < n; ++a) li += ls[i][a] * z[a];
        std::vector<std::vector<K>> m;
        m.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<K> row(n - 1);
            for (std::size_t k = 0; k + 1 < n; ++k) row[k] = pair_lw(j, k);
            m.push_back(std::move(row));
        }
        total += sign * li * det(std::move(m));
        sign = -sign;
    }
    return total;
}

/// Euler-contracted volume form i_E omega at z on n-1 tangents: det[z w_1 ... w_{n-1}].
template <class K>
K euler_contraction(const std::vector<K>& z, const std::vector<std::vector<K>>& ws) {
    const std::size_t n = z.size();
    std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
    for (std::size_t r = 0; r < n; ++r) {
        m[r][0] = z[r];
        for (std::size_t c = 0; c + 1 < n; ++c) m[r][c + 1] = ws[c][r];
    }
    return det(std::move(m));
}

} // namespace grasslog
