#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grasslog/config_forms.hpp"
#include "grasslog/configuration.hpp"
#include "grasslog/form_eval.hpp"
#include "grasslog/quadrature.hpp"

namespace grasslog {

/// One evaluation of the weight-3 Grassmannian polylogarithm of a 6-point
/// configuration in dim 3, with closed = lie - diff_term by construction.
struct TrilogReport {
    double closed = 0.0;
    double lie = 0.0;
    double diff_term = 0.0;
    std::optional<QuadratureEstimate> numeric;
    std::map<std::string, double> residuals;
};

/// (1/90) Alt_6 L3(triple ratio); repeated ratio values are memoized
/// (disable to run the straight 720-term loop).
double lie_trilog(const ConfigurationF& c, bool memoize = true);
double lie_trilog(const ConfigurationQ& c, bool memoize = true);

/// (1/9) Alt_6 log|Delta(012)| log|Delta(123)| log|Delta(234)|.
double difference_term(const ConfigurationF& c);
double difference_term(const ConfigurationQ& c);

TrilogReport grass_trilog_closed(const ConfigurationF& c);
TrilogReport grass_trilog_closed(const ConfigurationQ& c);

enum class DilogMode { closed, numeric, both };

struct DilogResult {
    double closed = 0.0;
    std::optional<QuadratureEstimate> numeric; // value already normalized to D(r)
};

/// Weight-2 Grassmannian polylogarithm of 4 covectors in dim 2: the closed
/// side is D(cross-ratio); the numeric side is -(1/pi) times the CP^1
/// integral of the dilog kernel (orientation-calibrated).
DilogResult grass_dilog(const ConfigurationF& c, DilogMode mode, long long budget = 100000,
                        double tol = 1e-6);

/// The special 6-point configuration with columns
/// (1,0,0),(0,1,0),(0,0,1),(1,1,0),(0,1,1),(1,0,z); not generic.
ConfigurationQ special_config(const GaussianRational& z);
ConfigurationF special_config(Cd z);

/// Evaluates the closed form at the special configuration perturbed by
/// eps * (fixed random exact direction) and Richardson-extrapolates eps -> 0.
double special_stratum_value(const GaussianRational& z, std::span<const double> epsilons,
                             std::uint64_t direction_seed = 1234);

enum class TrilogFn { closed, lie, diff };

struct Residual {
    double residual = 0.0;
    double scale = 0.0;
};

/// Sum_i (-1)^i fn(drop(points, i)) over 7 points in dim 3 (the 7-term
/// functional equation of the weight-3 function).
Residual check_drop_equation(const ConfigurationQ& points, TrilogFn fn);
Residual check_drop_equation(const ConfigurationF& points, TrilogFn fn);

/// Sum_i (-1)^i fn(project(points, i)) over 7 points in dim 4.
Residual check_projection_equation(const ConfigurationQ& points, TrilogFn fn);
Residual check_projection_equation(const ConfigurationF& points, TrilogFn fn);

/// | grass one-form - lie one-form - (1/9) d(Alt_5 log-product) | along w.
Residual check_oneform_difference(const ConfigurationF& c, const ConfigTangent& w);

/// | (1/2) Alt_3 r_2(l_i, l_j) - r_2(f_1, f_2) | at (p, w).
double check_weight2_oneform(const ConfigurationF& c, const ChartPoint& p, const Tangent& w);

/// | -(1/6) Alt_4 r_3(l_i, l_j, l_k) - r_3(f_1, f_2, f_3) | at (p, w1, w2).
double check_weight3_twoform(const ConfigurationF& c, const ChartPoint& p,
                             std::span<const Tangent> ws);

} // namespace grasslog
