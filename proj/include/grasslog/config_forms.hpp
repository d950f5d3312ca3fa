#pragma once

#include <vector>

#include "grasslog/configuration.hpp"
#include "grasslog/form_eval.hpp"

namespace grasslog {

/// Direction in the space of configurations: one perturbation vector per
/// configuration vector.
struct ConfigTangent {
    std::vector<std::vector<Cd>> dv;
};

/// Regulator on {x}_2 generators: the Bloch-Wigner value D(x) (real
/// normalization of the R(1)-valued dilogarithm).
double regulator_r2_1(Cd x);

/// Regulator on {x}_3 generators: the single-valued trilogarithm L3(x).
double regulator_r3_1(Cd x);

/// Weight-3 Grassmannian 1-form on 5 vectors in dim 2, paired with a
/// configuration-space direction:
///   Alt5{ -(1/12) D(r(l0,l1,l2,l4)) darg Delta(1,4)
///         -(1/3) log|Delta(0,1)| log|Delta(1,4)| dlog|Delta(2,4)| }(w).
double oneform_grass_13(const ConfigurationF& c, const ConfigTangent& w);

/// Same 1-form built through the polylogarithmic complex,
///   (1/12) Alt5{ ihatL2(r) d i arg Delta(1,4) - (1/3) log|Delta(1,4)| alpha(r) }(w)
/// with alpha(f) = log|f| dlog|1-f| - log|1-f| dlog|f|.
double oneform_lie_13(const ConfigurationF& c, const ConfigTangent& w);

/// Directional derivative of Alt5{log|Delta(2,4)| log|Delta(1,4)| log|Delta(0,2)|}.
double logproduct_derivative(const ConfigurationF& c, const ConfigTangent& w);

ConfigurationF to_float(const ConfigurationQ& c);

} // namespace grasslog
