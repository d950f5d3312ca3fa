#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grasslog/configuration.hpp"

namespace grasslog {

struct QuadratureEstimate {
    double value = 0.0;
    double sigma = 0.0; // adaptive error bound (CP1) or 16-batch standard error (CP2)
    long long samples = 0;
    std::string method;
    int orientation = 1;
    bool budget_exceeded = false;
};

/// Global orientation tag: +1 means integrals are reported in the standard
/// complex orientation (dx ^ dy > 0 in every affine chart), under which the
/// Fubini-Study area of CP^1 comes out +pi. Fixed once by calibration.
int orientation_tag();

/// Version string for the stored normalization conventions (parity
/// stripping and orientation), embedded in every report.
const char* normalization_convention();

/// Recomputes the calibration integral (i/2) dz^dzbar/(1+|z|^2)^2 over CP^1
/// and returns the orientation tag; throws Error if the sign check fails.
int orientation_calibrate();

enum class Cp1Kernel {
    dilog,        // log|f_1| dlog|f_2| ^ dlog|f_3|, f_i = l_i/l_0 from 4 covectors
    fubini_study, // 1/(1+|t|^2)^2 dx ^ dy (calibration)
    custom,
};

struct Cp1Integrand {
    Cp1Kernel kernel = Cp1Kernel::dilog;
    std::vector<std::vector<Cd>> covectors; // 4 covectors in dim 2 for dilog
    // dx^dy coefficient in chart 0 ([t:1]) / chart 1 ([1:s]) for custom kernels.
    std::function<double(int chart, Cd t)> custom;
    // relative radius of the graded cutoff box around each singularity;
    // halving it must move the estimate by less than its error bound
    double grade_cut = 1e-7;
};

/// Deterministic two-chart adaptive quadrature over CP^1 with graded
/// refinement toward each logarithmic singularity. Stops when the internal
/// error bound drops under tol or the evaluation budget is exhausted
/// (budget_exceeded is then set and the running estimate returned).
QuadratureEstimate integrate_cp1(const Cp1Integrand& intg, long long budget = 100000,
                                 double tol = 1e-6);

struct Cp2Integrand {
    // trilog kernel log|f_1| dlog|f_2| ^ ... ^ dlog|f_5|, f_i = l_i/l_0.
    std::vector<std::vector<Cd>> covectors; // 6 covectors in dim 3
};

/// Stratified randomized-QMC integration over CP^2 in a Fubini-Study-uniform
/// parametrization, with an importance component graded toward each of the
/// six singular lines (uniform-in-distance, Duffy-style). Deterministic for
/// a fixed seed; sigma is the standard error over 16 batches.
QuadratureEstimate integrate_cp2(const Cp2Integrand& intg, long long budget = 5000000,
                                 std::uint64_t seed = 42);

} // namespace grasslog
