#pragma once

#include <complex>

namespace grasslog {

using Cd = std::complex<double>;

inline constexpr double kZeta2 = 1.6449340668482264365; // pi^2/6
inline constexpr double kZeta3 = 1.2020569031595942854;

/// Principal-branch classical polylogarithm Li_n, n in {1,2,3}.
///
/// Series for |z| <= 1/2, inversion for |z| >= 2, log-series around z = 1
/// in between; relative accuracy ~1e-14 away from the cut.
/// Throws CutError for z in (1, inf) on the real axis, DomainError for
/// unsupported n (and at the Li_1 pole z = 1).
Cd li(int n, Cd z);

/// Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1-z) log|z|.
/// Real normalization; total on C with D = 0 on the whole real line and
/// D -> 0 at infinity.
double bloch_wigner(Cd z);

/// Single-valued trilogarithm
///   L3(z) = Re{ Li3(z) - log|z| Li2(z) } - (1/3) log^2|z| log|1-z|,
/// extended continuously: L3(0) = 0, L3(1) = zeta(3), L3(z) -> 0 at infinity.
double sv_trilog(Cd z);

/// Bernoulli number B_n as binary64 (B_1 = -1/2 convention); exact
/// recurrence under the hood, n <= 128.
double bernoulli(int n);

} // namespace grasslog
