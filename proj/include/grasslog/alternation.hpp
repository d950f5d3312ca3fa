#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "grasslog/errors.hpp"

namespace grasslog {

constexpr int kMaxAlternation = 8; // factorial guard

struct SignedPerm {
    std::array<std::uint8_t, kMaxAlternation> p;
    std::int8_t sign;
};

/// All permutations of {0..n-1} in lexicographic order with their signs.
/// Built once per n and cached.
const std::vector<SignedPerm>& permutations(int n);

/// Deterministic balanced pairwise reduction; the fixed tree shape makes
/// float alternation sums reproducible independently of evaluation order.
template <class T>
T balanced_sum(std::vector<T> xs) {
    if (xs.empty()) return T{};
    while (xs.size() > 1) {
        std::size_t half = xs.size() / 2;
        for (std::size_t i = 0; i < half; ++i) xs[i] = xs[2 * i] + xs[2 * i + 1];
        if (xs.size() % 2) {
            xs[half] = xs.back();
            xs.resize(half + 1);
        } else {
            xs.resize(half);
        }
    }
    return xs[0];
}

/// Alt_n F = sum over sigma in S_n of sgn(sigma) * F(sigma).
/// The evaluator receives sigma as a span of n indices.
template <class T, class F>
T alternate(int n, F&& eval) {
    if (n < 1 || n > kMaxAlternation) throw SizeError("alternate: n out of range [1,8]");
    const auto& perms = permutations(n);
    std::vector<T> vals;
    vals.reserve(perms.size());
    for (const auto& sp : perms) {
        T v = eval(std::span<const std::uint8_t>(sp.p.data(), static_cast<std::size_t>(n)));
        vals.push_back(sp.sign > 0 ? v : -v);
    }
    return balanced_sum(std::move(vals));
}

} // namespace grasslog
