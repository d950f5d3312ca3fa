#include "grasslog/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "grasslog/alternation.hpp"
#include "grasslog/rng.hpp"

namespace grasslog {

const std::vector<SignedPerm>& permutations(int n) {
    if (n < 1 || n > kMaxAlternation) throw SizeError("permutations: n out of range [1,8]");
    static std::vector<SignedPerm> tables[kMaxAlternation + 1];
    static std::once_flag built[kMaxAlternation + 1];
    std::call_once(built[n], [n] {
        std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        auto& tab = tables[n];
        do {
            SignedPerm sp{};
            int inv = 0;
            for (int i = 0; i < n; ++i) {
                sp.p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < n; ++j)
                    if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
            }
            sp.sign = (inv % 2 == 0) ? 1 : -1;
            tab.push_back(sp);
        } while (std::next_permutation(p.begin(), p.end()));
        return;
    });
    return tables[n];
}

std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    if (k > m || k < 0) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

bool operator<(const Cd& a, const Cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

namespace {

// Float genericity threshold: |Delta| > 1e-10 * prod(column norms).
bool minor_nonzero(const Configuration<Cd>& c, std::span<const int> idx) {
    Cd d = c.delta(idx);
    double scale = 1.0;
    for (int i : idx) {
        double n2 = 0.0;
        for (const Cd& x : c.vector(i)) n2 += std::norm(x);
        scale *= std::sqrt(n2);
    }
    return std::abs(d) > 1e-10 * scale;
}

bool minor_nonzero(const Configuration<GaussianRational>& c, std::span<const int> idx) {
    return !c.delta(idx).is_zero();
}

template <class K>
int argmax_entry(const std::vector<K>& v) {
    int best = 0;
    auto mag = ScalarOps<K>::abs2(v[0]);
    for (std::size_t j = 1; j < v.size(); ++j) {
        auto a = ScalarOps<K>::abs2(v[j]);
        if (mag < a) {
            mag = a;
            best = static_cast<int>(j);
        }
    }
    return best;
}

} // namespace

template <class K>
bool Configuration<K>::generic() const {
    if (size() < dim_) return false;
    for (const auto& s : subsets(size(), dim_))
        if (!minor_nonzero(*this, std::span<const int>(s.data(), s.size()))) return false;
    return true;
}

template <class K>
Configuration<K> Configuration<K>::project(int i) const {
    if (i < 0 || i >= size()) throw IndexError("project: index out of range");
    if (dim_ < 2) throw DomainError("project: dim must be >= 2");
    const auto& vi = v_[static_cast<std::size_t>(i)];
    const int c = argmax_entry(vi);
    const K& pivot = vi[static_cast<std::size_t>(c)];

    std::vector<std::vector<K>> w;
    w.reserve(v_.size() - 1);
    for (int j = 0; j < size(); ++j) {
        if (j == i) continue;
        const auto& vj = v_[static_cast<std::size_t>(j)];
        K f = vj[static_cast<std::size_t>(c)] / pivot;
        std::vector<K> img;
        img.reserve(static_cast<std::size_t>(dim_ - 1));
        for (int r = 0; r < dim_; ++r) {
            if (r == c) continue;
            img.push_back(vj[static_cast<std::size_t>(r)] - f * vi[static_cast<std::size_t>(r)]);
        }
        bool zero = true;
        for (const auto& x : img) zero = zero && ScalarOps<K>::is_zero(x);
        if (zero)
            throw DegenerateError("project: vector " + std::to_string(j) +
                                  " proportional to the projection center");
        w.push_back(std::move(img));
    }
    // Laplace along row c gives Delta(v_i, w...) = (-1)^c v_i[c] det(images),
    // so this factor keeps the quotient determinant contract exact.
    K qvol = vol_ * pivot;
    if (c % 2 != 0) qvol = -qvol;
    return Configuration(dim_ - 1, std::move(w), std::move(qvol));
}

template <class K>
Configuration<K> Configuration<K>::dualize() const {
    const int p = dim_;
    const int m = size();
    const int q = m - p;
    if (q < 1) throw DomainError("dualize: need more vectors than dimensions");

    // Row-reduce the p x m matrix whose columns are the vectors.
    std::vector<std::vector<K>> a(static_cast<std::size_t>(p),
                                  std::vector<K>(static_cast<std::size_t>(m), K(0)));
    for (int j = 0; j < m; ++j)
        for (int r = 0; r < p; ++r)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                v_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < m && row < p; ++col) {
        int piv = -1;
        auto best = ScalarOps<K>::abs2(K(0));
        for (int r = row; r < p; ++r) {
            auto mag = ScalarOps<K>::abs2(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
            if (!ScalarOps<K>::is_zero(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) &&
                (piv < 0 || best < mag)) {
                best = mag;
                piv = r;
            }
        }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(row)]);
        K inv = K(1) / a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] *= inv;
        for (int r = 0; r < p; ++r) {
            if (r == row) continue;
            K f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (ScalarOps<K>::is_zero(f)) continue;
            for (int j = 0; j < m; ++j)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row < p) throw DegenerateError("dualize: rank-deficient configuration");

    // Kernel basis, one vector per free column; leading entry normalized to 1.
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<K>> kernel; // q rows of length m
    for (int col = 0; col < m; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        std::vector<K> k(static_cast<std::size_t>(m), K(0));
        k[static_cast<std::size_t>(col)] = K(1);
        for (int r = 0; r < p; ++r)
            k[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
                -a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        kernel.push_back(std::move(k));
    }

    std::vector<std::vector<K>> dual(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        std::vector<K> col(static_cast<std::size_t>(q));
        for (int r = 0; r < q; ++r)
            col[static_cast<std::size_t>(r)] = kernel[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        dual[static_cast<std::size_t>(j)] = std::move(col);
    }
    return Configuration<K>(q, std::move(dual));
}

template <class K>
K cross_ratio(const std::vector<K>& v0, const std::vector<K>& v1,
              const std::vector<K>& v2, const std::vector<K>& v3) {
    auto d2 = [](const std::vector<K>& a, const std::vector<K>& b) {
        return a[0] * b[1] - a[1] * b[0];
    };
    K d03 = d2(v0, v3), d12 = d2(v1, v2);
    if (ScalarOps<K>::is_zero(d03)) throw DegenerateError("cross_ratio: Delta(v0,v3) = 0");
    if (ScalarOps<K>::is_zero(d12)) throw DegenerateError("cross_ratio: Delta(v1,v2) = 0");
    return (d2(v0, v2) * d2(v1, v3)) / (d03 * d12);
}

template <class K>
K triple_ratio_arg(const Configuration<K>& c, std::span<const int> idx) {
    if (c.dim() != 3) throw DomainError("triple_ratio_arg: dim must be 3");
    if (idx.size() != 6) throw IndexError("triple_ratio_arg: need 6 indices");
    auto dd = [&](int a, int b, int e) {
        int t[3] = {idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)],
                    idx[static_cast<std::size_t>(e)]};
        K v = c.delta(std::span<const int>(t, 3));
        if (ScalarOps<K>::is_zero(v))
            throw DegenerateError("triple_ratio_arg: Delta(" + std::to_string(t[0]) + "," +
                                  std::to_string(t[1]) + "," + std::to_string(t[2]) + ") = 0");
        return v;
    };
    return (dd(0, 1, 3) * dd(1, 2, 4) * dd(2, 0, 5)) / (dd(0, 1, 4) * dd(1, 2, 5) * dd(2, 0, 3));
}

ConfigurationQ random_exact_configuration(Rng& rng, int dim, int count, bool real_only) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::vector<GaussianRational>> v(static_cast<std::size_t>(count));
        for (auto& vec : v) {
            vec.resize(static_cast<std::size_t>(dim));
            for (auto& x : vec)
                x = real_only ? GaussianRational(rng.small_rational()) : rng.small_gaussian();
        }
        try {
            ConfigurationQ c(dim, std::move(v));
            if (c.generic()) return c;
        } catch (const DomainError&) {
        }
    }
    throw Error("random_exact_configuration: no generic draw in 200 attempts");
}

ConfigurationF random_float_configuration(Rng& rng, int dim, int count) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::vector<Cd>> v(static_cast<std::size_t>(count));
        for (auto& vec : v) {
            vec.resize(static_cast<std::size_t>(dim));
            for (auto& x : vec) x = rng.complex_box();
        }
        ConfigurationF c(dim, std::move(v));
        if (c.generic()) return c;
    }
    throw Error("random_float_configuration: no generic draw in 200 attempts");
}

ConfigurationF conditioned_float_configuration(Rng& rng, int dim, int count, double ratio_bound) {
    for (int attempt = 0; attempt < 5000; ++attempt) {
        ConfigurationF c = random_float_configuration(rng, dim, count);
        double lo = 1e300, hi = 0.0;
        for (const auto& s : subsets(count, dim)) {
            double a = std::abs(c.delta(std::span<const int>(s.data(), s.size())));
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        if (hi <= ratio_bound * lo) return c;
    }
    throw Error("conditioned_float_configuration: conditioning bound never met");
}

template class Configuration<Cd>;
template class Configuration<GaussianRational>;
template Cd cross_ratio<Cd>(const std::vector<Cd>&, const std::vector<Cd>&,
                            const std::vector<Cd>&, const std::vector<Cd>&);
template GaussianRational cross_ratio<GaussianRational>(const std::vector<GaussianRational>&,
                                                        const std::vector<GaussianRational>&,
                                                        const std::vector<GaussianRational>&,
                                                        const std::vector<GaussianRational>&);
template Cd triple_ratio_arg<Cd>(const Configuration<Cd>&, std::span<const int>);
template GaussianRational triple_ratio_arg<GaussianRational>(const Configuration<GaussianRational>&,
                                                             std::span<const int>);

} // namespace grasslog
