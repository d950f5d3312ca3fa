#pragma once

#include <complex>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "grasslog/errors.hpp"
#include "grasslog/rational.hpp"

namespace grasslog {

using Cd = std::complex<double>;

template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Cd> {
    static constexpr bool exact = false;
    static bool is_zero(const Cd& x) { return x == Cd(0.0, 0.0); }
    static double abs2(const Cd& x) { return std::norm(x); }
    static Cd to_complex(const Cd& x) { return x; }
    static std::string str(const Cd& x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", x.real(), x.imag());
        return buf;
    }
};

template <>
struct ScalarOps<GaussianRational> {
    static constexpr bool exact = true;
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static Rational abs2(const GaussianRational& x) { return x.norm2(); }
    static Cd to_complex(const GaussianRational& x) { return x.to_complex(); }
    static std::string str(const GaussianRational& x) { return x.str(); }
};

bool operator<(const Cd& a, const Cd& b); // lexicographic; for map keys only

/// Determinant by Gaussian elimination over the scalar field; exact scalars
/// pivot on the largest |.|^2 as well (comparisons are exact).
template <class K>
K det(std::vector<std::vector<K>> m) {
    const std::size_t n = m.size();
    K result(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        auto best = ScalarOps<K>::abs2(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            auto a = ScalarOps<K>::abs2(m[r][c]);
            if (best < a) {
                best = a;
                piv = r;
            }
        }
        if (ScalarOps<K>::is_zero(m[piv][c])) return K(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            result = -result;
        }
        result *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (ScalarOps<K>::is_zero(m[r][c])) continue;
            K f = m[r][c] / m[c][c];
            for (std::size_t j = c + 1; j < n; ++j) m[r][j] -= f * m[c][j];
            m[r][c] = K(0);
        }
    }
    return result;
}

/// Ordered tuple of m vectors in an n-dimensional space over K, together
/// with the volume-form multiplier entering every determinant.
template <class K>
class Configuration {
  public:
    Configuration(int dim, std::vector<std::vector<K>> vectors, K volume = K(1))
        : dim_(dim), v_(std::move(vectors)), vol_(std::move(volume)) {
        if (dim_ < 1) throw DomainError("Configuration: dim must be >= 1");
        for (const auto& vec : v_) {
            if (static_cast<int>(vec.size()) != dim_)
                throw DomainError("Configuration: vector length != dim");
            bool zero = true;
            for (const auto& x : vec) zero = zero && ScalarOps<K>::is_zero(x);
            if (zero) throw DomainError("Configuration: zero vector");
        }
    }

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(v_.size()); }
    const std::vector<std::vector<K>>& vectors() const { return v_; }
    const std::vector<K>& vector(int i) const { return v_.at(static_cast<std::size_t>(i)); }
    const K& volume_form() const { return vol_; }

    Configuration with_volume_form(K vol) const {
        Configuration c = *this;
        c.vol_ = std::move(vol);
        return c;
    }

    /// Determinant of the selected columns times the volume-form multiplier.
    K delta(std::span<const int> idx) const {
        if (static_cast<int>(idx.size()) != dim_)
            throw IndexError("delta: need exactly dim indices");
        std::vector<std::vector<K>> m(static_cast<std::size_t>(dim_),
                                      std::vector<K>(static_cast<std::size_t>(dim_), K(0)));
        for (std::size_t c = 0; c < idx.size(); ++c) {
            int i = idx[c];
            if (i < 0 || i >= size()) throw IndexError("delta: index out of range");
            for (std::size_t j = 0; j < c; ++j)
                if (idx[j] == i) throw IndexError("delta: repeated index");
            for (int r = 0; r < dim_; ++r)
                m[static_cast<std::size_t>(r)][c] = v_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
        }
        return vol_ * det(std::move(m));
    }
    K delta(std::initializer_list<int> idx) const {
        return delta(std::span<const int>(idx.begin(), idx.size()));
    }

    /// True iff every n-subset of the vectors has nonzero determinant
    /// (exact test on the exact backend, norm-relative 1e-10 on floats).
    bool generic() const;

    Configuration drop(int i) const {
        if (i < 0 || i >= size()) throw IndexError("drop: index out of range");
        if (size() < 2) throw IndexError("drop: configuration too small");
        auto w = v_;
        w.erase(w.begin() + i);
        return Configuration(dim_, std::move(w), vol_);
    }

    /// Image of the other vectors in V/<v_i>, in the concrete basis obtained
    /// by deleting the coordinate where v_i is largest. The quotient volume
    /// form is scaled so that Delta_quotient(w...) = Delta(v_i, w...).
    Configuration project(int i) const;

    /// For m = p+q vectors in dim p: a configuration of m vectors in dim q
    /// whose matrix N satisfies M N^T = 0.
    Configuration dualize() const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.dim_ == b.dim_ && a.v_ == b.v_ && a.vol_ == b.vol_;
    }
    friend bool operator<(const Configuration& a, const Configuration& b) {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
        for (std::size_t i = 0; i < a.v_.size(); ++i)
            for (std::size_t j = 0; j < a.v_[i].size(); ++j) {
                if (a.v_[i][j] < b.v_[i][j]) return true;
                if (b.v_[i][j] < a.v_[i][j]) return false;
            }
        return a.vol_ < b.vol_;
    }

  private:
    int dim_;
    std::vector<std::vector<K>> v_;
    K vol_;
};

/// Enumerates all k-subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int k);

/// Cross-ratio of four vectors in dim 2 per
///   r = Delta(v0,v2) Delta(v1,v3) / (Delta(v0,v3) Delta(v1,v2)).
template <class K>
K cross_ratio(const std::vector<K>& v0, const std::vector<K>& v1,
              const std::vector<K>& v2, const std::vector<K>& v3);

template <class K>
K cross_ratio(const Configuration<K>& c, int i0, int i1, int i2, int i3) {
    return cross_ratio(c.vector(i0), c.vector(i1), c.vector(i2), c.vector(i3));
}
template <class K>
K cross_ratio(const Configuration<K>& c) {
    return cross_ratio(c, 0, 1, 2, 3);
}

/// Argument of the trilogarithm in the weight-3 formula:
///   Delta(013) Delta(124) Delta(205) / (Delta(014) Delta(125) Delta(203)).
template <class K>
K triple_ratio_arg(const Configuration<K>& c, std::span<const int> idx);

template <class K>
K triple_ratio_arg(const Configuration<K>& c) {
    static const int id[6] = {0, 1, 2, 3, 4, 5};
    return triple_ratio_arg(c, std::span<const int>(id, 6));
}

using ConfigurationF = Configuration<Cd>;
using ConfigurationQ = Configuration<GaussianRational>;

} // namespace grasslog
