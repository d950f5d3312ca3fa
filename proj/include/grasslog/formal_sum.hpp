#pragma once

#include <map>
#include <string>
#include <utility>

#include "grasslog/rational.hpp"

namespace grasslog {

/// Integer/rational-linear combination over an ordered symbol type.
/// Zero coefficients are never stored.
template <class Key>
class FormalSum {
  public:
    FormalSum() = default;

    void add(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    FormalSum operator-() const {
        FormalSum r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    FormalSum& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Key, Rational> terms_;
};

} // namespace grasslog
