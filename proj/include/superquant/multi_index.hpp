#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "superquant/errors.hpp"

namespace superquant {

/// Tuple of non-negative Dbar-exponents, one per operator slot.  Ordered
/// graded-lexicographically: first by total degree, then entry-wise.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {}
    MultiIndex(std::initializer_list<int> entries) : e_(entries) {}

    int size() const noexcept { return static_cast<int>(e_.size()); }
    int operator[](int t) const { return e_[static_cast<std::size_t>(t)]; }
    int total() const noexcept { return std::accumulate(e_.begin(), e_.end(), 0); }

    /// Sum of the entries strictly before slot t.
    int prefix_total(int t) const {
        int s = 0;
        for (int q = 0; q < t; ++q) s += e_[static_cast<std::size_t>(q)];
        return s;
    }
    /// Sum of the entries strictly after slot t.
    int suffix_total(int t) const { return total() - prefix_total(t + 1); }

    MultiIndex with_added(int t, int r) const {
        MultiIndex m = *this;
        m.e_[static_cast<std::size_t>(t)] += r;
        return m;
    }
    MultiIndex with_slot(int t, int value) const {
        MultiIndex m = *this;
        m.e_[static_cast<std::size_t>(t)] = value;
        return m;
    }

    const std::vector<int>& entries() const noexcept { return e_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.e_ < b.e_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(e_[k]);
        }
        return s + ")";
    }

private:
    std::vector<int> e_;
};

/// All multi-indices with `slots` entries summing to `total`, in graded-lex order.
inline std::vector<MultiIndex> multi_indices_of_total(int slots, int total) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(slots), 0);
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == slots - 1) {
            cur[static_cast<std::size_t>(slot)] = rest;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, rest - v);
        }
    };
    if (slots > 0) rec(rec, 0, total);
    return out;
}

/// All multi-indices with total degree 0..max_total, graded-lex order.
inline std::vector<MultiIndex> multi_indices_up_to(int slots, int max_total) {
    std::vector<MultiIndex> out;
    for (int l = 0; l <= max_total; ++l) {
        auto level = multi_indices_of_total(slots, l);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace superquant
