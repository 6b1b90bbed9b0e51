#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <vector>

#include "poletab/error.hpp"

namespace poletab {

/// A partition: weakly decreasing sequence of positive integers.
/// Doubles as a module type (parts = orders of cyclic summands) and as
/// the column heights of a Young diagram drawn in column convention.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int x : parts_)
            if (x < 0) fail(errc::invalid_input, "partition parts must be nonnegative");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const noexcept { return parts_; }

    int size() const noexcept { return static_cast<int>(parts_.size()); }

    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; indices past the end read as 0.
    int part(int i) const noexcept {
        return (i >= 1 && i <= size()) ? parts_[i - 1] : 0;
    }

    long long weight() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

inline Partition transpose(const Partition& lambda) {
    std::vector<int> out;
    for (int r = 1; r <= lambda.part(1); ++r) {
        int count = 0;
        for (int x : lambda.parts())
            if (x >= r) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

/// Multiset union of parts.
inline Partition union_parts(const Partition& lambda, const Partition& mu) {
    std::vector<int> out = lambda.parts();
    out.insert(out.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(out));
}

/// Multiset difference lambda \ mu; fails unless mu is a submultiset.
inline Partition diff_parts(const Partition& lambda, const Partition& mu) {
    std::vector<int> rest = lambda.parts();
    for (int x : mu.parts()) {
        auto it = std::find(rest.begin(), rest.end(), x);
        if (it == rest.end())
            fail(errc::invalid_input, "NotSubmultiset: part not available for removal");
        rest.erase(it);
    }
    return Partition(std::move(rest));
}

inline bool is_submultiset(const Partition& mu, const Partition& lambda) {
    std::vector<int> rest = lambda.parts();
    for (int x : mu.parts()) {
        auto it = std::find(rest.begin(), rest.end(), x);
        if (it == rest.end()) return false;
        rest.erase(it);
    }
    return true;
}

/// Part-wise containment: gamma[i] <= beta[i] for all i.
inline bool contains_partwise(const Partition& beta, const Partition& gamma) {
    for (int i = 1; i <= gamma.size(); ++i)
        if (gamma.part(i) > beta.part(i)) return false;
    return true;
}

/// beta \ gamma is a horizontal strip: beta[i] <= gamma[i] + 1 for all i.
inline bool is_horizontal_strip(const Partition& beta, const Partition& gamma) {
    if (!contains_partwise(beta, gamma))
        fail(errc::invalid_input, "NotContained: gamma is not contained in beta");
    for (int i = 1; i <= beta.size(); ++i)
        if (beta.part(i) > gamma.part(i) + 1) return false;
    return true;
}

inline bool is_vertical_strip(const Partition& beta, const Partition& gamma) {
    return is_horizontal_strip(transpose(beta), transpose(gamma));
}

} // namespace poletab
