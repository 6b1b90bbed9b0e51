#pragma once

#include <compare>
#include <vector>

#include "poletab/error.hpp"
#include "poletab/partition.hpp"

namespace poletab {

/// The finite prefix of an Ulm sequence: strictly increasing nonnegative
/// integers.  The tail of infinities is implicit and never stored.
class HeightSequence {
public:
    HeightSequence() = default;

    explicit HeightSequence(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 0)
                fail(errc::invalid_input, "height sequence entries must be nonnegative");
            if (i > 0 && entries_[i] <= entries_[i - 1])
                fail(errc::invalid_input, "height sequence must be strictly increasing");
        }
    }

    const std::vector<int>& entries() const noexcept { return entries_; }

    int length() const noexcept { return static_cast<int>(entries_.size()); }

    bool empty() const noexcept { return entries_.empty(); }

    friend bool operator==(const HeightSequence&, const HeightSequence&) = default;
    friend auto operator<=>(const HeightSequence& a, const HeightSequence& b) {
        return std::lexicographical_compare_three_way(
            a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
    }

private:
    std::vector<int> entries_;
};

/// A pole, presented by the data of its ambient module and the valuations
/// of the generator coordinates: a = sum_j p^{offsets[j]} * b_{ambient[j]}.
struct Pole {
    HeightSequence heights;
    Partition ambient;       // strictly decreasing parts
    std::vector<int> offsets; // strictly decreasing, same length as ambient
};

/// 0-based indices l such that the sequence has a gap after entries[l].
/// The terminal entry always counts: the implicit next value is infinity.
inline std::vector<int> gaps(const HeightSequence& h) {
    if (h.empty()) fail(errc::invalid_input, "EmptySequence: gaps of empty height sequence");
    std::vector<int> out;
    const auto& e = h.entries();
    for (int i = 0; i + 1 < h.length(); ++i)
        if (e[i + 1] > e[i] + 1) out.push_back(i);
    out.push_back(h.length() - 1);
    return out;
}

/// Kaplansky's construction: gap positions i_1 > ... > i_s give
/// ambient part m_{i_j}+1 and offset m_{i_j}-i_j.
inline Pole pole_from_heights(const HeightSequence& h) {
    if (h.empty())
        fail(errc::invalid_input, "EmptySequence: the empty height sequence denotes the zero object");
    std::vector<int> gap_idx = gaps(h);
    std::reverse(gap_idx.begin(), gap_idx.end());
    Pole pole;
    pole.heights = h;
    std::vector<int> ambient;
    for (int i : gap_idx) {
        ambient.push_back(h.entries()[i] + 1);
        pole.offsets.push_back(h.entries()[i] - i);
    }
    pole.ambient = Partition(std::move(ambient));
    return pole;
}

/// Pointwise comparison h1 <= h2 with positions past the end read as infinity.
inline bool heights_leq(const HeightSequence& h1, const HeightSequence& h2) {
    if (h2.length() > h1.length()) return false; // h1 is infinite there, h2 is not
    for (int i = 0; i < h2.length(); ++i)
        if (h1.entries()[i] > h2.entries()[i]) return false;
    return true;
}

} // namespace poletab
