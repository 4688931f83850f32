#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace uff {

// A subset of [n] = {1,...,n} packed into one machine word: bit i-1 set
// exactly when element i is in the subset.  The empty mask is the empty set.
using SubsetMask = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr SubsetMask full_mask(int n) {
    return n >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

constexpr int card(SubsetMask m) { return std::popcount(m); }

constexpr bool subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

constexpr bool proper_subset_of(SubsetMask a, SubsetMask b) {
    return a != b && subset_of(a, b);
}

/// Canonical order on subsets: cardinality ascending, then mask value.
constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
    const int ca = card(a), cb = card(b);
    return ca != cb ? ca < cb : a < b;
}

/// Next mask with the same popcount (Gosper's hack).  Caller stops once the
/// result overflows the ground set.
constexpr SubsetMask next_same_card(SubsetMask v) {
    const SubsetMask u = v & (~v + 1);
    const SubsetMask w = v + u;
    return w | (((v ^ w) >> 2) / u);
}

/// Calls fn(mask) for every k-subset of [ground], in ascending mask order.
template <typename Fn>
void for_each_mask_of_card(int ground, int k, Fn&& fn) {
    if (k < 0 || k > ground) return;
    if (k == 0) {
        fn(SubsetMask{0});
        return;
    }
    const SubsetMask limit = full_mask(ground);
    SubsetMask m = full_mask(k);
    while (true) {
        fn(m);
        const SubsetMask next = next_same_card(m);
        // next < m detects the 64-bit wraparound at the topmost subset
        if (next > limit || next < m) break;
        m = next;
    }
}

/// Elements of a mask in ascending order, 1-based.
std::vector<int> mask_elements(SubsetMask m);

/// "{1,3,5}" with ascending elements; "{}" for the empty set.
std::string format_subset(SubsetMask m);

/// Builds a mask from 1-based elements; throws std::invalid_argument when an
/// element falls outside [1,n] or the list is not strictly ascending.
SubsetMask subset_from_elements(const std::vector<int>& elems, int n);

/// Mask with every element shifted up by offset (element i -> i + offset).
constexpr SubsetMask shift_mask(SubsetMask m, int offset) { return m << offset; }

}  // namespace uff
