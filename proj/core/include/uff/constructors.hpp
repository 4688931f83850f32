#pragma once

#include <functional>
#include <vector>

#include "uff/bigint.hpp"
#include "uff/family.hpp"

namespace uff {

// ---------------------------------------------------------------------------
// Chain families: full binomial layers on shrinking prefix grounds,
//   C([n],m1) u C([m1-1],m2) u ... u C([m_{l-1}-1],m_l)
// with n >= m1 > m2 > ... > m_l >= 1.
// ---------------------------------------------------------------------------

struct ChainSpec {
    int n = 0;
    std::vector<int> ms;  // strictly decreasing, ms.front() <= n, ms.back() >= 1

    /// Throws std::invalid_argument when the invariants fail.
    void validate() const;
    /// Member of Q(n): additionally requires the last level to be 1.
    bool ends_at_one() const { return !ms.empty() && ms.back() == 1; }

    bool operator==(const ChainSpec&) const = default;
};

Family chain_family(const ChainSpec& spec);

/// Exact member count of chain_family(spec) without materializing it.
BigInt chain_size(const ChainSpec& spec);

/// The canonical q(n): top layer m1 = ceil(n/2), then recursively the
/// canonical chain of [m1-1].  Matches every worked decomposition and table
/// row (the closed-form level formula does not; see the bounds table tests).
ChainSpec canonical_chain(int n);

/// |q(n)| via the recursion q_size(n) = C(n, ceil(n/2)) + q_size(ceil(n/2)-1).
BigInt q_size(int n);

/// Every chain over [n] ending at 1 (the members of Q(n)), each exactly once,
/// in lexicographic order of the level list.  There are 2^(n-1) of them, so
/// n is capped at 20; use best_chain for larger grounds.
void for_each_chain_spec(int n, const std::function<void(const ChainSpec&)>& fn);
std::vector<ChainSpec> enumerate_chain_specs(int n);

/// The largest family in Q(n), by bottom-up DP over ground sizes with exact
/// integers; ties broken toward the larger top layer.
struct BestChain {
    ChainSpec spec;
    BigInt size;
};
BestChain best_chain(int n);

// ---------------------------------------------------------------------------
// Cushioned families: each layer C([g-h],m) (+) F where F is a union-free
// "cushion" living on the h elements just above the layer's ground.
// ---------------------------------------------------------------------------

struct CushionLevel {
    int m = 0;          // block size, >= 1
    int h = 0;          // cushion thickness, >= 0; h = 0 forces cushion = {0}
    Family cushion;     // union-free, members inside the level's window, may contain {}
};

struct CushionSpec {
    int n = 0;
    std::vector<CushionLevel> levels;

    /// Window interval [lo,hi] of level j (1-based elements); empty when h=0.
    SubsetMask window_mask(std::size_t j) const;
    void validate() const;
};

/// Materializes the union of (+)-blocks.  The inequality chain
/// n >= m1+h1 >= m1 > m2+h2 >= m2 > ... keeps block cardinalities disjoint,
/// so the result size is the exact sum of C(g_j - h_j, m_j) * |F_j|.
Family cushion_family(const CushionSpec& spec);

BigInt cushion_size(const CushionSpec& spec);

// ---------------------------------------------------------------------------
// Layered composition: union of F_j (+) G_j blocks with F-parts increasing
// and G-parts decreasing across layers, on disjoint supports.
// ---------------------------------------------------------------------------

struct LayeredSpec {
    std::vector<Family> fs;
    std::vector<Family> gs;

    void validate() const;
};

/// Union of the blocks F_j (+) G_j.  Validation guarantees the result is
/// union-free: besides the published conditions (disjoint supports, each
/// factor union-free, F-chains strictly increasing and G-chains strictly
/// decreasing across layers), it requires one factor of every block to be an
/// antichain, and it treats the pair (G_i = {0}, F_j = {0}) as an exempt
/// identity pairing.  Both adjustments are needed: a block whose two factors
/// each contain the empty set next to a larger member already yields a
/// non-union-free product, and the identity pairing is exactly how the
/// disjoint-union bound composes two families side by side.
Family layered_compose(const LayeredSpec& spec);

}  // namespace uff
