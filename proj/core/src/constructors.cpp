#include "uff/constructors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uff {

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

void ChainSpec::validate() const {
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("chain: ground size must be in [1,64]");
    if (ms.empty()) throw std::invalid_argument("chain: at least one level required");
    if (ms.front() > n)
        throw std::invalid_argument("chain: top level " + std::to_string(ms.front()) +
                                    " exceeds ground " + std::to_string(n));
    for (std::size_t j = 0; j < ms.size(); ++j) {
        if (ms[j] < 1) throw std::invalid_argument("chain: levels must be >= 1");
        if (j > 0 && ms[j] >= ms[j - 1])
            throw std::invalid_argument("chain: levels must be strictly decreasing");
    }
}

Family chain_family(const ChainSpec& spec) {
    spec.validate();
    // Emit layers smallest cardinality first so the concatenation is already
    // in canonical order.
    std::vector<int> grounds(spec.ms.size());
    int g = spec.n;
    for (std::size_t j = 0; j < spec.ms.size(); ++j) {
        grounds[j] = g;
        g = spec.ms[j] - 1;
    }
    std::vector<SubsetMask> members;
    for (std::size_t j = spec.ms.size(); j-- > 0;) {
        for_each_mask_of_card(grounds[j], spec.ms[j],
                              [&](SubsetMask m) { members.push_back(m); });
    }
    return Family::of(spec.n, std::move(members));
}

BigInt chain_size(const ChainSpec& spec) {
    spec.validate();
    BigInt total = 0;
    int g = spec.n;
    for (int m : spec.ms) {
        total += binomial(g, m);
        g = m - 1;
    }
    return total;
}

ChainSpec canonical_chain(int n) {
    if (n < 1) throw std::invalid_argument("canonical_chain: n must be >= 1");
    ChainSpec spec;
    spec.n = n;
    int g = n;
    while (g >= 1) {
        const int m = (g + 1) / 2;
        spec.ms.push_back(m);
        g = m - 1;
    }
    return spec;
}

BigInt q_size(int n) {
    if (n < 0 || n > kMaxGround) throw std::invalid_argument("q_size: n must be in [0,64]");
    BigInt total = 0;
    int g = n;
    while (g >= 1) {
        const int m = (g + 1) / 2;
        total += binomial(g, m);
        g = m - 1;
    }
    return total;
}

void for_each_chain_spec(int n, const std::function<void(const ChainSpec&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_chain_specs: n must be >= 1");
    if (n > 20)
        throw std::invalid_argument(
            "enumerate_chain_specs: refused for n > 20 (2^(n-1) chains); use best_chain");
    // Levels are generated top-down, so the scratch buffer is already the
    // decreasing (m1, m2, ...) list; iterating heads in ascending order at
    // every depth yields the chains in lexicographic order.
    ChainSpec buffer;
    buffer.n = n;
    std::vector<int> scratch;
    std::function<void(int)> gen = [&](int max_head) {
        for (int head = 1; head <= max_head; ++head) {
            scratch.push_back(head);
            if (head == 1) {
                buffer.ms.assign(scratch.begin(), scratch.end());
                fn(buffer);
            } else {
                gen(head - 1);
            }
            scratch.pop_back();
        }
    };
    gen(n);
}

std::vector<ChainSpec> enumerate_chain_specs(int n) {
    std::vector<ChainSpec> out;
    for_each_chain_spec(n, [&](const ChainSpec& s) { out.push_back(s); });
    return out;
}

BestChain best_chain(int n) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("best_chain: n must be in [1,64]");
    // best[s]: size of the largest chain over ground s ending at level 1;
    // pick[s]: the level achieving it.  Keeping the first maximizer makes the
    // reconstructed spec the lexicographically smallest optimum, e.g. (3,1)
    // over the equally large (3,2,1) on five elements.
    std::vector<BigInt> best(static_cast<std::size_t>(n) + 1);
    std::vector<int> pick(static_cast<std::size_t>(n) + 1, 0);
    best[0] = 0;
    for (int s = 1; s <= n; ++s) {
        for (int m = 1; m <= s; ++m) {
            BigInt value = binomial(s, m) + best[static_cast<std::size_t>(m - 1)];
            if (value > best[static_cast<std::size_t>(s)]) {
                best[static_cast<std::size_t>(s)] = std::move(value);
                pick[static_cast<std::size_t>(s)] = m;
            }
        }
    }
    BestChain result;
    result.spec.n = n;
    result.size = best[static_cast<std::size_t>(n)];
    for (int g = n; g >= 1;) {
        const int m = pick[static_cast<std::size_t>(g)];
        result.spec.ms.push_back(m);
        g = m - 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Cushions
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void cushion_fail(std::size_t level, const std::string& msg) {
    throw std::invalid_argument("cushion level " + std::to_string(level + 1) + ": " + msg);
}

/// Ground size of the binomial base of level j: n for the first level,
/// m_{j-1} - 1 afterwards (before removing the window of thickness h_j).
int level_ground(const CushionSpec& spec, std::size_t j) {
    return j == 0 ? spec.n : spec.levels[j - 1].m - 1;
}

}  // namespace

SubsetMask CushionSpec::window_mask(std::size_t j) const {
    const int hi = j == 0 ? n : levels[j - 1].m - 1;
    const int h = levels[j].h;
    // window is [hi-h+1, hi]; empty when h = 0
    return full_mask(hi) & ~full_mask(hi - h);
}

void CushionSpec::validate() const {
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("cushion: ground size must be in [1,64]");
    if (levels.empty()) throw std::invalid_argument("cushion: at least one level required");
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const CushionLevel& lvl = levels[j];
        if (lvl.m < 1) cushion_fail(j, "block size must be >= 1");
        if (lvl.h < 0) cushion_fail(j, "cushion thickness must be >= 0");
        const int ground = level_ground(*this, j);
        // inequality chain: n >= m1+h1 >= m1 > m2+h2 >= m2 > ...
        if (j == 0) {
            if (lvl.m + lvl.h > n) cushion_fail(j, "m+h exceeds the ground size");
        } else {
            if (lvl.m + lvl.h > ground) cushion_fail(j, "m+h must stay below the previous level");
        }
        if (lvl.cushion.n() != n)
            cushion_fail(j, "cushion family must live on the spec ground [" + std::to_string(n) + "]");
        if (lvl.cushion.empty()) cushion_fail(j, "cushion family must not be empty");
        const SubsetMask window = window_mask(j);
        if (lvl.h == 0) {
            if (lvl.cushion.size() != 1 || lvl.cushion[0] != 0)
                cushion_fail(j, "thickness 0 requires the cushion {{}}");
        } else {
            for (SubsetMask m : lvl.cushion) {
                if ((m & ~window) != 0)
                    cushion_fail(j, "cushion member " + format_subset(m) +
                                        " leaves the window " + format_subset(window));
            }
        }
        if (!is_union_free(lvl.cushion)) cushion_fail(j, "cushion family is not union-free");
    }
}

Family cushion_family(const CushionSpec& spec) {
    spec.validate();
    // Blocks have pairwise disjoint member cardinalities, so emitting the last
    // (smallest) level first keeps the result canonical without a resort.
    std::vector<SubsetMask> members;
    for (std::size_t j = spec.levels.size(); j-- > 0;) {
        const CushionLevel& lvl = spec.levels[j];
        const int base_ground = level_ground(spec, j) - lvl.h;
        std::vector<SubsetMask> cushion_sorted(lvl.cushion.begin(), lvl.cushion.end());
        for (SubsetMask c : cushion_sorted) {
            for_each_mask_of_card(base_ground, lvl.m,
                                  [&](SubsetMask base) { members.push_back(base | c); });
        }
    }
    return Family::of(spec.n, std::move(members));
}

BigInt cushion_size(const CushionSpec& spec) {
    spec.validate();
    BigInt total = 0;
    for (std::size_t j = 0; j < spec.levels.size(); ++j) {
        const CushionLevel& lvl = spec.levels[j];
        total += binomial(level_ground(spec, j) - lvl.h, lvl.m) * lvl.cushion.size();
    }
    return total;
}

// ---------------------------------------------------------------------------
// Layered composition
// ---------------------------------------------------------------------------

namespace {

bool is_identity_family(const Family& f) { return f.size() == 1 && f[0] == 0; }

[[noreturn]] void layered_fail(const std::string& msg) {
    throw std::invalid_argument("layered composition: " + msg);
}

}  // namespace

void LayeredSpec::validate() const {
    const std::size_t p = fs.size();
    if (p == 0 || gs.size() != p) layered_fail("needs equally many F and G layers, at least one");
    const int n = fs.front().n();
    SubsetMask f_support = 0, g_support = 0;
    for (std::size_t j = 0; j < p; ++j) {
        if (fs[j].n() != n || gs[j].n() != n) layered_fail("layers must share one ground size");
        if (fs[j].empty() || gs[j].empty())
            layered_fail("layer " + std::to_string(j + 1) + " has an empty factor");
        if (!is_union_free(fs[j]))
            layered_fail("F" + std::to_string(j + 1) + " is not union-free");
        if (!is_union_free(gs[j]))
            layered_fail("G" + std::to_string(j + 1) + " is not union-free");
        if (!is_antichain(fs[j]) && !is_antichain(gs[j]))
            layered_fail("layer " + std::to_string(j + 1) +
                         " needs an antichain factor (F or G)");
        f_support |= fs[j].support();
        g_support |= gs[j].support();
    }
    if ((f_support & g_support) != 0)
        layered_fail("F and G supports intersect in " + format_subset(f_support & g_support));

    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            // The identity pairing composes two families side by side: block i
            // is pure-F, block j pure-G, and disjoint supports already keep
            // them from covering each other.
            if (is_identity_family(gs[i]) && is_identity_family(fs[j])) continue;
            for (SubsetMask a1 : fs[i])
                for (SubsetMask a2 : fs[j])
                    if (!proper_subset_of(a1, a2))
                        layered_fail("F" + std::to_string(i + 1) + " member " + format_subset(a1) +
                                     " is not properly inside F" + std::to_string(j + 1) +
                                     " member " + format_subset(a2));
            for (SubsetMask b2 : gs[j])
                for (SubsetMask b1 : gs[i])
                    if (!proper_subset_of(b2, b1))
                        layered_fail("G" + std::to_string(j + 1) + " member " + format_subset(b2) +
                                     " is not properly inside G" + std::to_string(i + 1) +
                                     " member " + format_subset(b1));
        }
    }
}

Family layered_compose(const LayeredSpec& spec) {
    spec.validate();
    std::vector<SubsetMask> members;
    for (std::size_t j = 0; j < spec.fs.size(); ++j) {
        for (SubsetMask a : spec.fs[j])
            for (SubsetMask b : spec.gs[j]) members.push_back(a | b);
    }
    return Family::dedup_of(spec.fs.front().n(), std::move(members));
}

}  // namespace uff
