#include "uff/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace uff {

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

std::string chain_desc(const ChainSpec& spec) {
    std::string s = "chain(" + std::to_string(spec.n);
    for (int m : spec.ms) s += ";" + std::to_string(m);
    s += ")";
    return s;
}

}  // namespace

void BoundState::check(int n) const {
    if (n < 1 || n > max_n())
        throw std::invalid_argument("BoundState: ground size " + std::to_string(n) +
                                    " not computed (ensure first)");
}

void BoundState::ensure(int n) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("BoundState: n must be in [1,64]");
    for (int s = max_n() + 1; s <= n; ++s) {
        // chain DP, ties toward the larger top layer
        BigInt best_c = -1;
        int pick_c = 0;
        for (int m = 1; m <= s; ++m) {
            BigInt value = binomial(s, m) + chain_best_[static_cast<std::size_t>(m - 1)];
            if (value >= best_c) {
                best_c = std::move(value);
                pick_c = m;
            }
        }
        chain_best_.push_back(best_c);
        chain_pick_.push_back(pick_c);

        // cushioned-chain DP, ties toward thinner cushions then smaller blocks
        BigInt best_g = -1;
        GPick pick_g;
        for (int m = 1; m <= s; ++m) {
            for (int h = 0; h + m <= s; ++h) {
                BigInt value = binomial(s - h, m) * (lb_[static_cast<std::size_t>(h)] + 1) +
                               g_[static_cast<std::size_t>(m - 1)];
                const bool better =
                    value > best_g ||
                    (value == best_g && (h < pick_g.h || (h == pick_g.h && m < pick_g.m)));
                if (better) {
                    best_g = std::move(value);
                    pick_g = {m, h};
                }
            }
        }
        g_.push_back(best_g);
        g_pick_.push_back(pick_g);

        // split rule: two witnesses side by side on disjoint intervals
        BigInt best_s = -1;
        int pick_h = 0;
        for (int h = 1; h < s; ++h) {
            BigInt value = lb_[static_cast<std::size_t>(h)] + lb_[static_cast<std::size_t>(s - h)];
            if (value > best_s) {
                best_s = std::move(value);
                pick_h = h;
            }
        }

        LowerInfo info;
        BigInt best = chain_best_.back();
        info.rule = LowerRule::chain;
        if (g_.back() > best) {
            best = g_.back();
            info.rule = LowerRule::cushion;
        }
        if (best_s > best) {
            best = best_s;
            info.rule = LowerRule::split;
            info.split_h = pick_h;
        }
        lb_.push_back(std::move(best));
        lb_info_.push_back(info);

        // upper bound DP
        if (s <= 4) {
            static const int kExhaustion[5] = {0, 1, 2, 4, 7};
            ub_.push_back(kExhaustion[s]);
            ub_split_.push_back({0, 0});
        } else {
            BigInt best_u = -1;
            std::pair<int, int> pick{0, 0};
            for (int n1 = 1; n1 < s; ++n1) {
                const int n2 = s - n1;
                BigInt value = ub_[static_cast<std::size_t>(n1)] +
                               pow2(n1) * ub_[static_cast<std::size_t>(n2)];
                bool better = best_u < 0 || value < best_u;
                if (!better && value == best_u) {
                    const bool cand_mod = n2 % 4 == 0;
                    const bool cur_mod = pick.second % 4 == 0;
                    better = (cand_mod && !cur_mod) ||
                             (cand_mod == cur_mod && n1 < pick.first);
                }
                if (better) {
                    best_u = std::move(value);
                    pick = {n1, n2};
                }
            }
            ub_.push_back(std::move(best_u));
            ub_split_.push_back(pick);
        }
    }
}

const BigInt& BoundState::lower(int n) const {
    check(n);
    return lb_[static_cast<std::size_t>(n)];
}

const BigInt& BoundState::upper(int n) const {
    check(n);
    return ub_[static_cast<std::size_t>(n)];
}

LowerRule BoundState::lower_rule(int n) const {
    check(n);
    return lb_info_[static_cast<std::size_t>(n)].rule;
}

std::pair<int, int> BoundState::upper_split_of(int n) const {
    check(n);
    return ub_split_[static_cast<std::size_t>(n)];
}

std::string BoundState::lower_witness(int n) const {
    check(n);
    const LowerInfo& info = lb_info_[static_cast<std::size_t>(n)];
    switch (info.rule) {
        case LowerRule::chain: {
            ChainSpec spec;
            spec.n = n;
            for (int g = n; g >= 1;) {
                const int m = chain_pick_[static_cast<std::size_t>(g)];
                spec.ms.push_back(m);
                g = m - 1;
            }
            return chain_desc(spec);
        }
        case LowerRule::cushion: {
            std::string s = "cushion(" + std::to_string(n);
            for (int g = n; g >= 1;) {
                const GPick pick = g_pick_[static_cast<std::size_t>(g)];
                s += ";" + std::to_string(pick.m) + "+" + std::to_string(pick.h);
                g = pick.m - 1;
            }
            return s + ")";
        }
        case LowerRule::split: {
            const int h = info.split_h;
            return "split(" + std::to_string(h) + "|" + std::to_string(n - h) + ")";
        }
    }
    return {};
}

CushionSpec BoundState::cushion_witness_spec(int n) const {
    CushionSpec spec;
    spec.n = n;
    for (int g = n; g >= 1;) {
        const GPick pick = g_pick_[static_cast<std::size_t>(g)];
        CushionLevel lvl;
        lvl.m = pick.m;
        lvl.h = pick.h;
        if (pick.h == 0) {
            lvl.cushion = Family::of(n, {SubsetMask{0}});
        } else {
            // lower-bound witness for the window, shifted into place, plus {}
            std::vector<SubsetMask> members{SubsetMask{0}};
            const int offset = g - pick.h;
            for (SubsetMask m : materialize_lower(pick.h))
                members.push_back(shift_mask(m, offset));
            lvl.cushion = Family::of(n, std::move(members));
        }
        spec.levels.push_back(std::move(lvl));
        g = pick.m - 1;
    }
    return spec;
}

Family BoundState::materialize_lower(int n) const {
    check(n);
    const LowerInfo& info = lb_info_[static_cast<std::size_t>(n)];
    switch (info.rule) {
        case LowerRule::chain: {
            ChainSpec spec;
            spec.n = n;
            for (int g = n; g >= 1;) {
                const int m = chain_pick_[static_cast<std::size_t>(g)];
                spec.ms.push_back(m);
                g = m - 1;
            }
            return chain_family(spec);
        }
        case LowerRule::cushion:
            return cushion_family(cushion_witness_spec(n));
        case LowerRule::split: {
            const int h = info.split_h;
            std::vector<SubsetMask> members;
            for (SubsetMask m : materialize_lower(h)) members.push_back(m);
            for (SubsetMask m : materialize_lower(n - h)) members.push_back(shift_mask(m, h));
            return Family::of(n, std::move(members));
        }
    }
    throw std::logic_error("unreachable");
}

std::pair<BigInt, std::string> lower_bound(int n) {
    BoundState state;
    state.ensure(n);
    return {state.lower(n), state.lower_witness(n)};
}

BigInt upper_bound_split(int n1, int n2, const BigInt& ub1, const BigInt& ub2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("upper_bound_split: parts must be >= 1");
    return ub1 + pow2(n1) * ub2;
}

std::pair<BigInt, std::pair<int, int>> upper_bound(int n) {
    BoundState state;
    state.ensure(n);
    return {state.upper(n), state.upper_split_of(n)};
}

BigInt upper_bound_ck(int c, int k, const BigInt& mk) {
    if (c < 1 || k < 1) throw std::invalid_argument("upper_bound_ck: c and k must be >= 1");
    const BigInt numerator = (pow2(c * k) - 1) * mk;
    const BigInt denominator = pow2(k) - 1;
    if (numerator % denominator != 0)
        throw std::logic_error("upper_bound_ck: division is not exact");
    return numerator / denominator;
}

// ---------------------------------------------------------------------------
// Replica of the published table
// ---------------------------------------------------------------------------

BigInt replica_lower(int n) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("replica_lower: n must be in [1,64]");
    if (n == 5) return 13;  // the cushioned row
    return q_size(n);
}

std::pair<int, int> replica_split(int n) {
    if (n <= 4) return {0, 0};
    const int n1 = (n - 5) % 4 + 1;
    return {n1, n - n1};
}

BigInt replica_upper(int n) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("replica_upper: n must be in [1,64]");
    std::vector<BigInt> ub(static_cast<std::size_t>(n) + 1);
    static const int kExhaustion[5] = {0, 1, 2, 4, 7};
    for (int s = 1; s <= n; ++s) {
        if (s <= 4) {
            ub[static_cast<std::size_t>(s)] = kExhaustion[s];
        } else {
            const auto [n1, n2] = replica_split(s);
            ub[static_cast<std::size_t>(s)] =
                ub[static_cast<std::size_t>(n1)] + pow2(n1) * ub[static_cast<std::size_t>(n2)];
        }
    }
    return ub[static_cast<std::size_t>(n)];
}

std::vector<BoundsRow> bounds_table(int n_max, TableMode mode) {
    if (n_max < 1 || n_max > kMaxGround)
        throw std::invalid_argument("bounds_table: n_max must be in [1,64]");
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    if (mode == TableMode::paper_replica) {
        for (int n = 1; n <= n_max; ++n) {
            BoundsRow row;
            row.n = n;
            row.lower = replica_lower(n);
            row.lower_witness =
                n == 5 ? std::string("cushion(5;2+1;1+0)") : chain_desc(canonical_chain(n));
            row.upper = replica_upper(n);
            row.upper_split = replica_split(n);
            row.ratio = ratio_2dp(row.upper, row.lower);
            rows.push_back(std::move(row));
        }
    } else {
        BoundState state;
        state.ensure(n_max);
        for (int n = 1; n <= n_max; ++n) {
            BoundsRow row;
            row.n = n;
            row.lower = state.lower(n);
            row.lower_witness = state.lower_witness(n);
            row.upper = state.upper(n);
            row.upper_split = state.upper_split_of(n);
            row.ratio = ratio_2dp(row.upper, row.lower);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bounds_table_csv(const std::vector<BoundsRow>& rows) {
    std::string out = "n,lb,lb_witness,ub,ub_split,ratio\n";
    for (const BoundsRow& r : rows) {
        out += std::to_string(r.n) + "," + r.lower.str() + "," + r.lower_witness + "," +
               r.upper.str() + ",";
        if (r.upper_split == std::pair<int, int>{0, 0})
            out += "exhaustion";
        else
            out += std::to_string(r.upper_split.first) + "+" + std::to_string(r.upper_split.second);
        out += "," + r.ratio + "\n";
    }
    return out;
}

std::string bounds_table_markdown(const std::vector<BoundsRow>& rows) {
    std::string out = "| n | L.B. | Example | U.B. | Proof | U.B./L.B. |\n";
    out += "|--:|-----:|:--------|-----:|:------|----------:|\n";
    for (const BoundsRow& r : rows) {
        out += "| " + std::to_string(r.n) + " | " + r.lower.str() + " | " + r.lower_witness +
               " | " + r.upper.str() + " | ";
        if (r.upper_split == std::pair<int, int>{0, 0})
            out += "By exhaustion";
        else
            out += "n1=" + std::to_string(r.upper_split.first) +
                   ", n2=" + std::to_string(r.upper_split.second);
        out += " | " + r.ratio + " |\n";
    }
    return out;
}

FilibusterEstimate filibuster_duration(int n, double minutes_per_amendment) {
    if (minutes_per_amendment < 0)
        throw std::invalid_argument("filibuster_duration: negative duration");
    FilibusterEstimate est;
    est.amendments = replica_lower(n);
    est.minutes = est.amendments.convert_to<double>() * minutes_per_amendment;
    est.years = est.minutes / 525960.0;  // 365.25 days
    return est;
}

}  // namespace uff
