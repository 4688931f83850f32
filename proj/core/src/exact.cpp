#include "uff/exact.hpp"

#include <algorithm>
#include <vector>

#include "uff/bounds.hpp"

namespace uff {

namespace {

/// Candidate order: descending cardinality, ascending mask within a size.
/// Large middle-layer sets dominate optimal families, so trying them first
/// raises the incumbent quickly.
std::vector<SubsetMask> search_candidates(int n) {
    std::vector<SubsetMask> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (int k = n; k >= 1; --k)
        for_each_mask_of_card(n, k, [&](SubsetMask m) { out.push_back(m); });
    return out;
}

bool canonical_family_less(std::vector<SubsetMask> a, std::vector<SubsetMask> b) {
    std::sort(a.begin(), a.end(), canonical_less);
    std::sort(b.begin(), b.end(), canonical_less);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

class Searcher {
  public:
    Searcher(int n, std::size_t cap, bool symmetry,
             std::optional<std::chrono::steady_clock::time_point> deadline)
        : candidates_(search_candidates(n)),
          cap_(cap),
          symmetry_(symmetry),
          deadline_(deadline) {}

    void run() { dfs(0); }

    std::size_t best_size() const { return best_.size(); }
    const std::vector<SubsetMask>& best() const { return best_; }
    std::uint64_t explored() const { return explored_; }
    bool timed_out() const { return timed_out_; }

  private:
    // F u {S} stays union-free iff S is not covered by its proper-subset
    // members and no chosen A with S inside becomes covered by cover[A] | S.
    bool feasible(SubsetMask s) const {
        SubsetMask below = 0;
        for (SubsetMask b : chosen_)
            if (proper_subset_of(b, s)) below |= b;
        if (below == s) return false;
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
            if (proper_subset_of(s, chosen_[i]) && (cover_[i] | s) == chosen_[i]) return false;
        }
        return true;
    }

    void push(SubsetMask s) {
        SubsetMask below = 0;
        for (SubsetMask b : chosen_)
            if (proper_subset_of(b, s)) below |= b;
        touched_.emplace_back();
        auto& undo = touched_.back();
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
            if (proper_subset_of(s, chosen_[i])) {
                undo.push_back({i, cover_[i]});
                cover_[i] |= s;
            }
        }
        chosen_.push_back(s);
        cover_.push_back(below);
    }

    void pop() {
        chosen_.pop_back();
        cover_.pop_back();
        for (auto it = touched_.back().rbegin(); it != touched_.back().rend(); ++it)
            cover_[it->first] = it->second;
        touched_.pop_back();
    }

    void note_incumbent() {
        if (chosen_.size() > best_.size()) {
            best_ = chosen_;
        } else if (!chosen_.empty() && chosen_.size() == best_.size() &&
                   canonical_family_less(chosen_, best_)) {
            best_ = chosen_;
        }
    }

    void dfs(std::size_t index) {
        if (timed_out_) return;
        if ((++explored_ & 0x1fff) == 0 && deadline_ &&
            std::chrono::steady_clock::now() > *deadline_) {
            timed_out_ = true;
            return;
        }
        // keep branches that can still tie the incumbent: ties decide the
        // canonically smallest optimal witness
        const std::size_t potential =
            std::min(chosen_.size() + (candidates_.size() - index), cap_);
        if (potential < best_.size()) return;
        if (index == candidates_.size()) return;

        const SubsetMask s = candidates_[index];
        const bool first_pick_ok =
            !symmetry_ || !chosen_.empty() || s == full_mask(card(s));
        if (first_pick_ok && feasible(s)) {
            push(s);
            note_incumbent();
            dfs(index + 1);
            pop();
        }
        dfs(index + 1);
    }

    std::vector<SubsetMask> candidates_;
    std::size_t cap_;
    bool symmetry_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;

    std::vector<SubsetMask> chosen_;
    std::vector<SubsetMask> cover_;
    std::vector<std::vector<std::pair<std::size_t, SubsetMask>>> touched_;
    std::vector<SubsetMask> best_;
    std::uint64_t explored_ = 0;
    bool timed_out_ = false;
};

}  // namespace

SearchResult max_union_free(const SearchConfig& config) {
    if (config.n < 1 || config.n > 16)
        throw std::invalid_argument("max_union_free: n must be in [1,16]");
    if (config.thread_hint < 0)
        throw std::invalid_argument("max_union_free: negative thread hint");

    const auto start = std::chrono::steady_clock::now();
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (config.time_limit) deadline = start + *config.time_limit;

    BoundState bounds;
    bounds.ensure(config.n);
    const std::size_t cap = bounds.upper(config.n).convert_to<std::size_t>();

    Searcher searcher(config.n, cap, config.symmetry_reduction, deadline);
    searcher.run();

    SearchResult result;
    result.status = searcher.timed_out() ? SearchStatus::timeout : SearchStatus::exact;
    result.best_size = searcher.best_size();
    result.witness = Family::of(config.n, searcher.best());
    result.explored = searcher.explored();
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

bool exhaustive_bound_check(int n, std::size_t bound) {
    if (n < 1 || n > 4)
        throw std::invalid_argument(
            "exhaustive_bound_check: refused beyond n = 4 (2^(2^n - 1) families)");
    std::vector<SubsetMask> all;
    for (int k = 1; k <= n; ++k)
        for_each_mask_of_card(n, k, [&](SubsetMask m) { all.push_back(m); });

    const std::uint32_t total = std::uint32_t{1} << all.size();
    std::vector<SubsetMask> members;
    for (std::uint32_t bits = 1; bits < total; ++bits) {
        if (static_cast<std::size_t>(std::popcount(bits)) <= bound) continue;
        members.clear();
        for (std::size_t i = 0; i < all.size(); ++i)
            if (bits & (std::uint32_t{1} << i)) members.push_back(all[i]);
        // inline union-free check over the (card-ascending) member list
        bool union_free = true;
        for (std::size_t i = 0; i < members.size() && union_free; ++i) {
            SubsetMask u = 0;
            for (std::size_t j = 0; j < members.size(); ++j)
                if (proper_subset_of(members[j], members[i])) u |= members[j];
            if (u == members[i]) union_free = false;
        }
        if (union_free) return false;  // a union-free family beats the bound
    }
    return true;
}

}  // namespace uff
