#include "uff/family.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace uff {

namespace {

constexpr std::size_t kAugmentStateCap = std::size_t{1} << 20;

/// Union of all members of f that are proper subsets of a.
SubsetMask proper_subset_union(const Family& f, SubsetMask a) {
    SubsetMask u = 0;
    for (SubsetMask b : f) {
        if (proper_subset_of(b, a)) u |= b;
    }
    return u;
}

}  // namespace

int Family::check_ground(int n) {
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("ground size must be in [1,64], got " + std::to_string(n));
    return n;
}

Family Family::of(int n, std::vector<SubsetMask> members) {
    check_ground(n);
    const SubsetMask full = full_mask(n);
    for (SubsetMask m : members) {
        if ((m & ~full) != 0)
            throw std::invalid_argument("subset " + format_subset(m) + " exceeds ground [" +
                                        std::to_string(n) + "]");
    }
    std::sort(members.begin(), members.end(), canonical_less);
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("duplicate member in family");
    return from_canonical(n, std::move(members));
}

Family Family::dedup_of(int n, std::vector<SubsetMask> members) {
    check_ground(n);
    const SubsetMask full = full_mask(n);
    for (SubsetMask m : members) {
        if ((m & ~full) != 0)
            throw std::invalid_argument("subset " + format_subset(m) + " exceeds ground [" +
                                        std::to_string(n) + "]");
    }
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return from_canonical(n, std::move(members));
}

Family Family::from_canonical(int n, std::vector<SubsetMask> sorted) {
    Family f;
    f.n_ = n;
    f.members_ = std::move(sorted);
    return f;
}

bool Family::contains(SubsetMask m) const {
    return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
}

SubsetMask Family::support() const {
    SubsetMask s = 0;
    for (SubsetMask m : members_) s |= m;
    return s;
}

// ---------------------------------------------------------------------------
// .uff parsing and serialization
// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

std::vector<int> parse_subset_line(std::string_view body, std::size_t line_no) {
    std::vector<int> elems;
    if (body.empty()) return elems;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = body.find(',', pos);
        if (end == std::string_view::npos) end = body.size();
        std::string_view tok = trim(body.substr(pos, end - pos));
        if (tok.empty()) parse_fail(line_no, "malformed subset: empty element");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') parse_fail(line_no, "malformed subset: expected integer");
            value = value * 10 + (c - '0');
            if (value > kMaxGround + 1) break;  // will be rejected by the range check
        }
        elems.push_back(value);
        pos = end + 1;
    }
    return elems;
}

}  // namespace

Family parse_family(std::string_view text) {
    std::size_t line_no = 0;
    bool have_n = false;
    int n = 0;
    std::vector<SubsetMask> members;
    std::unordered_set<SubsetMask> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        if (!have_n) {
            if (!line.starts_with("n=")) parse_fail(line_no, "expected n=<int> header");
            std::string_view num = line.substr(2);
            if (num.empty()) parse_fail(line_no, "expected n=<int> header");
            int value = 0;
            for (char c : num) {
                if (c < '0' || c > '9') parse_fail(line_no, "expected n=<int> header");
                value = value * 10 + (c - '0');
                if (value > 1000) break;
            }
            if (value < 1 || value > kMaxGround)
                parse_fail(line_no, "ground size must be in [1,64], got " + std::string(num));
            n = value;
            have_n = true;
            continue;
        }

        if (line.front() != '{' || line.back() != '}')
            parse_fail(line_no, "malformed subset line (expected {e1,e2,...})");
        std::vector<int> elems = parse_subset_line(line.substr(1, line.size() - 2), line_no);
        SubsetMask m = 0;
        try {
            m = subset_from_elements(elems, n);
        } catch (const std::invalid_argument& e) {
            parse_fail(line_no, e.what());
        }
        if (!seen.insert(m).second) parse_fail(line_no, "duplicate subset " + format_subset(m));
        members.push_back(m);
    }
    if (!have_n) throw ParseError("missing n=<int> header");
    return Family::of(n, std::move(members));
}

std::string serialize_family(const Family& f) {
    std::string out = "n=" + std::to_string(f.n()) + "\n";
    for (SubsetMask m : f) {
        out += format_subset(m);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

std::vector<SubsetMask> union_closure(const Family& f, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("union_closure: cap must be >= 1");
    std::unordered_set<SubsetMask> closure;
    closure.insert(0);  // the empty union
    if (closure.size() > cap) throw std::overflow_error("union closure exceeds cap");
    std::vector<SubsetMask> snapshot;
    for (SubsetMask a : f) {
        snapshot.assign(closure.begin(), closure.end());
        for (SubsetMask u : snapshot) {
            closure.insert(u | a);
            if (closure.size() > cap)
                throw std::overflow_error("union closure exceeds cap of " + std::to_string(cap));
        }
    }
    std::vector<SubsetMask> out(closure.begin(), closure.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Family oplus(const Family& f1, const Family& f2) {
    if (f1.n() != f2.n())
        throw std::invalid_argument("oplus: mismatched ground sizes " + std::to_string(f1.n()) +
                                    " and " + std::to_string(f2.n()));
    std::vector<SubsetMask> out;
    out.reserve(f1.size() * f2.size());
    for (SubsetMask a : f1)
        for (SubsetMask b : f2) out.push_back(a | b);
    return Family::dedup_of(f1.n(), std::move(out));
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

UnionFreeCheck check_union_free(const Family& f) {
    const auto& ms = f.members();
    // Members are sorted by cardinality, so only earlier members can be
    // proper subsets of ms[i] (equal cardinality would force equality).
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const SubsetMask a = ms[i];
        if (a == 0) continue;  // the empty set is never a union of other members
        SubsetMask u = 0;
        for (std::size_t j = 0; j < i && u != a; ++j) {
            if (proper_subset_of(ms[j], a)) u |= ms[j];
        }
        if (u == a) {
            Witness w{Witness::Kind::not_union_free, a, {}};
            for (std::size_t j = 0; j < i; ++j)
                if (proper_subset_of(ms[j], a)) w.evidence.push_back(ms[j]);
            return {false, std::move(w)};
        }
    }
    return {true, std::nullopt};
}

bool is_union_free(const Family& f) { return check_union_free(f).union_free; }

bool is_antichain(const Family& f) {
    const auto& ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if (subset_of(ms[i], ms[j])) return false;
        }
    }
    return true;
}

BigRat lym_sum(const Family& f) {
    BigRat sum = 0;
    for (SubsetMask m : f) sum += BigRat(1, binomial(f.n(), card(m)));
    return sum;
}

BigInt sperner_bound(int n) {
    if (n < 1) throw std::invalid_argument("sperner_bound: n must be >= 1");
    return binomial(n, n / 2);
}

bool is_superfluous(const Family& f, SubsetMask a) {
    if (!f.contains(a)) throw std::invalid_argument("is_superfluous: set is not a member");
    if (a == 0) return true;  // the empty union is always in U(F)
    return proper_subset_union(f, a) == a;
}

bool can_augment(const Family& f, SubsetMask s, int t) {
    if ((s & ~full_mask(f.n())) != 0)
        throw std::invalid_argument("can_augment: set exceeds ground");
    if (t < 0 || t > f.n()) throw std::invalid_argument("can_augment: target size out of [0,n]");
    const int s_card = card(s);
    if (s_card == t) return true;  // k = 0, S itself
    if (s_card > t) return false;  // unions only grow

    std::unordered_set<SubsetMask> visited;
    std::deque<SubsetMask> queue;
    visited.insert(s);
    queue.push_back(s);
    while (!queue.empty()) {
        const SubsetMask u = queue.front();
        queue.pop_front();
        for (SubsetMask a : f) {
            const SubsetMask v = u | a;
            if (card(v) > t) continue;
            if (!visited.insert(v).second) continue;
            if (card(v) == t) return true;
            if (visited.size() > kAugmentStateCap)
                throw std::overflow_error("can_augment: state cap of 2^20 exceeded");
            queue.push_back(v);
        }
    }
    return false;
}

bool can_extend(const Family& f, SubsetMask s) {
    if (s != 0 && proper_subset_union(f, s) == s) return false;
    for (SubsetMask a : f) {
        if (!proper_subset_of(s, a)) continue;
        if ((proper_subset_union(f, a) | s) == a) return false;
    }
    return true;
}

MaximalCheck check_maximal_union_free(const Family& f) {
    if (!is_union_free(f))
        throw std::invalid_argument("check_maximal_union_free: family is not union-free");

    const auto& ms = f.members();
    // cover[i]: union of the proper-subset members of ms[i].  Adding a
    // candidate S keeps the family union-free iff S is not covered by its own
    // proper-subset members and no member A with S properly inside becomes
    // covered by cover[A] | S.
    std::vector<SubsetMask> cover(ms.size(), 0);
    for (std::size_t i = 0; i < ms.size(); ++i) cover[i] = proper_subset_union(f, ms[i]);

    for (int k = 1; k <= f.n(); ++k) {
        std::optional<SubsetMask> found;
        for_each_mask_of_card(f.n(), k, [&](SubsetMask s) {
            if (found || f.contains(s)) return;
            if (proper_subset_union(f, s) == s) return;
            for (std::size_t i = 0; i < ms.size(); ++i) {
                if (proper_subset_of(s, ms[i]) && (cover[i] | s) == ms[i]) return;
            }
            found = s;
        });
        if (found) return {false, found};
    }
    return {true, std::nullopt};
}

bool is_maximal_union_free(const Family& f) { return check_maximal_union_free(f).maximal; }

Family relabel(const Family& f, const std::vector<int>& perm) {
    const int n = f.n();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation must have length n");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 1 || p > n || hit[static_cast<std::size_t>(p - 1)])
            throw std::invalid_argument("relabel: not a bijection on [1,n]");
        hit[static_cast<std::size_t>(p - 1)] = true;
    }
    std::vector<SubsetMask> out;
    out.reserve(f.size());
    for (SubsetMask m : f) {
        SubsetMask image = 0;
        SubsetMask rest = m;
        while (rest != 0) {
            const int i = std::countr_zero(rest);
            image |= SubsetMask{1} << (perm[static_cast<std::size_t>(i)] - 1);
            rest &= rest - 1;
        }
        out.push_back(image);
    }
    return Family::of(n, std::move(out));
}

}  // namespace uff
