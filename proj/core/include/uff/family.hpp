#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uff/bigint.hpp"
#include "uff/subset.hpp"

namespace uff {

/// Thrown by parse_family; the message names the offending 1-based line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A family of subsets of [n]: pairwise distinct members kept in canonical
// order (cardinality ascending, then mask value).  Families are immutable
// values; every operation below is a pure function, safe to call
// concurrently.
class Family {
  public:
    Family() = default;
    explicit Family(int n) : n_(check_ground(n)) {}

    /// Validating constructor: rejects out-of-ground bits and duplicates,
    /// sorts into canonical order.
    static Family of(int n, std::vector<SubsetMask> members);

    /// Like of(), but silently drops duplicate members (set semantics).
    static Family dedup_of(int n, std::vector<SubsetMask> members);

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<SubsetMask>& members() const { return members_; }
    SubsetMask operator[](std::size_t i) const { return members_[i]; }

    bool contains(SubsetMask m) const;

    /// Union of all members (the support of the family).
    SubsetMask support() const;

    bool operator==(const Family&) const = default;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

  private:
    static int check_ground(int n);
    // trusted path for constructors that produce canonical output already
    static Family from_canonical(int n, std::vector<SubsetMask> sorted);

    int n_ = 0;
    std::vector<SubsetMask> members_;

    friend Family oplus(const Family&, const Family&);
    friend Family relabel(const Family&, const std::vector<int>&);
    friend class ChainBuilder;
};

/// Certificate for a failed predicate.
struct Witness {
    enum class Kind { not_union_free, not_antichain, not_maximal, superfluous };
    Kind kind;
    SubsetMask offending = 0;
    std::vector<SubsetMask> evidence;  // for not_union_free: a covering of offending
};

struct UnionFreeCheck {
    bool union_free;
    std::optional<Witness> witness;  // set when union_free is false
    explicit operator bool() const { return union_free; }
};

struct MaximalCheck {
    bool maximal;
    std::optional<SubsetMask> addable;  // a set that extends F when not maximal
    explicit operator bool() const { return maximal; }
};

// ---------------------------------------------------------------------------
// .uff text format
//
//   # optional comments
//   n=<int>
//   {e1,e2,...}     one subset per line, ascending elements, {} for the empty set
//
// Serialization always emits canonical order, so parse/serialize round-trip
// byte for byte.
// ---------------------------------------------------------------------------

Family parse_family(std::string_view text);
std::string serialize_family(const Family& f);

// ---------------------------------------------------------------------------
// Set-family algebra
// ---------------------------------------------------------------------------

/// U(F): every union of a sub-collection of F, including the empty union.
/// Returned in canonical order.  Throws std::overflow_error when the closure
/// would exceed cap (it can approach 2^n).
std::vector<SubsetMask> union_closure(const Family& f, std::size_t cap);

/// F1 (+) F2 = { A u B : A in F1, B in F2 }, deduplicated.
Family oplus(const Family& f1, const Family& f2);

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// A family is union-free when no member equals the union of one or more
/// *other* members.  A member A is such a union exactly when the union of its
/// proper-subset members covers it (any covering member is necessarily a
/// proper subset), which gives the O(|F|^2) check used here.  The empty set
/// is never a union of other members.
UnionFreeCheck check_union_free(const Family& f);
bool is_union_free(const Family& f);

/// No member contained in another distinct member.
bool is_antichain(const Family& f);

/// Exact rational LYM sum over members: sum of 1/C(n,|A|).
BigRat lym_sum(const Family& f);

/// C(n, floor(n/2)): the maximum antichain size over [n].
BigInt sperner_bound(int n);

/// True when U(F) = U(F \ {A}).  Decided without materializing U: A must be
/// the union of its proper-subset members, and the empty set is always
/// superfluous (the empty union).  Throws std::invalid_argument when A is
/// not a member.
bool is_superfluous(const Family& f, SubsetMask a);

/// True when F can augment S to some set of size t, i.e. |S u A1 u ... u Ak|
/// = t for members Ai (k = 0 allowed).  BFS over reachable masks; throws
/// std::overflow_error past 2^20 visited states.
bool can_augment(const Family& f, SubsetMask s, int t);

/// Incremental feasibility test: F u {S} stays union-free, for union-free F
/// and non-member S.  Used by the maximality check and the exact search.
bool can_extend(const Family& f, SubsetMask s);

/// A union-free family is maximal when no further non-empty subset of [n]
/// can be added without breaking union-freeness.  Throws
/// std::invalid_argument when F is not union-free.  When not maximal the
/// check returns the canonically smallest addable set.
MaximalCheck check_maximal_union_free(const Family& f);
bool is_maximal_union_free(const Family& f);

/// Element-wise relabeling by a permutation of [1,n] (perm[i-1] is the image
/// of element i).  Throws std::invalid_argument when perm is not a bijection.
Family relabel(const Family& f, const std::vector<int>& perm);

}  // namespace uff
