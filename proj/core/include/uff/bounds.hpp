#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uff/bigint.hpp"
#include "uff/constructors.hpp"

namespace uff {

enum class LowerRule { chain, cushion, split };

struct BoundsRow {
    int n = 0;
    BigInt lower;
    std::string lower_witness;          // construction kind + parameters
    BigInt upper;
    std::pair<int, int> upper_split;    // (0,0) means "by exhaustion"
    std::string ratio;                  // upper/lower, two decimals, half-up
};

// Memoized lower/upper bound tables over ground sizes, with enough
// provenance to reconstruct witnesses.  Recomputation only extends the
// tables, so established bounds never change.
//
// Lower bounds take the best of three rules, all exact-integer DPs:
//   chain    best chain family over Q(n)
//   cushion  g(s) = max over m in [1,s], h in [0,s-m] of
//            C(s-h,m) * (lb(h)+1) + g(m-1), the cushioned-chain recursion
//            (the +1 adds the empty set to the cushion family)
//   split    lb(h) + lb(n-h): two witnesses side by side on disjoint ground
//            intervals
// Ties prefer chain, then cushion.  Every winning rule has a materializable
// witness family of exactly the claimed size; materialize_lower builds it.
//
// Upper bounds: ub(n) = min over n1+n2 = n of ub(n1) + 2^n1 * ub(n2), with
// the exhaustion values (1,2,4,7) as the base for n <= 4.  Ties prefer
// splits with n2 divisible by 4, then the smallest n1, which reproduces the
// published proof column.
class BoundState {
  public:
    /// Extends every table up to ground size n (at most 64).
    void ensure(int n);

    int max_n() const { return static_cast<int>(lb_.size()) - 1; }

    const BigInt& lower(int n) const;
    const BigInt& upper(int n) const;
    LowerRule lower_rule(int n) const;
    std::string lower_witness(int n) const;
    /// (0,0) for the exhaustion base rows n <= 4.
    std::pair<int, int> upper_split_of(int n) const;

    /// Builds the winning lower-bound witness; its size equals lower(n) and
    /// it is union-free by construction (cushion specs are re-validated).
    Family materialize_lower(int n) const;

  private:
    struct GPick {
        int m = 0, h = 0;
    };
    struct LowerInfo {
        LowerRule rule = LowerRule::chain;
        int split_h = 0;
    };
    void check(int n) const;
    CushionSpec cushion_witness_spec(int n) const;

    // index 0 holds the empty-ground sentinels
    std::vector<BigInt> lb_{BigInt(0)};
    std::vector<BigInt> g_{BigInt(0)};
    std::vector<BigInt> chain_best_{BigInt(0)};
    std::vector<int> chain_pick_{0};
    std::vector<GPick> g_pick_{GPick{}};
    std::vector<LowerInfo> lb_info_{LowerInfo{}};
    std::vector<BigInt> ub_{BigInt(0)};
    std::vector<std::pair<int, int>> ub_split_{{0, 0}};
};

/// Best-known lower bound with its witness description.
std::pair<BigInt, std::string> lower_bound(int n);

/// M(n1+n2) <= M(n1) + 2^n1 * M(n2), evaluated exactly.
BigInt upper_bound_split(int n1, int n2, const BigInt& ub1, const BigInt& ub2);

/// Best-known upper bound with the split that achieves it.
std::pair<BigInt, std::pair<int, int>> upper_bound(int n);

/// M(ck) <= (2^ck - 1) * M(k) / (2^k - 1); the division is exact because
/// 2^k - 1 divides 2^ck - 1 (asserted).
BigInt upper_bound_ck(int c, int k, const BigInt& mk);

// ---------------------------------------------------------------------------
// Published table replication
// ---------------------------------------------------------------------------

/// Lower bound column of the published table: |q(n)|, except 13 at n = 5.
BigInt replica_lower(int n);
/// Upper bound column: exhaustion for n <= 4, then the fixed split cycle
/// n1 = ((n-5) mod 4) + 1 applied recursively.
BigInt replica_upper(int n);
std::pair<int, int> replica_split(int n);

enum class TableMode { paper_replica, best_known };

std::vector<BoundsRow> bounds_table(int n_max, TableMode mode);
std::string bounds_table_csv(const std::vector<BoundsRow>& rows);
std::string bounds_table_markdown(const std::vector<BoundsRow>& rows);

struct FilibusterEstimate {
    BigInt amendments;  // the replica lower bound
    double minutes;
    double years;       // at 525960 minutes per year (365.25 days)
};
FilibusterEstimate filibuster_duration(int n, double minutes_per_amendment);

}  // namespace uff
