#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "uff/constructors.hpp"
#include "uff/spec_json.hpp"

using namespace uff;
using namespace uff::testing;

namespace {

SubsetMask mk(std::initializer_list<int> elems) {
    SubsetMask m = 0;
    for (int e : elems) m |= SubsetMask{1} << (e - 1);
    return m;
}

Family fam(int n, std::initializer_list<SubsetMask> members) {
    return Family::of(n, std::vector<SubsetMask>(members));
}

CushionSpec doubling_spec() {
    // (C([4],2) (+) {0,{5}}) u {{1}}: the 13-member doubled family on [5]
    CushionSpec spec;
    spec.n = 5;
    spec.levels.push_back({2, 1, fam(5, {0, mk({5})})});
    spec.levels.push_back({1, 0, Family::of(5, {0})});
    return spec;
}

CushionSpec tripling_spec() {
    // (C([3],2) (+) {0,{4},{4,5}}) u {{1}}: the 10-member tripled family
    CushionSpec spec;
    spec.n = 5;
    spec.levels.push_back({2, 2, fam(5, {0, mk({4}), mk({4, 5})})});
    spec.levels.push_back({1, 0, Family::of(5, {0})});
    return spec;
}

/// Random valid CushionSpec on a small ground.
CushionSpec random_cushion_spec(Rng& rng, int n) {
    CushionSpec spec;
    spec.n = n;
    int ground = n;
    bool first = true;
    while (ground >= 1) {
        const int max_mh = first ? ground : ground - 1;
        if (max_mh < 1) break;
        const int m = 1 + static_cast<int>(rng() % max_mh);
        const int h = static_cast<int>(rng() % static_cast<std::uint64_t>(max_mh - m + 1));
        CushionLevel lvl;
        lvl.m = m;
        lvl.h = h;
        if (h == 0) {
            lvl.cushion = Family::of(n, {SubsetMask{0}});
        } else {
            const int hi = first ? n : ground;
            const SubsetMask window = full_mask(hi) & ~full_mask(hi - h);
            lvl.cushion = random_union_free_in_window(rng, n, window, 6, rng() % 2 == 0);
            if (lvl.cushion.empty()) lvl.cushion = Family::of(n, {SubsetMask{0}});
        }
        spec.levels.push_back(std::move(lvl));
        ground = m - 1;
        first = false;
        if (rng() % 3 == 0) break;
    }
    if (spec.levels.empty()) spec.levels.push_back({1, 0, Family::of(n, {SubsetMask{0}})});
    return spec;
}

SubsetMask pick_bit(Rng& rng, SubsetMask from) {
    int idx = static_cast<int>(rng() % static_cast<std::uint64_t>(card(from)));
    SubsetMask rest = from;
    while (idx-- > 0) rest &= rest - 1;
    return rest & (~rest + 1);
}

/// Random valid LayeredSpec.  Two shapes:
///  - towers: F_j are same-size antichains T_j u {x}, with the tower
///    T_1 c T_2 c ... absorbing every earlier layer's additions, and G_j
///    union-free inside the strictly shrinking band (V_{j+1}, V_j];
///  - side-by-side: G_1 = {0} and F_2 = {0}, the identity pairing.
LayeredSpec random_layered_spec(Rng& rng, int n) {
    SubsetMask f_support = rng() & full_mask(n);
    SubsetMask g_support = full_mask(n) & ~f_support;
    LayeredSpec spec;

    if (rng() % 4 == 0) {  // side-by-side shape
        if (f_support == 0 || g_support == 0) {
            f_support = full_mask(n / 2 > 0 ? n / 2 : 1);
            g_support = full_mask(n) & ~f_support;
        }
        Family f1 = random_union_free_in_window(rng, n, f_support, 5, false);
        if (f1.empty()) f1 = Family::of(n, {f_support & (~f_support + 1)});
        Family g2 = random_union_free_in_window(rng, n, g_support, 5, rng() % 2 == 0);
        if (g2.empty()) g2 = Family::of(n, {SubsetMask{0}});
        spec.fs = {std::move(f1), Family::of(n, {SubsetMask{0}})};
        spec.gs = {Family::of(n, {SubsetMask{0}}), std::move(g2)};
        return spec;
    }

    const std::size_t p = 1 + rng() % 3;
    // F towers: T grows by this layer's additions plus one fresh element
    SubsetMask tower = 0;
    std::vector<Family> fs;
    for (std::size_t j = 0; j < p && fs.size() < p; ++j) {
        SubsetMask avail = f_support & ~tower;
        if (j == 0 && rng() % 3 == 0) {
            fs.push_back(Family::of(n, {SubsetMask{0}}));  // start from the identity
            continue;
        }
        if (avail == 0) break;
        std::vector<SubsetMask> members;
        SubsetMask added = 0;
        const int want = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < want && avail != 0; ++i) {
            const SubsetMask bit = pick_bit(rng, avail);
            members.push_back(tower | bit);
            added |= bit;
            avail &= ~bit;
        }
        fs.push_back(Family::dedup_of(n, members));
        tower |= added;
        if (avail != 0 && rng() % 2 == 0) tower |= pick_bit(rng, avail);
    }
    if (fs.empty()) fs.push_back(Family::of(n, {SubsetMask{0}}));

    // G bands: V_1 > V_2 > ... strictly decreasing; G_j lives in
    // (V_{j+1}, V_j] and only the last band may contain the empty set
    const std::size_t layers = fs.size();
    std::vector<SubsetMask> v(layers + 1);
    v[0] = g_support;
    for (std::size_t j = 1; j <= layers; ++j) {
        v[j] = v[j - 1];
        if (v[j] != 0) v[j] &= ~pick_bit(rng, v[j]);  // drop one element per band
    }
    std::vector<Family> gs;
    for (std::size_t j = 0; j < layers; ++j) {
        const SubsetMask lo = v[j + 1], hi = v[j];
        std::vector<SubsetMask> members;
        if (j + 1 == layers && rng() % 2 == 0) members.push_back(0);
        SubsetMask extra = hi & ~lo;
        std::size_t want = 1 + rng() % 3;
        std::vector<SubsetMask> kept;
        while (extra != 0 && kept.size() < want) {
            SubsetMask add = 0;
            SubsetMask pool = hi & ~lo;
            const int bits = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(card(pool)));
            for (int i = 0; i < bits && pool != 0; ++i) {
                const SubsetMask bit = pick_bit(rng, pool);
                add |= bit;
                pool &= ~bit;
            }
            const SubsetMask candidate = lo | add;
            Family current = Family::dedup_of(n, kept);
            if (!current.contains(candidate) && can_extend(current, candidate))
                kept.push_back(candidate);
            if (rng() % 4 == 0) break;
        }
        for (SubsetMask k : kept) members.push_back(k);
        if (members.empty()) members.push_back(j + 1 == layers ? SubsetMask{0} : hi);
        gs.push_back(Family::dedup_of(n, members));
    }
    spec.fs = std::move(fs);
    spec.gs = std::move(gs);
    return spec;
}

}  // namespace

TEST_CASE("chain spec validation") {
    CHECK_THROWS_AS((ChainSpec{3, {}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChainSpec{3, {4}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChainSpec{4, {2, 2}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ChainSpec{4, {2, 0}}.validate()), std::invalid_argument);
    CHECK_NOTHROW((ChainSpec{4, {2, 1}}.validate()));
}

TEST_CASE("chain family materialization") {
    // q(20;15;6;1) has C(20,15)+C(14,6)+C(5,1) members
    const ChainSpec big{20, {15, 6, 1}};
    CHECK(chain_size(big) == 15504 + 3003 + 5);
    CHECK(chain_family(big).size() == 18512);

    const Family seven = chain_family(ChainSpec{4, {2, 1}});
    CHECK(seven.size() == 7);
    CHECK(seven.contains(mk({1})));
    CHECK(seven.contains(mk({3, 4})));

    CHECK(chain_family(ChainSpec{3, {3}}) == fam(3, {mk({1, 2, 3})}));
}

TEST_CASE("canonical chain q(n)") {
    CHECK(canonical_chain(20).ms == std::vector<int>{10, 5, 2, 1});
    CHECK(canonical_chain(1).ms == std::vector<int>{1});
    CHECK(canonical_chain(9).ms == std::vector<int>{5, 2, 1});
    CHECK(canonical_chain(6).ms == std::vector<int>{3, 1});
    CHECK(canonical_chain(5).ms == std::vector<int>{3, 1});
}

TEST_CASE("q_size recursion") {
    CHECK(q_size(4) == 7);
    CHECK(q_size(14) == 3454);
    CHECK(q_size(30) == BigInt("155120974"));
    CHECK(q_size(0) == 0);
}

TEST_CASE("q_size equals the materialized canonical chain size") {
    for (int n = 1; n <= 24; ++n) {
        CHECK(BigInt(chain_family(canonical_chain(n)).size()) == q_size(n));
    }
}

TEST_CASE("chain spec enumeration") {
    CHECK(enumerate_chain_specs(1) == std::vector<ChainSpec>{ChainSpec{1, {1}}});
    CHECK(enumerate_chain_specs(2) ==
          std::vector<ChainSpec>{ChainSpec{2, {1}}, ChainSpec{2, {2, 1}}});
    CHECK(enumerate_chain_specs(3).size() == 4);

    // 2^(n-1) chains, lexicographically ordered, all valid and ending at 1
    for (int n = 1; n <= 10; ++n) {
        const auto specs = enumerate_chain_specs(n);
        CHECK(specs.size() == std::size_t{1} << (n - 1));
        for (std::size_t i = 0; i < specs.size(); ++i) {
            CHECK_NOTHROW(specs[i].validate());
            CHECK(specs[i].ends_at_one());
            if (i > 0) CHECK(specs[i - 1].ms < specs[i].ms);
        }
    }
    CHECK_THROWS_AS(enumerate_chain_specs(21), std::invalid_argument);
}

TEST_CASE("best chain") {
    const BestChain five = best_chain(5);
    CHECK(five.size == 12);
    CHECK(five.spec.ms == std::vector<int>{3, 1});

    CHECK(best_chain(1).size == 1);
    CHECK(best_chain(1).spec.ms == std::vector<int>{1});
    CHECK(best_chain(13).size == 1738);

    // exhaustive cross-check against the full enumeration
    for (int n = 1; n <= 12; ++n) {
        BigInt max_size = 0;
        for_each_chain_spec(n, [&](const ChainSpec& s) {
            max_size = std::max(max_size, chain_size(s));
        });
        CHECK(best_chain(n).size == max_size);
    }
}

TEST_CASE("best chain is at least q(n), with equality observed through 64") {
    for (int n = 1; n <= 64; ++n) {
        const BestChain best = best_chain(n);
        CHECK(best.size >= q_size(n));
        // equality holds on the whole supported range; recorded as an
        // observation, not assumed by any other component
        CHECK(best.size == q_size(n));
    }
}

TEST_CASE("every chain family in Q(n) is union-free (n <= 10)") {
    for (int n = 1; n <= 10; ++n) {
        for_each_chain_spec(n, [&](const ChainSpec& spec) {
            CHECK(is_union_free(chain_family(spec)));
        });
    }
}

TEST_CASE("every chain family in Q(n) is maximal (n <= 8)") {
    for (int n = 1; n <= 8; ++n) {
        for_each_chain_spec(n, [&](const ChainSpec& spec) {
            CHECK(is_maximal_union_free(chain_family(spec)));
        });
    }
    for (int n = 9; n <= 10; ++n) CHECK(is_maximal_union_free(chain_family(canonical_chain(n))));
}

TEST_CASE("cushion spec validation") {
    CHECK_NOTHROW(doubling_spec().validate());

    CushionSpec bad = doubling_spec();
    bad.levels[0].h = 4;  // m+h exceeds n
    CHECK_THROWS_WITH_AS(cushion_family(bad), doctest::Contains("level 1"),
                         std::invalid_argument);

    CushionSpec outside = doubling_spec();
    outside.levels[0].cushion = fam(5, {0, mk({4})});  // window is [5,5]
    CHECK_THROWS_WITH_AS(cushion_family(outside), doctest::Contains("window"),
                         std::invalid_argument);

    CushionSpec not_uf = doubling_spec();
    not_uf.levels[0].h = 3;
    not_uf.levels[0].cushion = fam(5, {mk({3}), mk({4}), mk({3, 4})});
    CHECK_THROWS_WITH_AS(cushion_family(not_uf), doctest::Contains("union-free"),
                         std::invalid_argument);

    CushionSpec zero_h = doubling_spec();
    zero_h.levels[1].cushion = Family::of(5, {mk({1})});
    CHECK_THROWS_AS(cushion_family(zero_h), std::invalid_argument);
}

TEST_CASE("doubling and tripling families") {
    const Family doubled = cushion_family(doubling_spec());
    CHECK(doubled.size() == 13);
    CHECK(cushion_size(doubling_spec()) == 13);
    CHECK(is_union_free(doubled));
    CHECK(doubled.contains(mk({1})));
    CHECK(doubled.contains(mk({3, 4, 5})));

    const Family tripled = cushion_family(tripling_spec());
    CHECK(tripled.size() == 10);
    CHECK(is_union_free(tripled));
}

TEST_CASE("all-zero cushions reduce to the chain family") {
    CushionSpec spec;
    spec.n = 6;
    for (int m : {3, 2, 1}) spec.levels.push_back({m, 0, Family::of(6, {SubsetMask{0}})});
    CHECK(cushion_family(spec) == chain_family(ChainSpec{6, {3, 2, 1}}));
}

TEST_CASE("the size-4 layer with a two-element cushion example") {
    // C([5],4) u {{1},{1,2},{1,3}}
    CushionSpec spec;
    spec.n = 5;
    spec.levels.push_back({4, 0, Family::of(5, {SubsetMask{0}})});
    spec.levels.push_back({1, 2, fam(5, {0, mk({2}), mk({3})})});
    const Family f = cushion_family(spec);
    CHECK(f.size() == 8);
    CHECK(f.contains(mk({1, 2})));
    CHECK(f.contains(mk({1, 3})));
    CHECK(is_union_free(f));
}

TEST_CASE("fuzzed cushion families are union-free") {
    Rng rng(2024101);
    int built = 0;
    while (built < 200) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const CushionSpec spec = random_cushion_spec(rng, n);
        CHECK_NOTHROW(spec.validate());
        const Family f = cushion_family(spec);
        CHECK(is_union_free(f));
        CHECK(BigInt(f.size()) == cushion_size(spec));
        ++built;
    }
}

TEST_CASE("layered composition validation") {
    // the worked 11-member decomposition on [5]
    LayeredSpec spec;
    spec.fs = {Family::of(5, {SubsetMask{0}}), fam(5, {mk({1}), mk({2})})};
    spec.gs = {fam(5, {mk({3, 4, 5})}),
               fam(5, {0, mk({3}), mk({3, 4}), mk({3, 5}), mk({4, 5})})};
    CHECK_NOTHROW(spec.validate());
    const Family f = layered_compose(spec);
    CHECK(f.size() == 11);
    CHECK(is_union_free(f));

    // equals the tripled-cushion example family plus {3,4,5}
    CushionSpec example;
    example.n = 5;
    example.levels.push_back({1, 3, fam(5, {0, mk({3}), mk({3, 4}), mk({3, 5}), mk({4, 5})})});
    std::vector<SubsetMask> expected(cushion_family(example).members());
    expected.push_back(mk({3, 4, 5}));
    CHECK(f == Family::of(5, expected));
}

TEST_CASE("single identity layer returns the other factor") {
    LayeredSpec spec;
    spec.fs = {Family::of(5, {SubsetMask{0}})};
    spec.gs = {fam(5, {mk({1}), mk({2, 3}), mk({2, 4})})};
    CHECK(layered_compose(spec) == spec.gs[0]);
}

TEST_CASE("identity pairing composes two families side by side") {
    // F2 = G1 = {0}: the result is F1 u G2 on disjoint supports
    LayeredSpec spec;
    spec.fs = {fam(6, {mk({1}), mk({2}), mk({1, 2})}), Family::of(6, {SubsetMask{0}})};
    spec.gs = {Family::of(6, {SubsetMask{0}}), fam(6, {0, mk({4}), mk({5, 6})})};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // F1 not union-free

    // with the empty set on both sides it is counted once
    spec.fs[0] = fam(6, {0, mk({1}), mk({2})});
    const Family f = layered_compose(spec);
    CHECK(f.size() == 3 + 3 - 1);
    CHECK(is_union_free(f));

    spec.fs[0] = fam(6, {mk({1}), mk({2}), mk({3})});
    CHECK(layered_compose(spec).size() == 6);
}

TEST_CASE("layered composition rejects unsound inputs") {
    // both factors of one block contain {} next to larger members
    LayeredSpec both_cushioned;
    both_cushioned.fs = {fam(5, {0, mk({1})})};
    both_cushioned.gs = {fam(5, {0, mk({3})})};
    CHECK_THROWS_WITH_AS(layered_compose(both_cushioned), doctest::Contains("antichain"),
                         std::invalid_argument);
    // and indeed the raw product would not be union-free
    CHECK(!is_union_free(oplus(both_cushioned.fs[0], both_cushioned.gs[0])));

    // two pure-F blocks whose members nest: the product collapses
    LayeredSpec nested;
    nested.fs = {fam(5, {mk({1}), mk({2})}), fam(5, {mk({1, 2})})};
    nested.gs = {Family::of(5, {SubsetMask{0}}), Family::of(5, {SubsetMask{0}})};
    CHECK_THROWS_AS(layered_compose(nested), std::invalid_argument);
    CHECK(!is_union_free(fam(5, {mk({1}), mk({2}), mk({1, 2})})));

    // intersecting supports
    LayeredSpec overlap;
    overlap.fs = {fam(4, {mk({1})})};
    overlap.gs = {fam(4, {mk({1, 2})})};
    CHECK_THROWS_WITH_AS(layered_compose(overlap), doctest::Contains("support"),
                         std::invalid_argument);

    // F members must grow strictly across layers
    LayeredSpec flat;
    flat.fs = {fam(4, {mk({1})}), fam(4, {mk({1})})};
    flat.gs = {fam(4, {mk({3, 4})}), fam(4, {mk({3})})};
    CHECK_THROWS_AS(layered_compose(flat), std::invalid_argument);
}

TEST_CASE("fuzzed layered compositions are union-free") {
    Rng rng(2024102);
    int built = 0, attempts = 0;
    while (built < 200) {
        REQUIRE(++attempts < 5000);
        const int n = 4 + static_cast<int>(rng() % 7);
        const LayeredSpec spec = random_layered_spec(rng, n);
        try {
            spec.validate();
        } catch (const std::invalid_argument&) {
            continue;  // generator occasionally emits degenerate towers
        }
        CHECK(is_union_free(layered_compose(spec)));
        ++built;
    }
}

TEST_CASE("cushion spec JSON ingestion") {
    const char* text = R"({
      "n": 5,
      "levels": [
        {"m": 2, "h": 1, "cushion": [[], [5]]},
        {"m": 1, "h": 0, "cushion": [[]]}
      ]
    })";
    const CushionSpec spec = cushion_spec_from_json(text);
    CHECK(cushion_family(spec) == cushion_family(doubling_spec()));

    CHECK_THROWS_AS(cushion_spec_from_json("{"), ParseError);
    CHECK_THROWS_AS(cushion_spec_from_json(R"({"n": 5})"), ParseError);
    CHECK_THROWS_AS(cushion_spec_from_json(R"({"n": 5, "levels": []})"), ParseError);
    // out-of-window members are a validation error, not a parse error
    CHECK_THROWS_AS(
        cushion_spec_from_json(R"({"n":5,"levels":[{"m":2,"h":1,"cushion":[[],[4]]}]})"),
        std::invalid_argument);
}

TEST_CASE("layered spec JSON ingestion") {
    const char* text = R"({
      "fs": [[[]], [[1],[2]]],
      "gs": [[[3,4,5]], [[],[3],[3,4],[3,5],[4,5]]]
    })";
    const LayeredSpec spec = layered_spec_from_json(text);
    CHECK(spec.fs.size() == 2);
    CHECK(spec.fs[0].n() == 5);  // inferred from the largest element
    CHECK(layered_compose(spec).size() == 11);

    CHECK_THROWS_AS(layered_spec_from_json(R"({"fs": []})"), ParseError);
    CHECK_THROWS_AS(layered_spec_from_json("nonsense"), ParseError);
}
