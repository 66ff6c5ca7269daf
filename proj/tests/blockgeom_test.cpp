#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "edgeiso/edgeiso.hpp"
#include "support/oracles.hpp"

using namespace edgeiso;

namespace {

TotalOrder order_of(const Graph& g) { return *optimal_order(g).chain.order; }

Partition halves(const Graph& g, std::size_t first)
{
    std::vector<std::size_t> ends{first, g.size()};
    return Partition::from_boundaries(order_of(g), ends);
}

Partition standard_of(const Graph& g) { return standard_monotonic_partition(delta_of_order(g, order_of(g))); }

// Every vertex lies in exactly one block, and starts biject with blocks.
void expect_block_cover(const DominationCollection& dc)
{
    const std::size_t n = dc.shape().volume();
    std::vector<int> hits(n, 0);
    std::set<Vertex> starts;
    for (std::size_t k = 0; k < dc.block_count(); ++k) {
        BlockId b = dc.block_at(k);
        VertexSet m = block_members(dc, b);
        EXPECT_EQ(m.size(), dc.block_size(b));
        m.for_each([&](Vertex v) {
            ++hits[v];
            EXPECT_EQ(block_of(dc, v), b);
        });
        Vertex s = start_of(dc, b);
        EXPECT_TRUE(m.contains(s));
        starts.insert(s);
    }
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_EQ(starts.size(), dc.block_count());
}

} // namespace

TEST(Blocks, AtomicPartitionsMakeEveryVertexABlock)
{
    Graph g = parse_graph_spec("K2xP3");
    std::vector<Partition> parts{atomic_partition(TotalOrder::identity(2)), atomic_partition(order_of(make_path(3)))};
    DominationCollection dc(parts);
    EXPECT_EQ(dc.block_count(), g.size());
    for (Vertex v = 0; v < g.size(); ++v) EXPECT_EQ(start_of(dc, block_of(dc, v)), v);
    expect_block_cover(dc);
}

TEST(Blocks, PetersenSquareHalves)
{
    Graph p = make_petersen();
    DominationCollection dc = standard_domination_collection({halves(p, 5), halves(p, 5)});
    EXPECT_EQ(dc.block_count(), 4u);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(block_members(dc, dc.block_at(k)).size(), 25u);
    expect_block_cover(dc);
    Vertex first = order_of(p).at(0);
    Vertex s = start_of(dc, BlockId{0, 0});
    EXPECT_EQ(dc.shape().decode(s), (std::vector<std::size_t>{first, first}));
}

TEST(Blocks, CoverOnMixedPartitions)
{
    Graph p = make_petersen();
    expect_block_cover(standard_domination_collection({standard_of(p), halves(make_cycle(5), 3), standard_of(p)}));
}

TEST(Bones, OneFactorCollapsesEverything)
{
    DominationCollection dc({halves(make_cycle(5), 3)});
    for (std::size_t q = 0; q < 2; ++q) {
        BlockId b{q};
        EXPECT_EQ(bone(dc, b, 0), block_members(dc, b));
        EXPECT_EQ(skeleton(dc, b), block_members(dc, b));
    }
}

TEST(Bones, SkeletonSizeByInclusionExclusion)
{
    Graph p = make_petersen();
    DominationCollection dc({standard_of(p), halves(make_cycle(5), 3), halves(p, 5)});
    for (std::size_t k = 0; k < dc.block_count(); ++k) {
        BlockId b = dc.block_at(k);
        std::size_t expect = 1;
        for (std::size_t z : dc.segment_sizes(b)) expect += z - 1;
        EXPECT_EQ(skeleton(dc, b).size(), expect);
        for (std::size_t i = 0; i < 3; ++i) {
            VertexSet bi = bone(dc, b, i);
            EXPECT_EQ(bi.size(), dc.segment_sizes(b)[i]);
            EXPECT_TRUE(bi.contains(start_of(dc, b)));
            EXPECT_TRUE(bi.is_subset_of(block_members(dc, b)));
        }
    }
    EXPECT_THROW(bone(dc, BlockId{0, 0, 0}, 3), ParameterError);
}

TEST(Bones, AtomicSkeletonIsTheStart)
{
    DominationCollection dc({atomic_partition(TotalOrder::identity(3)), atomic_partition(TotalOrder::identity(2))});
    for (std::size_t k = 0; k < dc.block_count(); ++k) {
        BlockId b = dc.block_at(k);
        EXPECT_EQ(skeleton(dc, b).ids(), (std::vector<Vertex>{start_of(dc, b)}));
    }
}

TEST(StacksAndSlices, SlicesPartitionAndStacksPartitionSlices)
{
    Graph p = make_petersen();
    DominationCollection dc({standard_of(p), halves(make_cycle(5), 3), halves(p, 5)});
    const std::size_t n = dc.shape().volume();
    VertexSet all(n);
    for (std::size_t q = 0; q < dc.partition(0).segment_count(); ++q) {
        VertexSet sl = slice(dc, q);
        EXPECT_EQ(sl.intersection_size(all), 0u);
        all |= sl;
        VertexSet stacks(n);
        for (std::size_t a = 0; a < dc.partition(1).segment_count(); ++a) {
            VertexSet st = stack(dc, 2, BlockId{q, a, 0});
            EXPECT_EQ(st.intersection_size(stacks), 0u);
            stacks |= st;
        }
        EXPECT_EQ(stacks, sl);
    }
    EXPECT_EQ(all, VertexSet::full(n));
    EXPECT_THROW(slice(dc, 6), ParameterError);
    EXPECT_THROW(stack(dc, 3, BlockId{0, 0, 0}), ParameterError);
    EXPECT_THROW(stack(dc, 2, BlockId{0, 2, 0}), ParameterError);
}

TEST(StacksAndSlices, PetersenSquareFirstSlice)
{
    Graph p = make_petersen();
    DominationCollection dc = standard_domination_collection({halves(p, 5), halves(p, 5)});
    VertexSet s = slice(dc, 0);
    EXPECT_EQ(s.size(), 50u);
    Partition h = halves(p, 5);
    s.for_each([&](Vertex v) { EXPECT_EQ(h.segment_of(dc.shape().coordinate(v, 0)), 0u); });
}

TEST(StacksAndSlices, OneSegmentPerFactor)
{
    std::vector<std::size_t> all3{3}, all2{2};
    DominationCollection dc({Partition::from_boundaries(TotalOrder::identity(3), all3),
                             Partition::from_boundaries(TotalOrder::identity(2), all2)});
    VertexSet v = VertexSet::full(6);
    EXPECT_EQ(dc.block_count(), 1u);
    EXPECT_EQ(slice(dc, 0), v);
    EXPECT_EQ(stack(dc, 0, BlockId{0, 0}), v);
    EXPECT_EQ(stack(dc, 1, BlockId{0, 0}), v);
}

TEST(BlockLexOrder, AtomicIsLex)
{
    Graph g = parse_graph_spec("P3xC4xK2");
    std::vector<TotalOrder> fo;
    for (const Graph& f : g.factors()) fo.push_back(order_of(f));
    std::vector<Partition> parts;
    for (const TotalOrder& o : fo) parts.push_back(atomic_partition(o));
    EXPECT_EQ(block_lex_order(lexicographic_collection(parts)), lex_order(g, fo));
    EXPECT_EQ(block_lex_order(standard_domination_collection(parts)), lex_order(g, fo));
}

TEST(BlockLexOrder, OneBlockIsADominationOrder)
{
    Graph g = parse_graph_spec("K2xK3xK2");
    std::vector<TotalOrder> fo{TotalOrder::identity(2), TotalOrder::identity(3), TotalOrder::identity(2)};
    std::vector<Partition> parts;
    for (const TotalOrder& o : fo) {
        std::vector<std::size_t> end{o.size()};
        parts.push_back(Partition::from_boundaries(o, end));
    }
    std::vector<std::size_t> pi{0, 1, 2};
    do {
        DominationCollection dc(parts, {}, Permutation(pi));
        EXPECT_EQ(block_lex_order(dc), domination_order(g, fo, Permutation(pi)));
    } while (std::next_permutation(pi.begin(), pi.end()));
}

TEST(BlockLexOrder, BlocksAppearInLexOrderOfTheirStarts)
{
    Graph p = make_petersen();
    DominationCollection dc = standard_domination_collection({standard_of(p), standard_of(p)});
    EXPECT_EQ(dc.block_count(), 36u);
    TotalOrder bl = block_lex_order(dc);
    std::size_t pos = 0;
    for (const BlockId& b : blocks_in_order(dc)) {
        VertexSet m = block_members(dc, b);
        VertexSet got = segment(bl, pos + 1, pos + m.size());
        EXPECT_EQ(got, m);
        EXPECT_EQ(bl.at(pos), start_of(dc, b));
        pos += m.size();
    }
    EXPECT_EQ(pos, 100u);
}

TEST(StandardBlockDomination, Eta)
{
    std::vector<std::size_t> equal{2, 2, 2}, three_two{3, 2}, ascending{2, 3, 4}, mixed{3, 1, 3, 2};
    EXPECT_EQ(standard_block_domination(equal), Permutation::identity(3));
    EXPECT_EQ(standard_block_domination(three_two).images(), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(standard_block_domination(ascending), Permutation::identity(3));
    EXPECT_EQ(standard_block_domination(mixed).images(), (std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST(StandardBlockDomination, CliqueProductSingleBlock)
{
    Graph g = parse_graph_spec("K2xK3xK4");
    auto fs = g.factors();
    std::vector<TotalOrder> fo;
    for (const Graph& f : fs) fo.push_back(TotalOrder::identity(f.size()));
    DominationCollection dc = standard_domination_collection(standard_partitions(fs, fo));
    EXPECT_EQ(dc.block_count(), 1u);
    EXPECT_EQ(dc.perm(BlockId{0, 0, 0}), Permutation::identity(3));
    EXPECT_EQ(standard_block_lex_order(fs, fo), lex_order(g, fo));
}

TEST(StandardBlockLexOrder, CliquePowersAreLex)
{
    for (std::size_t n : {2u, 3u, 4u}) {
        Graph g = cartesian_power(make_clique(n), 3);
        auto fs = g.factors();
        std::vector<TotalOrder> fo(3, TotalOrder::identity(n));
        EXPECT_EQ(standard_block_lex_order(fs, fo), lex_order(g, fo));
    }
}

TEST(StandardBlockLexOrder, OptimalOnPetersenAndCycleSquares)
{
    for (const Graph& f : {make_petersen(), make_cycle(5)}) {
        std::vector<Graph> fs{f, f};
        Graph g = cartesian_product(fs);
        std::vector<TotalOrder> fo(2, order_of(f));
        TotalOrder sbl = standard_block_lex_order(fs, fo);
        ProfileOptions o;
        o.strategy = Strategy::compressed_only;
        o.factor_orders = fo;
        EXPECT_TRUE(verify_order_optimal(g, sbl, exact_profile(g, o)).optimal);
    }
}

TEST(Consistency, BlockLexOrdersAgreeWithTheirRestrictions)
{
    Graph p = make_petersen(), c5 = make_cycle(5);
    std::vector<DominationCollection> cases{
        standard_domination_collection({standard_of(p), standard_of(p)}),
        standard_domination_collection({halves(c5, 3), halves(c5, 3), halves(c5, 3)}),
        standard_domination_collection({standard_of(p), standard_of(make_clique(2)), standard_of(make_clique(2))}),
        standard_domination_collection({standard_of(c5), standard_of(make_cycle(4)), standard_of(make_cycle(3))}),
        lexicographic_collection({atomic_partition(TotalOrder::identity(2)), atomic_partition(order_of(c5)),
                                  atomic_partition(TotalOrder::identity(3))}),
    };
    for (const DominationCollection& dc : cases) {
        const Shape& s = dc.shape();
        TotalOrder bl = block_lex_order(dc);
        const std::size_t d = dc.dimension();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << d); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i < d; ++i)
                if ((mask >> i) & 1u) sub.push_back(i);
            EXPECT_TRUE(is_consistent(s, bl, block_lex_order(dc.restrict_to(sub)), sub));
        }
        EXPECT_TRUE(oracle::consistent_on_all_subproducts(s, bl));
    }
}

TEST(Collection, RestrictionUsesTheFirstSegmentExtension)
{
    Graph p = make_petersen();
    std::map<BlockId, Permutation> perms;
    perms.emplace(BlockId{0, 1, 0}, Permutation(std::vector<std::size_t>{2, 1, 0}));
    DominationCollection dc({halves(p, 5), halves(p, 5), halves(p, 5)}, perms);
    std::vector<std::size_t> s{0, 1};
    auto sub = dc.restrict_to(s);
    EXPECT_EQ(sub.perm(BlockId{0, 1}).images(), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(sub.perm(BlockId{1, 1}), Permutation::identity(2));
    EXPECT_EQ(dc.canonical_extension(s, BlockId{1, 1}), (BlockId{1, 1, 0}));
}

TEST(Collection, RejectsMalformedInput)
{
    std::vector<Partition> parts{atomic_partition(TotalOrder::identity(2))};
    EXPECT_THROW(DominationCollection(std::vector<Partition>{}), ParameterError);
    std::map<BlockId, Permutation> bad{{BlockId{5}, Permutation::identity(1)}};
    EXPECT_THROW(DominationCollection(parts, bad), ParameterError);
    EXPECT_THROW(DominationCollection(parts, {}, Permutation::identity(2)), ParameterError);
}

TEST(Validation, StandardCollectionsAreValid)
{
    Graph p = make_petersen();
    std::vector<Graph> fs{p, p};
    std::vector<TotalOrder> fo(2, order_of(p));
    auto v = validate_domination_collection(fs, standard_domination_collection(standard_partitions(fs, fo)));
    EXPECT_TRUE(v.ok());
    EXPECT_GT(v.sub_blocks_checked, 0u);
}

TEST(Validation, DisagreeingExtensionsAreRejected)
{
    // C5 standard segments have sizes 2,1,2. Block (1,3,3) read with the
    // first two factors swapped disagrees with block (1,3,1) on factors {1,2}.
    Graph c5 = make_cycle(5);
    std::vector<Graph> fs{c5, c5, c5};
    std::map<BlockId, Permutation> perms;
    perms.emplace(BlockId{0, 2, 2}, Permutation(std::vector<std::size_t>{1, 0, 2}));
    DominationCollection dc({standard_of(c5), standard_of(c5), standard_of(c5)}, perms);
    auto v = validate_domination_collection(fs, dc);
    EXPECT_EQ(v.verdict, Verdict::invalid);
    ASSERT_FALSE(v.diagnostics.empty());
    EXPECT_NE(v.diagnostics[0].find("disagrees"), std::string::npos) << v.diagnostics[0];
    EXPECT_THROW(checked_block_lex_order(fs, dc), PreconditionError);
    std::vector<Partition> parts{standard_of(c5), standard_of(c5), standard_of(c5)};
    EXPECT_TRUE(validate_domination_collection(fs, standard_domination_collection(parts)).ok());
}

TEST(Validation, SuboptimalBlockOrderIsRejected)
{
    // K2 x K3 x K4 read with the largest clique most significant.
    Graph g = parse_graph_spec("K2xK3xK4");
    auto fs = g.factors();
    std::vector<TotalOrder> fo;
    for (const Graph& f : fs) fo.push_back(TotalOrder::identity(f.size()));
    DominationCollection dc(standard_partitions(fs, fo), {}, Permutation(std::vector<std::size_t>{2, 1, 0}));
    EXPECT_EQ(validate_domination_collection(fs, dc).verdict, Verdict::invalid);
    DominationCollection good(standard_partitions(fs, fo), {}, Permutation::identity(3));
    EXPECT_EQ(checked_block_lex_order(fs, good), lex_order(g, fo));
}

TEST(RegularCollection, Examples)
{
    Graph p = make_petersen(), c5 = make_cycle(5), k3 = make_clique(3);
    {
        std::vector<Graph> fs{p, c5, k3};
        std::vector<Partition> atoms{atomic_partition(order_of(p)), atomic_partition(order_of(c5)),
                                     atomic_partition(order_of(k3))};
        EXPECT_TRUE(validate_regular_domination_collection(fs, lexicographic_collection(atoms)).ok());
    }
    {
        std::vector<Graph> fs{p, p, p};
        std::vector<TotalOrder> fo(3, order_of(p));
        EXPECT_TRUE(
            validate_regular_domination_collection(fs, standard_domination_collection(standard_partitions(fs, fo)))
                .ok());
    }
    {
        Graph u = parse_graph_spec("K5+K4");
        std::vector<Graph> fs{make_clique(2), u, make_clique(2)};
        std::vector<TotalOrder> fo{TotalOrder::identity(2), order_of(u), TotalOrder::identity(2)};
        auto v = validate_regular_domination_collection(fs, standard_domination_collection(standard_partitions(fs, fo)));
        EXPECT_EQ(v.verdict, Verdict::invalid);
    }
}

TEST(RegularCollection, CornerBlocksMustShareAnOrder)
{
    // With one middle factor the corner blocks are one-dimensional and share
    // every order, so this needs d = 4. Every block over the last segments of
    // factors 2 and 3 swaps those two factors: the collection stays valid but
    // its middle corner blocks now disagree.
    Graph c5 = make_cycle(5);
    std::vector<Graph> fs(4, c5);
    std::vector<Partition> parts(4, standard_of(c5));
    DominationCollection bare(parts);
    std::map<BlockId, Permutation> perms;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
            BlockId b{k, 2, 2, l};
            auto img = standard_block_domination(bare, b).images();
            for (auto& x : img) x = x == 1 ? 2 : x == 2 ? 1 : x;
            perms.emplace(b, Permutation(img));
        }
    DominationCollection dc(parts, perms);
    EXPECT_TRUE(validate_domination_collection(fs, dc).ok());
    std::vector<std::size_t> mid{1, 2};
    auto sub = dc.restrict_to(mid);
    EXPECT_FALSE(same_block_order(sub.perm(BlockId{0, 0}), sub.perm(BlockId{2, 2}), std::vector<std::size_t>{2, 2}));
    auto v = validate_regular_domination_collection(fs, dc);
    EXPECT_EQ(v.verdict, Verdict::invalid);
    ASSERT_FALSE(v.diagnostics.empty());
    EXPECT_NE(v.diagnostics.back().find("corner"), std::string::npos);
    EXPECT_TRUE(validate_regular_domination_collection(fs, standard_domination_collection(parts)).ok());
}

TEST(SameBlockOrder, SizeOneCoordinatesAreIgnored)
{
    Permutation a(std::vector<std::size_t>{0, 1, 2}), b(std::vector<std::size_t>{1, 0, 2});
    std::vector<std::size_t> thin{1, 3, 2}, full{2, 3, 2};
    EXPECT_TRUE(same_block_order(a, b, thin));
    EXPECT_FALSE(same_block_order(a, b, full));
}
