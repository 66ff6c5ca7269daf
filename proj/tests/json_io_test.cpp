#include <gtest/gtest.h>

#include "edgeiso/edgeiso.hpp"

using namespace edgeiso;

namespace {

TotalOrder order_of(const Graph& g) { return *optimal_order(g).chain.order; }

Json reparse(const Json& j) { return detail::parse_text(j.dump()); }

} // namespace

TEST(Sha256, KnownDigests)
{
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Sha256, DigestIgnoresKeyInsertionOrder)
{
    Json a;
    a["x"] = 1;
    a["y"] = 2;
    Json b;
    b["y"] = 2;
    b["x"] = 1;
    EXPECT_EQ(digest(a), digest(b));
    b["y"] = 3;
    EXPECT_NE(digest(a), digest(b));
}

TEST(GraphJson, RoundTrip)
{
    for (const char* spec : {"petersen", "K5+K4", "C5xK2", "K2^3"}) {
        Graph g = parse_graph_spec(spec);
        Graph h = graph_from_json(reparse(to_json(g)));
        EXPECT_EQ(h.size(), g.size());
        EXPECT_EQ(h.edges(), g.edges());
        EXPECT_EQ(h.factor_shape(), g.factor_shape()) << spec;
    }
}

TEST(GraphJson, Errors)
{
    EXPECT_THROW(graph_from_json(Json{{"edges", Json::array()}}), ParseError);
    EXPECT_THROW(graph_from_json(Json{{"n", 3}, {"edges", {{0, 1, 2}}}}), ParseError);
    EXPECT_THROW(graph_from_json(Json{{"n", 3}, {"edges", {{0, 3}}}}), ParseError);
    EXPECT_THROW(graph_from_json(Json{{"n", 3}, {"edges", {{1, 1}}}}), ParseError);
    EXPECT_THROW(graph_from_json(Json{{"n", "three"}, {"edges", Json::array()}}), ParseError);
}

TEST(OrderJson, RoundTripAndErrors)
{
    TotalOrder o = order_of(make_petersen());
    EXPECT_EQ(order_from_json(reparse(to_json(o))).ranks(), o.ranks());
    EXPECT_THROW(order_from_json(Json{{"ranks", {0, 0, 1}}}), ParseError);
    EXPECT_THROW(order_from_json(Json::object()), ParseError);
}

TEST(PermutationJson, IsOneBased)
{
    Permutation p({2, 0, 1});
    EXPECT_EQ(to_json(p), Json({3, 1, 2}));
    EXPECT_EQ(permutation_from_json(Json({3, 1, 2})).images(), p.images());
    EXPECT_THROW(permutation_from_json(Json({0, 1})), ParseError);
    EXPECT_THROW(permutation_from_json(Json({1, 1})), ParseError);
    EXPECT_THROW(permutation_from_json(Json("x")), ParseError);
}

TEST(PartitionJson, RoundTripKeepsKind)
{
    TotalOrder o = order_of(make_petersen());
    std::vector<std::size_t> ends{5, 10};
    for (const Partition& p : {standard_monotonic_partition(delta_of_order(make_petersen(), o)), atomic_partition(o),
                               Partition::from_boundaries(o, ends)}) {
        Partition q = partition_from_json(reparse(to_json(p)));
        EXPECT_EQ(q.boundaries(), p.boundaries());
        EXPECT_EQ(q.kind(), p.kind());
        EXPECT_EQ(q.order().ranks(), p.order().ranks());
    }
    Json bad = to_json(atomic_partition(o));
    bad["kind"] = "odd";
    EXPECT_THROW(partition_from_json(bad), ParseError);
    bad = to_json(atomic_partition(o));
    bad["boundaries"] = {3, 4};
    EXPECT_THROW(partition_from_json(bad), ParseError);
}

TEST(CollectionJson, RoundTrip)
{
    Graph c5 = make_cycle(5);
    TotalOrder o = order_of(c5);
    std::vector<std::size_t> ends{3, 5};
    Partition h = Partition::from_boundaries(o, ends);
    DominationCollection dc = standard_domination_collection({h, h, h});
    Json j = to_json(dc);
    EXPECT_TRUE(j["block_perms"].contains("1,1,1"));
    DominationCollection back = collection_from_json(reparse(j));
    EXPECT_EQ(back.block_count(), dc.block_count());
    EXPECT_EQ(block_lex_order(back).ranks(), block_lex_order(dc).ranks());
    EXPECT_EQ(to_json(back), j);

    DominationCollection lex = lexicographic_collection({h, h});
    Json lj = to_json(lex);
    EXPECT_EQ(lj["default"], Json({1, 2}));
    EXPECT_EQ(block_lex_order(collection_from_json(lj)).ranks(), block_lex_order(lex).ranks());
}

TEST(CollectionJson, Errors)
{
    EXPECT_THROW(collection_from_json(Json::object()), ParseError);
    EXPECT_THROW(parse_block_key("1,0"), ParseError);
    EXPECT_THROW(parse_block_key("1,x"), ParseError);
    EXPECT_EQ(parse_block_key("2,1,3"), (BlockId{1, 0, 2}));
    EXPECT_EQ(block_key(BlockId{1, 0, 2}), "2,1,3");
    Graph c5 = make_cycle(5);
    std::vector<std::size_t> ends{3, 5};
    Partition h = Partition::from_boundaries(order_of(c5), ends);
    Json j = to_json(standard_domination_collection({h, h}));
    j["block_perms"]["9,9"] = {1, 2};
    EXPECT_THROW(collection_from_json(j), ParseError);
}

TEST(ProfileJson, RoundTripAndCsv)
{
    Profile p = exact_profile(parse_graph_spec("K2^3"));
    Json j = to_json(p);
    EXPECT_EQ(j["I"], Json({0, 0, 1, 2, 4, 5, 7, 9, 12}));
    EXPECT_EQ(j["delta"], Json({0, 1, 1, 2, 1, 2, 2, 3}));
    Profile q = profile_from_json(reparse(j));
    EXPECT_EQ(q.i_values, p.i_values);
    EXPECT_EQ(q.complete, p.complete);
    ASSERT_EQ(q.witnesses.size(), p.witnesses.size());
    for (std::size_t m = 0; m < q.witnesses.size(); ++m) {
        ASSERT_TRUE(q.witnesses[m] && p.witnesses[m]);
        EXPECT_EQ(q.witnesses[m]->ids(), p.witnesses[m]->ids());
    }
    std::string csv = profile_csv(p);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,I,delta");
    EXPECT_NE(csv.find("\n4,4,2\n"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

TEST(ProfileJson, Errors)
{
    Json j{{"I", {0, 0, 1}}, {"complete", true}, {"strategy", "nope"}};
    EXPECT_THROW(profile_from_json(j), ParseError);
    j["strategy"] = "full";
    j["witnesses"] = {Json::array(), {0}};
    EXPECT_THROW(profile_from_json(j), ParseError);
    j["witnesses"] = {Json::array(), {0}, {0, 5}};
    EXPECT_THROW(profile_from_json(j), ParseError);
}

TEST(CertificateJson, RoundTrip)
{
    std::vector<Graph> fs{make_cycle(4), make_clique(2), make_clique(3)};
    std::vector<TotalOrder> orders;
    for (const Graph& f : fs) orders.push_back(order_of(f));
    CertifyOptions o;
    o.product_name = "C4xK2xK3";
    for (const Certificate& c : {certify(fs, standard_domination_collection(standard_partitions(fs, orders)), o),
                                 certify_domination(fs, orders, Permutation({2, 1, 0}), o)}) {
        Json j = to_json(c);
        EXPECT_EQ(j["status"], to_string(c.status()));
        Certificate back = certificate_from_json(reparse(j));
        EXPECT_EQ(back, c);
        EXPECT_EQ(to_json(back), j);
    }
}

TEST(CertificateJson, RevokedFieldsSurvive)
{
    Certificate c;
    c.product = "x";
    c.revoked = true;
    c.counterexample = std::vector<Vertex>{0, 3};
    c.note = "crosscheck disagreement";
    c.crosscheck.push_back({4, 3, 4, false});
    Certificate back = certificate_from_json(reparse(to_json(c)));
    EXPECT_EQ(back, c);
    EXPECT_EQ(back.status(), CertStatus::revoked);
}

TEST(CertificateJson, Errors)
{
    EXPECT_THROW(certificate_from_json(Json::object()), ParseError);
    Json j = to_json(Certificate{});
    j["schema_version"] = 99;
    EXPECT_THROW(certificate_from_json(j), ParseError);
    j = to_json(Certificate{});
    j["hypotheses"] = {{{"name", "a"}, {"scope", "b"}, {"verdict", "maybe"}, {"evidence", Json::array()}}};
    EXPECT_THROW(certificate_from_json(j), ParseError);
}

TEST(ParseText, RejectsMalformedJson)
{
    EXPECT_THROW(detail::parse_text("{\"n\": "), ParseError);
    EXPECT_EQ(detail::parse_text("[1,2]"), Json({1, 2}));
}
