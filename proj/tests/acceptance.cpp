// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the CLI binary.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edgeiso/edgeiso.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"

using namespace edgeiso;

namespace {

std::string cli_path;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass) detail = why;
        pass = false;
    }
};

testproc::Result cli(const std::string& args) { return testproc::run(testproc::quote(cli_path) + " " + args); }

TotalOrder order_of(const Graph& g) { return *optimal_order(g).chain.order; }

std::vector<TotalOrder> orders_of(std::span<const Graph> fs)
{
    std::vector<TotalOrder> out;
    for (const Graph& f : fs) out.push_back(order_of(f));
    return out;
}

std::string join(const std::vector<long long>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

// δ column of the CLI's profile CSV.
std::vector<long long> delta_column(const std::string& csv)
{
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line); // header
    while (std::getline(ss, line)) {
        auto last = line.rfind(',');
        if (last == std::string::npos || last + 1 >= line.size()) continue;
        out.push_back(std::stoll(line.substr(last + 1)));
    }
    return out;
}

// --- 1 -----------------------------------------------------------------------
Outcome delta_sequences()
{
    Outcome o;
    const std::vector<std::pair<std::string, std::vector<long long>>> cases{
        {"K5", {0, 1, 2, 3, 4}},
        {"P6", {0, 1, 1, 1, 1, 1}},
        {"petersen", {0, 1, 1, 1, 2, 1, 2, 2, 2, 3}},
        {"K5+K4", {0, 1, 2, 3, 4, 0, 1, 2, 3}},
    };
    for (const auto& [spec, want] : cases) {
        auto r = cli("--strategy full profile " + testproc::quote(spec));
        if (r.exit_code != 0) {
            o.fail(spec + ": exit " + std::to_string(r.exit_code));
            continue;
        }
        auto got = delta_column(r.out);
        if (got != want) o.fail(spec + ": got " + join(got) + ", expected " + join(want));
    }
    if (o.pass) o.detail = "K5, P6, Petersen, K5+K4 match";
    return o;
}

// --- 2 -----------------------------------------------------------------------
Outcome standard_partitions_counts()
{
    Outcome o;
    auto check = [&](const Graph& g, std::size_t want, const std::string& name) {
        auto oo = optimal_order(g);
        if (oo.chain.status != ChainStatus::found) return o.fail(name + ": no optimal order");
        Partition p = standard_monotonic_partition(delta_of_order(g, *oo.chain.order));
        if (p.segment_count() != want)
            o.fail(name + ": " + std::to_string(p.segment_count()) + " segments, expected " + std::to_string(want));
        auto c = check_standard_partition(g, p);
        if (!c.all_cliques) o.fail(name + ": a segment is not a clique");
        if (!c.backward_edges_exact) o.fail(name + ": back-edge count differs from δ at the segment start");
    };
    for (std::size_t n = 1; n <= 8; ++n) check(make_clique(n), 1, "K" + std::to_string(n));
    for (std::size_t n = 2; n <= 10; ++n) check(make_path(n), n - 1, "P" + std::to_string(n));
    check(make_petersen(), 6, "Petersen");
    if (o.pass) o.detail = "K1..K8 -> 1, P2..P10 -> n-1, Petersen -> 6; cliques and back edges hold";
    return o;
}

// --- 3 -----------------------------------------------------------------------
Outcome harper_lindsey()
{
    Outcome o;
    std::vector<std::string> specs{"K2", "K2^2", "K2^3", "K2^4", "K2xK3xK4"};
    for (const auto& spec : specs) {
        Graph g = parse_graph_spec(spec);
        std::vector<Graph> fs = g.is_product() ? g.factors() : std::vector<Graph>{g};
        std::vector<TotalOrder> ids;
        for (const Graph& f : fs) ids.push_back(TotalOrder::identity(f.size()));
        TotalOrder lex = g.is_product() ? lex_order(g, ids) : TotalOrder::identity(g.size());
        ProfileOptions opt;
        opt.strategy = Strategy::full_enumeration;
        opt.witnesses = false;
        Profile p = exact_profile(g, opt);
        auto chk = verify_order_optimal(g, lex, p);
        if (!chk.optimal)
            o.fail(spec + ": lex loses at m=" + std::to_string(*chk.first_failure) + " (" + std::to_string(chk.achieved) +
                   " < " + std::to_string(chk.optimum) + ")");
    }
    if (o.pass) o.detail = "lex optimal on K2^d (d<=4) and K2xK3xK4 against full enumeration";
    return o;
}

// --- 4 -----------------------------------------------------------------------
Outcome petersen_square()
{
    Outcome o;
    Graph p = make_petersen();
    std::vector<Graph> fs{p, p};
    Graph g = cartesian_product(fs);
    auto orders = orders_of(fs);
    TotalOrder sbl = standard_block_lex_order(fs, orders);
    std::vector<std::size_t> ms(101);
    for (std::size_t m = 0; m <= 100; ++m) ms[m] = m;
    auto oracle = compressed_oracle(g, orders, ms);
    for (std::size_t m = 0; m <= 100; ++m) {
        auto have = static_cast<long long>(induced_edges(g, initial_segment(sbl, m)));
        if (!oracle[m].value) {
            o.fail("oracle gave no value at m=" + std::to_string(m));
            break;
        }
        if (have != *oracle[m].value)
            o.fail("m=" + std::to_string(m) + ": order " + std::to_string(have) + ", oracle " +
                   std::to_string(*oracle[m].value));
    }
    if (o.pass) o.detail = "SBL initial segments reach the oracle maximum for m = 0..100";
    return o;
}

// --- 5 -----------------------------------------------------------------------
Outcome certification()
{
    Outcome o;
    for (const char* spec : {"petersen^3", "C5xC4xC3", "petersenxK2xK2"}) {
        auto r = cli(std::string("certify ") + spec);
        if (r.exit_code != 0) {
            o.fail(std::string(spec) + ": exit " + std::to_string(r.exit_code));
            continue;
        }
        Json j = detail::parse_text(r.out);
        if (j["status"] != "certified") o.fail(std::string(spec) + ": status " + j["status"].dump());
        std::size_t n = parse_graph_spec(spec).size();
        auto sample = default_crosscheck_sample(n);
        if (j["crosscheck"].size() != sample.size()) o.fail(std::string(spec) + ": crosscheck sample size");
        for (const Json& x : j["crosscheck"])
            if (!x["agree"].get<bool>())
                o.fail(std::string(spec) + ": crosscheck disagrees at m=" + x["m"].dump());
    }
    if (o.pass) o.detail = "Petersen^3, C5xC4xC3, PetersenxK2xK2 certified; crosscheck agrees on m in {1,5,10,20,|V|/2}";
    return o;
}

// --- 6 -----------------------------------------------------------------------
Outcome compression_laws()
{
    Outcome o;
    std::mt19937_64 rng(6);
    std::size_t checks = 0, compressed_sets = 0;
    for (const char* spec : {"K2^3", "K2xK3", "C5xC5"}) {
        Graph g = parse_graph_spec(spec);
        std::vector<Graph> fs = g.factors();
        auto orders = orders_of(fs);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            auto chk = verify_order_optimal(fs[i], orders[i], exact_profile(fs[i]));
            if (!chk.optimal) o.fail(std::string(spec) + ": factor order not optimal");
        }
        Shape sh = g.shape();
        TotalOrder lex = lex_order(g, orders);
        auto schedule = singleton_schedule(sh, orders);
        for (int t = 0; t < 1000; ++t) {
            VertexSet a = oracle::random_set_any_density(g.size(), rng);
            VertexSet b = a & oracle::random_set(g.size(), rng);
            for (const auto& st : schedule) {
                VertexSet ca = compress_once(sh, a, st.factors, st.order);
                VertexSet cb = compress_once(sh, b, st.factors, st.order);
                ++checks;
                if (ca.size() != a.size()) o.fail(std::string(spec) + ": size changed");
                if (!cb.is_subset_of(ca)) o.fail(std::string(spec) + ": monotonicity broken");
                if (induced_edges(g, ca) < induced_edges(g, a)) o.fail(std::string(spec) + ": |I| decreased");
            }
            try {
                auto fx = compress_to_fixpoint(sh, a, schedule, lex);
                if (!is_compressed(sh, fx.set, orders)) o.fail(std::string(spec) + ": fixpoint is not compressed");
            } catch (const std::exception& e) {
                o.fail(std::string(spec) + ": fixpoint did not terminate: " + e.what());
            }
        }
        auto tables = delta_tables(fs, orders);
        for (std::size_t m = 0; m <= g.size(); ++m)
            enumerate_compressed(sh, orders, m, [&](const VertexSet& s) {
                ++compressed_sets;
                if (weight(sh, s, tables) != static_cast<long long>(induced_edges(g, s)))
                    o.fail(std::string(spec) + ": weight differs from |I| on a compressed set of size " +
                           std::to_string(m));
                return true;
            });
    }
    if (o.pass)
        o.detail = std::to_string(checks) + " single compressions, 3000 fixpoints, " + std::to_string(compressed_sets) +
                   " compressed sets; zero violations";
    return o;
}

// --- 7 -----------------------------------------------------------------------
Outcome structural_lemmas()
{
    Outcome o;
    std::mt19937_64 rng(7);
    oracle::LemmaTally total;

    auto run = [&](const std::string& name, const std::vector<Graph>& fs, const DominationCollection& dc) {
        Graph g = cartesian_product(fs);
        Shape sh = g.shape();
        TotalOrder bl = block_lex_order(dc);
        if (!oracle::consistent_on_all_subproducts(sh, bl)) o.fail(name + ": BL order is not consistent on subproducts");
        auto schedule = proper_subset_schedule(sh, bl);
        oracle::LemmaChecker checker(dc);
        for (int t = 0; t < 500; ++t) {
            VertexSet a = oracle::strongly_compressed_sample(sh, bl, schedule, rng);
            if (!is_strongly_compressed(sh, a, bl)) {
                o.fail(name + ": sample is not strongly compressed");
                continue;
            }
            std::size_t before = total.violations.size();
            checker.check(a, total);
            if (total.violations.size() > before) o.fail(name + ": " + total.violations[before]);
        }
    };

    {
        std::vector<Graph> fs{make_clique(2), make_clique(2), make_clique(3)};
        std::vector<Partition> parts;
        for (const auto& ord : orders_of(fs)) parts.push_back(atomic_partition(ord));
        run("K2xK2xK3 atomic", fs, lexicographic_collection(std::move(parts)));
    }
    {
        Graph c5 = make_cycle(5);
        std::vector<Graph> fs{c5, c5, c5};
        std::vector<std::size_t> ends{3, 5};
        Partition h = Partition::from_boundaries(order_of(c5), ends);
        run("C5 halves^3", fs, standard_domination_collection({h, h, h}));
    }
    if (o.pass)
        o.detail = "1000 sets; " + std::to_string(total.skeleton_checks) + " skeleton, " +
                   std::to_string(total.shared_bone_checks) + " shared-bone, " + std::to_string(total.slice_checks) +
                   " slice, " + std::to_string(total.slice_pair_checks) + " slice-pair implications; zero violations";
    return o;
}

// --- 8 -----------------------------------------------------------------------
Outcome negative_controls()
{
    Outcome o;
    auto irregular = cli("certify \"K2x(K5+K4)xK2\"");
    if (irregular.exit_code != 2) o.fail("irregular middle partition: exit " + std::to_string(irregular.exit_code));
    auto reversed = cli("certify K2xK3xK4 --domination 3,2,1");
    if (reversed.exit_code != 2) o.fail("suboptimal domination order: exit " + std::to_string(reversed.exit_code));

    // Lex with the labelling order of each Petersen copy is not optimal.
    Graph p = make_petersen();
    std::vector<Graph> fs{p, p};
    Graph g = cartesian_product(fs);
    std::vector<TotalOrder> ids(2, TotalOrder::identity(10));
    TotalOrder wrong = lex_order(g, ids);
    auto orders = orders_of(fs);
    std::vector<std::size_t> ms(g.size() + 1);
    for (std::size_t m = 0; m <= g.size(); ++m) ms[m] = m;
    auto oracle = compressed_oracle(g, orders, ms);
    std::optional<std::size_t> loses;
    for (std::size_t m = 0; m <= g.size() && !loses; ++m)
        if (oracle[m].value && static_cast<long long>(induced_edges(g, initial_segment(wrong, m))) < *oracle[m].value)
            loses = m;
    if (!loses) o.fail("the wrong order never loses against the oracle");
    if (o.pass)
        o.detail = "irregular partition and reversed domination exit 2; identity-lex on Petersen^2 loses at m=" +
                   std::to_string(*loses);
    return o;
}

// --- 9 -----------------------------------------------------------------------
Outcome path_clique()
{
    Outcome o;
    auto r = cli("--budget 600 --format json explore path_clique --max-vertices 16");
    if (r.exit_code != 0) o.fail("exit " + std::to_string(r.exit_code));
    Json j;
    try {
        j = detail::parse_text(r.out);
    } catch (const std::exception& e) {
        o.fail(std::string("unreadable report: ") + e.what());
        return o;
    }
    std::size_t supported = 0;
    bool saw_p2k2 = false, saw_p4k4 = false;
    for (const Json& x : j["result"]["results"]) {
        std::string inst = x["instance"], st = x["status"];
        saw_p2k2 = saw_p2k2 || inst == "P2^2xK2^2";
        saw_p4k4 = saw_p4k4 || inst == "P4xK4";
        if (st == "SUPPORTED") {
            ++supported;
        } else if (st == "REFUTED") {
            o.fail(inst + ": REFUTED" + (x.contains("witness") ? " (witness attached)" : " without a witness"));
        } else {
            o.fail(inst + ": " + st);
        }
    }
    if (!saw_p2k2 || !saw_p4k4) o.fail("P2^2xK2^2 or P4xK4 missing from the instance list");
    if (o.pass) o.detail = std::to_string(supported) + " instances with at most 16 vertices, all SUPPORTED";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <path to edgeiso>\n";
        return 64;
    }
    cli_path = argv[1];

    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "delta sequences", 5, delta_sequences},
        {2, "standard partition counts", 1, standard_partitions_counts},
        {3, "lex optimality on small products", 120, harper_lindsey},
        {4, "Petersen^2 SBL against the oracle", 300, petersen_square},
        {5, "local-global certification", 900, certification},
        {6, "compression laws", 120, compression_laws},
        {7, "structural lemmas", 120, structural_lemmas},
        {8, "negative controls", 60, negative_controls},
        {9, "path-clique explorer", 600, path_clique},
    };

    int failures = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (out.pass && secs > c.limit_s) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "over the %.0f s limit", c.limit_s);
            out.fail(buf);
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (out.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " [" << timing << "]: " << out.detail
                  << std::endl;
        failures += out.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
