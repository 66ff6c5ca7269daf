// Command-line front end: graphs, profiles, partitions, orders, compression,
// certification and conjecture exploration.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edgeiso/edgeiso.hpp"

namespace {

using namespace edgeiso;

constexpr int exit_ok = 0;
constexpr int exit_failed = 2;
constexpr int exit_inconclusive = 3;
constexpr int exit_usage = 64;

struct Global {
    std::string strategy = "full";
    std::optional<double> budget; // seconds; absent means unlimited
    unsigned threads = 1;
    std::string format;
    std::uint64_t seed = 1;
    std::string out;
};

struct Report {
    std::string text;
    int code = exit_ok;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) { return detail::parse_text(read_file(path)); }

Graph load_graph(const std::string& spec)
{
    if (spec.size() > 5 && spec.ends_with(".json")) return graph_from_json(read_json_file(spec));
    return parse_graph_spec(spec);
}

Budget make_budget(const Global& g) { return g.budget ? Budget::seconds(*g.budget) : Budget::unlimited(); }

ProfileOptions make_options(const Global& g)
{
    ProfileOptions o;
    o.strategy = parse_strategy(g.strategy);
    o.budget = make_budget(g);
    o.threads = g.threads;
    return o;
}

std::vector<std::size_t> parse_list(const std::string& text, bool one_based)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(part, &used);
        } catch (...) {
            throw ParseError("bad number '" + part + "'");
        }
        if (used != part.size()) throw ParseError("bad number '" + part + "'");
        if (one_based) {
            if (v == 0) throw ParseError("indices are 1-based");
            --v;
        }
        out.push_back(v);
    }
    return out;
}

// Wraps a JSON result with tool, command, seed and input digest.
Json envelope(const std::string& command, const std::string& input, const Global& g, Json result)
{
    return Json{{"tool", "edgeiso"},      {"version", version}, {"command", command},
                {"input", input},         {"input_digest", sha256_hex(input)},
                {"seed", g.seed},         {"strategy", g.strategy},
                {"result", std::move(result)}};
}

std::string fmt(const Global& g, const std::string& fallback) { return g.format.empty() ? fallback : g.format; }

// Optimal order for every factor of g; the error text names the first failure.
std::vector<TotalOrder> factor_orders(const Graph& g, const Global& gl)
{
    std::vector<TotalOrder> out;
    ProfileOptions o = make_options(gl);
    o.witnesses = false;
    for (std::size_t i = 0; i < g.dimension(); ++i) {
        Graph f = g.dimension() == 1 ? g : g.factor(i);
        if (o.strategy == Strategy::compressed_only || f.size() > o.full_cap)
            o.strategy = f.size() <= o.full_cap ? Strategy::full_enumeration : Strategy::branch_and_bound;
        OptimalOrder oo = optimal_order(f, o);
        if (oo.chain.status == ChainStatus::inconclusive)
            throw CapExceeded("factor " + std::to_string(i + 1) + ": optimal order not established within budget");
        if (oo.chain.status != ChainStatus::found)
            throw PreconditionError("factor " + std::to_string(i + 1) + " has no nested solutions");
        out.push_back(*oo.chain.order);
    }
    return out;
}

Profile compute_profile(const Graph& g, const Global& gl)
{
    ProfileOptions o = make_options(gl);
    if (o.strategy == Strategy::compressed_only) o.factor_orders = factor_orders(g, gl);
    return exact_profile(g, o);
}

// --- graph ------------------------------------------------------------------

Report cmd_graph(const Global& gl, const std::string& spec)
{
    Graph g = load_graph(spec);
    if (fmt(gl, "json") == "text") {
        std::string t = "vertices " + std::to_string(g.size()) + "\nedges " + std::to_string(g.edge_count()) + "\n";
        if (auto d = g.regular_degree()) t += "regular " + std::to_string(*d) + "\n";
        if (g.is_product()) {
            t += "factors";
            for (auto n : g.factor_shape()) t += " " + std::to_string(n);
            t += "\n";
        }
        return {t};
    }
    return {to_json(g).dump() + "\n"};
}

// --- profile ----------------------------------------------------------------

Report cmd_profile(const Global& gl, const std::string& spec, bool theta)
{
    Graph g = load_graph(spec);
    const std::string f = fmt(gl, "csv");
    if (theta) {
        ThetaProfile t = theta_profile(g, make_options(gl));
        int code = t.complete ? exit_ok : exit_inconclusive;
        if (f == "json") {
            Json w = Json::array();
            for (const auto& s : t.witnesses) w.push_back(s ? Json(s->ids()) : Json(nullptr));
            Json r{{"complete", t.complete}, {"theta", t.theta_values}, {"from_induced", t.from_induced}, {"witnesses", w}};
            return {envelope("profile", spec, gl, r).dump(2) + "\n", code};
        }
        std::string out = "m,theta\n";
        for (std::size_t m = 0; m < t.theta_values.size(); ++m)
            out += std::to_string(m) + "," + (t.theta_values[m] < 0 ? "" : std::to_string(t.theta_values[m])) + "\n";
        return {out, code};
    }
    Profile p = compute_profile(g, gl);
    int code = p.complete ? exit_ok : exit_inconclusive;
    if (f == "json") return {envelope("profile", spec, gl, to_json(p)).dump(2) + "\n", code};
    if (f == "text") {
        std::string out = "profile of " + spec + " (" + to_string(p.strategy) + ", seed " + std::to_string(gl.seed) + ")\n";
        out += profile_csv(p);
        return {out, code};
    }
    return {profile_csv(p), code};
}

// --- partition --------------------------------------------------------------

Report cmd_partition(const Global& gl, const std::string& spec, bool standard, bool atomic,
                     const std::string& validate_file)
{
    Graph g = load_graph(spec);
    ProfileOptions o = make_options(gl);
    Partition p;
    if (!validate_file.empty()) {
        p = partition_from_json(read_json_file(validate_file));
    } else {
        OptimalOrder oo = optimal_order(g, o);
        if (oo.chain.status == ChainStatus::inconclusive) return {"optimal order not established within budget\n", exit_inconclusive};
        if (oo.chain.status != ChainStatus::found)
            return {"graph has no nested solutions (chains stop at size " + std::to_string(oo.chain.deepest) + ")\n",
                    exit_failed};
        p = atomic && !standard ? atomic_partition(*oo.chain.order)
                                : standard_monotonic_partition(delta_of_order(g, *oo.chain.order));
    }
    PartitionValidation v = validate_isoperimetric_partition(g, p, o);
    Json r{{"partition", to_json(p)}, {"segments", p.segment_count()}, {"verdict", to_string(v.verdict)},
           {"diagnostics", v.diagnostics}};
    if (p.kind() == PartitionKind::standard_monotonic) {
        StandardPartitionCheck sc = check_standard_partition(g, p);
        r["cliques"] = sc.all_cliques;
        r["back_edges"] = sc.backward_edges_exact;
    }
    int code = v.verdict == Verdict::valid ? exit_ok : v.verdict == Verdict::invalid ? exit_failed : exit_inconclusive;
    if (fmt(gl, "json") == "text") {
        std::string t = "segments " + std::to_string(p.segment_count()) + "\nverdict " + to_string(v.verdict) + "\n";
        for (std::size_t i = 0; i < p.segment_count(); ++i) {
            t += "segment " + std::to_string(i + 1) + ":";
            for (Vertex x : p.members(i)) t += " " + std::to_string(x);
            t += "\n";
        }
        for (const auto& d : v.diagnostics) t += "note: " + d + "\n";
        return {t, code};
    }
    return {envelope("partition", spec, gl, r).dump(2) + "\n", code};
}

// --- order ------------------------------------------------------------------

DominationCollection collection_for(const Graph& g, const Global& gl, const std::string& kind,
                                    const std::string& collection_file)
{
    if (!collection_file.empty()) return collection_from_json(read_json_file(collection_file));
    std::vector<TotalOrder> orders = factor_orders(g, gl);
    std::vector<Graph> fs = g.factors();
    if (kind == "atomic") {
        std::vector<Partition> parts;
        for (const auto& o : orders) parts.push_back(atomic_partition(o));
        return lexicographic_collection(std::move(parts));
    }
    return standard_domination_collection(standard_partitions(fs, orders));
}

Report cmd_order(const Global& gl, const std::string& spec, const std::string& kind, const std::string& perm,
                 const std::string& collection_file, bool verify)
{
    Graph g = load_graph(spec);
    TotalOrder o;
    std::string used = kind;
    if (kind == "lex") {
        o = lex_order(g, factor_orders(g, gl));
    } else if (kind == "domination") {
        std::vector<std::size_t> pi = perm.empty() ? Permutation::identity(g.dimension()).images() : parse_list(perm, true);
        o = domination_order(g, factor_orders(g, gl), Permutation(pi));
    } else if (kind == "bl") {
        if (collection_file.empty()) throw ParseError("order --kind bl needs --collection");
        DominationCollection dc = collection_for(g, gl, kind, collection_file);
        if (!(dc.shape() == g.shape())) throw ParseError("collection does not match the graph");
        CollectionValidation cv = validate_domination_collection(g.factors(), dc, make_options(gl));
        if (cv.verdict != Verdict::valid) {
            Json r{{"verdict", to_string(cv.verdict)}, {"diagnostics", cv.diagnostics}};
            return {envelope("order", spec, gl, r).dump(2) + "\n",
                    cv.verdict == Verdict::invalid ? exit_failed : exit_inconclusive};
        }
        o = block_lex_order(dc);
    } else if (kind == "sbl") {
        std::vector<Graph> fs = g.dimension() == 1 ? std::vector<Graph>{g} : g.factors();
        o = standard_block_lex_order(fs, factor_orders(g, gl));
    } else {
        throw ParseError("unknown order kind '" + kind + "'");
    }
    Json r{{"kind", used}, {"order", to_json(o)}};
    int code = exit_ok;
    if (verify) {
        Profile p = compute_profile(g, gl);
        if (!p.complete) {
            r["verified"] = nullptr;
            code = exit_inconclusive;
        } else {
            OptimalityCheck c = verify_order_optimal(g, o, p);
            r["verified"] = c.optimal;
            if (!c.optimal) {
                r["failure"] = {{"m", *c.first_failure}, {"achieved", c.achieved}, {"optimum", c.optimum}};
                code = exit_failed;
            }
        }
    }
    if (fmt(gl, "json") == "text") {
        std::string t = "order";
        for (Vertex v : o.sequence()) t += " " + std::to_string(v);
        t += "\n";
        if (r.contains("verified")) t += "verified " + r["verified"].dump() + "\n";
        return {t, code};
    }
    return {envelope("order", spec, gl, r).dump(2) + "\n", code};
}

// --- compress ---------------------------------------------------------------

Report cmd_compress(const Global& gl, const std::string& spec, const std::string& mode, const std::string& set_text,
                    std::optional<std::size_t> random_size, const std::string& subset_text, const std::string& global_kind)
{
    Graph g = load_graph(spec);
    if (!g.is_product() || g.dimension() < 2) throw ParseError("compress needs a product of at least two factors");
    const Shape shape = g.shape();
    std::vector<TotalOrder> orders = factor_orders(g, gl);
    std::vector<Graph> fs = g.factors();
    TotalOrder global = global_kind == "lex" ? lex_order(g, orders) : standard_block_lex_order(fs, orders);

    VertexSet a(g.size());
    if (random_size) {
        if (*random_size > g.size()) throw ParseError("random set larger than the graph");
        std::mt19937_64 rng(gl.seed);
        std::vector<Vertex> ids(g.size());
        for (Vertex v = 0; v < g.size(); ++v) ids[v] = v;
        std::shuffle(ids.begin(), ids.end(), rng);
        for (std::size_t k = 0; k < *random_size; ++k) a.insert(ids[k]);
    } else {
        for (std::size_t v : parse_list(set_text, false)) {
            if (v >= g.size()) throw ParseError("vertex " + std::to_string(v) + " out of range");
            a.insert(v);
        }
    }
    Json r{{"set", a.ids()}, {"size", a.size()}, {"induced", induced_edges(g, a)}};
    auto tables = delta_tables(fs, orders);
    if (mode == "once") {
        std::vector<std::size_t> s = subset_text.empty() ? std::vector<std::size_t>{0} : parse_list(subset_text, true);
        check_index_set(s, shape.dimension());
        TotalOrder os = induced_suborder(shape, global, s);
        VertexSet b = compress_once(shape, a, s, os);
        r["result"] = b.ids();
        r["result_induced"] = induced_edges(g, b);
    } else if (mode == "fixpoint") {
        FixpointResult fr = compress_to_fixpoint(shape, a, proper_subset_schedule(shape, global), global);
        r["result"] = fr.set.ids();
        r["result_induced"] = induced_edges(g, fr.set);
        r["cycles"] = fr.cycles;
    } else if (mode == "predicates") {
        r["compressed"] = is_compressed(shape, a, orders);
        r["strongly_compressed"] = is_strongly_compressed(shape, a, global);
        DominationCollection dc = standard_domination_collection(standard_partitions(fs, orders));
        r["block_compressed"] = is_block_compressed(dc, a);
        r["slice_compressed"] = is_slice_compressed(dc, a);
    } else if (mode == "weight") {
        r["weight"] = weight(shape, a, tables);
        r["compressed"] = is_compressed(shape, a, orders);
    } else {
        throw ParseError("unknown compress mode '" + mode + "'");
    }
    if (fmt(gl, "json") == "text") {
        std::string t;
        for (auto& [k, v] : r.items()) t += k + " " + v.dump() + "\n";
        return {t};
    }
    return {envelope("compress", spec, gl, r).dump(2) + "\n"};
}

// --- certify ----------------------------------------------------------------

Report cmd_certify(const Global& gl, const std::string& spec, const std::string& partitions,
                   const std::string& collection_file, const std::string& domination, const std::string& sample,
                   bool no_crosscheck)
{
    Graph g = load_graph(spec);
    if (!g.is_product() || g.dimension() < 3) throw ParseError("certify needs a product of at least three factors");
    std::vector<Graph> fs = g.factors();
    CertifyOptions co;
    co.profile = make_options(gl);
    co.product_name = spec;
    co.crosscheck = !no_crosscheck;
    co.crosscheck_budget = make_budget(gl);
    if (!sample.empty()) co.crosscheck_ms = parse_list(sample, false);
    Certificate c;
    try {
        if (!domination.empty()) {
            c = certify_domination(fs, factor_orders(g, gl), Permutation(parse_list(domination, true)), co);
        } else {
            if (partitions != "standard" && partitions != "atomic" && collection_file.empty())
                throw ParseError("--partitions is 'standard' or 'atomic'");
            DominationCollection dc = collection_for(g, gl, partitions, collection_file);
            if (!(dc.shape() == g.shape())) throw ParseError("collection does not match the graph");
            c = certify(fs, dc, co);
        }
    } catch (const PreconditionError& e) {
        return {std::string("hypothesis failed: ") + e.what() + "\n", exit_failed};
    }
    c.product = spec;
    CertStatus st = c.status();
    if (fmt(gl, "json") == "text") {
        std::string t = "status " + std::string(to_string(st)) + "\n";
        for (const auto& h : c.hypotheses) t += h.name + " [" + h.scope + "]: " + to_string(h.verdict) + "\n";
        for (const auto& p : c.pairs)
            t += "pair " + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ": " + to_string(p.verdict) + " (" +
                 p.oracle + ")\n";
        for (const auto& x : c.crosscheck)
            t += "crosscheck m=" + std::to_string(x.m) + " order=" + std::to_string(x.order_value) + " oracle=" +
                 (x.oracle_value ? std::to_string(*x.oracle_value) : std::string("?")) + "\n";
        if (c.conclusion) t += "conclusion: " + *c.conclusion + "\n";
        if (!c.note.empty()) t += "note: " + c.note + "\n";
        return {t, exit_code(st)};
    }
    Json j = to_json(c);
    j["seed"] = gl.seed;
    j["tool_version"] = version;
    return {j.dump(2) + "\n", exit_code(st)};
}

// --- explore ----------------------------------------------------------------

Report cmd_explore(const Global& gl, const std::string& family, std::size_t max_vertices, const std::string& instance,
                   std::size_t s, std::size_t p, std::size_t i, std::size_t d, const std::string& graph_file,
                   const std::string& powers, std::size_t cycle)
{
    Budget b = make_budget(gl);
    ExploreReport rep;
    if (family == "path_clique") {
        std::vector<ExploreInstance> insts;
        if (!instance.empty()) {
            auto v = parse_list(instance, false);
            if (v.size() != 4) throw ParseError("--instance is n1,d1,n2,d2");
            insts.push_back(path_clique_instance(v[0], v[1], v[2], v[3]));
        } else {
            insts = path_clique_instances(max_vertices);
        }
        rep = explore_path_clique(insts, b, gl.threads);
    } else if (family == "hspi") {
        Graph factor;
        if (!graph_file.empty())
            factor = load_graph(graph_file);
        else if (s == 2)
            factor = hspi_graph(p, i);
        else
            throw ParseError("hspi with s > 2 needs --graph with a factor realising the δ-sequence");
        rep = explore_hspi(factor, s, p, i, d, b, gl.threads);
    } else if (family == "petersen_tori") {
        ToriSpec ts;
        ts.leading_cycle = cycle;
        ts.powers = parse_list(powers, false);
        rep = explore_petersen_tori({ts}, b, gl.threads);
    } else {
        throw ParseError("unknown family '" + family + "'");
    }
    int code = exit_ok;
    for (const auto& r : rep.results) {
        if (r.status == ExploreStatus::inconclusive && code == exit_ok) code = exit_inconclusive;
    }
    if (fmt(gl, "json") == "text") {
        std::string t;
        for (const auto& r : rep.results)
            t += r.instance + " (" + std::to_string(r.vertices) + " vertices): " + to_string(r.status) + " - " +
                 r.detail + "\n";
        return {t, code};
    }
    return {envelope("explore", family, gl, to_json(rep)).dump(2) + "\n", code};
}

int emit(const Global& gl, const Report& r)
{
    if (gl.out.empty()) {
        std::cout << r.text;
    } else {
        std::ofstream f(gl.out);
        if (!f) {
            std::cerr << "error: cannot write '" << gl.out << "'\n";
            return 1;
        }
        f << r.text;
    }
    return r.code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact edge-isoperimetric profiles, orders and local-global certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    Global gl;
    app.add_option("--strategy", gl.strategy, "Profile strategy")->check(CLI::IsMember({"full", "compressed", "bnb"}));
    app.add_option("--budget", gl.budget, "Wall-clock budget in seconds (default unlimited)")->check(CLI::NonNegativeNumber);
    app.add_option("--threads", gl.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", gl.seed, "Seed for randomized inputs");
    app.add_option("--out", gl.out, "Write the report to this path");

    std::string spec;
    auto* graph = app.add_subcommand("graph", "Build a graph and export it");
    graph->add_option("graph", spec, "Graph spec or JSON file")->required();

    bool theta = false;
    auto* profile = app.add_subcommand("profile", "Exact I (or Θ) profile and δ-sequence");
    profile->add_option("graph", spec, "Graph spec or JSON file")->required();
    profile->add_flag("--theta", theta, "Boundary profile instead of induced edges");

    bool standard = false, atomic = false;
    std::string validate_file;
    auto* partition = app.add_subcommand("partition", "Standard or atomic partition, or validate one");
    partition->add_option("graph", spec, "Graph spec or JSON file")->required();
    partition->add_flag("--standard", standard, "Standard monotonic partition (default)");
    partition->add_flag("--atomic", atomic, "Atomic partition");
    partition->add_option("--validate", validate_file, "Partition JSON file to validate");

    std::string kind = "lex", perm, collection_file;
    bool verify = false;
    auto* order = app.add_subcommand("order", "Build an order and optionally verify its optimality");
    order->add_option("graph", spec, "Graph spec or JSON file")->required();
    order->add_option("--kind", kind, "lex, domination, bl or sbl")->check(CLI::IsMember({"lex", "domination", "bl", "sbl"}));
    order->add_option("--perm", perm, "Domination permutation, 1-based, comma separated");
    order->add_option("--collection", collection_file, "Domination collection JSON file (for bl)");
    order->add_flag("--verify", verify, "Compare every initial segment with the exact profile");

    std::string mode = "predicates", set_text, subset_text, global_kind = "sbl";
    std::optional<std::size_t> random_size;
    auto* compress = app.add_subcommand("compress", "Compression and compressed-set predicates");
    compress->add_option("graph", spec, "Product graph spec or JSON file")->required();
    compress->add_option("--mode", mode, "once, fixpoint, predicates or weight")
        ->check(CLI::IsMember({"once", "fixpoint", "predicates", "weight"}));
    compress->add_option("--set", set_text, "Vertex ids, comma separated");
    compress->add_option("--random", random_size, "Use a seeded random set of this size");
    compress->add_option("--factors", subset_text, "Factor subset S for --mode once, 1-based");
    compress->add_option("--global", global_kind, "Global order: lex or sbl")->check(CLI::IsMember({"lex", "sbl"}));

    std::string partitions = "standard", domination, sample;
    bool no_crosscheck = false;
    auto* certify_cmd = app.add_subcommand("certify", "Certify a block-lexicographic order via the local-global theorem");
    certify_cmd->add_option("graph", spec, "Product graph spec or JSON file")->required();
    certify_cmd->add_option("--partitions", partitions, "standard or atomic");
    certify_cmd->add_option("--collection", collection_file, "Domination collection JSON file");
    certify_cmd->add_option("--domination", domination, "Certify this domination permutation (1-based)");
    certify_cmd->add_option("--crosscheck", sample, "Sizes m to cross-check, comma separated");
    certify_cmd->add_flag("--no-crosscheck", no_crosscheck, "Skip the oracle cross-check");

    std::string family, instance, graph_file, powers = "0,2,0,0,0";
    std::size_t max_vertices = 16, s = 2, p = 3, i = 1, d = 2, cycle = 0;
    auto* explore = app.add_subcommand("explore", "Search for evidence on the open conjectures");
    explore->add_option("family", family, "path_clique, hspi or petersen_tori")
        ->required()
        ->check(CLI::IsMember({"path_clique", "hspi", "petersen_tori"}));
    explore->add_option("--max-vertices", max_vertices, "path_clique: largest instance");
    explore->add_option("--instance", instance, "path_clique: single instance n1,d1,n2,d2");
    explore->add_option("--s", s, "hspi: number of blocks");
    explore->add_option("--p", p, "hspi: block length");
    explore->add_option("--i", i, "hspi: block offset");
    explore->add_option("--d", d, "hspi: power");
    explore->add_option("--graph", graph_file, "hspi: factor graph spec or JSON file");
    explore->add_option("--powers", powers, "petersen_tori: exponents of C5, petersen, C4, K2, C3");
    explore->add_option("--cycle", cycle, "petersen_tori: leading cycle length (>= 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        Report r;
        if (*graph) r = cmd_graph(gl, spec);
        else if (*profile) r = cmd_profile(gl, spec, theta);
        else if (*partition) r = cmd_partition(gl, spec, standard, atomic, validate_file);
        else if (*order) r = cmd_order(gl, spec, kind, perm, collection_file, verify);
        else if (*compress) r = cmd_compress(gl, spec, mode, set_text, random_size, subset_text, global_kind);
        else if (*certify_cmd) r = cmd_certify(gl, spec, partitions, collection_file, domination, sample, no_crosscheck);
        else if (*explore) r = cmd_explore(gl, family, max_vertices, instance, s, p, i, d, graph_file, powers, cycle);
        return emit(gl, r);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CapExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_inconclusive;
    } catch (const PreconditionError& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return exit_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
