#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edgeiso/blockgeom.hpp"
#include "edgeiso/certifier.hpp"
#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/solver.hpp"

// Searches for evidence on open conjectures. Reports never claim more than
// the computation shows.
namespace edgeiso {

enum class ExploreStatus { supported, refuted, inconclusive };

inline const char* to_string(ExploreStatus s)
{
    switch (s) {
    case ExploreStatus::supported: return "SUPPORTED";
    case ExploreStatus::refuted: return "REFUTED";
    case ExploreStatus::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct ExploreInstance {
    std::string name;
    Graph graph;
    // Optional: optimal factor orders, enabling the compressed oracle.
    std::vector<TotalOrder> factor_orders;
};

struct ExploreResult {
    std::string instance;
    std::size_t vertices = 0;
    ExploreStatus status = ExploreStatus::inconclusive;
    std::string detail;
    // REFUTED results carry a witness: a set or an order, independently
    // re-verified before the status is set.
    std::optional<std::vector<Vertex>> witness;
    std::optional<std::size_t> witness_m;
};

struct ExploreReport {
    std::string family;
    std::vector<ExploreResult> results;
};

namespace detail {

inline std::optional<Profile> explore_profile(const ExploreInstance& inst, const Budget& budget, unsigned threads)
{
    ProfileOptions o;
    o.budget = budget;
    o.threads = threads;
    o.witnesses = false;
    const Graph& g = inst.graph;
    if (g.size() <= 24) {
        o.strategy = Strategy::full_enumeration;
    } else if (!inst.factor_orders.empty() && g.size() <= o.compressed_cap) {
        o.strategy = Strategy::compressed_only;
        o.factor_orders = inst.factor_orders;
    } else if (g.size() <= o.bnb_cap) {
        o.strategy = Strategy::branch_and_bound;
    } else {
        return std::nullopt;
    }
    try {
        Profile p = exact_profile(g, o);
        if (!p.complete) return std::nullopt;
        return p;
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

// Nested solutions are predicted. A found chain supports the prediction; a
// proven dead end refutes it once the breadth-first search confirms the reach.
inline ExploreResult expect_nested(const ExploreInstance& inst, const Budget& budget, unsigned threads)
{
    ExploreResult r;
    r.instance = inst.name;
    r.vertices = inst.graph.size();
    if (budget.expired()) {
        r.detail = "budget exhausted";
        return r;
    }
    auto prof = explore_profile(inst, budget, threads);
    if (!prof) {
        r.detail = "exact profile out of reach";
        return r;
    }
    auto chain = find_nested_chain(inst.graph, *prof, budget);
    if (chain.status == ChainStatus::found) {
        if (verify_order_optimal(inst.graph, *chain.order, *prof).optimal) {
            r.status = ExploreStatus::supported;
            r.detail = "nested solutions found";
        } else {
            r.detail = "chain search returned an order that fails verification";
        }
        return r;
    }
    if (chain.status == ChainStatus::inconclusive) {
        r.detail = "chain search ran out of budget";
        return r;
    }
    auto reach = chain_reach_breadth_first(inst.graph, *prof, budget);
    if (reach && *reach == chain.deepest && *reach < inst.graph.size()) {
        r.status = ExploreStatus::refuted;
        r.detail = "no chain of optimal sets reaches size " + std::to_string(*reach + 1);
        r.witness = chain.deepest_set->ids();
        r.witness_m = *reach;
    } else {
        r.detail = "dead end not confirmed by the breadth-first search";
    }
    return r;
}

// No nested solutions are predicted. A chain refutes; a confirmed dead end
// supports.
inline ExploreResult expect_no_nested(const ExploreInstance& inst, const Budget& budget, unsigned threads)
{
    ExploreResult r = expect_nested(inst, budget, threads);
    if (r.status == ExploreStatus::supported) {
        auto prof = explore_profile(inst, budget, threads);
        auto chain = find_nested_chain(inst.graph, *prof, budget);
        r.status = ExploreStatus::refuted;
        r.detail = "nested solutions exist";
        auto seq = chain.order->sequence();
        r.witness = std::vector<Vertex>(seq.begin(), seq.end());
    } else if (r.status == ExploreStatus::refuted) {
        r.status = ExploreStatus::supported;
        r.detail = "no nested solutions: " + r.detail;
        r.witness.reset();
        r.witness_m.reset();
    }
    return r;
}

} // namespace detail

// Conjecture: P_{n1}^{d1} □ K_{n2}^{d2} has nested solutions.

inline ExploreInstance path_clique_instance(std::size_t n1, std::size_t d1, std::size_t n2, std::size_t d2)
{
    if (n1 < 2 || n2 < 2 || d1 + d2 == 0) throw ParameterError("path_clique needs n1, n2 >= 2 and d1 + d2 >= 1");
    std::vector<Graph> fs;
    for (std::size_t k = 0; k < d1; ++k) fs.push_back(make_path(n1));
    for (std::size_t k = 0; k < d2; ++k) fs.push_back(make_clique(n2));
    std::string name = "P" + std::to_string(n1) + (d1 > 1 ? "^" + std::to_string(d1) : "");
    if (d1 == 0) name.clear();
    if (d2 > 0) name += (name.empty() ? "" : "x") + ("K" + std::to_string(n2)) + (d2 > 1 ? "^" + std::to_string(d2) : "");
    return {name, fs.size() == 1 ? fs[0] : cartesian_product(fs), {}};
}

/// All instances with d1, d2 >= 1 and at most max_vertices vertices.
inline std::vector<ExploreInstance> path_clique_instances(std::size_t max_vertices)
{
    std::vector<ExploreInstance> out;
    for (std::size_t d1 = 1; (std::size_t{1} << (d1 + 1)) <= max_vertices; ++d1)
        for (std::size_t d2 = 1; (std::size_t{1} << (d1 + d2)) <= max_vertices; ++d2)
            for (std::size_t n1 = 2;; ++n1) {
                std::size_t a = 1;
                for (std::size_t k = 0; k < d1; ++k) a *= n1;
                if (a * (std::size_t{1} << d2) > max_vertices) break;
                for (std::size_t n2 = 2;; ++n2) {
                    std::size_t b = 1;
                    for (std::size_t k = 0; k < d2; ++k) b *= n2;
                    if (a * b > max_vertices) break;
                    out.push_back(path_clique_instance(n1, d1, n2, d2));
                }
            }
    return out;
}

inline ExploreReport explore_path_clique(const std::vector<ExploreInstance>& instances, const Budget& budget,
                                         unsigned threads = 1)
{
    ExploreReport rep{"path_clique", {}};
    for (const ExploreInstance& inst : instances) rep.results.push_back(detail::expect_nested(inst, budget, threads));
    return rep;
}

// Conjecture: a graph with the block δ-sequence of parameters (s, p, i) has
// nested solutions in every power when 1 <= i <= p - p/s, and none otherwise.

/// δ-sequence with s blocks of p consecutive values, block t starting at
/// t(p - i).
inline std::vector<long long> hspi_delta(std::size_t s, std::size_t p, std::size_t i)
{
    std::vector<long long> d;
    for (std::size_t t = 0; t < s; ++t)
        for (std::size_t k = 0; k < p; ++k)
            d.push_back(static_cast<long long>(t * (p - i) + k));
    return d;
}

/// For s = 2: K_{2p} minus i disjoint perfect matchings.
inline Graph hspi_graph(std::size_t p, std::size_t i)
{
    if (p < 3 || i < 1 || i >= 2 * p - 1) throw ParameterError("hspi needs p >= 3 and 1 <= i < 2p - 1");
    return make_clique_minus_matchings(p, i);
}

/// Whether the factor matches the parameter δ-sequence with an optimal order;
/// returns that order.
inline std::optional<TotalOrder> hspi_factor_order(const Graph& g, std::size_t s, std::size_t p, std::size_t i,
                                                   const Budget& budget)
{
    if (g.size() != s * p) return std::nullopt;
    ProfileOptions o;
    o.budget = budget;
    o.witnesses = false;
    o.strategy = g.size() <= 24 ? Strategy::full_enumeration : Strategy::branch_and_bound;
    OptimalOrder oo = optimal_order(g, o);
    if (oo.chain.status != ChainStatus::found) return std::nullopt;
    if (delta_of_order(g, *oo.chain.order).values != hspi_delta(s, p, i)) return std::nullopt;
    return oo.chain.order;
}

inline ExploreReport explore_hspi(const Graph& factor, std::size_t s, std::size_t p, std::size_t i, std::size_t d,
                                  const Budget& budget, unsigned threads = 1)
{
    if (s < 2 || p < 3 || i < 1) throw ParameterError("hspi needs s >= 2, p >= 3, i >= 1");
    if (d < 1) throw ParameterError("hspi needs d >= 1");
    ExploreReport rep{"hspi", {}};
    ExploreInstance inst;
    inst.name = "hspi(s=" + std::to_string(s) + ",p=" + std::to_string(p) + ",i=" + std::to_string(i) +
                ",d=" + std::to_string(d) + ")";
    if (budget.expired()) {
        rep.results.push_back({inst.name, factor.size() * d, ExploreStatus::inconclusive, "budget exhausted", {}, {}});
        return rep;
    }
    auto order = hspi_factor_order(factor, s, p, i, budget);
    if (!order) {
        std::size_t n = 1;
        for (std::size_t k = 0; k < d; ++k) n *= factor.size();
        rep.results.push_back({inst.name, n, ExploreStatus::inconclusive,
                               "factor does not realise the parameter δ-sequence with an optimal order", {}, {}});
        return rep;
    }
    inst.graph = d == 1 ? factor : cartesian_power(factor, d);
    if (d > 1) inst.factor_orders.assign(d, *order);
    // Nested solutions are predicted iff i <= p - p/s, i.e. s*i <= p*(s-1).
    const bool predicted = s * i <= p * (s - 1);
    rep.results.push_back(predicted ? detail::expect_nested(inst, budget, threads)
                                    : detail::expect_no_nested(inst, budget, threads));
    return rep;
}

// Conjecture: the standard block-lexicographic order is optimal for
// [C_n □] C_5^{d1} □ P^{d2} □ C_4^{d3} □ K_2^{d4} □ C_3^{d5}.

struct ToriSpec {
    std::size_t leading_cycle = 0; // n >= 6, or 0 for none
    std::vector<std::size_t> powers; // d1..d5
};

inline std::vector<Graph> tori_factors(const ToriSpec& spec)
{
    if (spec.powers.size() != 5) throw ParameterError("petersen_tori needs five exponents");
    if (spec.leading_cycle != 0 && spec.leading_cycle < 6) throw ParameterError("leading cycle needs n >= 6");
    std::vector<Graph> fs;
    if (spec.leading_cycle) fs.push_back(make_cycle(spec.leading_cycle));
    const Graph bases[5] = {make_cycle(5), make_petersen(), make_cycle(4), make_clique(2), make_cycle(3)};
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t t = 0; t < spec.powers[k]; ++t) fs.push_back(bases[k]);
    if (fs.empty()) throw ParameterError("petersen_tori needs at least one factor");
    return fs;
}

inline std::string tori_name(const ToriSpec& spec)
{
    static const char* names[5] = {"C5", "petersen", "C4", "K2", "C3"};
    std::string s = spec.leading_cycle ? "C" + std::to_string(spec.leading_cycle) : "";
    for (std::size_t k = 0; k < 5; ++k)
        if (spec.powers[k]) {
            s += (s.empty() ? "" : "x") + std::string(names[k]);
            if (spec.powers[k] > 1) s += "^" + std::to_string(spec.powers[k]);
        }
    return s;
}

inline ExploreReport explore_petersen_tori(const std::vector<ToriSpec>& specs, const Budget& budget,
                                           unsigned threads = 1)
{
    ExploreReport rep{"petersen_tori", {}};
    for (const ToriSpec& spec : specs) {
        ExploreResult r;
        r.instance = tori_name(spec);
        std::vector<Graph> fs = tori_factors(spec);
        std::size_t n = 1;
        for (const Graph& f : fs) n *= f.size();
        r.vertices = n;
        if (budget.expired()) {
            r.detail = "budget exhausted";
            rep.results.push_back(r);
            continue;
        }
        std::vector<TotalOrder> orders;
        bool ok = true;
        for (const Graph& f : fs) {
            ProfileOptions o;
            o.budget = budget;
            o.witnesses = false;
            OptimalOrder oo = optimal_order(f, o);
            if (oo.chain.status != ChainStatus::found) {
                ok = false;
                break;
            }
            orders.push_back(*oo.chain.order);
        }
        if (!ok) {
            r.detail = "factor orders could not be established";
            rep.results.push_back(r);
            continue;
        }
        Graph g = fs.size() == 1 ? fs[0] : cartesian_product(fs);
        TotalOrder sbl = fs.size() == 1 ? orders[0] : standard_block_lex_order(fs, orders);
        std::vector<std::size_t> ms(n + 1);
        for (std::size_t m = 0; m <= n; ++m) ms[m] = m;
        std::vector<OracleValue> oracle;
        if (fs.size() == 1) {
            ExploreInstance inst{r.instance, g, {}};
            auto prof = detail::explore_profile(inst, budget, threads);
            if (prof)
                for (std::size_t m = 0; m <= n; ++m) oracle.push_back({prof->i_values[m], std::nullopt});
        } else {
            oracle = compressed_oracle(g, orders, ms, budget);
        }
        VertexSet prefix(n);
        long long value = 0;
        bool complete = oracle.size() == n + 1;
        for (std::size_t m = 1; complete && m <= n; ++m) {
            value += static_cast<long long>(edges_into(g, sbl.at(m - 1), prefix));
            prefix.insert(sbl.at(m - 1));
            if (!oracle[m].value) {
                complete = false;
                break;
            }
            if (*oracle[m].value > value) {
                if (oracle[m].witness &&
                    static_cast<long long>(induced_edges(g, *oracle[m].witness)) == *oracle[m].value) {
                    r.status = ExploreStatus::refuted;
                    r.witness = oracle[m].witness->ids();
                    r.witness_m = m;
                    r.detail = "a set of size " + std::to_string(m) + " induces " + std::to_string(*oracle[m].value) +
                               " edges, the order " + std::to_string(value);
                } else {
                    r.detail = "oracle exceeds the order at m=" + std::to_string(m) + " but gave no witness";
                }
                break;
            }
        }
        if (r.status == ExploreStatus::inconclusive && r.detail.empty()) {
            if (complete) {
                r.status = ExploreStatus::supported;
                r.detail = "standard block-lexicographic order matches the oracle for every m";
            } else {
                r.detail = "oracle did not finish";
            }
        }
        rep.results.push_back(r);
    }
    return rep;
}

inline Json to_json(const ExploreReport& rep)
{
    Json rs = Json::array();
    for (const ExploreResult& r : rep.results) {
        Json j{{"instance", r.instance}, {"vertices", r.vertices}, {"status", to_string(r.status)}, {"detail", r.detail}};
        if (r.witness) j["witness"] = *r.witness;
        if (r.witness_m) j["witness_m"] = *r.witness_m;
        rs.push_back(std::move(j));
    }
    return Json{{"family", rep.family}, {"results", rs}};
}

} // namespace edgeiso
