#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "edgeiso/downsets.hpp"
#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/rank_space.hpp"
#include "edgeiso/vertex_set.hpp"

namespace edgeiso {

enum class Strategy { full_enumeration, compressed_only, branch_and_bound };

inline const char* to_string(Strategy s)
{
    switch (s) {
    case Strategy::full_enumeration: return "full";
    case Strategy::compressed_only: return "compressed";
    case Strategy::branch_and_bound: return "bnb";
    }
    return "?";
}

inline Strategy parse_strategy(const std::string& s)
{
    if (s == "full") return Strategy::full_enumeration;
    if (s == "compressed") return Strategy::compressed_only;
    if (s == "bnb") return Strategy::branch_and_bound;
    throw ParseError("unknown strategy '" + s + "'");
}

/// I_G(m) for m = 0..n, with one optimal witness per m when available.
struct Profile {
    std::vector<long long> i_values;
    std::vector<std::optional<VertexSet>> witnesses;
    bool complete = true;
    Strategy strategy = Strategy::full_enumeration;

    std::size_t vertex_count() const { return i_values.empty() ? 0 : i_values.size() - 1; }
};

struct ThetaProfile {
    std::vector<long long> theta_values;
    std::vector<std::optional<VertexSet>> witnesses;
    bool complete = true;
    bool from_induced = false; // derived from I via |Θ(A)| + 2|I(A)| = d|A|
};

struct ProfileOptions {
    Strategy strategy = Strategy::full_enumeration;
    Budget budget{};
    std::size_t full_cap = 24;
    std::size_t bnb_cap = 64;
    std::size_t compressed_cap = 200;
    unsigned threads = 1;
    bool witnesses = true;
    std::vector<TotalOrder> factor_orders; // required by compressed_only
    // Down-set count above which compressed_only switches from enumeration
    // to the weight dynamic program (no witnesses).
    long double enumeration_limit = 3.0e6L;
};

namespace detail {

struct EnumerationChunkResult {
    std::vector<long long> best_i;
    std::vector<std::uint32_t> best_i_mask;
    std::vector<long long> best_theta;
    std::vector<std::uint32_t> best_theta_mask;
    bool complete = true;
};

// Gray-code walk over the low bits with the high bits fixed to `prefix`.
inline EnumerationChunkResult enumerate_chunk(const std::vector<std::uint32_t>& adj, std::size_t n, std::size_t low_bits,
                                              std::uint32_t prefix, const Budget& budget)
{
    EnumerationChunkResult r;
    r.best_i.assign(n + 1, -1);
    r.best_i_mask.assign(n + 1, 0);
    r.best_theta.assign(n + 1, std::numeric_limits<long long>::max());
    r.best_theta_mask.assign(n + 1, 0);
    std::uint32_t mask = prefix << low_bits;
    long long ind = 0, theta = 0;
    for (std::size_t v = 0; v < n; ++v)
        if ((mask >> v) & 1u) {
            ind += std::popcount(adj[v] & mask);
            theta += std::popcount(adj[v] & ~mask & ((n == 32) ? ~0u : ((1u << n) - 1)));
        }
    ind /= 2;
    auto record = [&] {
        std::size_t k = static_cast<std::size_t>(std::popcount(mask));
        if (ind > r.best_i[k]) {
            r.best_i[k] = ind;
            r.best_i_mask[k] = mask;
        }
        if (theta < r.best_theta[k]) {
            r.best_theta[k] = theta;
            r.best_theta_mask[k] = mask;
        }
    };
    record();
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    std::size_t tick = 0;
    for (std::uint64_t i = 1; i < steps; ++i) {
        if (budget.expired_every(tick)) {
            r.complete = false;
            return r;
        }
        const int b = std::countr_zero(i);
        const std::uint32_t bit = 1u << b;
        const long long nb = std::popcount(adj[b] & mask & ~bit);
        const long long deg = std::popcount(adj[b]);
        if (mask & bit) {
            mask &= ~bit;
            ind -= nb;
            theta -= deg - 2 * nb;
        } else {
            mask |= bit;
            ind += nb;
            theta += deg - 2 * nb;
        }
        record();
    }
    return r;
}

struct FullEnumeration {
    Profile induced;
    ThetaProfile theta;
};

inline FullEnumeration full_enumeration(const Graph& g, const ProfileOptions& opt)
{
    const std::size_t n = g.size();
    if (n > opt.full_cap || n > 30)
        throw CapExceeded("full enumeration is capped at " + std::to_string(std::min<std::size_t>(opt.full_cap, 30)) +
                          " vertices; use --strategy compressed for products with optimal factor orders or bnb");
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
    // Fixed chunking keeps witnesses independent of the thread count.
    const std::size_t high_bits = std::min<std::size_t>(n, 6);
    const std::size_t low_bits = n - high_bits;
    const std::size_t chunks = std::size_t{1} << high_bits;
    std::vector<EnumerationChunkResult> results(chunks);
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(chunks)));
    if (workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            results[c] = enumerate_chunk(adj, n, low_bits, static_cast<std::uint32_t>(c), opt.budget);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers)
                    results[c] = enumerate_chunk(adj, n, low_bits, static_cast<std::uint32_t>(c), opt.budget);
            });
        for (auto& t : pool) t.join();
    }
    FullEnumeration out;
    out.induced.strategy = Strategy::full_enumeration;
    out.induced.i_values.assign(n + 1, -1);
    out.induced.witnesses.assign(n + 1, std::nullopt);
    out.theta.theta_values.assign(n + 1, std::numeric_limits<long long>::max());
    out.theta.witnesses.assign(n + 1, std::nullopt);
    std::vector<std::uint32_t> imask(n + 1, 0), tmask(n + 1, 0);
    for (const auto& r : results) {
        if (!r.complete) {
            out.induced.complete = false;
            out.theta.complete = false;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            if (r.best_i[k] > out.induced.i_values[k]) {
                out.induced.i_values[k] = r.best_i[k];
                imask[k] = r.best_i_mask[k];
            }
            if (r.best_theta[k] < out.theta.theta_values[k]) {
                out.theta.theta_values[k] = r.best_theta[k];
                tmask[k] = r.best_theta_mask[k];
            }
        }
    }
    auto to_set = [n](std::uint32_t m) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v)
            if ((m >> v) & 1u) s.insert(v);
        return s;
    };
    if (out.induced.complete && opt.witnesses)
        for (std::size_t k = 0; k <= n; ++k) {
            out.induced.witnesses[k] = to_set(imask[k]);
            out.theta.witnesses[k] = to_set(tmask[k]);
        }
    return out;
}

inline Profile branch_and_bound(const Graph& g, const ProfileOptions& opt)
{
    const std::size_t n = g.size();
    if (n > opt.bnb_cap || n > 64)
        throw CapExceeded("branch and bound is capped at " + std::to_string(std::min<std::size_t>(opt.bnb_cap, 64)) +
                          " vertices");
    // Search over vertices in order of decreasing degree.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> slot(n);
    for (std::size_t k = 0; k < n; ++k) slot[order[k]] = k;
    std::vector<std::uint64_t> adj(n, 0); // in slot space
    for (std::size_t k = 0; k < n; ++k)
        for (Vertex w : g.neighbors(order[k])) adj[k] |= std::uint64_t{1} << slot[w];
    auto suffix = [n](std::size_t from) -> std::uint64_t {
        if (from >= n) return 0;
        std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return all & ~((std::uint64_t{1} << from) - 1);
    };

    Profile p;
    p.strategy = Strategy::branch_and_bound;
    p.i_values.assign(n + 1, -1);
    p.witnesses.assign(n + 1, std::nullopt);
    std::vector<std::uint64_t> best_mask(n + 1, 0);
    p.i_values[0] = 0;
    std::size_t tick = 0;
    std::vector<long long> scores;

    for (std::size_t m = 1; m <= n; ++m) {
        // Lower bound: grow the previous witness greedily.
        std::uint64_t seed = best_mask[m - 1];
        long long seed_val = p.i_values[m - 1];
        long long gain = -1;
        std::size_t pick = n;
        for (std::size_t k = 0; k < n; ++k)
            if (!((seed >> k) & 1u)) {
                long long gval = std::popcount(adj[k] & seed);
                if (gval > gain) {
                    gain = gval;
                    pick = k;
                }
            }
        long long best = seed_val + gain;
        std::uint64_t bmask = seed | (std::uint64_t{1} << pick);
        bool aborted = false;

        auto dfs = [&](auto&& self, std::size_t next, std::uint64_t chosen, std::size_t count, long long val) -> void {
            if (aborted) return;
            if (opt.budget.expired_every(tick)) {
                aborted = true;
                return;
            }
            const std::size_t r = m - count;
            if (r == 0) {
                if (val > best) {
                    best = val;
                    bmask = chosen;
                }
                return;
            }
            if (n - next < r) return;
            const std::uint64_t cand = suffix(next);
            scores.clear();
            for (std::uint64_t c = cand; c; c &= c - 1) {
                int k = std::countr_zero(c);
                long long s2 = 2 * std::popcount(adj[k] & chosen) +
                               std::min<long long>(static_cast<long long>(r) - 1, std::popcount(adj[k] & cand));
                scores.push_back(s2);
            }
            std::nth_element(scores.begin(), scores.begin() + static_cast<long>(r - 1), scores.end(), std::greater<>());
            long long top = 0;
            for (std::size_t k = 0; k < r; ++k) top += scores[k];
            if (val + top / 2 <= best) return;
            for (std::size_t k = next; k + r <= n; ++k) {
                long long add = std::popcount(adj[k] & chosen);
                self(self, k + 1, chosen | (std::uint64_t{1} << k), count + 1, val + add);
                if (aborted) return;
            }
        };
        dfs(dfs, 0, 0, 0, 0);
        if (aborted) {
            p.complete = false;
            p.i_values.resize(m);
            p.witnesses.resize(m);
            break;
        }
        p.i_values[m] = best;
        best_mask[m] = bmask;
    }
    if (opt.witnesses)
        for (std::size_t m = 0; m < p.i_values.size(); ++m) {
            VertexSet s(n);
            for (std::size_t k = 0; k < n; ++k)
                if ((best_mask[m] >> k) & 1u) s.insert(order[k]);
            p.witnesses[m] = std::move(s);
        }
    if (!p.complete) p.i_values.resize(n + 1, -1), p.witnesses.resize(n + 1);
    return p;
}

} // namespace detail

/// Δ table of a factor: δ evaluated at each position of its order.
inline std::vector<long long> delta_by_position(const Profile& p)
{
    std::vector<long long> out;
    for (std::size_t m = 1; m < p.i_values.size(); ++m) out.push_back(p.i_values[m] - p.i_values[m - 1]);
    return out;
}

Profile exact_profile(const Graph& g, const ProfileOptions& opt = {});

namespace detail {

inline Profile factor_profile(const Graph& f, const ProfileOptions& opt)
{
    ProfileOptions fo;
    fo.budget = opt.budget;
    fo.threads = opt.threads;
    fo.witnesses = false;
    fo.strategy = f.size() <= opt.full_cap ? Strategy::full_enumeration : Strategy::branch_and_bound;
    return exact_profile(f, fo);
}

inline Profile compressed_profile(const Graph& g, const ProfileOptions& opt)
{
    const std::size_t n = g.size();
    if (n > opt.compressed_cap)
        throw CapExceeded("compressed oracle is capped at " + std::to_string(opt.compressed_cap) + " vertices");
    if (opt.factor_orders.size() != g.dimension())
        throw ParameterError("compressed_only needs one optimal order per factor");
    Shape shape = g.shape();
    RankSpace space(shape, opt.factor_orders);

    // Factor orders must be optimal for compression to be sound.
    std::vector<std::vector<long long>> weights;
    for (std::size_t i = 0; i < g.dimension(); ++i) {
        Graph f = g.factor(i);
        Profile fp = factor_profile(f, opt);
        if (!fp.complete) {
            Profile p;
            p.complete = false;
            p.strategy = Strategy::compressed_only;
            p.i_values.assign(n + 1, -1);
            p.witnesses.assign(n + 1, std::nullopt);
            return p;
        }
        for (std::size_t k = 0; k <= f.size(); ++k)
            if (static_cast<long long>(induced_edges(f, initial_segment(opt.factor_orders[i], k))) != fp.i_values[k])
                throw PreconditionError("factor order " + std::to_string(i + 1) + " is not optimal at m=" +
                                        std::to_string(k));
        weights.push_back(delta_by_position(fp));
    }

    Profile p;
    p.strategy = Strategy::compressed_only;
    p.i_values.assign(n + 1, -1);
    p.witnesses.assign(n + 1, std::nullopt);
    auto estimate = downset_count_estimate(shape.dims());
    const bool enumerate = estimate ? *estimate <= opt.enumeration_limit : n <= 32;
    if (enumerate) {
        DownsetBox box = space.box();
        for (std::size_t m = 0; m <= n; ++m) {
            bool done = box.for_each_of_size(m, opt.budget, [&](std::span<const std::size_t> h) {
                VertexSet s = space.from_heights(box, h);
                long long val = static_cast<long long>(induced_edges(g, s));
                if (val > p.i_values[m]) {
                    p.i_values[m] = val;
                    if (opt.witnesses) p.witnesses[m] = std::move(s);
                }
                return true;
            });
            if (!done) {
                p.complete = false;
                break;
            }
        }
        return p;
    }
    MaxWeightResult r = max_weight_downsets(shape.dims(), weights, n, opt.budget);
    p.complete = r.complete;
    if (r.complete) p.i_values = r.best;
    return p;
}

} // namespace detail

/// Exact isoperimetric profile under the requested strategy.
inline Profile exact_profile(const Graph& g, const ProfileOptions& opt)
{
    switch (opt.strategy) {
    case Strategy::full_enumeration: return detail::full_enumeration(g, opt).induced;
    case Strategy::branch_and_bound: return detail::branch_and_bound(g, opt);
    case Strategy::compressed_only: return detail::compressed_profile(g, opt);
    }
    throw ParameterError("unknown strategy");
}

/// Θ(m) for m = 0..n. Computed directly by enumeration for small graphs and
/// from the induced profile for larger regular ones.
inline ThetaProfile theta_profile(const Graph& g, const ProfileOptions& opt = {})
{
    if (opt.strategy == Strategy::full_enumeration && g.size() <= std::min<std::size_t>(opt.full_cap, 30))
        return detail::full_enumeration(g, opt).theta;
    auto deg = g.regular_degree();
    if (!deg)
        throw CapExceeded("Θ profile of an irregular graph needs full enumeration (at most " +
                          std::to_string(opt.full_cap) + " vertices)");
    Profile p = exact_profile(g, opt);
    ThetaProfile t;
    t.from_induced = true;
    t.complete = p.complete;
    t.theta_values.resize(p.i_values.size());
    t.witnesses.resize(p.i_values.size());
    for (std::size_t m = 0; m < p.i_values.size(); ++m) {
        t.theta_values[m] = p.i_values[m] < 0 ? -1 : static_cast<long long>(*deg * m) - 2 * p.i_values[m];
        t.witnesses[m] = p.witnesses[m];
    }
    return t;
}

/// First differences δ(1..n) of a complete profile, optionally tied to the
/// order they were read from.
struct DeltaSequence {
    std::vector<long long> values; // values[k] = δ(k+1)
    std::optional<TotalOrder> source_order;

    std::size_t size() const { return values.size(); }
    long long at_rank(std::size_t rank) const { return values.at(rank - 1); }

    /// Δ(v) = δ(rank of v); needs a source order.
    long long of_vertex(Vertex v) const
    {
        if (!source_order) throw PreconditionError("Δ needs the order the δ-sequence was read from");
        return values[source_order->position(v)];
    }
};

inline DeltaSequence delta_sequence(const Profile& p, std::optional<TotalOrder> source = std::nullopt)
{
    if (!p.complete) throw PreconditionError("δ-sequence needs a complete profile");
    DeltaSequence d;
    d.values = delta_by_position(p);
    if (source && source->size() != d.values.size()) throw ParameterError("order size does not match the profile");
    d.source_order = std::move(source);
    return d;
}

/// δ read directly off an order: δ(m) = |I(first m)| - |I(first m-1)|.
inline DeltaSequence delta_of_order(const Graph& g, const TotalOrder& o)
{
    DeltaSequence d;
    VertexSet prefix(g.size());
    for (std::size_t k = 0; k < o.size(); ++k) {
        d.values.push_back(static_cast<long long>(edges_into(g, o.at(k), prefix)));
        prefix.insert(o.at(k));
    }
    d.source_order = o;
    return d;
}

/// δ(i+1) - δ(i) <= 1 for every i, as required of isoperimetric graphs.
inline bool increments_at_most_one(const DeltaSequence& d)
{
    for (std::size_t k = 1; k < d.values.size(); ++k)
        if (d.values[k] - d.values[k - 1] > 1) return false;
    return true;
}

enum class ChainStatus { found, not_isoperimetric, inconclusive };

inline const char* to_string(ChainStatus s)
{
    switch (s) {
    case ChainStatus::found: return "found";
    case ChainStatus::not_isoperimetric: return "not_isoperimetric";
    case ChainStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct NestedChainResult {
    ChainStatus status = ChainStatus::inconclusive;
    std::optional<TotalOrder> order;
    std::size_t deepest = 0; // largest m reached by a chain of optimal sets
    std::optional<VertexSet> deepest_set;
};

/// Depth-first search for a chain of optimal sets A_1 ⊂ … ⊂ A_n, extending by
/// the lowest id first. Dead ends are memoised.
inline NestedChainResult find_nested_chain(const Graph& g, const Profile& profile, const Budget& budget = {})
{
    if (!profile.complete) throw PreconditionError("nested-chain search needs a complete profile");
    const std::size_t n = g.size();
    if (profile.i_values.size() != n + 1) throw ParameterError("profile does not match the graph");
    NestedChainResult res;
    std::unordered_set<VertexSet, VertexSetHash> dead;
    std::vector<Vertex> chain;
    VertexSet current(n);
    bool aborted = false;
    std::size_t tick = 0;

    auto dfs = [&](auto&& self, long long value) -> bool {
        const std::size_t m = chain.size();
        if (m > res.deepest || !res.deepest_set) {
            res.deepest = m;
            res.deepest_set = current;
        }
        if (m == n) return true;
        if (budget.expired_every(tick)) {
            aborted = true;
            return false;
        }
        if (dead.contains(current)) return false;
        for (Vertex v = 0; v < n; ++v) {
            if (current.contains(v)) continue;
            long long nv = value + static_cast<long long>(edges_into(g, v, current));
            if (nv != profile.i_values[m + 1]) continue;
            current.insert(v);
            chain.push_back(v);
            if (self(self, nv)) return true;
            chain.pop_back();
            current.erase(v);
            if (aborted) return false;
        }
        dead.insert(current);
        return false;
    };
    if (dfs(dfs, 0)) {
        res.status = ChainStatus::found;
        res.order = TotalOrder::from_sequence(chain);
    } else {
        res.status = aborted ? ChainStatus::inconclusive : ChainStatus::not_isoperimetric;
    }
    return res;
}

/// Largest m such that some chain of optimal sets reaches size m, computed
/// breadth-first over whole layers of optimal sets. Independent of the
/// depth-first search above; feasible for small graphs only.
inline std::optional<std::size_t> chain_reach_breadth_first(const Graph& g, const Profile& profile,
                                                            const Budget& budget = {})
{
    const std::size_t n = g.size();
    std::vector<VertexSet> layer{VertexSet(n)};
    std::size_t tick = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        std::unordered_set<VertexSet, VertexSetHash> next;
        for (const VertexSet& a : layer)
            for (Vertex v = 0; v < n; ++v) {
                if (budget.expired_every(tick)) return std::nullopt;
                if (a.contains(v)) continue;
                VertexSet b = a;
                b.insert(v);
                if (static_cast<long long>(induced_edges(g, b)) == profile.i_values[m]) next.insert(std::move(b));
            }
        if (next.empty()) return m - 1;
        layer.assign(next.begin(), next.end());
    }
    return n;
}

struct OptimalityCheck {
    bool optimal = true;
    std::optional<std::size_t> first_failure; // smallest m with a suboptimal initial segment
    long long achieved = 0;                    // |I| of the failing segment
    long long optimum = 0;
};

/// Compares |I| of every initial segment of o with the oracle profile.
inline OptimalityCheck verify_order_optimal(const Graph& g, const TotalOrder& o, const Profile& oracle)
{
    if (o.size() != g.size()) throw ParameterError("order does not match the graph");
    if (!oracle.complete) throw PreconditionError("optimality check needs a complete oracle profile");
    OptimalityCheck c;
    VertexSet prefix(g.size());
    long long value = 0;
    for (std::size_t m = 1; m <= g.size(); ++m) {
        value += static_cast<long long>(edges_into(g, o.at(m - 1), prefix));
        prefix.insert(o.at(m - 1));
        if (value != oracle.i_values[m]) {
            c.optimal = false;
            c.first_failure = m;
            c.achieved = value;
            c.optimum = oracle.i_values[m];
            return c;
        }
    }
    return c;
}

/// Optimal order of a graph: exact profile then nested-chain search.
struct OptimalOrder {
    Profile profile;
    NestedChainResult chain;
};

inline OptimalOrder optimal_order(const Graph& g, const ProfileOptions& opt = {})
{
    OptimalOrder out;
    out.profile = exact_profile(g, opt);
    if (!out.profile.complete) {
        out.chain.status = ChainStatus::inconclusive;
        return out;
    }
    out.chain = find_nested_chain(g, out.profile, opt.budget);
    return out;
}

} // namespace edgeiso
