#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/solver.hpp"

namespace edgeiso {

enum class PartitionKind { standard_monotonic, atomic, custom };

inline const char* to_string(PartitionKind k)
{
    switch (k) {
    case PartitionKind::standard_monotonic: return "standard_monotonic";
    case PartitionKind::atomic: return "atomic";
    case PartitionKind::custom: return "custom";
    }
    return "?";
}

// Ordered list of rank segments [a_i, b_i] (1-based, inclusive) covering the
// order 1..n without gaps.
class Partition {
public:
    Partition() = default;

    /// boundaries are the segment ends b_1 < … < b_k = n.
    static Partition from_boundaries(TotalOrder order, std::span<const std::size_t> boundaries,
                                     PartitionKind kind = PartitionKind::custom)
    {
        const std::size_t n = order.size();
        if (n == 0) throw ParameterError("partition of an empty order");
        if (boundaries.empty() || boundaries.back() != n)
            throw ParameterError("partition boundaries must end at the last rank");
        Partition p;
        p.order_ = std::move(order);
        p.kind_ = kind;
        std::size_t a = 1;
        for (std::size_t b : boundaries) {
            if (b < a) throw ParameterError("partition boundaries must be strictly increasing");
            p.segments_.emplace_back(a, b);
            a = b + 1;
        }
        p.index_segments();
        return p;
    }

    const TotalOrder& order() const { return order_; }
    PartitionKind kind() const { return kind_; }
    std::size_t segment_count() const { return segments_.size(); }
    std::pair<std::size_t, std::size_t> bounds(std::size_t i) const { return segments_.at(i); }
    std::size_t segment_size(std::size_t i) const { return segments_.at(i).second - segments_.at(i).first + 1; }

    std::vector<std::size_t> boundaries() const
    {
        std::vector<std::size_t> b;
        for (auto [lo, hi] : segments_) b.push_back(hi);
        return b;
    }

    /// Segment members listed in order.
    std::vector<Vertex> members(std::size_t i) const
    {
        auto [a, b] = segments_.at(i);
        std::vector<Vertex> out;
        for (std::size_t r = a; r <= b; ++r) out.push_back(order_.at(r - 1));
        return out;
    }

    std::size_t segment_of(Vertex v) const { return seg_of_pos_[order_.position(v)]; }
    Vertex start(std::size_t i) const { return order_.at(segments_.at(i).first - 1); }

    /// The start set: first vertex of every segment.
    std::vector<Vertex> start_set() const
    {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < segments_.size(); ++i) out.push_back(start(i));
        return out;
    }

    /// 0-based position of v inside its segment.
    std::size_t offset_in_segment(Vertex v) const
    {
        return order_.position(v) + 1 - segments_[segment_of(v)].first;
    }

    friend bool operator==(const Partition& a, const Partition& b)
    {
        return a.order_ == b.order_ && a.segments_ == b.segments_;
    }

private:
    void index_segments()
    {
        seg_of_pos_.assign(order_.size(), 0);
        for (std::size_t i = 0; i < segments_.size(); ++i)
            for (std::size_t r = segments_[i].first; r <= segments_[i].second; ++r) seg_of_pos_[r - 1] = i;
    }

    TotalOrder order_;
    std::vector<std::pair<std::size_t, std::size_t>> segments_;
    std::vector<std::size_t> seg_of_pos_;
    PartitionKind kind_ = PartitionKind::custom;
};

/// Maximal runs where δ rises by exactly one per step.
inline Partition standard_monotonic_partition(const DeltaSequence& d)
{
    if (!d.source_order) throw PreconditionError("the standard partition needs the order the δ-sequence came from");
    std::vector<std::size_t> ends;
    for (std::size_t k = 1; k < d.values.size(); ++k)
        if (d.values[k] - d.values[k - 1] != 1) ends.push_back(k);
    ends.push_back(d.values.size());
    return Partition::from_boundaries(*d.source_order, ends, PartitionKind::standard_monotonic);
}

inline Partition atomic_partition(const TotalOrder& o)
{
    std::vector<std::size_t> ends(o.size());
    for (std::size_t k = 0; k < o.size(); ++k) ends[k] = k + 1;
    return Partition::from_boundaries(o, ends, PartitionKind::atomic);
}

/// Whole order as one segment.
inline Partition trivial_partition(const TotalOrder& o)
{
    std::vector<std::size_t> ends{o.size()};
    return Partition::from_boundaries(o, ends, PartitionKind::custom);
}

enum class Verdict { valid, invalid, inconclusive };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::valid: return "valid";
    case Verdict::invalid: return "invalid";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct SegmentReport {
    std::size_t index = 0;
    std::size_t size = 0;
    std::vector<long long> delta; // δ of the induced segment graph
    bool induced_order_optimal = false;
    bool is_clique = false;
};

struct PartitionValidation {
    Verdict verdict = Verdict::valid;
    std::vector<std::string> diagnostics;
    std::optional<Vertex> offending_vertex;
    std::optional<std::size_t> offending_segment;
    std::vector<SegmentReport> segments;

    bool ok() const { return verdict == Verdict::valid; }

    void fail(std::string msg)
    {
        if (verdict != Verdict::inconclusive) verdict = Verdict::invalid;
        diagnostics.push_back(std::move(msg));
    }
    void unsure(std::string msg)
    {
        verdict = Verdict::inconclusive;
        diagnostics.push_back(std::move(msg));
    }
};

namespace detail {

// Exact profile of a small graph with the cheapest exact strategy available.
inline std::optional<Profile> small_profile(const Graph& h, const ProfileOptions& base)
{
    ProfileOptions o;
    o.budget = base.budget;
    o.threads = base.threads;
    o.full_cap = base.full_cap;
    o.bnb_cap = base.bnb_cap;
    o.witnesses = false;
    if (h.size() <= base.full_cap)
        o.strategy = Strategy::full_enumeration;
    else if (h.size() <= base.bnb_cap)
        o.strategy = Strategy::branch_and_bound;
    else
        return std::nullopt;
    Profile p = exact_profile(h, o);
    if (!p.complete) return std::nullopt;
    return p;
}

} // namespace detail

/// Graph induced by segment i, vertices renumbered in segment order.
inline Graph segment_graph(const Graph& g, const Partition& p, std::size_t i)
{
    std::vector<Vertex> ms = p.members(i);
    return g.induced(ms);
}

/// δ of the graph induced by segment i (its own profile), read via the
/// induced order when that order is optimal for it.
inline std::optional<std::vector<long long>> segment_delta(const Graph& g, const Partition& p, std::size_t i,
                                                           const ProfileOptions& opt = {})
{
    Graph h = segment_graph(g, p, i);
    auto prof = detail::small_profile(h, opt);
    if (!prof) return std::nullopt;
    return delta_by_position(*prof);
}

/// Checks both defining conditions of an isoperimetric partition: every
/// segment induces an isoperimetric graph for which the inherited order is
/// optimal, and every vertex of segment i has exactly δ(a_i) neighbours in the
/// earlier segments.
inline PartitionValidation validate_isoperimetric_partition(const Graph& g, const Partition& p,
                                                            const ProfileOptions& opt = {})
{
    PartitionValidation out;
    if (p.order().size() != g.size()) throw ParameterError("partition does not match the graph");

    // The partition's order must itself be optimal for g.
    if (auto gp = detail::small_profile(g, opt)) {
        auto chk = verify_order_optimal(g, p.order(), *gp);
        if (!chk.optimal)
            out.fail("order is not optimal for the graph (first failure at m=" + std::to_string(*chk.first_failure) +
                     ")");
    } else if (g.size() > 0) {
        out.unsure("graph too large to confirm that the partition's order is optimal");
    }
    DeltaSequence d = delta_of_order(g, p.order());

    VertexSet earlier(g.size());
    for (std::size_t i = 0; i < p.segment_count(); ++i) {
        SegmentReport rep;
        rep.index = i;
        rep.size = p.segment_size(i);
        std::vector<Vertex> ms = p.members(i);
        Graph h = g.induced(ms);
        rep.is_clique = h.edge_count() == h.size() * (h.size() - 1) / 2;
        if (auto hp = detail::small_profile(h, opt)) {
            rep.delta = delta_by_position(*hp);
            rep.induced_order_optimal = verify_order_optimal(h, TotalOrder::identity(h.size()), *hp).optimal;
            if (!rep.induced_order_optimal)
                out.fail("segment " + std::to_string(i + 1) + ": inherited order is not optimal for the induced graph");
        } else {
            out.unsure("segment " + std::to_string(i + 1) + " too large to verify");
        }
        const long long need = d.values[p.bounds(i).first - 1];
        for (Vertex v : ms) {
            long long back = static_cast<long long>(edges_into(g, v, earlier));
            if (back != need) {
                out.fail("segment " + std::to_string(i + 1) + ": vertex " + std::to_string(v) + " has " +
                         std::to_string(back) + " edges to earlier segments, expected " + std::to_string(need));
                if (!out.offending_vertex) {
                    out.offending_vertex = v;
                    out.offending_segment = i;
                }
            }
        }
        for (Vertex v : ms) earlier.insert(v);
        out.segments.push_back(std::move(rep));
    }
    return out;
}

/// Every segment's induced δ-sequence is non-decreasing.
inline std::optional<bool> is_non_decreasing(const Graph& g, const Partition& p, const ProfileOptions& opt = {})
{
    for (std::size_t i = 0; i < p.segment_count(); ++i) {
        auto d = segment_delta(g, p, i, opt);
        if (!d) return std::nullopt;
        if (!std::is_sorted(d->begin(), d->end())) return false;
    }
    return true;
}

/// First and last segments have identical induced δ-sequences.
inline std::optional<bool> is_regular_partition(const Graph& g, const Partition& p, const ProfileOptions& opt = {})
{
    auto first = segment_delta(g, p, 0, opt);
    auto last = segment_delta(g, p, p.segment_count() - 1, opt);
    if (!first || !last) return std::nullopt;
    return *first == *last;
}

struct DeltaShift {
    long long global_difference = 0;  // Δ_G(x) - Δ_G(y)
    long long segment_difference = 0; // Δ_H(x) - Δ_H(y)
    bool holds() const { return global_difference == segment_difference; }
};

/// Both sides of the Δ-shift identity for x, y in segment i.
inline DeltaShift segment_delta_shift(const Graph& g, const Partition& p, std::size_t i, Vertex x, Vertex y,
                                      const ProfileOptions& opt = {})
{
    if (p.segment_of(x) != i || p.segment_of(y) != i) throw ParameterError("both vertices must lie in the segment");
    DeltaSequence d = delta_of_order(g, p.order());
    auto hd = segment_delta(g, p, i, opt);
    if (!hd) throw CapExceeded("segment too large for an exact profile");
    DeltaShift s;
    s.global_difference = d.of_vertex(x) - d.of_vertex(y);
    s.segment_difference = (*hd)[p.offset_in_segment(x)] - (*hd)[p.offset_in_segment(y)];
    return s;
}

struct StandardPartitionCheck {
    bool all_cliques = true;
    bool backward_edges_exact = true;
};

/// Both properties of the standard monotonic partition: every monotonic set
/// induces a clique, and every vertex in segment i sends exactly δ(a_i)
/// edges to the earlier segments.
inline StandardPartitionCheck check_standard_partition(const Graph& g, const Partition& p)
{
    StandardPartitionCheck c;
    DeltaSequence d = delta_of_order(g, p.order());
    VertexSet earlier(g.size());
    for (std::size_t i = 0; i < p.segment_count(); ++i) {
        std::vector<Vertex> ms = p.members(i);
        for (std::size_t a = 0; a < ms.size(); ++a)
            for (std::size_t b = a + 1; b < ms.size(); ++b)
                if (!g.adjacent(ms[a], ms[b])) c.all_cliques = false;
        const long long need = d.values[p.bounds(i).first - 1];
        for (Vertex v : ms)
            if (static_cast<long long>(edges_into(g, v, earlier)) != need) c.backward_edges_exact = false;
        for (Vertex v : ms) earlier.insert(v);
    }
    return c;
}

} // namespace edgeiso
