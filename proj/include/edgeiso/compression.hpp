#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "edgeiso/blockgeom.hpp"
#include "edgeiso/downsets.hpp"
#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/rank_space.hpp"
#include "edgeiso/solver.hpp"
#include "edgeiso/vertex_set.hpp"

namespace edgeiso {

/// One compression step: the factor indices S that vary inside each cut and
/// the order used on the subproduct G_S.
struct CompressionStep {
    std::vector<std::size_t> factors;
    TotalOrder order;
};

using CompressionSchedule = std::vector<CompressionStep>;

/// Replaces the intersection of `a` with every cut G_S(x) by the initial
/// segment of `order_s` of the same size.
inline VertexSet compress_once(const Shape& shape, const VertexSet& a, std::span<const std::size_t> s,
                               const TotalOrder& order_s)
{
    check_index_set(s, shape.dimension());
    if (a.universe() != shape.volume()) throw ParameterError("set does not match the product");
    if (order_s.size() != sub_shape(shape, s).volume()) throw ParameterError("order does not match the subproduct");
    VertexSet out(shape.volume());
    for_each_cut(shape, s, [&](std::span<const Vertex> members) {
        std::size_t k = 0;
        for (Vertex v : members) k += a.contains(v);
        for (std::size_t p = 0; p < k; ++p) out.insert(members[order_s.at(p)]);
    });
    return out;
}

inline VertexSet compress_once(const Graph& g, const VertexSet& a, std::span<const std::size_t> s,
                               const TotalOrder& order_s)
{
    return compress_once(g.shape(), a, s, order_s);
}

/// The order a global product order induces on the subproduct G_S, read from
/// the cut through vertex 0.
inline TotalOrder induced_suborder(const Shape& shape, const TotalOrder& global, std::span<const std::size_t> s)
{
    check_index_set(s, shape.dimension());
    std::vector<Vertex> seq;
    bool first = true;
    for_each_cut(shape, s, [&](std::span<const Vertex> members) {
        if (!first) return;
        first = false;
        seq.resize(members.size());
        std::iota(seq.begin(), seq.end(), Vertex{0});
        std::sort(seq.begin(), seq.end(), [&](Vertex x, Vertex y) { return global.less(members[x], members[y]); });
    });
    return TotalOrder::from_sequence(seq);
}

inline CompressionSchedule singleton_schedule(const Shape& shape, std::span<const TotalOrder> factor_orders)
{
    detail::check_factor_orders(shape, factor_orders);
    CompressionSchedule sch;
    for (std::size_t i = 0; i < shape.dimension(); ++i) sch.push_back({{i}, factor_orders[i]});
    return sch;
}

/// Every nonempty proper subset S, each with the order the global order
/// induces on G_S.
inline CompressionSchedule proper_subset_schedule(const Shape& shape, const TotalOrder& global)
{
    const std::size_t d = shape.dimension();
    CompressionSchedule sch;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << d); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < d; ++i)
            if ((mask >> i) & 1u) s.push_back(i);
        TotalOrder o = induced_suborder(shape, global, s);
        sch.push_back({std::move(s), std::move(o)});
    }
    return sch;
}

struct FixpointResult {
    VertexSet set;
    std::size_t cycles = 0; // full passes over the schedule, the last one a no-op
};

/// Applies the schedule cyclically until a whole pass changes nothing. With
/// a global order, every step must be consistent with it. More than n*d
/// passes means the schedule is inconsistent.
inline FixpointResult compress_to_fixpoint(const Shape& shape, const VertexSet& a, const CompressionSchedule& schedule,
                                           const std::optional<TotalOrder>& global = std::nullopt)
{
    for (const CompressionStep& st : schedule) {
        check_index_set(st.factors, shape.dimension());
        if (st.factors.size() == shape.dimension())
            throw ParameterError("compression schedules use proper subsets of the factors");
        if (global && !is_consistent(shape, *global, st.order, st.factors))
            throw PreconditionError("schedule order is not consistent with the global order");
    }
    if (schedule.empty()) return {a, 1};
    const std::size_t cap = std::max<std::size_t>(1, shape.volume() * shape.dimension());
    FixpointResult r{a, 0};
    while (r.cycles < cap) {
        ++r.cycles;
        bool changed = false;
        for (const CompressionStep& st : schedule) {
            VertexSet next = compress_once(shape, r.set, st.factors, st.order);
            if (!(next == r.set)) {
                changed = true;
                r.set = std::move(next);
            }
        }
        if (!changed) return r;
    }
    throw CapExceeded("compression did not stabilise within " + std::to_string(cap) +
                      " passes; the schedule orders are inconsistent");
}

inline bool is_fixed_by(const Shape& shape, const VertexSet& a, const CompressionSchedule& schedule)
{
    for (const CompressionStep& st : schedule)
        if (!(compress_once(shape, a, st.factors, st.order) == a)) return false;
    return true;
}

/// Fixed by every single-factor compression.
inline bool is_compressed(const Shape& shape, const VertexSet& a, std::span<const TotalOrder> factor_orders)
{
    if (shape.dimension() == 1) return a == initial_segment(factor_orders[0], a.size());
    return is_fixed_by(shape, a, singleton_schedule(shape, factor_orders));
}

/// Fixed by the compression along every proper subset S, using the orders
/// the global order induces on the subproducts.
inline bool is_strongly_compressed(const Shape& shape, const VertexSet& a, const TotalOrder& global)
{
    if (shape.dimension() == 1) return a == initial_segment(global, a.size());
    return is_fixed_by(shape, a, proper_subset_schedule(shape, global));
}

/// Δ tables: tables[j][v] = δ_j(rank of v in the order of factor j).
inline std::vector<std::vector<long long>> delta_tables(std::span<const DeltaSequence> deltas)
{
    std::vector<std::vector<long long>> t;
    for (const DeltaSequence& d : deltas) {
        std::vector<long long> row(d.size());
        for (Vertex v = 0; v < d.size(); ++v) row[v] = d.of_vertex(v);
        t.push_back(std::move(row));
    }
    return t;
}

inline std::vector<std::vector<long long>> delta_tables(std::span<const Graph> factors,
                                                        std::span<const TotalOrder> orders)
{
    std::vector<DeltaSequence> ds;
    for (std::size_t i = 0; i < factors.size(); ++i) ds.push_back(delta_of_order(factors[i], orders[i]));
    return delta_tables(ds);
}

/// Sum over members of the Δ values of their coordinates.
inline long long weight(const Shape& shape, const VertexSet& a, const std::vector<std::vector<long long>>& tables)
{
    if (tables.size() != shape.dimension()) throw ParameterError("one Δ table per factor is required");
    for (std::size_t i = 0; i < tables.size(); ++i)
        if (tables[i].size() != shape.dim(i)) throw ParameterError("Δ table size mismatch");
    long long w = 0;
    a.for_each([&](Vertex v) {
        for (std::size_t j = 0; j < shape.dimension(); ++j) w += tables[j][shape.coordinate(v, j)];
    });
    return w;
}

namespace detail {
// Blocks in the given order must be full up to the last one that is touched.
inline bool full_before_last_touched(const DominationCollection& dc, const VertexSet& a,
                                     const std::vector<BlockId>& blocks)
{
    std::size_t last = 0;
    bool touched = false;
    std::vector<VertexSet> sets;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        sets.push_back(block_members(dc, blocks[k]));
        if (sets.back().intersection_size(a) > 0) {
            last = k;
            touched = true;
        }
    }
    if (!touched) return true;
    for (std::size_t k = 0; k < last; ++k)
        if (!sets[k].is_subset_of(a)) return false;
    return true;
}
} // namespace detail

inline bool is_block_compressed(const DominationCollection& dc, const VertexSet& a)
{
    return detail::full_before_last_touched(dc, a, blocks_in_order(dc));
}

inline bool is_slice_compressed(const DominationCollection& dc, const VertexSet& a)
{
    for (std::size_t q = 0; q < dc.partition(0).segment_count(); ++q)
        if (!detail::full_before_last_touched(dc, a, slice_blocks(dc, q))) return false;
    return true;
}

/// Visits every set of size m fixed by all single-factor compressions under
/// the given factor orders, each exactly once. These are the down-sets of the
/// product of chains in rank space. Returns false if stopped by the visitor
/// or the budget.
template <typename Visitor>
bool enumerate_compressed(const Shape& shape, std::span<const TotalOrder> factor_orders, std::size_t m,
                          Visitor&& visit, const Budget& budget = {})
{
    RankSpace rs(shape, std::vector<TotalOrder>(factor_orders.begin(), factor_orders.end()));
    DownsetBox box = rs.box();
    return box.for_each_of_size(m, budget, [&](std::span<const std::size_t> heights) {
        return visit(rs.from_heights(box, heights));
    });
}

} // namespace edgeiso
