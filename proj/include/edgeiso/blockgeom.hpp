#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/partition.hpp"
#include "edgeiso/solver.hpp"

namespace edgeiso {

/// Per-factor segment indices (0-based) of a block.
using BlockId = std::vector<std::size_t>;

// Isoperimetric partitions of the factors together with a domination
// permutation per block of the full product. Blocks of a subproduct take the
// restriction of the permutation of the full block that extends them with the
// first segment in every other factor; validate_domination_collection checks
// that every other extension agrees.
class DominationCollection {
public:
    DominationCollection() = default;

    DominationCollection(std::vector<Partition> partitions, std::map<BlockId, Permutation> block_perms = {},
                         std::optional<Permutation> default_perm = std::nullopt)
        : partitions_(std::move(partitions)), block_perms_(std::move(block_perms)), default_perm_(std::move(default_perm))
    {
        if (partitions_.empty()) throw ParameterError("a domination collection needs at least one factor");
        std::vector<std::size_t> dims, counts;
        for (const Partition& p : partitions_) {
            dims.push_back(p.order().size());
            counts.push_back(p.segment_count());
        }
        shape_ = Shape(dims);
        blocks_ = Shape(counts);
        const std::size_t d = partitions_.size();
        if (default_perm_ && default_perm_->degree() != d) throw ParameterError("default permutation has wrong degree");
        for (const auto& [b, pi] : block_perms_) {
            if (b.size() != d || pi.degree() != d) throw ParameterError("block permutation has wrong degree");
            for (std::size_t i = 0; i < d; ++i)
                if (b[i] >= counts[i]) throw ParameterError("block id out of range");
        }
    }

    std::size_t dimension() const { return partitions_.size(); }
    const Partition& partition(std::size_t i) const { return partitions_.at(i); }
    const std::vector<Partition>& partitions() const { return partitions_; }
    const Shape& shape() const { return shape_; }
    const Shape& block_grid() const { return blocks_; }
    std::size_t block_count() const { return blocks_.volume(); }
    const std::map<BlockId, Permutation>& explicit_perms() const { return block_perms_; }
    const std::optional<Permutation>& default_perm() const { return default_perm_; }

    std::vector<TotalOrder> factor_orders() const
    {
        std::vector<TotalOrder> out;
        for (const Partition& p : partitions_) out.push_back(p.order());
        return out;
    }

    BlockId block_at(std::size_t index) const { return blocks_.decode(index); }
    std::size_t block_index(const BlockId& b) const { return blocks_.encode(b); }

    Permutation perm(const BlockId& b) const
    {
        auto it = block_perms_.find(b);
        if (it != block_perms_.end()) return it->second;
        return default_perm_ ? *default_perm_ : Permutation::identity(dimension());
    }

    std::vector<std::size_t> segment_sizes(const BlockId& b) const
    {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < dimension(); ++i) s.push_back(partitions_[i].segment_size(b[i]));
        return s;
    }

    std::size_t block_size(const BlockId& b) const
    {
        std::size_t v = 1;
        for (std::size_t s : segment_sizes(b)) v *= s;
        return v;
    }

    /// Collection on the subproduct over the ascending index set s.
    DominationCollection restrict_to(std::span<const std::size_t> s) const
    {
        check_index_set(s, dimension());
        std::vector<Partition> parts;
        for (std::size_t i : s) parts.push_back(partitions_[i]);
        std::vector<std::size_t> counts;
        for (std::size_t i : s) counts.push_back(partitions_[i].segment_count());
        Shape sub(counts);
        std::map<BlockId, Permutation> perms;
        for (std::size_t k = 0; k < sub.volume(); ++k) {
            BlockId sb = sub.decode(k);
            perms.emplace(sb, perm(canonical_extension(s, sb)).restrict_to(s));
        }
        return DominationCollection(std::move(parts), std::move(perms));
    }

    /// Full block extending sub-block sb (on s) with first segments elsewhere.
    BlockId canonical_extension(std::span<const std::size_t> s, const BlockId& sb) const
    {
        BlockId full(dimension(), 0);
        for (std::size_t k = 0; k < s.size(); ++k) full[s[k]] = sb[k];
        return full;
    }

private:
    std::vector<Partition> partitions_;
    std::map<BlockId, Permutation> block_perms_;
    std::optional<Permutation> default_perm_;
    Shape shape_;
    Shape blocks_;
};

// ---------------------------------------------------------------------------
// Geometry

inline BlockId block_of(const DominationCollection& dc, Vertex v)
{
    BlockId b(dc.dimension());
    for (std::size_t i = 0; i < dc.dimension(); ++i) b[i] = dc.partition(i).segment_of(dc.shape().coordinate(v, i));
    return b;
}

inline Vertex start_of(const DominationCollection& dc, const BlockId& b)
{
    std::vector<std::size_t> c(dc.dimension());
    for (std::size_t i = 0; i < dc.dimension(); ++i) c[i] = dc.partition(i).start(b.at(i));
    return dc.shape().encode(c);
}

namespace detail {
// Vertices whose coordinate i lies in choices[i] (lists of factor vertices).
inline VertexSet box_set(const Shape& shape, const std::vector<std::vector<Vertex>>& choices)
{
    VertexSet s(shape.volume());
    std::vector<std::size_t> counts;
    for (const auto& c : choices) counts.push_back(c.size());
    Shape grid(counts);
    std::vector<std::size_t> coords(shape.dimension());
    for (std::size_t k = 0; k < grid.volume(); ++k) {
        for (std::size_t i = 0; i < shape.dimension(); ++i) coords[i] = choices[i][grid.coordinate(k, i)];
        s.insert(shape.encode(coords));
    }
    return s;
}
} // namespace detail

inline VertexSet block_members(const DominationCollection& dc, const BlockId& b)
{
    std::vector<std::vector<Vertex>> ch;
    for (std::size_t i = 0; i < dc.dimension(); ++i) ch.push_back(dc.partition(i).members(b.at(i)));
    return detail::box_set(dc.shape(), ch);
}

/// Segment i of the block crossed with the starts of the other segments.
inline VertexSet bone(const DominationCollection& dc, const BlockId& b, std::size_t i)
{
    if (i >= dc.dimension()) throw ParameterError("bone direction out of range");
    std::vector<std::vector<Vertex>> ch;
    for (std::size_t j = 0; j < dc.dimension(); ++j)
        ch.push_back(j == i ? dc.partition(j).members(b.at(j)) : std::vector<Vertex>{dc.partition(j).start(b.at(j))});
    return detail::box_set(dc.shape(), ch);
}

inline VertexSet skeleton(const DominationCollection& dc, const BlockId& b)
{
    VertexSet s(dc.shape().volume());
    for (std::size_t i = 0; i < dc.dimension(); ++i) s |= bone(dc, b, i);
    return s;
}

/// Blocks of the stack in direction i through `anchor` (its i-th entry is
/// ignored), in block order.
inline std::vector<BlockId> stack_blocks(const DominationCollection& dc, std::size_t i, const BlockId& anchor)
{
    if (i >= dc.dimension() || anchor.size() != dc.dimension()) throw ParameterError("bad stack direction or anchor");
    for (std::size_t j = 0; j < dc.dimension(); ++j)
        if (j != i && anchor[j] >= dc.partition(j).segment_count()) throw ParameterError("stack anchor out of range");
    std::vector<BlockId> out;
    for (std::size_t s = 0; s < dc.partition(i).segment_count(); ++s) {
        BlockId b = anchor;
        b[i] = s;
        out.push_back(std::move(b));
    }
    return out;
}

inline VertexSet stack(const DominationCollection& dc, std::size_t i, const BlockId& anchor)
{
    VertexSet s(dc.shape().volume());
    for (const BlockId& b : stack_blocks(dc, i, anchor)) s |= block_members(dc, b);
    return s;
}

/// Blocks whose first coordinate is segment q of factor 1, in block order.
inline std::vector<BlockId> slice_blocks(const DominationCollection& dc, std::size_t q)
{
    if (q >= dc.partition(0).segment_count()) throw ParameterError("slice index out of range");
    std::vector<BlockId> out;
    for (std::size_t k = 0; k < dc.block_count(); ++k) {
        BlockId b = dc.block_at(k);
        if (b[0] == q) out.push_back(std::move(b));
    }
    return out;
}

inline VertexSet slice(const DominationCollection& dc, std::size_t q)
{
    VertexSet s(dc.shape().volume());
    for (const BlockId& b : slice_blocks(dc, q)) s |= block_members(dc, b);
    return s;
}

/// All blocks in increasing block-lexicographic order (lexicographic in the
/// segment indices, which is the order of their starts).
inline std::vector<BlockId> blocks_in_order(const DominationCollection& dc)
{
    std::vector<BlockId> out;
    for (std::size_t k = 0; k < dc.block_count(); ++k) out.push_back(dc.block_at(k));
    return out;
}

/// Block-lexicographic order: blocks by lexicographic order of their starts,
/// and inside a block by that block's domination order.
inline TotalOrder block_lex_order(const DominationCollection& dc)
{
    const Shape& shape = dc.shape();
    const std::size_t d = dc.dimension();
    std::vector<std::size_t> offset(dc.block_count() + 1, 0);
    std::vector<Permutation> perms(dc.block_count());
    std::vector<std::vector<std::size_t>> sizes(dc.block_count());
    for (std::size_t k = 0; k < dc.block_count(); ++k) {
        BlockId b = dc.block_at(k);
        offset[k + 1] = offset[k] + dc.block_size(b);
        perms[k] = dc.perm(b);
        sizes[k] = dc.segment_sizes(b);
    }
    std::vector<std::size_t> positions(shape.volume());
    BlockId b(d);
    for (Vertex v = 0; v < shape.volume(); ++v) {
        for (std::size_t i = 0; i < d; ++i) b[i] = dc.partition(i).segment_of(shape.coordinate(v, i));
        std::size_t k = dc.block_index(b);
        std::size_t inner = 0;
        for (std::size_t s = 0; s < d; ++s) {
            std::size_t f = perms[k][s];
            inner = inner * sizes[k][f] + dc.partition(f).offset_in_segment(shape.coordinate(v, f));
        }
        positions[v] = offset[k] + inner;
    }
    return TotalOrder::from_positions(positions);
}

/// Sorts factors by block segment size ascending, ties by factor index.
inline Permutation standard_block_domination(std::span<const std::size_t> segment_sizes)
{
    std::vector<std::size_t> idx(segment_sizes.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return segment_sizes[a] < segment_sizes[b]; });
    return Permutation(std::move(idx));
}

inline Permutation standard_block_domination(const DominationCollection& dc, const BlockId& b)
{
    auto sizes = dc.segment_sizes(b);
    return standard_block_domination(sizes);
}

/// Collection over the given partitions with the standard block domination
/// order on every block.
inline DominationCollection standard_domination_collection(std::vector<Partition> partitions)
{
    DominationCollection bare(partitions);
    std::map<BlockId, Permutation> perms;
    for (std::size_t k = 0; k < bare.block_count(); ++k) {
        BlockId b = bare.block_at(k);
        perms.emplace(b, standard_block_domination(bare, b));
    }
    return DominationCollection(std::move(partitions), std::move(perms));
}

/// Collection using the lexicographic order on every block.
inline DominationCollection lexicographic_collection(std::vector<Partition> partitions)
{
    std::size_t d = partitions.size();
    return DominationCollection(std::move(partitions), {}, Permutation::identity(d));
}

/// Standard partitions of the factors, read from their optimal orders.
inline std::vector<Partition> standard_partitions(std::span<const Graph> factors, std::span<const TotalOrder> orders)
{
    std::vector<Partition> out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        out.push_back(standard_monotonic_partition(delta_of_order(factors[i], orders[i])));
    return out;
}

inline TotalOrder standard_block_lex_order(std::span<const Graph> factors, std::span<const TotalOrder> orders)
{
    return block_lex_order(standard_domination_collection(standard_partitions(factors, orders)));
}

/// Whether two domination permutations induce the same order on a block with
/// the given segment sizes (coordinates of size 1 do not matter).
inline bool same_block_order(const Permutation& a, const Permutation& b, std::span<const std::size_t> sizes)
{
    if (a.degree() != b.degree()) return false;
    auto strip = [&](const Permutation& p) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < p.degree(); ++k)
            if (sizes[p[k]] > 1) out.push_back(p[k]);
        return out;
    };
    return strip(a) == strip(b);
}

// ---------------------------------------------------------------------------
// Validation

struct CollectionValidation {
    Verdict verdict = Verdict::valid;
    std::vector<std::string> diagnostics;
    std::size_t sub_blocks_checked = 0;

    bool ok() const { return verdict == Verdict::valid; }
    // A definite failure outranks an undecided check.
    void fail(std::string m)
    {
        verdict = Verdict::invalid;
        diagnostics.push_back(std::move(m));
    }
    void unsure(std::string m)
    {
        if (verdict == Verdict::valid) verdict = Verdict::inconclusive;
        diagnostics.push_back(std::move(m));
    }
};

namespace detail {

inline std::string block_name(const BlockId& b)
{
    std::string s;
    for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k] + 1);
    return s;
}

inline std::string subset_name(std::span<const std::size_t> s)
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
    return out + "}";
}

// Exact profile of a block graph: a product of segment graphs with their
// inherited (identity) orders.
inline std::optional<Profile> block_profile(const Graph& h, const ProfileOptions& opt)
{
    if (auto p = small_profile(h, opt)) return p;
    if (h.size() > opt.compressed_cap) return std::nullopt;
    ProfileOptions co = opt;
    co.strategy = Strategy::compressed_only;
    co.witnesses = false;
    co.factor_orders.clear();
    for (std::size_t i = 0; i < h.dimension(); ++i) co.factor_orders.push_back(TotalOrder::identity(h.shape().dim(i)));
    try {
        Profile p = exact_profile(h, co);
        if (!p.complete) return std::nullopt;
        return p;
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
}

} // namespace detail

/// Checks that every block of every subproduct carries an optimal domination
/// order and that restrictions from different full blocks agree.
inline CollectionValidation validate_domination_collection(std::span<const Graph> factors,
                                                           const DominationCollection& dc,
                                                           const ProfileOptions& opt = {})
{
    CollectionValidation out;
    const std::size_t d = dc.dimension();
    if (factors.size() != d) throw ParameterError("one factor graph per partition is required");
    for (std::size_t i = 0; i < d; ++i)
        if (factors[i].size() != dc.partition(i).order().size())
            throw ParameterError("factor " + std::to_string(i + 1) + " does not match its partition");

    // Restriction agreement.
    for (std::size_t k = 0; k < dc.block_count(); ++k) {
        BlockId b = dc.block_at(k);
        Permutation pi = dc.perm(b);
        auto sizes = dc.segment_sizes(b);
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << d); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < d; ++i)
                if ((mask >> i) & 1u) s.push_back(i);
            BlockId sb;
            std::vector<std::size_t> ssizes;
            for (std::size_t i : s) {
                sb.push_back(b[i]);
                ssizes.push_back(sizes[i]);
            }
            Permutation canon = dc.perm(dc.canonical_extension(s, sb)).restrict_to(s);
            if (!same_block_order(pi.restrict_to(s), canon, ssizes))
                out.fail("block (" + detail::block_name(b) + ") restricted to " + detail::subset_name(s) +
                         " disagrees with the order of its sub-block");
        }
    }

    // Optimality of every sub-block domination order.
    std::vector<std::vector<Graph>> seg_graphs(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < dc.partition(i).segment_count(); ++j)
            seg_graphs[i].push_back(segment_graph(factors[i], dc.partition(i), j));
    for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < d; ++i)
            if ((mask >> i) & 1u) s.push_back(i);
        DominationCollection sub = mask + 1 == (std::size_t{1} << d) ? dc : dc.restrict_to(s);
        for (std::size_t k = 0; k < sub.block_count(); ++k) {
            BlockId sb = sub.block_at(k);
            std::vector<Graph> parts;
            std::vector<TotalOrder> ids;
            for (std::size_t t = 0; t < s.size(); ++t) {
                parts.push_back(seg_graphs[s[t]][sb[t]]);
                ids.push_back(TotalOrder::identity(parts.back().size()));
            }
            Graph h = parts.size() == 1 ? parts[0] : cartesian_product(parts);
            if (h.size() <= 1) {
                ++out.sub_blocks_checked;
                continue;
            }
            TotalOrder dom = parts.size() == 1 ? ids[0] : domination_order(h, ids, sub.perm(sb));
            auto prof = detail::block_profile(h, opt);
            if (!prof) {
                out.unsure("block (" + detail::block_name(sb) + ") of subproduct " + detail::subset_name(s) +
                           " is too large to verify");
                continue;
            }
            ++out.sub_blocks_checked;
            auto chk = verify_order_optimal(h, dom, *prof);
            if (!chk.optimal)
                out.fail("domination order on block (" + detail::block_name(sb) + ") of subproduct " +
                         detail::subset_name(s) + " is not optimal at m=" + std::to_string(*chk.first_failure));
        }
    }
    return out;
}

/// Domination collection whose middle factors (2..d-1) have regular
/// partitions and whose two corner blocks of the middle subproduct share a
/// domination order.
inline CollectionValidation validate_regular_domination_collection(std::span<const Graph> factors,
                                                                   const DominationCollection& dc,
                                                                   const ProfileOptions& opt = {})
{
    CollectionValidation out = validate_domination_collection(factors, dc, opt);
    const std::size_t d = dc.dimension();
    if (d < 3) return out;
    for (std::size_t i = 1; i + 1 < d; ++i) {
        auto reg = is_regular_partition(factors[i], dc.partition(i), opt);
        if (!reg)
            out.unsure("factor " + std::to_string(i + 1) + ": partition regularity could not be decided");
        else if (!*reg)
            out.fail("factor " + std::to_string(i + 1) + ": partition is not regular");
    }
    std::vector<std::size_t> middle;
    for (std::size_t i = 1; i + 1 < d; ++i) middle.push_back(i);
    DominationCollection sub = dc.restrict_to(middle);
    BlockId first(middle.size(), 0), last;
    for (std::size_t i : middle) last.push_back(dc.partition(i).segment_count() - 1);
    auto s1 = sub.segment_sizes(first), s2 = sub.segment_sizes(last);
    std::vector<std::size_t> both(s1.size());
    for (std::size_t k = 0; k < both.size(); ++k) both[k] = std::max(s1[k], s2[k]);
    if (!same_block_order(sub.perm(first), sub.perm(last), both))
        out.fail("corner blocks of the middle factors use different domination orders");
    return out;
}

/// block_lex_order for a collection that first passes validation; refuses
/// invalid collections and ones whose validity could not be decided.
inline TotalOrder checked_block_lex_order(std::span<const Graph> factors, const DominationCollection& dc,
                                          const ProfileOptions& opt = {})
{
    CollectionValidation v = validate_domination_collection(factors, dc, opt);
    if (!v.ok()) {
        std::string why = v.diagnostics.empty() ? std::string(to_string(v.verdict)) : v.diagnostics.front();
        throw PreconditionError("domination collection is not valid: " + why);
    }
    return block_lex_order(dc);
}

} // namespace edgeiso
