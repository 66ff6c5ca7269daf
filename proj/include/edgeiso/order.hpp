#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/vertex_set.hpp"

namespace edgeiso {

// Total order on a vertex set, materialised in both directions. Positions are
// 0-based internally; rank() reports the 1-based rank used in reports and
// JSON.
class TotalOrder {
public:
    TotalOrder() = default;

    static TotalOrder identity(std::size_t n)
    {
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), Vertex{0});
        return from_sequence(seq);
    }

    /// seq[k] is the vertex at position k.
    static TotalOrder from_sequence(std::span<const Vertex> seq)
    {
        TotalOrder o;
        o.at_.assign(seq.begin(), seq.end());
        o.pos_.assign(seq.size(), seq.size());
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (seq[k] >= seq.size() || o.pos_[seq[k]] != seq.size())
                throw ParameterError("order sequence is not a permutation of the vertices");
            o.pos_[seq[k]] = k;
        }
        return o;
    }

    /// positions[v] is the 0-based position of v.
    static TotalOrder from_positions(std::span<const std::size_t> positions)
    {
        std::vector<Vertex> seq(positions.size(), positions.size());
        for (Vertex v = 0; v < positions.size(); ++v) {
            if (positions[v] >= positions.size() || seq[positions[v]] != positions.size())
                throw ParameterError("positions are not a bijection");
            seq[positions[v]] = v;
        }
        return from_sequence(seq);
    }

    /// 1-based ranks, as in the order JSON format.
    static TotalOrder from_ranks(std::span<const std::size_t> ranks)
    {
        std::vector<std::size_t> positions(ranks.size());
        for (std::size_t v = 0; v < ranks.size(); ++v) {
            if (ranks[v] == 0) throw ParameterError("ranks are 1-based");
            positions[v] = ranks[v] - 1;
        }
        return from_positions(positions);
    }

    std::size_t size() const { return at_.size(); }
    std::size_t position(Vertex v) const { return pos_[v]; }
    std::size_t rank(Vertex v) const { return pos_[v] + 1; }
    Vertex at(std::size_t position) const { return at_[position]; }
    std::span<const Vertex> sequence() const { return at_; }
    std::span<const std::size_t> positions() const { return pos_; }

    bool less(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }

    std::vector<std::size_t> ranks() const
    {
        std::vector<std::size_t> r(pos_.size());
        for (std::size_t v = 0; v < r.size(); ++v) r[v] = pos_[v] + 1;
        return r;
    }

    friend bool operator==(const TotalOrder& a, const TotalOrder& b) { return a.at_ == b.at_; }

private:
    std::vector<Vertex> at_;
    std::vector<std::size_t> pos_;
};

// Permutation of factor indices, 0-based: image(k) is the factor compared at
// significance level k.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images))
    {
        if (!is_permutation_of(images_, images_.size())) throw ParameterError("not a permutation");
    }

    static Permutation identity(std::size_t d)
    {
        std::vector<std::size_t> v(d);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return Permutation(std::move(v));
    }

    std::size_t degree() const { return images_.size(); }
    std::size_t operator[](std::size_t k) const { return images_[k]; }
    const std::vector<std::size_t>& images() const { return images_; }

    // Relative order of the selected factors (ascending index set), as a
    // permutation of 0..|s|-1.
    Permutation restrict_to(std::span<const std::size_t> s) const
    {
        std::vector<std::size_t> out;
        for (std::size_t f : images_) {
            auto it = std::find(s.begin(), s.end(), f);
            if (it != s.end()) out.push_back(static_cast<std::size_t>(it - s.begin()));
        }
        if (out.size() != s.size()) throw ParameterError("restriction index set out of range");
        return Permutation(std::move(out));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

/// Initial segment of size k: the first k vertices of o.
inline VertexSet initial_segment(const TotalOrder& o, std::size_t k)
{
    if (k > o.size()) throw ParameterError("initial segment larger than the vertex set");
    VertexSet s(o.size());
    for (std::size_t p = 0; p < k; ++p) s.insert(o.at(p));
    return s;
}

/// Vertices with 1-based ranks a..b inclusive.
inline VertexSet segment(const TotalOrder& o, std::size_t a, std::size_t b)
{
    if (a < 1 || b > o.size() || a > b + 1) throw ParameterError("segment bounds out of range");
    VertexSet s(o.size());
    for (std::size_t r = a; r <= b; ++r) s.insert(o.at(r - 1));
    return s;
}

inline TotalOrder reverse_order(const TotalOrder& o)
{
    std::vector<Vertex> seq(o.sequence().rbegin(), o.sequence().rend());
    return TotalOrder::from_sequence(seq);
}

/// Order of the subgraph induced by `members` (listed by new id), inherited
/// from o.
inline TotalOrder restrict_order(const TotalOrder& o, std::span<const Vertex> members)
{
    std::vector<std::size_t> idx(members.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return o.less(members[a], members[b]); });
    return TotalOrder::from_sequence(idx);
}

namespace detail {
inline void check_factor_orders(const Shape& s, std::span<const TotalOrder> factor_orders)
{
    if (factor_orders.size() != s.dimension()) throw ParameterError("one order per factor is required");
    for (std::size_t i = 0; i < s.dimension(); ++i)
        if (factor_orders[i].size() != s.dim(i)) throw ParameterError("factor order size mismatch");
}
} // namespace detail

/// Domination order: tuples of factor positions compared lexicographically
/// after permuting coordinates by pi.
inline TotalOrder domination_order(const Shape& s, std::span<const TotalOrder> factor_orders, const Permutation& pi)
{
    detail::check_factor_orders(s, factor_orders);
    if (pi.degree() != s.dimension()) throw ParameterError("permutation degree does not match the product dimension");
    std::vector<std::size_t> positions(s.volume());
    for (std::size_t v = 0; v < s.volume(); ++v) {
        std::size_t p = 0;
        for (std::size_t k = 0; k < s.dimension(); ++k) {
            std::size_t f = pi[k];
            p = p * s.dim(f) + factor_orders[f].position(s.coordinate(v, f));
        }
        positions[v] = p;
    }
    return TotalOrder::from_positions(positions);
}

inline TotalOrder domination_order(const Graph& g, std::span<const TotalOrder> factor_orders, const Permutation& pi)
{
    return domination_order(g.shape(), factor_orders, pi);
}

inline TotalOrder lex_order(const Shape& s, std::span<const TotalOrder> factor_orders)
{
    return domination_order(s, factor_orders, Permutation::identity(s.dimension()));
}

inline TotalOrder lex_order(const Graph& g, std::span<const TotalOrder> factor_orders)
{
    return lex_order(g.shape(), factor_orders);
}

/// Projection of product vertex v onto the subproduct on s.
inline std::size_t project(const Shape& full, const Shape& sub, std::span<const std::size_t> s, Vertex v)
{
    std::size_t id = 0;
    for (std::size_t k = 0; k < s.size(); ++k) id += full.coordinate(v, s[k]) * sub.stride(k);
    return id;
}

inline Shape sub_shape(const Shape& full, std::span<const std::size_t> s)
{
    std::vector<std::size_t> dims;
    for (std::size_t i : s) dims.push_back(full.dim(i));
    return Shape(std::move(dims));
}

// Complement of an ascending index set within 0..d-1.
inline std::vector<std::size_t> complement_indices(std::span<const std::size_t> s, std::size_t d)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
    return out;
}

// Calls f(cut_members) for every cut G_S(x); members are listed in the order
// of the subproduct ids they project to.
template <typename F>
void for_each_cut(const Shape& full, std::span<const std::size_t> s, F&& f)
{
    Shape sub = sub_shape(full, s);
    std::vector<std::size_t> rest = complement_indices(s, full.dimension());
    Shape rest_shape = sub_shape(full, rest);
    std::vector<std::size_t> coords(full.dimension());
    std::vector<Vertex> members(sub.volume());
    for (std::size_t x = 0; x < rest_shape.volume(); ++x) {
        std::size_t base = 0;
        for (std::size_t k = 0; k < rest.size(); ++k) base += rest_shape.coordinate(x, k) * full.stride(rest[k]);
        for (std::size_t y = 0; y < sub.volume(); ++y) {
            std::size_t id = base;
            for (std::size_t k = 0; k < s.size(); ++k) id += sub.coordinate(y, k) * full.stride(s[k]);
            members[y] = id;
        }
        f(std::span<const Vertex>(members));
    }
}

/// Whether o_big (on the full product) is consistent with o_small (on the
/// subproduct on s): within every cut the two orders agree.
inline bool is_consistent(const Shape& full, const TotalOrder& o_big, const TotalOrder& o_small,
                          std::span<const std::size_t> s)
{
    check_index_set(s, full.dimension());
    if (o_big.size() != full.volume()) throw ParameterError("order does not match the product");
    Shape sub = sub_shape(full, s);
    if (o_small.size() != sub.volume()) throw ParameterError("order does not match the subproduct");
    bool ok = true;
    for_each_cut(full, s, [&](std::span<const Vertex> members) {
        if (!ok) return;
        // members[y] projects to subproduct id y
        std::vector<std::size_t> ys(members.size());
        std::iota(ys.begin(), ys.end(), std::size_t{0});
        std::sort(ys.begin(), ys.end(), [&](std::size_t a, std::size_t b) { return o_big.less(members[a], members[b]); });
        for (std::size_t k = 1; k < ys.size(); ++k)
            if (!o_small.less(ys[k - 1], ys[k])) {
                ok = false;
                return;
            }
    });
    return ok;
}

} // namespace edgeiso
