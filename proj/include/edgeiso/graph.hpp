#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeiso/error.hpp"
#include "edgeiso/vertex_set.hpp"

namespace edgeiso {

using Edge = std::pair<Vertex, Vertex>;

// Mixed-radix coordinates for product vertex ids. Factor 0 is the most
// significant digit, so identity factor orders make lexicographic rank equal
// to numeric id order.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)), strides_(dims_.size(), 1)
    {
        for (std::size_t d : dims_)
            if (d == 0) throw ParameterError("factor size must be positive");
        for (std::size_t i = dims_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * dims_[i];
        volume_ = dims_.empty() ? 1 : strides_[0] * dims_[0];
    }

    std::size_t dimension() const { return dims_.size(); }
    std::size_t volume() const { return volume_; }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    std::size_t stride(std::size_t i) const { return strides_[i]; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    std::size_t coordinate(std::size_t id, std::size_t i) const { return (id / strides_[i]) % dims_[i]; }

    std::vector<std::size_t> decode(std::size_t id) const
    {
        std::vector<std::size_t> c(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) c[i] = coordinate(id, i);
        return c;
    }

    std::size_t encode(std::span<const std::size_t> coords) const
    {
        std::size_t id = 0;
        for (std::size_t i = 0; i < dims_.size(); ++i) id += coords[i] * strides_[i];
        return id;
    }

    friend bool operator==(const Shape& a, const Shape& b) { return a.dims_ == b.dims_; }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t volume_ = 1;
};

// Immutable simple undirected graph, optionally tagged as a Cartesian
// product of factors of the recorded sizes.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::size_t> factor_shape = {})
    {
        Graph g;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw ParameterError("edge endpoint out of range");
            if (u == v) throw ParameterError("loops are not allowed");
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw ParameterError("parallel edges are not allowed");
            g.edges_ += nb.size();
        }
        g.edges_ /= 2;
        if (!factor_shape.empty()) {
            Shape s(std::move(factor_shape));
            if (s.volume() != n) throw ParameterError("factor shape does not multiply to the vertex count");
            g.shape_ = std::move(s);
        }
        return g;
    }

    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    bool adjacent(Vertex u, Vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edges_);
        for (Vertex u = 0; u < size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Common degree if the graph is regular.
    std::optional<std::size_t> regular_degree() const
    {
        if (adj_.empty()) return 0;
        std::size_t d = adj_[0].size();
        for (const auto& nb : adj_)
            if (nb.size() != d) return std::nullopt;
        return d;
    }

    std::size_t max_degree() const
    {
        std::size_t d = 0;
        for (const auto& nb : adj_) d = std::max(d, nb.size());
        return d;
    }

    bool is_product() const { return shape_.has_value(); }
    std::size_t dimension() const { return shape_ ? shape_->dimension() : 1; }

    // Factor sizes; a plain graph is treated as a one-factor product.
    Shape shape() const { return shape_ ? *shape_ : Shape({size()}); }
    std::vector<std::size_t> factor_shape() const { return shape_ ? shape_->dims() : std::vector<std::size_t>{}; }

    // Factor i recovered from the axis line through vertex 0; every parallel
    // line carries the same edges in a Cartesian product.
    Graph factor(std::size_t i) const
    {
        Shape s = shape();
        if (i >= s.dimension()) throw ParameterError("factor index out of range");
        std::vector<Edge> es;
        for (std::size_t a = 0; a < s.dim(i); ++a) {
            Vertex u = a * s.stride(i);
            for (Vertex w : adj_[u]) {
                if (w % s.stride(i) != 0 || w / s.stride(i) >= s.dim(i)) continue;
                std::size_t b = w / s.stride(i);
                if (a < b) es.emplace_back(a, b);
            }
        }
        return from_edges(s.dim(i), es);
    }

    std::vector<Graph> factors() const
    {
        std::vector<Graph> out;
        for (std::size_t i = 0; i < dimension(); ++i) out.push_back(factor(i));
        return out;
    }

    // Induced subgraph on the listed vertices; new id k is members[k].
    Graph induced(std::span<const Vertex> members) const
    {
        std::vector<std::size_t> index(size(), size());
        for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = k;
        std::vector<Edge> es;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (Vertex w : adj_[members[k]])
                if (index[w] < size() && k < index[w]) es.emplace_back(k, index[w]);
        return from_edges(members.size(), es);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_ && a.shape_ == b.shape_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edges_ = 0;
    std::optional<Shape> shape_;
};

/// |I_G(A,B)|: edges with one endpoint in A and the other in B. Edges inside
/// A ∩ B are counted once.
inline std::size_t induced_edges(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    std::size_t twice_inner = 0;
    std::size_t cross = 0;
    a.for_each([&](Vertex u) {
        bool u_in_b = b.contains(u);
        for (Vertex v : g.neighbors(u)) {
            if (!b.contains(v)) continue;
            if (u_in_b && a.contains(v))
                ++twice_inner;
            else
                ++cross;
        }
    });
    return cross + twice_inner / 2;
}

inline std::size_t induced_edges(const Graph& g, const VertexSet& a)
{
    std::size_t twice = 0;
    a.for_each([&](Vertex u) {
        for (Vertex v : g.neighbors(u)) twice += a.contains(v);
    });
    return twice / 2;
}

/// |Θ(A)|: edges leaving A.
inline std::size_t boundary_edges(const Graph& g, const VertexSet& a)
{
    std::size_t out = 0;
    a.for_each([&](Vertex u) {
        for (Vertex v : g.neighbors(u)) out += !a.contains(v);
    });
    return out;
}

// Number of neighbours of v inside a.
inline std::size_t edges_into(const Graph& g, Vertex v, const VertexSet& a)
{
    std::size_t c = 0;
    for (Vertex w : g.neighbors(v)) c += a.contains(w);
    return c;
}

// ---------------------------------------------------------------------------
// Named constructors

inline Graph make_clique(std::size_t n)
{
    if (n < 1) throw ParameterError("clique needs n >= 1");
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph make_path(std::size_t n)
{
    if (n < 1) throw ParameterError("path needs n >= 1");
    std::vector<Edge> es;
    for (Vertex u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return Graph::from_edges(n, es);
}

inline Graph make_cycle(std::size_t n)
{
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
    return Graph::from_edges(n, es);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph make_petersen()
{
    std::vector<Edge> es;
    for (Vertex i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, es);
}

inline Graph make_complete_bipartite(std::size_t a, std::size_t b)
{
    if (a < 1 || b < 1) throw ParameterError("complete bipartite graph needs both sides >= 1");
    std::vector<Edge> es;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph::from_edges(a + b, es);
}

inline Graph disjoint_union(std::span<const Graph> gs)
{
    if (gs.empty()) throw ParameterError("union of no graphs");
    std::vector<Edge> es;
    std::size_t offset = 0;
    for (const Graph& g : gs) {
        for (auto [u, v] : g.edges()) es.emplace_back(u + offset, v + offset);
        offset += g.size();
    }
    return Graph::from_edges(offset, es);
}

// K_{2p} with k edge-disjoint perfect matchings removed, taken from the
// round-robin 1-factorisation.
inline Graph make_clique_minus_matchings(std::size_t p, std::size_t k)
{
    const std::size_t n = 2 * p;
    if (p < 1 || k >= n) throw ParameterError("need p >= 1 and fewer than 2p matchings");
    std::vector<std::vector<bool>> removed(n, std::vector<bool>(n, false));
    const std::size_t m = n - 1;
    for (std::size_t r = 0; r < k; ++r) {
        auto cut = [&](std::size_t u, std::size_t v) { removed[u][v] = removed[v][u] = true; };
        cut(r, m);
        for (std::size_t j = 1; j < p; ++j) cut((r + j) % m, (r + m - j) % m);
    }
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!removed[u][v]) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

// ---------------------------------------------------------------------------
// Products

/// Cartesian product; nested products are flattened so the recorded shape is
/// the list of atomic factor sizes.
inline Graph cartesian_product(std::span<const Graph> gs)
{
    if (gs.empty()) throw ParameterError("product of no graphs");
    std::vector<Graph> atoms;
    for (const Graph& g : gs) {
        if (g.is_product())
            for (std::size_t i = 0; i < g.dimension(); ++i) atoms.push_back(g.factor(i));
        else
            atoms.push_back(g);
    }
    std::vector<std::size_t> dims;
    for (const Graph& g : atoms) dims.push_back(g.size());
    Shape s(dims);
    std::vector<Edge> es;
    for (std::size_t id = 0; id < s.volume(); ++id) {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            std::size_t c = s.coordinate(id, i);
            for (Vertex w : atoms[i].neighbors(c))
                if (c < w) es.emplace_back(id, id + (w - c) * s.stride(i));
        }
    }
    return Graph::from_edges(s.volume(), es, dims);
}

inline Graph cartesian_power(const Graph& g, std::size_t d)
{
    if (d < 1) throw ParameterError("power must be >= 1");
    std::vector<Graph> gs(d, g);
    return cartesian_product(gs);
}

inline void check_index_set(std::span<const std::size_t> s, std::size_t d)
{
    if (s.empty()) throw ParameterError("index set must be nonempty");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] >= d) throw ParameterError("factor index out of range");
        if (k > 0 && s[k] <= s[k - 1]) throw ParameterError("index set must be strictly ascending");
    }
}

/// Product of the selected factors (0-based, ascending).
inline Graph subproduct(const Graph& g, std::span<const std::size_t> s)
{
    check_index_set(s, g.dimension());
    std::vector<Graph> fs;
    for (std::size_t i : s) fs.push_back(g.factor(i));
    if (!g.is_product() && fs.size() == 1) return fs[0];
    return cartesian_product(fs);
}

inline bool is_permutation_of(std::span<const std::size_t> pi, std::size_t d)
{
    if (pi.size() != d) return false;
    std::vector<bool> seen(d, false);
    for (std::size_t x : pi) {
        if (x >= d || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

struct PermutedProduct {
    Graph graph;
    std::vector<Vertex> relabel; // relabel[v] = psi(v)
};

/// G_{π(1)} □ … □ G_{π(d)} with ψ(v_1..v_d) = (v_{π(1)}..v_{π(d)}); pi is 0-based.
inline PermutedProduct permute_factors(const Graph& g, std::span<const std::size_t> pi)
{
    const std::size_t d = g.dimension();
    if (!is_permutation_of(pi, d)) throw ParameterError("not a permutation of the factor indices");
    std::vector<Graph> fs;
    for (std::size_t i : pi) fs.push_back(g.factor(i));
    PermutedProduct out;
    out.graph = d == 1 && !g.is_product() ? fs[0] : cartesian_product(fs);
    Shape src = g.shape();
    Shape dst = out.graph.shape();
    out.relabel.resize(g.size());
    std::vector<std::size_t> c(d);
    for (Vertex v = 0; v < g.size(); ++v) {
        for (std::size_t k = 0; k < d; ++k) c[k] = src.coordinate(v, pi[k]);
        out.relabel[v] = dst.encode(c);
    }
    return out;
}

} // namespace edgeiso
