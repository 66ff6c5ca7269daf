#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"

namespace edgeiso {

// Down-sets of the box [0,n_1) x ... x [0,n_d), encoded as height functions:
// for every cell of the base box [0,n_1) x ... x [0,n_{d-1}) the number of
// members stacked along the last coordinate. Heights are non-increasing in
// every base coordinate.
class DownsetBox {
public:
    explicit DownsetBox(std::vector<std::size_t> dims) : dims_(std::move(dims))
    {
        if (dims_.empty()) throw ParameterError("down-set box needs at least one dimension");
        base_ = Shape(std::vector<std::size_t>(dims_.begin(), dims_.end() - 1));
        height_cap_ = dims_.back();
        slab_ = base_.dimension() == 0 ? 1 : base_.volume() / base_.dim(0);
    }

    const std::vector<std::size_t>& dims() const { return dims_; }
    const Shape& base() const { return base_; }
    std::size_t height_cap() const { return height_cap_; }

    std::size_t volume() const
    {
        std::size_t v = 1;
        for (std::size_t d : dims_) v *= d;
        return v;
    }

    /// Visits every down-set with exactly m members, each once. The visitor
    /// returns false to stop early. Returns false if stopped or out of budget.
    template <typename Visitor>
    bool for_each_of_size(std::size_t m, const Budget& budget, Visitor&& visit) const
    {
        if (m > volume()) return true;
        std::vector<std::size_t> h(base_.volume(), 0);
        std::size_t tick = 0;
        bool stopped = false;
        recurse(0, m, h, budget, tick, stopped, visit);
        return !stopped;
    }

    /// Visits every down-set, in no particular size order.
    template <typename Visitor>
    bool for_each(const Budget& budget, Visitor&& visit) const
    {
        for (std::size_t m = 0; m <= volume(); ++m)
            if (!for_each_of_size(m, budget, visit)) return false;
        return true;
    }

private:
    std::size_t cap_at(std::size_t c, const std::vector<std::size_t>& h) const
    {
        std::size_t cap = height_cap_;
        for (std::size_t j = 0; j < base_.dimension(); ++j)
            if (base_.coordinate(c, j) > 0) cap = std::min(cap, h[c - base_.stride(j)]);
        return cap;
    }

    // Upper bound on the total height of cells c.. given the assigned prefix.
    std::size_t remaining_capacity(std::size_t c, const std::vector<std::size_t>& h) const
    {
        const std::size_t cells = base_.volume();
        if (c >= cells) return 0;
        if (base_.dimension() == 0) return height_cap_;
        const std::size_t n0 = base_.dim(0);
        const std::size_t a = c / slab_;
        const std::size_t r = c % slab_;
        std::size_t total = 0;
        for (std::size_t rr = 0; rr < slab_; ++rr) {
            if (rr < r)
                total += (n0 - 1 - a) * h[a * slab_ + rr];
            else
                total += (n0 - a) * (a > 0 ? h[(a - 1) * slab_ + rr] : height_cap_);
        }
        return total;
    }

    template <typename Visitor>
    void recurse(std::size_t c, std::size_t remaining, std::vector<std::size_t>& h, const Budget& budget,
                 std::size_t& tick, bool& stopped, Visitor& visit) const
    {
        if (stopped) return;
        if (budget.expired_every(tick)) {
            stopped = true;
            return;
        }
        const std::size_t cells = base_.volume();
        if (remaining == 0) {
            for (std::size_t k = c; k < cells; ++k) h[k] = 0;
            if (!visit(std::span<const std::size_t>(h))) stopped = true;
            return;
        }
        if (c == cells) return;
        if (remaining_capacity(c, h) < remaining) return;
        std::size_t cap = std::min(cap_at(c, h), remaining);
        for (std::size_t v = cap + 1; v-- > 0;) {
            h[c] = v;
            recurse(c + 1, remaining - v, h, budget, tick, stopped, visit);
            if (stopped) return;
        }
        h[c] = 0;
    }

    std::vector<std::size_t> dims_;
    Shape base_;
    std::size_t height_cap_ = 0;
    std::size_t slab_ = 1;
};

/// Number of down-sets in the box when a closed form is known (d <= 3),
/// as a floating estimate that may exceed integer range.
inline std::optional<long double> downset_count_estimate(std::span<const std::size_t> dims)
{
    if (dims.size() == 1) return static_cast<long double>(dims[0] + 1);
    if (dims.size() == 2) {
        long double c = 1;
        std::size_t a = dims[0], b = dims[1];
        for (std::size_t k = 1; k <= a; ++k) c = c * static_cast<long double>(b + k) / static_cast<long double>(k);
        return c;
    }
    if (dims.size() == 3) {
        // MacMahon's box formula for plane partitions.
        long double c = 1;
        for (std::size_t i = 1; i <= dims[0]; ++i)
            for (std::size_t j = 1; j <= dims[1]; ++j)
                for (std::size_t k = 1; k <= dims[2]; ++k)
                    c *= static_cast<long double>(i + j + k - 1) / static_cast<long double>(i + j + k - 2);
        return std::round(c);
    }
    return std::nullopt;
}

struct MaxWeightResult {
    std::vector<long long> best; // best[m] = max weight of a down-set of size m, -1 if none
    bool complete = true;
};

/// Maximum of sum_{x in A} sum_i weights[i][x_i] over down-sets A of each
/// size 0..m_max. Layers along the last coordinate are nested down-sets of
/// the remaining box; the transition takes a maximum over all supersets of
/// the current layer, propagated along single-cell covers.
inline MaxWeightResult max_weight_downsets(std::span<const std::size_t> dims,
                                           const std::vector<std::vector<long long>>& weights, std::size_t m_max,
                                           const Budget& budget = {})
{
    const std::size_t d = dims.size();
    if (weights.size() != d) throw ParameterError("one weight table per coordinate is required");
    for (std::size_t i = 0; i < d; ++i)
        if (weights[i].size() != dims[i]) throw ParameterError("weight table size mismatch");
    std::size_t volume = 1;
    for (std::size_t x : dims) volume *= x;
    m_max = std::min(m_max, volume);

    MaxWeightResult out;
    out.best.assign(m_max + 1, -1);
    if (d == 1) {
        long long acc = 0;
        out.best[0] = 0;
        for (std::size_t m = 1; m <= m_max; ++m) out.best[m] = acc += weights[0][m - 1];
        return out;
    }

    // All down-sets of the layer box dims[0..d-2], with size, weight and covers.
    std::vector<std::size_t> layer_dims(dims.begin(), dims.end() - 1);
    DownsetBox layer_box(layer_dims);
    const Shape& hbase = layer_box.base();
    const std::size_t hcap = layer_box.height_cap();

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint8_t>& v) const
        {
            std::size_t h = 1469598103934665603ull;
            for (auto x : v) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };
    if (hcap > 255) throw CapExceeded("layer heights above 255 are not supported");
    std::vector<std::vector<std::uint8_t>> layers;
    std::unordered_map<std::vector<std::uint8_t>, std::size_t, VecHash> index;
    std::vector<std::size_t> lsize;
    std::vector<long long> lweight;
    bool enumerated = layer_box.for_each(budget, [&](std::span<const std::size_t> h) {
        std::vector<std::uint8_t> key(h.begin(), h.end());
        std::size_t sz = 0;
        long long w = 0;
        for (std::size_t c = 0; c < h.size(); ++c) {
            long long cell_w = 0;
            for (std::size_t j = 0; j < hbase.dimension(); ++j) cell_w += weights[j][hbase.coordinate(c, j)];
            for (std::size_t k = 0; k < h[c]; ++k) w += cell_w + weights[d - 2][k];
            sz += h[c];
        }
        index.emplace(key, layers.size());
        layers.push_back(std::move(key));
        lsize.push_back(sz);
        lweight.push_back(w);
        return true;
    });
    if (!enumerated) {
        out.complete = false;
        return out;
    }
    const std::size_t L = layers.size();
    std::vector<std::vector<std::size_t>> covers(L);
    for (std::size_t li = 0; li < L; ++li) {
        std::vector<std::uint8_t> h = layers[li];
        for (std::size_t c = 0; c < h.size(); ++c) {
            if (h[c] >= hcap) continue;
            bool ok = true;
            for (std::size_t j = 0; j < hbase.dimension() && ok; ++j)
                if (hbase.coordinate(c, j) > 0 && h[c - hbase.stride(j)] < h[c] + 1) ok = false;
            if (!ok) continue;
            ++h[c];
            covers[li].push_back(index.at(h));
            --h[c];
        }
    }
    std::vector<std::size_t> by_size_desc(L);
    std::iota(by_size_desc.begin(), by_size_desc.end(), std::size_t{0});
    std::stable_sort(by_size_desc.begin(), by_size_desc.end(),
                     [&](std::size_t a, std::size_t b) { return lsize[a] > lsize[b]; });

    const std::size_t W = m_max + 1;
    std::vector<std::int32_t> cur(L * W, -1), nxt(L * W, -1);
    const std::size_t top = dims[d - 1];
    for (std::size_t li = 0; li < L; ++li)
        if (lsize[li] <= m_max)
            cur[li * W + lsize[li]] =
                static_cast<std::int32_t>(lweight[li] + static_cast<long long>(lsize[li]) * weights[d - 1][0]);
    std::size_t tick = 0;
    for (std::size_t k = 1; k < top; ++k) {
        // cur becomes the superset maximum.
        for (std::size_t li : by_size_desc) {
            std::int32_t* row = &cur[li * W];
            for (std::size_t cv : covers[li]) {
                const std::int32_t* other = &cur[cv * W];
                for (std::size_t s = 0; s < W; ++s) row[s] = std::max(row[s], other[s]);
            }
            if (budget.expired_every(tick)) {
                out.complete = false;
                return out;
            }
        }
        std::fill(nxt.begin(), nxt.end(), -1);
        for (std::size_t li = 0; li < L; ++li) {
            const std::size_t sz = lsize[li];
            if (sz > m_max) continue;
            const long long add = lweight[li] + static_cast<long long>(sz) * weights[d - 1][k];
            const std::int32_t* src = &cur[li * W];
            std::int32_t* dst = &nxt[li * W];
            for (std::size_t s = sz; s < W; ++s)
                if (src[s - sz] >= 0) dst[s] = static_cast<std::int32_t>(src[s - sz] + add);
        }
        std::swap(cur, nxt);
    }
    for (std::size_t li = 0; li < L; ++li)
        for (std::size_t s = 0; s < W; ++s) out.best[s] = std::max<long long>(out.best[s], cur[li * W + s]);
    return out;
}

} // namespace edgeiso
