#pragma once

#include <span>
#include <vector>

#include "edgeiso/downsets.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/vertex_set.hpp"

namespace edgeiso {

// Translates rank-space objects (tuples of factor positions) back to product
// vertices through the factor orders.
class RankSpace {
public:
    RankSpace(Shape shape, std::vector<TotalOrder> factor_orders)
        : shape_(std::move(shape)), orders_(std::move(factor_orders))
    {
        detail::check_factor_orders(shape_, orders_);
    }

    const Shape& shape() const { return shape_; }
    const std::vector<TotalOrder>& factor_orders() const { return orders_; }

    Vertex vertex(std::span<const std::size_t> positions) const
    {
        std::size_t id = 0;
        for (std::size_t i = 0; i < shape_.dimension(); ++i) id += orders_[i].at(positions[i]) * shape_.stride(i);
        return id;
    }

    std::vector<std::size_t> positions(Vertex v) const
    {
        std::vector<std::size_t> p(shape_.dimension());
        for (std::size_t i = 0; i < shape_.dimension(); ++i) p[i] = orders_[i].position(shape_.coordinate(v, i));
        return p;
    }

    /// Members of the down-set described by heights over the base box (all
    /// coordinates but the last).
    VertexSet from_heights(const DownsetBox& box, std::span<const std::size_t> heights) const
    {
        VertexSet s(shape_.volume());
        const Shape& base = box.base();
        const std::size_t d = shape_.dimension();
        std::vector<std::size_t> pos(d);
        for (std::size_t c = 0; c < heights.size(); ++c) {
            for (std::size_t j = 0; j + 1 < d; ++j) pos[j] = base.coordinate(c, j);
            for (std::size_t k = 0; k < heights[c]; ++k) {
                pos[d - 1] = k;
                s.insert(vertex(pos));
            }
        }
        return s;
    }

    DownsetBox box() const { return DownsetBox(shape_.dims()); }

private:
    Shape shape_;
    std::vector<TotalOrder> orders_;
};

} // namespace edgeiso
