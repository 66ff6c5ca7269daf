#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "edgeiso/error.hpp"

namespace edgeiso {

using Vertex = std::size_t;

// Dense membership set over 0..n-1, stored as 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
    {
        for (Vertex v : members) insert(v);
    }

    static VertexSet from_ids(std::size_t universe, std::span<const Vertex> ids)
    {
        VertexSet s(universe);
        for (Vertex v : ids) s.insert(v);
        return s;
    }

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (Vertex v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

    void insert(Vertex v)
    {
        if (v >= universe_) throw ParameterError("vertex id out of range");
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (!(w & bit)) {
            w |= bit;
            ++size_;
        }
    }

    void erase(Vertex v)
    {
        if (v >= universe_) throw ParameterError("vertex id out of range");
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (w & bit) {
            w &= ~bit;
            --size_;
        }
    }

    // Ascending member ids.
    std::vector<Vertex> ids() const
    {
        std::vector<Vertex> out;
        out.reserve(size_);
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<Vertex>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    VertexSet complement() const
    {
        VertexSet c(universe_);
        for (std::size_t wi = 0; wi < words_.size(); ++wi) c.words_[wi] = ~words_[wi];
        c.trim();
        return c;
    }

    bool is_subset_of(const VertexSet& other) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi] & ~other.words_[wi]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) words_[wi] |= o.words_[wi];
        recount();
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) words_[wi] &= ~o.words_[wi];
        recount();
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) words_[wi] &= o.words_[wi];
        recount();
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    std::size_t intersection_size(const VertexSet& o) const
    {
        std::size_t c = 0;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) c += std::popcount(words_[wi] & o.words_[wi]);
        return c;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b)
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::size_t hash() const
    {
        std::size_t h = universe_ * 0x9E3779B97F4A7C15ull;
        for (std::uint64_t w : words_) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
        return h;
    }

private:
    void recount()
    {
        size_ = 0;
        for (std::uint64_t w : words_) size_ += std::popcount(w);
    }

    void trim()
    {
        if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
        recount();
    }

    std::size_t universe_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace edgeiso
