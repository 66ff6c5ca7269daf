#pragma once

#include <openssl/evp.h>

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "edgeiso/blockgeom.hpp"
#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/partition.hpp"
#include "edgeiso/solver.hpp"
#include "json.hpp"

// JSON and CSV forms of the library's values. Ranks, segment and factor
// indices are 1-based on the wire; vertex ids stay 0-based.
namespace edgeiso {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

/// Lowercase hex SHA-256 of the bytes of `text`.
inline std::string sha256_hex(const std::string& text)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[md[k] >> 4];
        out += hex[md[k] & 15];
    }
    return out;
}

/// Digest of the canonical (sorted-key, compact) serialization.
inline std::string digest(const Json& j) { return sha256_hex(j.dump()); }

namespace detail {
template <typename T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

inline std::vector<std::size_t> to_one_based(const std::vector<std::size_t>& v)
{
    std::vector<std::size_t> out(v);
    for (auto& x : out) ++x;
    return out;
}

inline std::vector<std::size_t> from_one_based(const std::vector<std::size_t>& v, const char* what)
{
    std::vector<std::size_t> out(v);
    for (auto& x : out) {
        if (x == 0) throw ParseError(std::string(what) + " values are 1-based");
        --x;
    }
    return out;
}

inline Json parse_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
}
} // namespace detail

// Graph ----------------------------------------------------------------------

inline Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    Json j{{"n", g.size()}, {"edges", edges}};
    if (g.is_product()) j["factors"] = g.factor_shape();
    return j;
}

inline Graph graph_from_json(const Json& j)
{
    auto n = detail::field<std::size_t>(j, "n");
    auto raw = detail::field<std::vector<std::vector<std::size_t>>>(j, "edges");
    std::vector<Edge> edges;
    for (const auto& e : raw) {
        if (e.size() != 2) throw ParseError("edges are pairs");
        edges.emplace_back(e[0], e[1]);
    }
    std::vector<std::size_t> factors;
    if (j.contains("factors")) factors = detail::field<std::vector<std::size_t>>(j, "factors");
    try {
        return Graph::from_edges(n, edges, factors);
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

// Orders ---------------------------------------------------------------------

inline Json to_json(const TotalOrder& o) { return Json{{"ranks", o.ranks()}}; }

inline TotalOrder order_from_json(const Json& j)
{
    auto ranks = detail::field<std::vector<std::size_t>>(j, "ranks");
    try {
        return TotalOrder::from_ranks(ranks);
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

inline Json to_json(const Permutation& p) { return detail::to_one_based(p.images()); }

inline Permutation permutation_from_json(const Json& j)
{
    try {
        return Permutation(detail::from_one_based(j.get<std::vector<std::size_t>>(), "permutation"));
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
}

// Partitions -----------------------------------------------------------------

inline Json to_json(const Partition& p)
{
    return Json{{"order", p.order().ranks()}, {"boundaries", p.boundaries()}, {"kind", to_string(p.kind())}};
}

inline Partition partition_from_json(const Json& j)
{
    auto ranks = detail::field<std::vector<std::size_t>>(j, "order");
    auto ends = detail::field<std::vector<std::size_t>>(j, "boundaries");
    PartitionKind kind = PartitionKind::custom;
    if (j.contains("kind")) {
        auto k = detail::field<std::string>(j, "kind");
        if (k == "standard_monotonic") kind = PartitionKind::standard_monotonic;
        else if (k == "atomic") kind = PartitionKind::atomic;
        else if (k != "custom") throw ParseError("unknown partition kind '" + k + "'");
    }
    try {
        return Partition::from_boundaries(TotalOrder::from_ranks(ranks), ends, kind);
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

// Domination collections -----------------------------------------------------

inline std::string block_key(const BlockId& b)
{
    std::string s;
    for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k] + 1);
    return s;
}

inline BlockId parse_block_key(const std::string& key)
{
    BlockId b;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t v = 0;
        try {
            std::size_t used = 0;
            v = std::stoul(part, &used);
            if (used != part.size()) throw ParseError("");
        } catch (...) {
            throw ParseError("bad block key '" + key + "'");
        }
        if (v == 0) throw ParseError("block keys are 1-based");
        b.push_back(v - 1);
    }
    return b;
}

inline Json to_json(const DominationCollection& dc)
{
    Json parts = Json::array();
    for (const Partition& p : dc.partitions()) parts.push_back(to_json(p));
    Json perms = Json::object();
    for (const auto& [b, pi] : dc.explicit_perms()) perms[block_key(b)] = to_json(pi);
    Json j{{"partitions", parts}, {"block_perms", perms}};
    if (dc.default_perm()) j["default"] = to_json(*dc.default_perm());
    return j;
}

inline DominationCollection collection_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("partitions") || !j["partitions"].is_array())
        throw ParseError("missing field 'partitions'");
    std::vector<Partition> parts;
    for (const Json& p : j["partitions"]) parts.push_back(partition_from_json(p));
    std::map<BlockId, Permutation> perms;
    if (j.contains("block_perms")) {
        if (!j["block_perms"].is_object()) throw ParseError("'block_perms' must be an object");
        for (const auto& [key, val] : j["block_perms"].items()) perms.emplace(parse_block_key(key), permutation_from_json(val));
    }
    std::optional<Permutation> def;
    if (j.contains("default")) def = permutation_from_json(j["default"]);
    try {
        return DominationCollection(std::move(parts), std::move(perms), std::move(def));
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

// Profiles -------------------------------------------------------------------

inline Json to_json(const Profile& p)
{
    Json j{{"strategy", to_string(p.strategy)}, {"complete", p.complete}, {"I", p.i_values}};
    if (p.complete) j["delta"] = delta_by_position(p);
    Json w = Json::array();
    bool any = false;
    for (const auto& s : p.witnesses) {
        if (s) {
            w.push_back(s->ids());
            any = true;
        } else {
            w.push_back(nullptr);
        }
    }
    if (any) j["witnesses"] = w;
    return j;
}

inline Profile profile_from_json(const Json& j)
{
    Profile p;
    p.i_values = detail::field<std::vector<long long>>(j, "I");
    p.complete = detail::field<bool>(j, "complete");
    p.strategy = parse_strategy(detail::field<std::string>(j, "strategy"));
    const std::size_t n = p.i_values.empty() ? 0 : p.i_values.size() - 1;
    p.witnesses.assign(p.i_values.size(), std::nullopt);
    if (j.contains("witnesses")) {
        const Json& w = j["witnesses"];
        if (!w.is_array() || w.size() != p.i_values.size()) throw ParseError("witness list size mismatch");
        for (std::size_t m = 0; m < w.size(); ++m)
            if (!w[m].is_null()) {
                auto ids = w[m].get<std::vector<std::size_t>>();
                for (auto v : ids)
                    if (v >= n) throw ParseError("witness vertex out of range");
                p.witnesses[m] = VertexSet::from_ids(n, ids);
            }
    }
    return p;
}

/// Rows m, I(m), δ(m) for m = 1..n.
inline std::string profile_csv(const Profile& p)
{
    std::string out = "m,I,delta\n";
    std::vector<long long> d = p.complete ? delta_by_position(p) : std::vector<long long>{};
    for (std::size_t m = 1; m < p.i_values.size(); ++m) {
        out += std::to_string(m) + "," + (p.i_values[m] < 0 ? std::string() : std::to_string(p.i_values[m])) + ",";
        if (m - 1 < d.size()) out += std::to_string(d[m - 1]);
        out += "\n";
    }
    return out;
}

inline Json to_json(const VertexSet& s) { return s.ids(); }

} // namespace edgeiso
