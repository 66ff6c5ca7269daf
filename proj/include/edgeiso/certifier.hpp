#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgeiso/blockgeom.hpp"
#include "edgeiso/compression.hpp"
#include "edgeiso/downsets.hpp"
#include "edgeiso/error.hpp"
#include "edgeiso/graph.hpp"
#include "edgeiso/json_io.hpp"
#include "edgeiso/order.hpp"
#include "edgeiso/partition.hpp"
#include "edgeiso/rank_space.hpp"
#include "edgeiso/solver.hpp"

namespace edgeiso {

// ---------------------------------------------------------------------------
// Compressed-set oracle on products

struct OracleValue {
    std::optional<long long> value; // empty when the budget ran out
    std::optional<VertexSet> witness;
};

/// Maximum |I| over sets fixed by every single-factor compression, for each
/// requested m. Enumerates rank-space down-sets and counts edges directly when
/// that is affordable; otherwise maximises the Δ weight, which coincides with
/// |I| on such sets, and gives no witness.
inline std::vector<OracleValue> compressed_oracle(const Graph& g, std::span<const TotalOrder> factor_orders,
                                                  std::span<const std::size_t> ms, const Budget& budget = {},
                                                  long double enumeration_limit = 3.0e6L)
{
    const Shape shape = g.shape();
    RankSpace rs(shape, std::vector<TotalOrder>(factor_orders.begin(), factor_orders.end()));
    std::vector<OracleValue> out(ms.size());
    auto estimate = downset_count_estimate(shape.dims());
    if (estimate && *estimate <= enumeration_limit) {
        DownsetBox box = rs.box();
        for (std::size_t k = 0; k < ms.size(); ++k) {
            long long best = -1;
            std::optional<VertexSet> wit;
            bool done = box.for_each_of_size(ms[k], budget, [&](std::span<const std::size_t> h) {
                VertexSet s = rs.from_heights(box, h);
                long long v = static_cast<long long>(induced_edges(g, s));
                if (v > best) {
                    best = v;
                    wit = std::move(s);
                }
                return true;
            });
            if (done && best >= 0) out[k] = {best, std::move(wit)};
        }
        return out;
    }
    std::vector<Graph> fs = g.factors();
    auto tables = delta_tables(fs, factor_orders);
    std::vector<std::vector<long long>> by_position;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<long long> row(fs[i].size());
        for (std::size_t p = 0; p < row.size(); ++p) row[p] = tables[i][factor_orders[i].at(p)];
        by_position.push_back(std::move(row));
    }
    std::size_t m_max = 0;
    for (std::size_t m : ms) m_max = std::max(m_max, m);
    MaxWeightResult r = max_weight_downsets(shape.dims(), by_position, m_max, budget);
    if (!r.complete) return out;
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (ms[k] < r.best.size() && r.best[ms[k]] >= 0) out[k].value = r.best[ms[k]];
    return out;
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertStatus { certified, hypothesis_failed, inconclusive, revoked };

inline const char* to_string(CertStatus s)
{
    switch (s) {
    case CertStatus::certified: return "certified";
    case CertStatus::hypothesis_failed: return "hypothesis_failed";
    case CertStatus::inconclusive: return "inconclusive";
    case CertStatus::revoked: return "revoked";
    }
    return "?";
}

/// Process exit code for a certificate status.
inline int exit_code(CertStatus s)
{
    switch (s) {
    case CertStatus::certified: return 0;
    case CertStatus::hypothesis_failed: return 2;
    case CertStatus::inconclusive: return 3;
    case CertStatus::revoked: return 1;
    }
    return 1;
}

struct HypothesisRecord {
    std::string name;
    std::string scope;
    Verdict verdict = Verdict::valid;
    std::vector<std::string> evidence;
};

struct PairRecord {
    std::size_t i = 0, j = 0;
    Verdict verdict = Verdict::valid;
    std::string oracle;
    std::optional<std::size_t> first_failure;
    long long achieved = 0, optimum = 0;
};

struct CrosscheckRecord {
    std::size_t m = 0;
    long long order_value = 0;
    std::optional<long long> oracle_value;
    bool agree = false;
};

struct Certificate {
    int schema = schema_version;
    std::string product;
    std::string factors_digest;
    std::string partitions_digest;
    std::string collection_digest;
    std::optional<std::vector<std::size_t>> domination; // factor permutation, for domination certificates
    std::vector<HypothesisRecord> hypotheses;
    std::vector<PairRecord> pairs;
    std::optional<std::string> conclusion;
    std::vector<CrosscheckRecord> crosscheck;
    bool revoked = false;
    std::optional<std::vector<Vertex>> counterexample;
    std::string note;

    CertStatus status() const
    {
        if (revoked) return CertStatus::revoked;
        if (conclusion) return CertStatus::certified;
        bool unsure = false;
        for (const auto& h : hypotheses) {
            if (h.verdict == Verdict::invalid) return CertStatus::hypothesis_failed;
            unsure = unsure || h.verdict == Verdict::inconclusive;
        }
        for (const auto& p : pairs) {
            if (p.verdict == Verdict::invalid) return CertStatus::hypothesis_failed;
            unsure = unsure || p.verdict == Verdict::inconclusive;
        }
        return unsure ? CertStatus::inconclusive : CertStatus::hypothesis_failed;
    }

    /// Name of the first failing hypothesis, if any.
    std::optional<std::string> failing_hypothesis() const
    {
        for (const auto& h : hypotheses)
            if (h.verdict == Verdict::invalid) return h.name + " (" + h.scope + ")";
        for (const auto& p : pairs)
            if (p.verdict == Verdict::invalid)
                return "pairwise optimality (factors " + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
        return std::nullopt;
    }
};

struct CertifyOptions {
    ProfileOptions profile;
    std::vector<std::size_t> crosscheck_ms; // empty: the default sample
    bool crosscheck = true;
    Budget crosscheck_budget{};
    std::string product_name;
};

/// Default crosscheck sample: 1, 5, 10, 20 and |V|/2, within range.
inline std::vector<std::size_t> default_crosscheck_sample(std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t m : {std::size_t{1}, std::size_t{5}, std::size_t{10}, std::size_t{20}, n / 2})
        if (m <= n && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    return out;
}

namespace detail {

inline void record(Certificate& c, std::string name, std::string scope, Verdict v, std::vector<std::string> ev)
{
    c.hypotheses.push_back({std::move(name), std::move(scope), v, std::move(ev)});
}

// Exact profile of a two-factor product for pairwise verification.
inline std::pair<std::optional<Profile>, std::string> pair_profile(const Graph& h, std::span<const TotalOrder> orders,
                                                                   const ProfileOptions& opt)
{
    ProfileOptions o = opt;
    o.witnesses = false;
    if (opt.strategy == Strategy::full_enumeration && h.size() <= std::min<std::size_t>(opt.full_cap, 30)) {
        o.strategy = Strategy::full_enumeration;
    } else if (opt.strategy == Strategy::branch_and_bound && h.size() <= opt.bnb_cap) {
        o.strategy = Strategy::branch_and_bound;
    } else {
        o.strategy = Strategy::compressed_only;
        o.factor_orders.assign(orders.begin(), orders.end());
    }
    try {
        Profile p = exact_profile(h, o);
        if (!p.complete) return {std::nullopt, to_string(o.strategy)};
        return {std::move(p), to_string(o.strategy)};
    } catch (const CapExceeded&) {
        return {std::nullopt, to_string(o.strategy)};
    }
}

inline Json digest_input(std::span<const Graph> factors)
{
    Json a = Json::array();
    for (const Graph& g : factors) a.push_back(to_json(g));
    return a;
}

} // namespace detail

/// Checks the local-global hypotheses for the block-lexicographic order of
/// `dc` on the product of `factors` and, when all hold, certifies it optimal.
/// Certified results are cross-checked on sampled sizes against the
/// compressed-set oracle; disagreement revokes the certificate.
inline Certificate certify(std::span<const Graph> factors, const DominationCollection& dc,
                           const CertifyOptions& opt = {})
{
    const std::size_t d = factors.size();
    if (d < 3) throw ParameterError("certification needs at least three factors");
    if (dc.dimension() != d) throw ParameterError("one partition per factor is required");
    Certificate c;
    c.product = opt.product_name;
    c.factors_digest = digest(detail::digest_input(factors));
    Json parts = Json::array();
    for (const Partition& p : dc.partitions()) parts.push_back(to_json(p));
    c.partitions_digest = digest(parts);
    c.collection_digest = digest(to_json(dc));

    for (std::size_t i = 0; i < d; ++i) {
        PartitionValidation v = validate_isoperimetric_partition(factors[i], dc.partition(i), opt.profile);
        detail::record(c, "isoperimetric partition", "factor " + std::to_string(i + 1), v.verdict, v.diagnostics);
    }
    for (std::size_t i = 0; i + 1 < d; ++i) {
        auto nd = is_non_decreasing(factors[i], dc.partition(i), opt.profile);
        Verdict v = !nd ? Verdict::inconclusive : *nd ? Verdict::valid : Verdict::invalid;
        std::vector<std::string> ev;
        if (v == Verdict::invalid) ev.push_back("some segment has a decreasing δ-sequence");
        detail::record(c, "non-decreasing partition", "factor " + std::to_string(i + 1), v, std::move(ev));
    }
    {
        CollectionValidation v = validate_regular_domination_collection(factors, dc, opt.profile);
        detail::record(c, "regular domination collection", "all factors", v.verdict, v.diagnostics);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<std::size_t> s{i, j};
            DominationCollection sub = dc.restrict_to(s);
            std::vector<Graph> pair{factors[i], factors[j]};
            Graph h = cartesian_product(pair);
            TotalOrder bl = block_lex_order(sub);
            auto orders = sub.factor_orders();
            PairRecord rec;
            rec.i = i;
            rec.j = j;
            auto [prof, how] = detail::pair_profile(h, orders, opt.profile);
            rec.oracle = how;
            if (!prof) {
                rec.verdict = Verdict::inconclusive;
            } else {
                auto chk = verify_order_optimal(h, bl, *prof);
                rec.verdict = chk.optimal ? Verdict::valid : Verdict::invalid;
                rec.first_failure = chk.first_failure;
                rec.achieved = chk.achieved;
                rec.optimum = chk.optimum;
            }
            c.pairs.push_back(rec);
        }

    bool all = std::all_of(c.hypotheses.begin(), c.hypotheses.end(),
                           [](const HypothesisRecord& h) { return h.verdict == Verdict::valid; }) &&
               std::all_of(c.pairs.begin(), c.pairs.end(),
                           [](const PairRecord& p) { return p.verdict == Verdict::valid; });
    if (!all) return c;
    c.conclusion = "the block-lexicographic order is optimal for the product of " + std::to_string(d) + " factors";

    if (!opt.crosscheck) return c;
    Graph g = cartesian_product(factors);
    TotalOrder bl = block_lex_order(dc);
    std::vector<std::size_t> ms = opt.crosscheck_ms.empty() ? default_crosscheck_sample(g.size()) : opt.crosscheck_ms;
    for (std::size_t m : ms)
        if (m > g.size()) throw ParameterError("crosscheck size exceeds the product");
    auto orders = dc.factor_orders();
    auto oracle = compressed_oracle(g, orders, ms, opt.crosscheck_budget, opt.profile.enumeration_limit);
    for (std::size_t k = 0; k < ms.size(); ++k) {
        CrosscheckRecord r;
        r.m = ms[k];
        VertexSet seg = initial_segment(bl, ms[k]);
        r.order_value = static_cast<long long>(induced_edges(g, seg));
        r.oracle_value = oracle[k].value;
        r.agree = r.oracle_value && *r.oracle_value == r.order_value;
        if (r.oracle_value && !r.agree && !c.revoked) {
            c.revoked = true;
            c.conclusion.reset();
            c.counterexample = *r.oracle_value > r.order_value && oracle[k].witness ? oracle[k].witness->ids() : seg.ids();
            c.note = "crosscheck disagreement at m=" + std::to_string(ms[k]) + ": order " +
                     std::to_string(r.order_value) + ", oracle " + std::to_string(*r.oracle_value);
        }
        c.crosscheck.push_back(r);
    }
    return c;
}

/// Certifies the domination order for permutation pi (pi[k] is the factor
/// compared at significance k) from lexicographic optimality of the permuted
/// pairs, via atomic partitions on the permuted product.
inline Certificate certify_domination(std::span<const Graph> factors, std::span<const TotalOrder> factor_orders,
                                      const Permutation& pi, const CertifyOptions& opt = {})
{
    const std::size_t d = factors.size();
    if (pi.degree() != d || factor_orders.size() != d) throw ParameterError("permutation degree mismatch");
    std::vector<Graph> fs;
    std::vector<Partition> parts;
    for (std::size_t k = 0; k < d; ++k) {
        fs.push_back(factors[pi[k]]);
        parts.push_back(atomic_partition(factor_orders[pi[k]]));
    }
    Certificate c = certify(fs, lexicographic_collection(std::move(parts)), opt);
    c.domination = pi.images();
    c.factors_digest = digest(detail::digest_input(factors));
    if (c.conclusion) c.conclusion = "the domination order for this permutation is optimal for the product";
    return c;
}

// ---------------------------------------------------------------------------
// Certificate JSON

inline Json to_json(const Certificate& c)
{
    Json hyps = Json::array();
    for (const auto& h : c.hypotheses)
        hyps.push_back({{"name", h.name}, {"scope", h.scope}, {"verdict", to_string(h.verdict)}, {"evidence", h.evidence}});
    Json pairs = Json::array();
    for (const auto& p : c.pairs) {
        Json j{{"factors", {p.i + 1, p.j + 1}}, {"verdict", to_string(p.verdict)}, {"oracle", p.oracle}};
        if (p.first_failure)
            j["failure"] = {{"m", *p.first_failure}, {"achieved", p.achieved}, {"optimum", p.optimum}};
        pairs.push_back(std::move(j));
    }
    Json cross = Json::array();
    for (const auto& r : c.crosscheck) {
        Json j{{"m", r.m}, {"order", r.order_value}, {"agree", r.agree}};
        j["oracle"] = r.oracle_value ? Json(*r.oracle_value) : Json(nullptr);
        cross.push_back(std::move(j));
    }
    Json j{{"schema_version", c.schema},
           {"product", c.product},
           {"status", to_string(c.status())},
           {"digests", {{"factors", c.factors_digest}, {"partitions", c.partitions_digest}, {"collection", c.collection_digest}}},
           {"hypotheses", hyps},
           {"pairs", pairs},
           {"crosscheck", cross},
           {"revoked", c.revoked}};
    j["conclusion"] = c.conclusion ? Json(*c.conclusion) : Json(nullptr);
    if (c.domination) j["domination"] = detail::to_one_based(*c.domination);
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline Verdict parse_verdict(const std::string& s)
{
    if (s == "valid") return Verdict::valid;
    if (s == "invalid") return Verdict::invalid;
    if (s == "inconclusive") return Verdict::inconclusive;
    throw ParseError("unknown verdict '" + s + "'");
}

inline Certificate certificate_from_json(const Json& j)
{
    Certificate c;
    try {
        c.schema = j.at("schema_version").get<int>();
        if (c.schema != schema_version) throw ParseError("unsupported certificate schema " + std::to_string(c.schema));
        c.product = j.at("product").get<std::string>();
        c.factors_digest = j.at("digests").at("factors").get<std::string>();
        c.partitions_digest = j.at("digests").at("partitions").get<std::string>();
        c.collection_digest = j.at("digests").at("collection").get<std::string>();
        for (const Json& h : j.at("hypotheses"))
            c.hypotheses.push_back({h.at("name").get<std::string>(), h.at("scope").get<std::string>(),
                                    parse_verdict(h.at("verdict").get<std::string>()),
                                    h.at("evidence").get<std::vector<std::string>>()});
        for (const Json& p : j.at("pairs")) {
            PairRecord r;
            auto f = p.at("factors").get<std::vector<std::size_t>>();
            if (f.size() != 2 || f[0] == 0 || f[1] == 0) throw ParseError("pair factors are two 1-based indices");
            r.i = f[0] - 1;
            r.j = f[1] - 1;
            r.verdict = parse_verdict(p.at("verdict").get<std::string>());
            r.oracle = p.at("oracle").get<std::string>();
            if (p.contains("failure")) {
                r.first_failure = p["failure"].at("m").get<std::size_t>();
                r.achieved = p["failure"].at("achieved").get<long long>();
                r.optimum = p["failure"].at("optimum").get<long long>();
            }
            c.pairs.push_back(r);
        }
        for (const Json& x : j.at("crosscheck")) {
            CrosscheckRecord r;
            r.m = x.at("m").get<std::size_t>();
            r.order_value = x.at("order").get<long long>();
            if (!x.at("oracle").is_null()) r.oracle_value = x["oracle"].get<long long>();
            r.agree = x.at("agree").get<bool>();
            c.crosscheck.push_back(r);
        }
        c.revoked = j.at("revoked").get<bool>();
        if (!j.at("conclusion").is_null()) c.conclusion = j["conclusion"].get<std::string>();
        if (j.contains("domination"))
            c.domination = detail::from_one_based(j["domination"].get<std::vector<std::size_t>>(), "permutation");
        if (j.contains("counterexample")) c.counterexample = j["counterexample"].get<std::vector<Vertex>>();
        if (j.contains("note")) c.note = j["note"].get<std::string>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad certificate: ") + e.what());
    }
    return c;
}

inline bool operator==(const HypothesisRecord& a, const HypothesisRecord& b)
{
    return a.name == b.name && a.scope == b.scope && a.verdict == b.verdict && a.evidence == b.evidence;
}
inline bool operator==(const PairRecord& a, const PairRecord& b)
{
    return a.i == b.i && a.j == b.j && a.verdict == b.verdict && a.oracle == b.oracle &&
           a.first_failure == b.first_failure && (!a.first_failure || (a.achieved == b.achieved && a.optimum == b.optimum));
}
inline bool operator==(const CrosscheckRecord& a, const CrosscheckRecord& b)
{
    return a.m == b.m && a.order_value == b.order_value && a.oracle_value == b.oracle_value && a.agree == b.agree;
}
inline bool operator==(const Certificate& a, const Certificate& b)
{
    return a.schema == b.schema && a.product == b.product && a.factors_digest == b.factors_digest &&
           a.partitions_digest == b.partitions_digest && a.collection_digest == b.collection_digest &&
           a.domination == b.domination && a.hypotheses == b.hypotheses && a.pairs == b.pairs &&
           a.conclusion == b.conclusion && a.crosscheck == b.crosscheck && a.revoked == b.revoked &&
           a.counterexample == b.counterexample && a.note == b.note;
}

} // namespace edgeiso
