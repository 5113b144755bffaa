#include "cfs/cfs_index.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <type_traits>

#include "cfs/partition.hpp"

namespace cfs {

CfsIndex build_index(const Nfa& nfa, BuildArtifacts* artifacts) {
    validate(nfa);
    Partition part = coarsest_forward_stable_partition(nfa);
    if (!part.all_singletons()) {
        for (const auto& block : part.blocks)
            if (block.size() > 1) {
                std::string msg = "input is not forward-stable; non-singleton block {";
                for (std::size_t i = 0; i < block.size(); ++i)
                    msg += (i ? "," : "") + std::to_string(block[i]);
                throw InvariantError(msg + "}");
            }
    }

    BuildArtifacts local;
    BuildArtifacts& a = artifacts ? *artifacts : local;

    a.order = max_colex_order(nfa);
    a.total = colex_extension(a.order, nfa);
    a.inf = inf_prefixes(nfa);
    a.sup = sup_prefixes(nfa);
    a.inf_g = inf_graph(nfa, a.inf);
    a.sup_g = sup_graph(nfa, a.sup);
    a.p_inf = forward_visit(a.inf_g, a.total);
    a.p_sup = rightmost_map(a.sup_g, a.total);
    if (!certify_leftmost(a.inf_g, a.total, a.p_inf))
        throw InvariantError("infimum walk map failed the leftmost certificate");
    if (!certify_rightmost(a.sup_g, a.total, a.p_sup))
        throw InvariantError("supremum walk map failed the rightmost certificate");
    a.depths = conflict_depths(nfa, a.order, a.p_inf, a.p_sup);

    CfsIndex idx;
    idx.n = nfa.n;
    idx.rank = a.total.rank;
    idx.label = nfa.label;
    idx.p_inf = a.p_inf.p;
    idx.p_sup = a.p_sup.p;
    idx.phi = a.depths.phi;
    idx.gamma = a.depths.gamma;
    return idx;
}

QueryTrace query(const CfsIndex& idx, State u, State v) {
    if (u >= idx.n || v >= idx.n) throw InvariantError("state id out of range");
    QueryTrace t;
    if (u == v) {
        t.leq = true;
        t.rule = 'a';
        t.steps = 1;
        return t;
    }
    if (idx.rank[v] < idx.rank[u]) {
        t.leq = false;
        t.rule = 'b';
        t.steps = 1;
        return t;
    }

    const uint32_t limit = static_cast<uint32_t>(2 * idx.n - 1);
    std::vector<State> uw, vw;                   // u_i = p_sup^{i-1}(u), v_i = p_inf^{i-1}(v)
    uw.reserve(limit);
    vw.reserve(limit);
    State ui = u, vi = v;
    for (uint32_t i = 1; i <= limit; ++i) {
        uw.push_back(ui);
        vw.push_back(vi);
        t.steps = i;
        if (t.meet == 0 && ui == vi) t.meet = i;
        if (t.inversion == 0 && idx.rank[vi] < idx.rank[ui]) t.inversion = i;
        if (idx.label[ui] != idx.label[vi]) {
            if (idx.label[ui] < idx.label[vi]) {
                t.leq = true;
                t.rule = 'c';                    // sup string of u below inf string of v
                return t;
            }
            if (t.inversion == 0)
                throw InvariantError("label inversion without rank inversion");
            if (t.meet == 0 || t.meet > t.inversion) {
                t.leq = false;
                t.rule = 'd';                    // strict rank witness with no earlier meeting
                return t;
            }
            // walks met at t.meet before the inversion: decide by the
            // aggregated conflict depths along both walk prefixes
            uint64_t agg = 0;
            for (uint32_t k = 1; k < t.meet; ++k) {
                agg = std::max(agg, static_cast<uint64_t>(idx.gamma[uw[k - 1]]) + k - 1);
                agg = std::max(agg, static_cast<uint64_t>(idx.phi[vw[k - 1]]) + k - 1);
            }
            t.leq = agg < t.meet;
            t.rule = t.leq ? 'f' : 'e';
            return t;
        }
        ui = idx.p_sup[ui];
        vi = idx.p_inf[vi];
    }
    t.leq = true;                                // equal labels through 2n-1: equal strings
    t.rule = 'c';
    return t;
}

namespace {

void put_word(std::vector<uint8_t>& out, uint64_t w) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(w >> (8 * i)));
}

uint64_t get_word(const std::vector<uint8_t>& in, std::size_t word) {
    uint64_t w = 0;
    for (int i = 0; i < 8; ++i)
        w |= static_cast<uint64_t>(in[word * 8 + i]) << (8 * i);
    return w;
}

constexpr uint64_t kMagicVersion =
    uint64_t{'C'} | uint64_t{'F'} << 8 | uint64_t{'S'} << 16 | uint64_t{'X'} << 24 |
    uint64_t{1} << 32;

}  // namespace

std::vector<uint8_t> serialize(const CfsIndex& idx) {
    std::vector<uint8_t> out;
    out.reserve((6 * idx.n + 2) * 8);
    put_word(out, kMagicVersion);
    put_word(out, idx.n);
    auto put_array = [&](const auto& a) {
        for (auto v : a) put_word(out, v);
    };
    put_array(idx.rank);
    put_array(idx.label);
    put_array(idx.p_inf);
    put_array(idx.p_sup);
    put_array(idx.phi);
    put_array(idx.gamma);
    return out;
}

std::size_t serialized_words(const CfsIndex& idx) { return 6 * idx.n + 2; }

CfsIndex deserialize(const std::vector<uint8_t>& bytes) {
    if (bytes.size() < 16) throw InvariantError("index file truncated");
    if (get_word(bytes, 0) != kMagicVersion)
        throw InvariantError("bad index magic or version");
    const uint64_t n = get_word(bytes, 1);
    if (n == 0 || n > (uint64_t{1} << 32))
        throw InvariantError("bad state count");
    if (bytes.size() != (6 * n + 2) * 8)
        throw InvariantError("index file truncated");

    CfsIndex idx;
    idx.n = static_cast<std::size_t>(n);
    std::size_t word = 2;
    auto get_array = [&](auto& a, uint64_t lo, uint64_t hi, const char* what) {
        a.resize(idx.n);
        for (std::size_t i = 0; i < idx.n; ++i) {
            uint64_t w = get_word(bytes, word++);
            if (w < lo || w > hi)
                throw InvariantError(std::string(what) + " out of range");
            a[i] = static_cast<std::remove_reference_t<decltype(a[0])>>(w);
        }
    };
    get_array(idx.rank, 1, n, "rank");
    get_array(idx.label, 0, n - 1, "label");
    get_array(idx.p_inf, 0, n - 1, "predecessor");
    get_array(idx.p_sup, 0, n - 1, "predecessor");
    const uint64_t depth_cap = 2 * n - 1;
    get_array(idx.phi, 1, depth_cap, "conflict depth");
    get_array(idx.gamma, 1, depth_cap, "conflict depth");

    std::vector<uint8_t> seen(idx.n, 0);
    for (uint32_t r : idx.rank) {
        if (seen[r - 1]) throw InvariantError("rank is not a permutation");
        seen[r - 1] = 1;
    }
    return idx;
}

void write_index_file(const std::string& path, const CfsIndex& idx) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InvariantError("cannot open " + path + " for writing");
    auto bytes = serialize(idx);
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
    if (!os) throw InvariantError("write failed: " + path);
}

CfsIndex read_index_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InvariantError("cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(is)),
                               std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

void write_index_text(std::ostream& os, const CfsIndex& idx) {
    for (std::size_t u = 0; u < idx.n; ++u)
        os << u << ' ' << idx.rank[u] << ' ' << idx.label[u] << ' ' << idx.p_inf[u]
           << ' ' << idx.p_sup[u] << ' ' << idx.phi[u] << ' ' << idx.gamma[u] << '\n';
}

}  // namespace cfs
