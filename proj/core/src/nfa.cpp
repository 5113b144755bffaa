#include "cfs/nfa.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cfs {

std::size_t Nfa::num_edges() const {
    std::size_t m = 0;
    for (const auto& a : out) m += a.size();
    return m;
}

bool Nfa::has_edge(State src, State dst) const {
    const auto& a = out[src];
    return std::binary_search(a.begin(), a.end(), dst);
}

std::string Nfa::symbol_name(Symbol s) const {
    return s < symbol_names.size() ? symbol_names[s] : "?" + std::to_string(s);
}

namespace {

class Parser {
public:
    explicit Parser(std::istream& text) : text_(text) {}

    RawNfa run() {
        header();
        initial();
        symbols();
        for (std::size_t i = 0; i < raw_.n; ++i) state_line();
        for (std::size_t i = 0; i < m_; ++i) edge_line();
        if (next_line())
            throw ParseError(lineno_, "trailing content after edge list");
        return std::move(raw_);
    }

private:
    bool next_line() {
        std::string line;
        while (std::getline(text_, line)) {
            ++lineno_;
            if (line.empty() || line[0] == '#') continue;
            toks_.clear();
            std::istringstream iss(line);
            std::string t;
            while (iss >> t) toks_.push_back(t);
            if (!toks_.empty()) return true;
        }
        return false;
    }

    void expect_line(const char* what) {
        if (!next_line()) throw ParseError(lineno_, std::string("truncated input, expected ") + what);
    }

    uint64_t num(const std::string& tok) const {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(lineno_, "expected a non-negative integer, got '" + tok + "'");
        return std::stoull(tok);
    }

    void header() {
        expect_line("'nfa <n> <m> <sigma>'");
        if (toks_[0] != "nfa" || toks_.size() != 4)
            throw ParseError(lineno_, "expected 'nfa <n> <m> <sigma>'");
        raw_.n = num(toks_[1]);
        m_ = num(toks_[2]);
        sigma_ = num(toks_[3]);
        if (raw_.n == 0) throw ParseError(lineno_, "state count must be positive");
        if (sigma_ == 0) throw ParseError(lineno_, "alphabet must be non-empty");
        raw_.declared_label.assign(raw_.n, 0);
        declared_.assign(raw_.n, false);
        raw_.edges.reserve(m_);
    }

    void initial() {
        expect_line("'initial <id>'");
        if (toks_[0] != "initial" || toks_.size() != 2)
            throw ParseError(lineno_, "expected 'initial <id>'");
        uint64_t id = num(toks_[1]);
        if (id >= raw_.n) throw ParseError(lineno_, "initial state id out of range");
        raw_.initial = static_cast<State>(id);
    }

    void symbols() {
        expect_line("'symbols ...'");
        if (toks_[0] != "symbols" || toks_.size() != sigma_ + 1)
            throw ParseError(lineno_, "expected 'symbols' followed by " +
                                          std::to_string(sigma_) + " names");
        for (std::size_t i = 1; i < toks_.size(); ++i) {
            if (i == 1 && toks_[i] != "#")
                throw ParseError(lineno_, "first symbol must be '#'");
            if (i > 1 && !(raw_.symbol_names.back() < toks_[i]))
                throw ParseError(lineno_, "symbols must be listed in increasing order");
            sym_code_[toks_[i]] = static_cast<Symbol>(raw_.symbol_names.size());
            raw_.symbol_names.push_back(toks_[i]);
        }
    }

    Symbol symbol(const std::string& name) const {
        auto it = sym_code_.find(name);
        if (it == sym_code_.end())
            throw ParseError(lineno_, "unknown symbol '" + name + "'");
        return it->second;
    }

    void state_line() {
        expect_line("'state <id> <symbol>'");
        if (toks_[0] != "state" || toks_.size() != 3)
            throw ParseError(lineno_, "expected 'state <id> <symbol>'");
        uint64_t id = num(toks_[1]);
        if (id >= raw_.n)
            throw ParseError(lineno_, "state id " + toks_[1] + " >= n (" +
                                          std::to_string(raw_.n) + ")");
        if (declared_[id])
            throw ParseError(lineno_, "duplicate state declaration for id " + toks_[1]);
        declared_[id] = true;
        raw_.declared_label[id] = symbol(toks_[2]);
    }

    void edge_line() {
        expect_line("'edge <src> <dst>'");
        if (toks_[0] != "edge" || (toks_.size() != 3 && toks_.size() != 4))
            throw ParseError(lineno_, "expected 'edge <src> <dst> [<symbol>]'");
        uint64_t src = num(toks_[1]);
        uint64_t dst = num(toks_[2]);
        if (src >= raw_.n || dst >= raw_.n)
            throw ParseError(lineno_, "edge endpoint out of range");
        Symbol lbl = toks_.size() == 4 ? symbol(toks_[3]) : raw_.declared_label[dst];
        auto key = std::make_tuple(static_cast<State>(src), static_cast<State>(dst), lbl);
        if (!edge_set_.insert(key).second)
            throw ParseError(lineno_, "duplicate transition " + toks_[1] + " -> " + toks_[2]);
        raw_.edges.push_back({static_cast<State>(src), static_cast<State>(dst), lbl});
    }

    std::istream& text_;
    RawNfa raw_;
    std::size_t m_ = 0, sigma_ = 0, lineno_ = 0;
    std::vector<std::string> toks_;
    std::vector<bool> declared_;
    std::unordered_map<std::string, Symbol> sym_code_;
    std::set<std::tuple<State, State, Symbol>> edge_set_;
};

}  // namespace

RawNfa parse_nfa(std::istream& text) { return Parser(text).run(); }

RawNfa parse_nfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_nfa(in);
}

NormalizeResult normalize(const RawNfa& raw_in) {
    RawNfa raw = raw_in;
    const std::size_t n = raw.n;
    const std::size_t sigma = raw.symbol_names.size();
    const State s = raw.initial;

    for (const auto& e : raw.edges) {
        if (e.label == kStartSymbol && !(e.src == s && e.dst == s))
            throw InvariantError("'#' labels a non-initial transition " +
                                 std::to_string(e.src) + " -> " + std::to_string(e.dst));
        if (e.dst == s && (e.src != s || e.label != kStartSymbol))
            throw InvariantError("initial state has an incoming transition other than "
                                 "the '#' self-loop");
    }
    if (raw.declared_label[s] != kStartSymbol)
        throw InvariantError("initial state must carry symbol '#'");

    bool has_loop = false;
    for (const auto& e : raw.edges)
        if (e.src == s && e.dst == s && e.label == kStartSymbol) has_loop = true;
    if (!has_loop) raw.edges.push_back({s, s, kStartSymbol});

    // reachability over the raw edges
    {
        std::vector<std::vector<State>> adj(n);
        for (const auto& e : raw.edges) adj[e.src].push_back(e.dst);
        std::vector<bool> seen(n, false);
        std::vector<State> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            State u = stack.back();
            stack.pop_back();
            for (State v : adj[u])
                if (!seen[v]) { seen[v] = true; stack.push_back(v); }
        }
        for (std::size_t u = 0; u < n; ++u)
            if (!seen[u])
                throw InvariantError("state " + std::to_string(u) +
                                     " unreachable from the initial state");
    }

    std::vector<bool> sym_used(sigma, false);
    for (const auto& e : raw.edges) sym_used[e.label] = true;
    for (std::size_t c = 0; c < sigma; ++c)
        if (!sym_used[c])
            throw InvariantError("symbol '" + raw.symbol_names[c] + "' labels no transition");

    // in-label sets; states reached by several labels get split into copies
    std::vector<std::set<Symbol>> in_labels(n);
    for (const auto& e : raw.edges) in_labels[e.dst].insert(e.label);
    for (std::size_t u = 0; u < n; ++u)
        if (in_labels[u].empty()) in_labels[u].insert(raw.declared_label[u]);

    NormalizeResult res;
    std::map<std::pair<State, Symbol>, State> copy_id;
    for (std::size_t u = 0; u < n; ++u) {
        for (Symbol c : in_labels[u]) {
            copy_id[{static_cast<State>(u), c}] = static_cast<State>(res.origin.size());
            res.origin.push_back(static_cast<State>(u));
            res.nfa.label.push_back(c);
        }
    }

    Nfa& out = res.nfa;
    out.n = res.origin.size();
    out.sigma = sigma;
    out.symbol_names = raw.symbol_names;
    out.initial = copy_id.at({s, kStartSymbol});
    out.out.assign(out.n, {});
    out.in.assign(out.n, {});

    std::set<std::pair<State, State>> seen_edges;
    for (const auto& e : raw.edges) {
        State dst = copy_id.at({e.dst, e.label});
        // every copy of the source inherits the out-edge
        for (Symbol c : in_labels[e.src]) {
            State src = copy_id.at({e.src, c});
            if (seen_edges.emplace(src, dst).second) {
                out.out[src].push_back(dst);
                out.in[dst].push_back(src);
            }
        }
    }
    for (auto& a : out.out) std::sort(a.begin(), a.end());
    for (auto& a : out.in) std::sort(a.begin(), a.end());

    validate(out);
    return res;
}

Nfa normalize(const Nfa& nfa) { return normalize(to_raw(nfa)).nfa; }

void validate(const Nfa& nfa) {
    const std::size_t n = nfa.n;
    const State s = nfa.initial;
    if (n == 0) throw InvariantError("empty automaton");
    if (nfa.label.size() != n || nfa.out.size() != n || nfa.in.size() != n)
        throw InvariantError("inconsistent state arrays");
    if (nfa.label[s] != kStartSymbol)
        throw InvariantError("initial state not labeled '#'");
    for (std::size_t u = 0; u < n; ++u) {
        if (u != s && nfa.label[u] == kStartSymbol)
            throw InvariantError("'#' labels non-initial state " + std::to_string(u));
        if (nfa.label[u] >= nfa.sigma)
            throw InvariantError("label code out of range at state " + std::to_string(u));
        if (nfa.in[u].empty())
            throw InvariantError("state " + std::to_string(u) + " has no incoming transition");
    }
    if (nfa.in[s].size() != 1 || nfa.in[s][0] != s)
        throw InvariantError("initial state must have exactly the '#' self-loop incoming");
    // adjacency symmetry and sortedness
    for (std::size_t u = 0; u < n; ++u) {
        if (!std::is_sorted(nfa.out[u].begin(), nfa.out[u].end()) ||
            !std::is_sorted(nfa.in[u].begin(), nfa.in[u].end()))
            throw InvariantError("adjacency lists not sorted");
        for (State v : nfa.out[u])
            if (!std::binary_search(nfa.in[v].begin(), nfa.in[v].end(), u))
                throw InvariantError("adjacency lists inconsistent");
    }
    // reachability
    std::vector<bool> seen(n, false);
    std::vector<State> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        State u = stack.back();
        stack.pop_back();
        for (State v : nfa.out[u])
            if (!seen[v]) { seen[v] = true; stack.push_back(v); }
    }
    for (std::size_t u = 0; u < n; ++u)
        if (!seen[u]) throw InvariantError("state " + std::to_string(u) + " unreachable");
    // effective alphabet
    std::vector<bool> used(nfa.sigma, false);
    for (std::size_t u = 0; u < n; ++u)
        if (!nfa.in[u].empty()) used[nfa.label[u]] = true;
    for (std::size_t c = 0; c < nfa.sigma; ++c)
        if (!used[c])
            throw InvariantError("symbol '" + nfa.symbol_names[c] + "' labels no transition");
}

RawNfa to_raw(const Nfa& nfa) {
    RawNfa raw;
    raw.n = nfa.n;
    raw.initial = nfa.initial;
    raw.declared_label = nfa.label;
    raw.symbol_names = nfa.symbol_names;
    for (std::size_t u = 0; u < nfa.n; ++u)
        for (State v : nfa.out[u])
            raw.edges.push_back({static_cast<State>(u), v, nfa.label[v]});
    return raw;
}

void write_nfa(std::ostream& os, const Nfa& nfa) {
    os << "nfa " << nfa.n << ' ' << nfa.num_edges() << ' ' << nfa.sigma << '\n';
    os << "initial " << nfa.initial << '\n';
    os << "symbols";
    for (const auto& name : nfa.symbol_names) os << ' ' << name;
    os << '\n';
    for (std::size_t u = 0; u < nfa.n; ++u)
        os << "state " << u << ' ' << nfa.symbol_names[nfa.label[u]] << '\n';
    for (std::size_t u = 0; u < nfa.n; ++u)
        for (State v : nfa.out[u]) os << "edge " << u << ' ' << v << '\n';
}

void write_nfa_file(const std::string& path, const Nfa& nfa) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    write_nfa(os, nfa);
}

}  // namespace cfs
