// cfs_cli.cpp -- command-line front end: normalize, build, query, check,
// gen, bench. Exit codes: 0 ok, 1 check mismatch, 2 parse error / bad id,
// 3 violated invariant (e.g. non-forward-stable input).
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cfs/cfs_index.hpp"
#include "cfs/colex_oracle.hpp"
#include "cfs/nfa.hpp"
#include "cfs/partition.hpp"
#include "cfs/random_nfa.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 42;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

cfs::Nfa load_normalized(const std::string& path) {
    return cfs::normalize(cfs::parse_nfa_file(path)).nfa;
}

int cmd_normalize(const std::string& in, const std::string& out) {
    cfs::Nfa nfa = load_normalized(in);
    nfa = cfs::forward_stable_quotient(nfa);
    cfs::write_nfa_file(out, nfa);
    std::cout << "normalized: n=" << nfa.n << " m=" << nfa.num_edges() << "\n";
    return 0;
}

int cmd_build(const std::string& in, const std::string& out) {
    cfs::Nfa nfa = load_normalized(in);
    auto t0 = std::chrono::steady_clock::now();
    cfs::CfsIndex idx;
    try {
        idx = cfs::build_index(nfa);
    } catch (const cfs::InvariantError& e) {
        std::cerr << "error: " << e.what()
                  << "\nhint: run `cfs normalize` to quotient the input first\n";
        return 3;
    }
    double build_ms = ms_since(t0);
    cfs::write_index_file(out, idx);
    std::cout << "words=" << cfs::serialized_words(idx) << " build_ms=" << build_ms
              << "\n";
    return 0;
}

int cmd_query(const std::string& in, const std::string& pairs) {
    cfs::CfsIndex idx = cfs::read_index_file(in);
    std::stringstream ss(pairs);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::size_t comma = item.find(',');
        unsigned long u, v;
        try {
            if (comma == std::string::npos) throw std::invalid_argument(item);
            u = std::stoul(item.substr(0, comma));
            v = std::stoul(item.substr(comma + 1));
        } catch (const std::exception&) {
            std::cerr << "error: bad pair '" << item << "'\n";
            return 2;
        }
        if (u >= idx.n || v >= idx.n) {
            std::cerr << "error: state id out of range in '" << item << "'\n";
            return 2;
        }
        auto t = cfs::query(idx, static_cast<cfs::State>(u), static_cast<cfs::State>(v));
        std::cout << u << ' ' << v << ' ' << (t.leq ? "true" : "false")
                  << " case=" << t.rule << "\n";
    }
    return 0;
}

void dump_counterexample(const cfs::Nfa& nfa) {
    cfs::Nfa small = cfs::minimize_counterexample(
        nfa, [](const cfs::Nfa& g) { return cfs::find_mismatch(g).has_value(); });
    auto pair = cfs::find_mismatch(small);
    std::cerr << "mismatch on pair (" << pair->first << "," << pair->second
              << ") of this automaton:\n";
    cfs::write_nfa(std::cerr, small);
    cfs::CfsIndex idx = cfs::build_index(small);
    auto t = cfs::query(idx, pair->first, pair->second);
    auto oracle = cfs::max_colex_order(small);
    std::cerr << "index:  " << (t.leq ? "true" : "false") << " case=" << t.rule
              << " steps=" << t.steps << " meet=" << t.meet
              << " inversion=" << t.inversion << "\n"
              << "oracle: " << (oracle.leq(pair->first, pair->second) ? "true" : "false")
              << "\n";
}

int cmd_check(std::size_t trials, uint64_t seed, std::size_t max_n) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
        std::size_t n = pick_n(rng);
        std::uniform_int_distribution<std::size_t> pick_sigma(2, std::max<std::size_t>(2, std::min<std::size_t>(n, 5)));
        std::size_t sigma = pick_sigma(rng);
        std::uniform_int_distribution<std::size_t> pick_m(n, 3 * n);
        std::size_t m = pick_m(rng);
        cfs::Nfa nfa = cfs::random_forward_stable_nfa(n, m, sigma, rng());
        auto mismatch = cfs::find_mismatch(nfa);
        std::cout << "trial " << t << " n=" << nfa.n << " m=" << nfa.num_edges()
                  << " mismatches=" << (mismatch ? 1 : 0) << "\n";
        if (mismatch) {
            dump_counterexample(nfa);
            return 1;
        }
    }
    return 0;
}

int cmd_gen(std::size_t n, std::size_t m, std::size_t sigma, uint64_t seed,
            const std::string& out) {
    if (n == 0 || sigma == 0 || m < n || (n > 1 && sigma < 2)) {
        std::cerr << "error: unsatisfiable size constraints\n";
        return 2;
    }
    cfs::Nfa nfa = cfs::random_forward_stable_nfa(n, m, sigma, seed);
    cfs::write_nfa_file(out, nfa);
    std::cout << "generated: n=" << nfa.n << " m=" << nfa.num_edges() << "\n";
    return 0;
}

void bench_one(const cfs::Nfa& nfa, std::size_t queries, uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    cfs::CfsIndex idx = cfs::build_index(nfa);
    double build_ms = ms_since(t0);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<cfs::State> pick(0, static_cast<cfs::State>(nfa.n - 1));
    std::vector<std::pair<cfs::State, cfs::State>> qs(queries);
    for (auto& q : qs) q = {pick(rng), pick(rng)};

    uint64_t total_steps = 0, max_steps = 0;
    auto q0 = std::chrono::steady_clock::now();
    for (auto [u, v] : qs) {
        auto t = cfs::query(idx, u, v);
        total_steps += t.steps;
        max_steps = std::max<uint64_t>(max_steps, t.steps);
    }
    double query_ns =
        std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - q0)
            .count() /
        static_cast<double>(queries);

    std::cout << nfa.n << ',' << nfa.num_edges() << ',' << cfs::serialized_words(idx)
              << ',' << build_ms << ','
              << static_cast<double>(total_steps) / static_cast<double>(queries) << ','
              << max_steps << ',' << query_ns << "\n";
}

int cmd_bench(const std::string& in, const std::vector<std::size_t>& sizes,
              std::size_t m_factor, std::size_t sigma, uint64_t seed,
              std::size_t queries) {
    std::cout << "n,m,words,build_ms,mean_steps,max_steps,mean_query_ns\n";
    if (!in.empty()) {
        bench_one(load_normalized(in), queries, seed);
        return 0;
    }
    for (std::size_t n : sizes)
        bench_one(cfs::random_forward_stable_nfa(n, m_factor * n, sigma, seed), queries,
                  seed);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum co-lex order index for forward-stable NFAs"};
    app.require_subcommand(1);

    std::string in, out, pairs;
    std::size_t trials = 100, max_n = 20, n = 10, m = 20, sigma = 3, queries = 10000;
    std::size_t m_factor = 2;
    uint64_t seed = kDefaultSeed;
    std::vector<std::size_t> sizes{50, 100, 200};

    auto* c_norm = app.add_subcommand("normalize", "normalize + quotient an NFA file");
    c_norm->add_option("-i", in)->required();
    c_norm->add_option("-o", out)->required();

    auto* c_build = app.add_subcommand("build", "build an index from an NFA file");
    c_build->add_option("-i", in)->required();
    c_build->add_option("-o", out)->required();

    auto* c_query = app.add_subcommand("query", "run order queries against an index");
    c_query->add_option("-i", in)->required();
    c_query->add_option("--pairs", pairs, "semicolon-separated u,v pairs")->required();

    auto* c_check = app.add_subcommand("check", "random instances vs brute-force oracle");
    c_check->add_option("--trials", trials);
    c_check->add_option("--seed", seed);
    c_check->add_option("--max-n", max_n);

    auto* c_gen = app.add_subcommand("gen", "generate a random forward-stable NFA");
    c_gen->add_option("-n", n);
    c_gen->add_option("-m", m);
    c_gen->add_option("--sigma", sigma);
    c_gen->add_option("--seed", seed);
    c_gen->add_option("-o", out)->required();

    auto* c_bench = app.add_subcommand("bench", "build/query timings as CSV");
    c_bench->add_option("-i", in);
    c_bench->add_option("-n", sizes, "instance sizes to generate");
    c_bench->add_option("--m-factor", m_factor);
    c_bench->add_option("--sigma", sigma);
    c_bench->add_option("--seed", seed);
    c_bench->add_option("--queries", queries);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_norm->parsed()) return cmd_normalize(in, out);
        if (c_build->parsed()) return cmd_build(in, out);
        if (c_query->parsed()) return cmd_query(in, pairs);
        if (c_check->parsed()) return cmd_check(trials, seed, max_n);
        if (c_gen->parsed()) return cmd_gen(n, m, sigma, seed, out);
        if (c_bench->parsed())
            return cmd_bench(in, sizes, m_factor, sigma, seed, queries);
    } catch (const cfs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cfs::InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
