#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linarb/io.hpp"
#include "linarb/solve.hpp"
#include "linarb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidColoring = 1;
constexpr int kExitEngineFailure = 2;
constexpr int kExitBadInput = 3;

linarb::Graph load_graph(const std::string& path) {
    if (path == "-") return linarb::read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw linarb::ParseError("cannot open " + path);
    return linarb::read_edge_list(in);
}

void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw linarb::ParseError("cannot open " + path + " for writing");
    out << text;
}

linarb::Engine parse_engine(const std::string& name) {
    if (name == "auto") return linarb::Engine::Auto;
    if (name == "bounded") return linarb::Engine::Bounded;
    if (name == "high") return linarb::Engine::High;
    throw linarb::ParseError("unknown engine '" + name + "'");
}

int cmd_solve(const std::string& input, const std::string& output,
              unsigned k_flag, const std::string& engine_name, bool trace_flag) {
    linarb::Graph g = load_graph(input);
    linarb::Engine engine = parse_engine(engine_name);
    linarb::Color k = static_cast<linarb::Color>(k_flag);
    if (k != 0 && k < linarb::choose_k(g.max_degree())) {
        std::cerr << "error: --k " << k << " is below the attainable bound "
                  << linarb::choose_k(g.max_degree()) << "\n";
        return kExitBadInput;
    }

    linarb::ReductionTrace trace;
    linarb::LinearColoring col(std::max<std::size_t>(g.vertex_count(), 1), 1);
    try {
        col = linarb::solve(g, k, engine, trace_flag ? &trace : nullptr);
    } catch (const linarb::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const linarb::Error& e) {
        std::cerr << "engine failure: " << e.what() << "\n";
        return kExitEngineFailure;
    }

    if (trace_flag) {
        for (const auto& step : trace) {
            std::cerr << linarb::config_kind_name(step.config.kind);
            for (const auto& e : step.removed) {
                std::cerr << " -" << e.u << "-" << e.v;
            }
            for (const auto& e : step.added) {
                std::cerr << " +" << e.u << "-" << e.v;
            }
            std::cerr << "\n";
        }
    }

    auto rep = linarb::verify(g, col);
    if (!rep.valid) {
        std::cerr << "engine produced an invalid coloring: " << rep.message << "\n";
        return kExitEngineFailure;
    }
    std::ostringstream os;
    linarb::write_coloring(os, g, col);
    emit(output, os.str());
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    linarb::Graph g = load_graph(graph_path);
    std::ifstream in(coloring_path);
    if (!in) throw linarb::ParseError("cannot open " + coloring_path);
    linarb::ColoringData data = linarb::read_coloring(in);
    auto rep = linarb::verify(g, data.k, data.edges);
    if (!rep.valid) {
        std::cout << "invalid: " << rep.message << "\n";
        return kExitInvalidColoring;
    }
    std::cout << "valid: " << rep.colors_used << " colors";
    for (std::size_t c = 0; c < rep.class_sizes.size(); ++c) {
        std::cout << " " << (c + 1) << ":" << rep.class_sizes[c] << "e/"
                  << rep.path_counts[c] << "p";
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_gen(std::size_t n, std::size_t delta, std::uint64_t seed,
            const std::string& output) {
    linarb::Graph g = linarb::gen_planar(n, delta, seed);
    std::ostringstream os;
    linarb::write_edge_list(os, g);
    emit(output, os.str());
    return kExitOk;
}

int cmd_bench(std::size_t min_n, std::size_t max_n, std::size_t delta,
              std::uint64_t seed) {
    std::cout << "n m millis ns_per_nlogn\n";
    for (std::size_t n = min_n; n <= max_n; n *= 2) {
        linarb::Graph g = linarb::gen_planar(n, delta, seed + n);
        std::size_t m = g.edge_count();
        auto t0 = std::chrono::steady_clock::now();
        linarb::LinearColoring col = linarb::solve(g);
        auto t1 = std::chrono::steady_clock::now();
        auto rep = linarb::verify(g, col);
        if (!rep.valid) {
            std::cerr << "engine produced an invalid coloring at n=" << n << ": "
                      << rep.message << "\n";
            return kExitEngineFailure;
        }
        double millis =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        double per = millis * 1e6 / (double(n) * std::log2(double(n)));
        std::cout << n << " " << m << " " << millis << " " << per << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear forest edge partitioning for planar graphs"};
    app.require_subcommand(1);

    std::string input = "-", output = "-", engine = "auto", coloring_path;
    unsigned k_flag = 0;
    bool trace_flag = false;
    std::size_t gen_n = 100, gen_delta = 12, bench_min = 1 << 14,
                bench_max = 1 << 20, bench_delta = 12;
    std::uint64_t seed = 1;

    auto* solve = app.add_subcommand("solve", "color a graph's edges");
    solve->add_option("-i,--input", input, "edge list file, '-' for stdin");
    solve->add_option("-o,--output", output, "coloring file, '-' for stdout");
    solve->add_option("--k", k_flag, "number of colors (default: derived)");
    solve->add_option("--engine", engine, "auto | bounded | high");
    solve->add_flag("--trace", trace_flag, "print reduction steps to stderr");

    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("graph", input, "edge list file")->required();
    verify->add_option("coloring", coloring_path, "coloring file")->required();

    auto* gen = app.add_subcommand("gen", "generate a random planar graph");
    gen->add_option("-n", gen_n, "number of vertices");
    gen->add_option("--delta", gen_delta, "maximum degree");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("-o,--output", output, "edge list file, '-' for stdout");

    auto* bench = app.add_subcommand("bench", "time the solver on random inputs");
    bench->add_option("--min", bench_min, "smallest n (doubled up to --max)");
    bench->add_option("--max", bench_max, "largest n");
    bench->add_option("--delta", bench_delta, "maximum degree of the inputs");
    bench->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) {
            return cmd_solve(input, output, k_flag, engine, trace_flag);
        }
        if (verify->parsed()) return cmd_verify(input, coloring_path);
        if (gen->parsed()) return cmd_gen(gen_n, gen_delta, seed, output);
        return cmd_bench(bench_min, bench_max, bench_delta, seed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    } catch (const linarb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const linarb::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const linarb::Error& e) {
        std::cerr << "engine failure: " << e.what() << "\n";
        return kExitEngineFailure;
    }
}
