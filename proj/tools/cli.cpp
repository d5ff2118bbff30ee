#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fjoin/closed_form.hpp"
#include "fjoin/harness.hpp"
#include "fjoin/serialize.hpp"

namespace fjoin::cli {
namespace {

// Raised for errors the user should fix on the command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an input file cannot be read or decoded.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + path + "'");
    return slurp(file);
}

Graph load_graph(const std::optional<std::string>& path, std::istream& in) {
    const std::string text = path ? read_file(*path) : slurp(in);
    try {
        return parse_edge_list(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), std::string(path ? *path : "<stdin>") + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

std::optional<std::uint64_t> env_seed() {
    const char* raw = std::getenv("FJOIN_SEED");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(raw, &used);
        if (raw[used] != '\0') throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string("FJOIN_SEED is not an unsigned integer: '") + raw + "'");
    }
}

AuditGrid parse_grid(const std::string& spec) {
    AuditGrid grid;
    try {
        if (auto dots = spec.find(".."); dots != std::string::npos) {
            grid.lo = std::stoi(spec.substr(0, dots));
            grid.hi = std::stoi(spec.substr(dots + 2));
        } else {
            grid.hi = std::stoi(spec);
        }
    } catch (const std::exception&) {
        throw UsageError("--grid expects HI or LO..HI, got '" + spec + "'");
    }
    if (grid.lo < 1 || grid.hi < grid.lo) throw UsageError("--grid range is empty: '" + spec + "'");
    return grid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derived graphs, F-joins and closed-form F-index verification", "fjoin"};
    app.require_subcommand(1, 1);

    std::string family_name;
    std::size_t gen_n = 0;
    auto* gen = app.add_subcommand("gen", "Write a path, cycle, complete or star graph as an edge list");
    gen->add_option("--family", family_name, "path | cycle | complete | star")->required();
    gen->add_option("--n", gen_n, "Vertex count")->required();

    std::string kind_name;
    std::optional<std::string> in_path;
    std::optional<std::string> tags_path;
    auto* derive_cmd = app.add_subcommand("derive", "Build S(G), R(G), Q(G) or T(G)");
    derive_cmd->add_option("--kind", kind_name, "S | R | Q | T")->required();
    derive_cmd->add_option("--in", in_path, "Input edge list (default: stdin)");
    derive_cmd->add_option("--tags", tags_path, "Write vertex provenance JSON to this file");

    std::string mode_name;
    std::optional<std::string> g1_path;
    std::optional<std::string> g2_path;
    auto* join_cmd = app.add_subcommand("join", "Build the vertex or edge F-join of two graphs");
    join_cmd->add_option("--kind", kind_name, "S | R | Q | T")->required();
    join_cmd->add_option("--mode", mode_name, "vertex | edge")->required();
    join_cmd->add_option("--g1", g1_path, "First operand (default: stdin)");
    join_cmd->add_option("--g2", g2_path, "Second operand (default: stdin)");
    join_cmd->add_option("--tags", tags_path, "Write vertex provenance JSON to this file");

    bool as_json = false;
    auto* index_cmd = app.add_subcommand("index", "Compute n, m, M1, M2, F, HM, ReZM, M4");
    index_cmd->add_option("--in", in_path, "Input edge list (default: stdin)");
    index_cmd->add_flag("--json", as_json, "Emit JSON instead of aligned text");

    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed_flag;
    auto* verify_cmd = app.add_subcommand("verify", "Check all eight closed formulas against construction");
    verify_cmd->add_option("--config", config_path, "Corpus config JSON (default: built-in corpus)");
    verify_cmd->add_option("--seed", seed_flag, "Master seed for the random trials");

    std::string grid_spec = "8";
    auto* audit_cmd = app.add_subcommand("audit", "Compare printed P/C example polynomials with the formulas");
    audit_cmd->add_option("--grid", grid_spec, "Grid window for n and m: HI or LO..HI")->capture_default_str();

    std::size_t bench_n1 = 0;
    std::size_t bench_n2 = 0;
    double density = 0.0;
    bool no_header = false;
    auto* bench_cmd = app.add_subcommand("bench", "Time closed-form evaluation against composite construction");
    bench_cmd->add_option("--n1", bench_n1, "Vertices in G1")->required();
    bench_cmd->add_option("--n2", bench_n2, "Vertices in G2")->required();
    bench_cmd->add_option("--density", density, "Edge density in [0, 1]")->required();
    bench_cmd->add_option("--seed", seed_flag, "Random seed");
    bench_cmd->add_flag("--no-header", no_header, "Omit the CSV header line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "fjoin: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (gen->parsed()) {
            out << render_edge_list(generate(parse_family(family_name), gen_n));
        } else if (derive_cmd->parsed()) {
            const DerivedKind kind = parse_kind(kind_name);
            const ProvenancedGraph result = derive(kind, load_graph(in_path, in));
            out << render_edge_list(result.graph);
            if (tags_path) write_file(*tags_path, dump_line(provenance_json(result)));
        } else if (join_cmd->parsed()) {
            const OperationSpec spec{parse_kind(kind_name), parse_mode(mode_name)};
            if (!g1_path && !g2_path) throw UsageError("join needs --g1 or --g2; only one may come from stdin");
            const Graph g1 = load_graph(g1_path, in);
            const Graph g2 = load_graph(g2_path, in);
            const ProvenancedGraph result = f_join(spec, g1, g2);
            out << render_edge_list(result.graph);
            if (tags_path) write_file(*tags_path, dump_line(provenance_json(result)));
        } else if (index_cmd->parsed()) {
            const GraphInvariants inv = invariants(load_graph(in_path, in));
            out << (as_json ? dump_line(to_json(inv)) : to_text(inv));
        } else if (verify_cmd->parsed()) {
            CorpusConfig config;
            if (config_path) {
                try {
                    config = corpus_config_from_json(Json::parse(read_file(*config_path)));
                } catch (const Json::exception& e) {
                    throw InputError(*config_path + ": " + e.what());
                } catch (const DomainError& e) {
                    throw InputError(*config_path + ": " + e.what());
                }
            }
            if (seed_flag) {
                config.seed = *seed_flag;
            } else if (auto env = env_seed()) {
                config.seed = *env;
            }
            const VerificationReport report = verify_corpus(config);
            out << dump_line(to_json(report));
            if (report.mismatches() > 0) {
                err << "fjoin: " << report.mismatches() << " of " << report.total() << " records mismatch\n";
                return kMismatch;
            }
        } else if (audit_cmd->parsed()) {
            out << dump_line(to_json(audit_examples(parse_grid(grid_spec))));
        } else if (bench_cmd->parsed()) {
            std::uint64_t seed = 42;
            if (seed_flag) {
                seed = *seed_flag;
            } else if (auto env = env_seed()) {
                seed = *env;
            }
            const BenchRecord rec = bench_compare(bench_n1, bench_n2, density, seed);
            if (!no_header) out << BenchRecord::csv_header() << '\n';
            out << rec.csv_row() << '\n';
        }
    } catch (const OverflowError& e) {
        err << "fjoin: " << e.what() << '\n';
        return kOverflow;
    } catch (const ParseError& e) {
        err << "fjoin: parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InputError& e) {
        err << "fjoin: " << e.what() << '\n';
        return kParseError;
    } catch (const UsageError& e) {
        err << "fjoin: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "fjoin: " << e.what() << '\n';
        return kUsageError;
    }
    return kOk;
}

}  // namespace fjoin::cli
