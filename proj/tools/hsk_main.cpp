// hsk: construct Hamming codes and shells, embed certified cycles, and verify
// domination/connectivity claims from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hsk/hsk.hpp"

namespace {

using hsk::json;
using hsk::vertex;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hsk::argument_error("cannot open output file " + path);
    out << text;
}

json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hsk::argument_error("cannot open input file " + path);
    json j;
    in >> j;
    return j;
}

int mersenne_order(int n) {
    for (int m = 2; m <= 5; ++m)
        if (n == (1 << m) - 1) return m;
    throw hsk::argument_error("n must be 2^m - 1 (3, 7, 15, or 31)");
}

hsk::Shell coset_shell(int n, int coset) {
    const int m = mersenne_order(n);
    const auto family = hsk::coset_family(hsk::construct_hamming_pid(m));
    if (coset < 0 || coset >= static_cast<int>(family.size()))
        throw hsk::argument_error("coset index out of range 0.." +
                                  std::to_string(family.size() - 1));
    return hsk::make_shell(n, family[static_cast<std::size_t>(coset)]);
}

hsk::Edge parse_edge(const std::string& text, int n) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw hsk::argument_error("edge must be given as U,V decimal labels");
    vertex u = 0, v = 0;
    try {
        u = std::stoull(text.substr(0, comma));
        v = std::stoull(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw hsk::argument_error("edge labels must be decimal integers");
    }
    hsk::check_label(u, n);
    hsk::check_label(v, n);
    if (hsk::hamming_distance(u, v) != 1)
        throw hsk::argument_error("labels differ in more than one bit");
    return {u, v};
}

std::string dot_export(const hsk::Shell& shell) {
    std::string out = "graph shell {\n";
    for (vertex v : shell.survivors())
        out += "  \"" + hsk::binary_string(v, shell.n) + "\";\n";
    for (const hsk::Edge& e : shell.surviving_edges())
        out += "  \"" + hsk::binary_string(e.u, shell.n) + "\" -- \"" +
               hsk::binary_string(e.v, shell.n) + "\";\n";
    out += "}\n";
    return out;
}

std::string edgelist_export(const hsk::Shell& shell) {
    std::string out;
    for (const hsk::Edge& e : shell.surviving_edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct SampleFailure {
    bool failed = false;
    json detail;
};

// Seeded random (edge, length) requests against the embedding engine.
json sampled_bipancyclicity(const hsk::ShellCycleEngine& engine, int samples,
                            std::uint64_t seed, bool include_hamiltonian) {
    std::mt19937_64 rng(seed);
    const auto edges = engine.shell().surviving_edges();
    const int max_len = static_cast<int>(engine.survivor_count());
    json failures = json::array();
    for (int i = 0; i < samples; ++i) {
        const hsk::Edge e = edges[rng() % edges.size()];
        int len = (include_hamiltonian && i == 0)
                      ? max_len
                      : 4 + 2 * static_cast<int>(rng() % ((max_len - 2) / 2));
        try {
            const hsk::Cycle c = engine.cycle_through(e, len);
            const auto verdict = hsk::validate_cycle(engine.shell(), c, e, len);
            if (!verdict.valid)
                failures.push_back(json{{"edge", json::array({e.u, e.v})},
                                        {"length", len},
                                        {"reason", verdict.reason}});
        } catch (const std::exception& ex) {
            failures.push_back(json{{"edge", json::array({e.u, e.v})},
                                    {"length", len},
                                    {"reason", ex.what()}});
        }
    }
    return json{{"mode", "sample"},
                {"requests", samples},
                {"failures", failures}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamming shells: codes, certified cycle embedding, connectivity"};
    app.require_subcommand(1);

    std::string out_path = "-";
    const auto add_out = [&out_path](CLI::App* sub) {
        sub->add_option("--out", out_path, "output file (default stdout)");
    };

    // code gen --m M
    auto* code = app.add_subcommand("code", "Hamming code construction");
    code->require_subcommand(1);
    auto* code_gen = code->add_subcommand("gen", "generate the code of order m");
    int gen_m = 2;
    code_gen->add_option("--m", gen_m, "check-matrix order (2..4)")->required();

    // pid lift --m M
    auto* pid = app.add_subcommand("pid", "perfect independent dominating sets");
    pid->require_subcommand(1);
    auto* pid_lift = pid->add_subcommand("lift", "lift the order-m code to Q_{2n+1}");
    int lift_m = 2;
    pid_lift->add_option("--m", lift_m, "base code order (2..3)")
        ->required()
        ->check(CLI::Range(2, 3));

    // shell export --n N [--coset I] --format F
    auto* shell_cmd = app.add_subcommand("shell", "Hamming shell artifacts");
    shell_cmd->require_subcommand(1);
    auto* shell_export = shell_cmd->add_subcommand("export", "emit the shell graph");
    int exp_n = 7;
    int exp_coset = 0;
    std::string exp_format = "json";
    shell_export->add_option("--n", exp_n, "cube dimension (2^m - 1)")->required();
    shell_export->add_option("--coset", exp_coset, "coset index (default 0)");
    shell_export->add_option("--format", exp_format, "json | dot | edgelist")
        ->check(CLI::IsMember({"json", "dot", "edgelist"}));

    // cycle embed --n N --edge U,V --length L [--coset I]
    auto* cycle_cmd = app.add_subcommand("cycle", "certified cycle embedding");
    cycle_cmd->require_subcommand(1);
    auto* cycle_embed = cycle_cmd->add_subcommand("embed", "cycle of a given even length "
                                                           "through a given edge");
    int emb_n = 7;
    int emb_coset = 0;
    int emb_len = 4;
    std::string emb_edge;
    cycle_embed->add_option("--n", emb_n, "cube dimension (2^m - 1)")->required();
    cycle_embed->add_option("--edge", emb_edge, "edge as U,V decimal labels")->required();
    cycle_embed->add_option("--length", emb_len, "even cycle length")->required();
    cycle_embed->add_option("--coset", emb_coset, "coset index (default 0)");

    // verify ...
    auto* verify = app.add_subcommand("verify", "re-verify artifacts and claims");
    verify->require_subcommand(1);

    auto* verify_cert = verify->add_subcommand("cert", "re-check a cycle certificate");
    std::string cert_file;
    verify_cert->add_option("file", cert_file, "certificate JSON file")->required();

    auto* verify_bip = verify->add_subcommand("bipancyclic", "cycle sweep on a shell");
    int bip_n = 7;
    int bip_coset = 0;
    bool bip_exhaustive = false;
    int bip_sample = 0;
    int bip_jobs = 0;
    std::uint64_t bip_seed = 0;
    verify_bip->add_option("--n", bip_n, "cube dimension (2^m - 1)")->required();
    verify_bip->add_option("--coset", bip_coset, "coset index (default 0)");
    verify_bip->add_flag("--exhaustive", bip_exhaustive, "every edge x every even length");
    verify_bip->add_option("--sample", bip_sample, "number of seeded random requests");
    verify_bip->add_option("--jobs", bip_jobs, "worker count")->envname("HSK_JOBS");
    verify_bip->add_option("--seed", bip_seed, "RNG seed (default 0)");

    std::string set_file;
    auto* verify_pid = verify->add_subcommand("pid", "perfect independent domination");
    verify_pid->add_option("--file", set_file, "vertex set JSON file")->required();
    auto* verify_strong = verify->add_subcommand("strongind", "strong independence");
    verify_strong->add_option("--file", set_file, "vertex set JSON file")->required();
    auto* verify_total = verify->add_subcommand("totalpd", "total perfect domination");
    verify_total->add_option("--file", set_file, "vertex set JSON file")->required();

    // connectivity --n N [--faults FILE] [--threshold K | --exact]
    auto* conn = app.add_subcommand("connectivity", "disjoint-path verification");
    int conn_n = 7;
    std::string faults_file;
    int conn_threshold = -1;
    bool conn_exact = false;
    int conn_sample = 0;
    std::uint64_t conn_seed = 0;
    conn->add_option("--n", conn_n, "cube dimension")->required();
    conn->add_option("--faults", faults_file, "vertex set JSON of removed vertices "
                                              "(default: Hamming code when n = 2^m - 1)");
    conn->add_option("--threshold", conn_threshold, "verify connectivity >= K");
    conn->add_flag("--exact", conn_exact, "compute exact connectivity");
    conn->add_option("--sample", conn_sample,
                     "threshold mode: check this many seeded random pairs instead of all");
    conn->add_option("--seed", conn_seed, "RNG seed for --sample (default 0)");

    // bench sweep --n N
    auto* bench = app.add_subcommand("bench", "timing runs");
    bench->require_subcommand(1);
    auto* bench_sweep = bench->add_subcommand("sweep", "time the exhaustive cycle sweep");
    int bench_n = 7;
    int bench_jobs = 0;
    bench_sweep->add_option("--n", bench_n, "cube dimension (2^m - 1)")->required();
    bench_sweep->add_option("--jobs", bench_jobs, "worker count")->envname("HSK_JOBS");

    for (CLI::App* leaf : {code_gen, pid_lift, shell_export, cycle_embed, verify_cert,
                           verify_bip, verify_pid, verify_strong, verify_total, conn,
                           bench_sweep})
        add_out(leaf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (code_gen->parsed()) {
            const hsk::LinearCode c = hsk::kernel(hsk::hamming_parity_check(gen_m));
            write_text(out_path, hsk::code_to_json(c).dump(2) + "\n");
            return 0;
        }
        if (pid_lift->parsed()) {
            const hsk::PidSet lifted = hsk::lift_pid(hsk::construct_hamming_pid(lift_m));
            const hsk::LinearCode as_code{
                lifted.base.n,
                static_cast<int>(63 - std::countl_zero(lifted.base.size())),
                lifted.base.members,
                hsk::lift_check_matrix(hsk::hamming_parity_check(lift_m))};
            write_text(out_path, hsk::code_to_json(as_code).dump(2) + "\n");
            return 0;
        }
        if (shell_export->parsed()) {
            const hsk::Shell shell = coset_shell(exp_n, exp_coset);
            if (exp_format == "json")
                write_text(out_path, hsk::shell_to_json(shell).dump(2) + "\n");
            else if (exp_format == "dot")
                write_text(out_path, dot_export(shell));
            else
                write_text(out_path, edgelist_export(shell));
            return 0;
        }
        if (cycle_embed->parsed()) {
            const hsk::Shell shell = coset_shell(emb_n, emb_coset);
            const hsk::Edge edge = parse_edge(emb_edge, emb_n);
            const hsk::ShellCycleEngine engine(shell);
            const hsk::Cycle c = engine.cycle_through(edge, emb_len);
            write_text(out_path,
                       hsk::cycle_cert_to_json(shell, c, edge, emb_len).dump(2) + "\n");
            return 0;
        }
        if (verify_cert->parsed()) {
            const hsk::Verdict verdict = hsk::verify_cycle_cert_json(read_json(cert_file));
            write_text(out_path, json{{"valid", verdict.valid},
                                      {"reason", verdict.reason}}.dump(2) + "\n");
            return verdict.valid ? 0 : 1;
        }
        if (verify_bip->parsed()) {
            const hsk::Shell shell = coset_shell(bip_n, bip_coset);
            const hsk::ShellCycleEngine engine(shell);
            if (bip_sample > 0 && bip_exhaustive)
                throw hsk::argument_error("--exhaustive and --sample are exclusive");
            if (bip_sample > 0) {
                const json rep = sampled_bipancyclicity(engine, bip_sample, bip_seed, true);
                write_text(out_path, rep.dump(2) + "\n");
                return rep.at("failures").empty() ? 0 : 1;
            }
            const int jobs = bip_jobs > 0 ? bip_jobs : default_jobs();
            const hsk::SweepReport rep = hsk::exhaustive_bipancyclicity(
                shell, [&](const hsk::Edge& e, int l) { return engine.cycle_through(e, l); },
                jobs);
            write_text(out_path, hsk::sweep_report_to_json(rep).dump(2) + "\n");
            return rep.clean() ? 0 : 1;
        }
        if (verify_pid->parsed() || verify_strong->parsed() || verify_total->parsed()) {
            const hsk::VertexSet s = hsk::vertex_set_from_json(read_json(set_file));
            bool valid = false;
            std::string kind;
            if (verify_pid->parsed()) {
                kind = "pid";
                valid = hsk::is_perfect_dominating(s) && hsk::is_independent(s);
            } else if (verify_strong->parsed()) {
                kind = "strongly_independent";
                valid = hsk::is_strongly_independent(s);
            } else {
                kind = "total_pd";
                valid = hsk::is_perfect_dominating(s) && hsk::is_total_dominating(s);
            }
            write_text(out_path,
                       json{{"kind", kind}, {"n", s.n}, {"size", s.size()}, {"valid", valid}}
                               .dump(2) +
                           "\n");
            return valid ? 0 : 1;
        }
        if (conn->parsed()) {
            hsk::VertexSet faults(conn_n, {});
            if (!faults_file.empty())
                faults = hsk::vertex_set_from_json(read_json(faults_file));
            else if ((conn_n & (conn_n + 1)) == 0 && conn_n >= 3)
                faults = hsk::construct_hamming_pid(mersenne_order(conn_n)).base;
            if (faults.n != conn_n) throw hsk::argument_error("faults dimension mismatch");
            const hsk::Shell shell = hsk::make_shell(conn_n, faults);

            if (conn_exact && conn_threshold >= 0)
                throw hsk::argument_error("--threshold and --exact are exclusive");
            if (conn_exact) {
                const int kappa = hsk::vertex_connectivity(shell);
                write_text(out_path, json{{"mode", "exact"}, {"kappa", kappa}}.dump(2) + "\n");
                return 0;
            }
            if (conn_threshold < 0)
                throw hsk::argument_error("need --threshold K or --exact");
            if (conn_sample > 0) {
                std::mt19937_64 rng(conn_seed);
                const auto survivors = shell.survivors();
                hsk::FlowGraph fg(shell);
                json failures = json::array();
                for (int i = 0; i < conn_sample; ++i) {
                    const vertex s = survivors[rng() % survivors.size()];
                    vertex t = survivors[rng() % survivors.size()];
                    if (t == s || hsk::hamming_distance(s, t) == 1) {
                        --i;
                        continue;
                    }
                    if (fg.max_flow(s, t, conn_threshold) < conn_threshold)
                        failures.push_back(json::array({s, t}));
                }
                write_text(out_path, json{{"mode", "sampled_threshold"},
                                          {"k", conn_threshold},
                                          {"pairs", conn_sample},
                                          {"failures", failures}}.dump(2) + "\n");
                return failures.empty() ? 0 : 1;
            }
            const hsk::ConnectivityResult res =
                hsk::verify_connectivity_at_least(shell, conn_threshold);
            if (res.ok) {
                write_text(out_path, json{{"mode", "threshold"},
                                          {"k", conn_threshold},
                                          {"holds", true}}.dump(2) + "\n");
                return 0;
            }
            write_text(out_path, json{{"mode", "threshold"},
                                      {"k", conn_threshold},
                                      {"holds", false},
                                      {"witness", hsk::witness_cut_to_json(*res.witness)}}
                                         .dump(2) +
                                     "\n");
            return 1;
        }
        if (bench_sweep->parsed()) {
            const hsk::Shell shell = coset_shell(bench_n, 0);
            const hsk::ShellCycleEngine engine(shell);
            const int jobs = bench_jobs > 0 ? bench_jobs : default_jobs();
            const auto t0 = std::chrono::steady_clock::now();
            const hsk::SweepReport rep = hsk::exhaustive_bipancyclicity(
                shell, [&](const hsk::Edge& e, int l) { return engine.cycle_through(e, l); },
                jobs);
            const auto t1 = std::chrono::steady_clock::now();
            const double secs = std::chrono::duration<double>(t1 - t0).count();
            const std::uint64_t requests = rep.edges * rep.lengths_per_edge;
            // timing on stderr keeps stdout deterministic for fixed inputs
            std::cerr << "sweep " << requests << " requests in " << secs << " s ("
                      << (secs > 0 ? static_cast<std::uint64_t>(requests / secs) : requests)
                      << " req/s, jobs=" << jobs << ")\n";
            write_text(out_path, json{{"requests", requests},
                                      {"failures", rep.failures.size()}}.dump(2) + "\n");
            return rep.clean() ? 0 : 1;
        }
    } catch (const hsk::argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
