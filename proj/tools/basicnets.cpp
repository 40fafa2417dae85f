// Command-line surface for the basic-net census: generation of the sphere
// and projective quadrangulation classes, the involution filter, count
// tables, the generation DAG, and the property-suite verifier.

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bnet/codec.hpp"
#include "bnet/predicates.hpp"
#include "bnet/verify.hpp"
#include "json.hpp"

namespace {

using namespace bnet;

// Hard bounds: past these the closure outgrows desk memory; the paper's
// larger rows come from the external generator pipeline instead.
constexpr int kMaxSphereVertices = 24;
constexpr int kMaxProjectiveVertices = 15;

struct SizeArgs {
    int max_crossings = -1;
    int max_vertices = -1;

    // Net language n and quadrangulation language n_check, per surface.
    int quad_vertices(bool sphere) const {
        if (max_vertices >= 0) return max_vertices;
        return sphere ? max_crossings + 2 : max_crossings + 1;
    }
};

void add_size_flags(CLI::App* cmd, SizeArgs& args) {
    cmd->add_option("--max-crossings", args.max_crossings, "net crossing bound");
    cmd->add_option("--max-vertices", args.max_vertices, "quadrangulation vertex bound");
}

int cmd_gen(const SizeArgs& size, const std::string& surface, const std::string& format,
            int jobs) {
    const bool sphere = surface == "sphere";
    const int bound = size.quad_vertices(sphere);
    if (size.max_crossings < 0 && size.max_vertices < 0) {
        std::cerr << "gen: one of --max-crossings/--max-vertices is required\n";
        return 2;
    }
    if (sphere && bound > kMaxSphereVertices) {
        std::cerr << "gen: refusing bound " << bound << " > " << kMaxSphereVertices
                  << " vertices; this range needs the external generator pipeline\n";
        return 2;
    }
    if (!sphere && bound > kMaxProjectiveVertices) {
        std::cerr << "gen: refusing bound " << bound << " > " << kMaxProjectiveVertices
                  << " vertices; this range needs the external generator pipeline\n";
        return 2;
    }

    std::map<int, long> per_size;
    if (sphere) {
        const bool binary = format == "planar-code";
        if (binary) std::cout << ">>planar_code<<";
        for (const auto& net : exceptional_sphere_nets())
            if (net.crossings <= size.max_crossings || size.max_crossings < 0) {
                if (!binary)
                    std::cout << "# exceptional " << net.name << " (" << net.description << ")\n";
                else
                    std::cerr << "exceptional " << net.name << " (" << net.description << ")\n";
            }
        if (bound >= 8) {
            const auto census = generate_sphere_Q(bound, jobs);
            for (const auto& [v, level] : census.by_size) {
                per_size[v] = static_cast<long>(level.size());
                for (const auto& entry : level) {
                    if (binary)
                        std::cout << emit_planar_code({entry.map}, false);
                    else
                        std::cout << emit_ascii(entry.map) << "\n";
                }
            }
        }
    } else {
        if (format == "planar-code") {
            std::cerr << "gen: rp2 census emits quotient-ascii\n";
            return 2;
        }
        for (const auto& net : exceptional_projective_nets())
            if (net.crossings <= size.max_crossings || size.max_crossings < 0)
                std::cout << "# exceptional " << net.name << " (" << net.description << ")\n";
        if (bound >= 4) {
            const auto census = generate_projective_Qbar(bound, jobs);
            for (const auto& [v, level] : census.by_size) {
                per_size[v] = static_cast<long>(level.size());
                for (const auto& entry : level) std::cout << emit_quotient_ascii(entry.map) << "\n";
            }
        }
    }
    std::cerr << "gen " << surface << ": per-size counts:";
    for (const auto& [v, c] : per_size) std::cerr << " " << v << ":" << c;
    std::cerr << "\n";
    return 0;
}

int cmd_filter(const std::string& input_format) {
    std::string fmt = input_format;
    if (fmt == "auto") {
        const int c = std::cin.peek();
        fmt = (c == '>' || c == EOF || c < '0' || c > '9') ? "planar-code" : "ascii";
    }
    long seen = 0, kept = 0, errors = 0;
    auto process = [&](const OrientedMap& m) {
        ++seen;
        if (auto p = projective_quotient_of(m)) {
            ++kept;
            std::cout << emit_quotient_ascii(*p) << "\n";
        }
    };
    try {
        if (fmt == "planar-code") {
            PlanarCodeReader reader(std::cin);
            while (auto lists = reader.next()) {
                try {
                    process(OrientedMap::from_neighbor_lists(*lists));
                } catch (const map_error& e) {
                    ++errors;
                    std::cerr << "filter: skipping record near byte " << reader.offset() << ": "
                              << e.what() << "\n";
                }
            }
        } else {
            std::string line;
            long line_no = 0;
            while (std::getline(std::cin, line)) {
                ++line_no;
                if (line.empty() || line[0] == '#') continue;
                try {
                    process(parse_ascii(line));
                } catch (const std::runtime_error& e) {
                    ++errors;
                    std::cerr << "filter: skipping line " << line_no << ": " << e.what() << "\n";
                }
            }
        }
    } catch (const codec_error& e) {
        std::cerr << "filter: stream error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "filter: " << seen << " maps read, " << kept << " quotients emitted, " << errors
              << " records skipped\n";
    return errors == 0 ? 0 : 1;
}

int cmd_count(const SizeArgs& size, int sphere_cap, int jobs) {
    const int max_n = size.max_crossings >= 0 ? size.max_crossings : size.max_vertices - 1;
    if (max_n < 3) {
        std::cerr << "count: need --max-crossings >= 3\n";
        return 2;
    }
    if (max_n + 1 > kMaxProjectiveVertices || sphere_cap > kMaxSphereVertices) {
        std::cerr << "count: refusing bound beyond desk scale\n";
        return 2;
    }
    std::cout << emit_count_csv(count_table(max_n, sphere_cap, jobs));
    return 0;
}

int cmd_dag(const SizeArgs& size, int jobs) {
    const int max_n = size.max_crossings >= 0 ? size.max_crossings : size.max_vertices - 1;
    if (max_n < 5 || max_n + 1 > kMaxProjectiveVertices) {
        std::cerr << "dag: need 5 <= --max-crossings <= " << kMaxProjectiveVertices - 1 << "\n";
        return 2;
    }
    const auto dag = generation_dag(max_n, jobs);

    // Stable human names per member, assigned by (size, code) order; the
    // node lines carry the reconstructible quotient-ascii form.
    std::map<CanonicalCode, std::string> name_of;
    for (const auto& [v, level] : dag.census.by_size) {
        int i = 0;
        for (const auto& entry : level) {
            name_of[entry.code] = "q" + std::to_string(v) + "." + std::to_string(i++);
            std::cout << "node " << name_of[entry.code] << " "
                      << emit_quotient_ascii(entry.map) << "\n";
        }
    }
    for (const auto& rec : dag.records) {
        if (!name_of.count(rec.child)) continue;
        std::cout << "edge " << name_of[rec.parent] << " " << name_of[rec.child] << " "
                  << (rec.kind == MoveKind::splitting ? "splitting" : "addition") << " "
                  << rec.multiplicity << "\n";
    }
    return 0;
}

int cmd_verify(const VerifyOptions& options, bool emit_json) {
    const auto results = run_verification(options);
    bool all_pass = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& suite : results) {
        all_pass = all_pass && suite.passed();
        nlohmann::json j{{"suite", suite.name},
                         {"checks", suite.checks},
                         {"failures", suite.failures},
                         {"passed", suite.passed()}};
        if (!suite.notes.empty()) j["notes"] = suite.notes;
        report.push_back(j);
        std::cerr << (suite.passed() ? "pass" : "FAIL") << "  " << suite.name << "  ("
                  << suite.checks << " checks, " << suite.failures << " failures)\n";
    }
    if (emit_json) std::cout << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Basic nets on the sphere and the projective plane via dual quadrangulations"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (output independent of the count)")
        ->capture_default_str();

    SizeArgs gen_size;
    std::string surface, gen_format = "ascii";
    auto* gen = app.add_subcommand("gen", "generate a census");
    gen->add_option("surface", surface, "sphere | rp2")->required();
    add_size_flags(gen, gen_size);
    gen->add_option("--format", gen_format, "ascii | planar-code | quotient-ascii")
        ->capture_default_str();

    std::string filter_format = "auto";
    auto* filter = app.add_subcommand("filter", "keep covers of RP^2 maps, emit quotients");
    filter->add_option("--input-format", filter_format, "auto | planar-code | ascii")
        ->capture_default_str();

    SizeArgs count_size;
    int sphere_cap = 18;
    auto* count = app.add_subcommand("count", "emit the count table as CSV");
    add_size_flags(count, count_size);
    count->add_option("--sphere-cap", sphere_cap,
                      "largest sphere census size for the qQ column")
        ->capture_default_str();

    SizeArgs dag_size;
    auto* dag = app.add_subcommand("dag", "emit the generation DAG");
    add_size_flags(dag, dag_size);

    VerifyOptions vopt;
    bool verify_json = true;
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--max-crossings", vopt.max_crossings)->capture_default_str();
    verify->add_option("--max-vertices", vopt.sphere_max_vertices,
                       "sphere census bound (Theorem 9 sweep)")
        ->capture_default_str();
    verify->add_flag("--theorem9", vopt.theorem9_only, "only the uniqueness sweep");
    verify->add_option("--roundtrips", vopt.random_roundtrips)->capture_default_str();
    verify->add_flag("!--no-json", verify_json, "suppress the JSON report on stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (surface != "sphere" && surface != "rp2") {
                std::cerr << "gen: surface must be sphere or rp2\n";
                return 2;
            }
            std::string format = gen_format;
            if (surface == "rp2" && format == "ascii") format = "quotient-ascii";
            return cmd_gen(gen_size, surface, format, jobs);
        }
        if (filter->parsed()) return cmd_filter(filter_format);
        if (count->parsed()) return cmd_count(count_size, sphere_cap, jobs);
        if (dag->parsed()) return cmd_dag(dag_size, jobs);
        if (verify->parsed()) {
            vopt.jobs = jobs;
            return cmd_verify(vopt, verify_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
