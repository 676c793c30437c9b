#include "ksforge/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ksforge/catalog.hpp"
#include "ksforge/iso.hpp"
#include "ksforge/pipeline.hpp"
#include "ksforge/states.hpp"
#include "ksforge/subsets.hpp"
#include "ksforge/vectors.hpp"

namespace ksforge::cli {

namespace {

/// Applies fn to every nonblank stdin line; parse/processing failures are
/// reported to err with their line number and the stream continues.
/// Returns 0, or 1 when any line failed.
int for_each_line(std::istream& in, std::ostream& err,
                  const std::function<void(const std::string&)>& fn) {
    std::string line;
    std::size_t lineno = 0;
    int rc = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        }
        if (blank) continue;
        try {
            fn(line);
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            rc = 1;
        }
    }
    return rc;
}

double default_timeout_seconds() {
    const char* env = std::getenv("KS_FORGE_TIMEOUT");
    if (!env || !*env) return 0.0;
    try {
        return std::stod(env);
    } catch (...) {
        return 0.0;
    }
}

const CandidatePool& resolve_pool(const std::string& spec,
                                  std::optional<CandidatePool>& storage) {
    if (spec == "m101") return standard_pool_m101();
    if (spec == "table2-22-11") return catalog::table2_22_11_pool();
    std::ifstream file(spec);
    if (!file) throw MmpError("cannot open pool file '" + spec + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    storage.emplace(CandidatePool::parse(buf.str(), spec));
    return *storage;
}

std::string witness_states(const StateAssignment& s) { return s.str(); }

std::string witness_rays(const VectorAssignment& va) {
    std::string out;
    for (const auto& [v, ray] : va.rays) {
        if (!out.empty()) out += ' ';
        out += vertex_symbol(v);
        out += '=';
        out += ray.str();
    }
    return out;
}

std::string witness_mapping(const EdgeMapping& m) {
    std::string out;
    for (std::size_t i = 0; i < m.ref_edge_of.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(i) + "->" + std::to_string(m.ref_edge_of[i]);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
    CLI::App app{"MMP hypergraph toolkit for Kochen-Specker set analysis"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand(
        "validate", "check MMP syntax and diagram conditions per line");

    auto* states = app.add_subcommand(
        "states", "print HAS-STATE or KS per line");
    bool states_witness = false;
    states->add_flag("--witness", states_witness,
                     "append an admissible state when one exists");

    auto* subgraph = app.add_subcommand(
        "subgraph", "per-line containment in a reference diagram");
    std::string ref_path;
    bool subgraph_witness = false;
    subgraph->add_option("--ref", ref_path, "file with the reference diagram")
        ->required();
    subgraph->add_flag("--witness", subgraph_witness,
                       "append the edge mapping");

    auto* subsets = app.add_subcommand(
        "subsets", "stream edge-subsets of each input diagram");
    bool keep_isolated = false;
    bool dedup = false;
    int subsets_jobs = 1;
    subsets->add_flag("--keep-isolated", keep_isolated,
                      "do not suppress subsets with isolated edges");
    subsets->add_flag("--dedup", dedup, "emit one diagram per isomorphism class");
    subsets->add_option("--jobs", subsets_jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    auto* vfind = app.add_subcommand(
        "vectorfind", "search a ray assignment over a candidate pool");
    std::string pool_spec = "m101";
    double timeout_seconds = default_timeout_seconds();
    bool vfind_witness = false;
    vfind->add_option("--pool", pool_spec,
                      "m101, table2-22-11, or a pool file path");
    vfind->add_option("--timeout", timeout_seconds,
                      "per-diagram timeout in seconds (0 = none)");
    vfind->add_flag("--witness", vfind_witness, "append the assignment");

    auto* canon = app.add_subcommand("canon", "canonical key per line");

    auto* catalog_cmd = app.add_subcommand("catalog", "print shipped fixtures");
    std::string catalog_name;
    bool catalog_list = false;
    bool catalog_vectors = false;
    catalog_cmd->add_option("name", catalog_name, "fixture name");
    catalog_cmd->add_flag("--list", catalog_list, "list fixture names");
    catalog_cmd->add_flag("--vectors", catalog_vectors,
                          "print the fixture's ray assignment");

    auto* table1 = app.add_subcommand(
        "table1", "classify the KS edge-subsets of the 24-24 set");
    std::string out_dir;
    int table1_jobs = 1;
    bool table1_progress = false;
    table1->add_option("--out-dir", out_dir,
                       "write table1.tsv and representatives.mmp here");
    table1->add_option("--jobs", table1_jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    table1->add_flag("--progress", table1_progress, "progress on stderr");

    auto* critical = app.add_subcommand(
        "critical", "criticality report for diagrams on stdin");

    auto* loops = app.add_subcommand("loops", "maximum edge-loop size per line");

    try {
        std::vector<const char*> argv;
        argv.push_back("ksforge");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            int rc = 0;
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                bool blank = true;
                for (char c : line) {
                    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
                }
                if (blank) continue;
                try {
                    MmpDiagram d = MmpDiagram::parse(line);
                    out << "OK " << d.vertex_count() << "-" << d.edge_count()
                        << "\n";
                } catch (const std::exception& e) {
                    out << "INVALID\n";
                    err << "line " << lineno << ": " << e.what() << "\n";
                    rc = 1;
                }
            }
            return rc;
        }

        if (states->parsed()) {
            return for_each_line(in, err, [&](const std::string& line) {
                MmpDiagram d = MmpDiagram::parse(line);
                auto s = find_01_state(d);
                if (s) {
                    out << "HAS-STATE";
                    if (states_witness) out << ' ' << witness_states(*s);
                    out << "\n";
                } else {
                    out << "KS\n";
                }
            });
        }

        if (subgraph->parsed()) {
            std::ifstream ref_file(ref_path);
            if (!ref_file) {
                err << "cannot open reference file '" << ref_path << "'\n";
                return 2;
            }
            std::string ref_line;
            do {
                if (!std::getline(ref_file, ref_line)) {
                    err << "reference file is empty\n";
                    return 2;
                }
            } while (ref_line.find_first_not_of(" \t\r\n") == std::string::npos);
            MmpDiagram reference = MmpDiagram::parse(ref_line);
            return for_each_line(in, err, [&](const std::string& line) {
                MmpDiagram test = MmpDiagram::parse(line);
                auto mapping = is_subgraph(test, reference);
                if (mapping) {
                    out << "CONTAINED";
                    if (subgraph_witness) out << ' ' << witness_mapping(*mapping);
                    out << "\n";
                } else {
                    out << "NOT-CONTAINED\n";
                }
            });
        }

        if (subsets->parsed()) {
            return for_each_line(in, err, [&](const std::string& line) {
                MmpDiagram d = MmpDiagram::parse(line);
                IsomorphDedup seen;
                for_each_edge_subset(
                    d, !keep_isolated,
                    [&](const MmpDiagram& sub, std::uint64_t) {
                        if (dedup && !seen.insert(sub)) return true;
                        out << sub.serialize() << "\n";
                        return true;
                    });
            });
        }

        if (vfind->parsed()) {
            std::optional<CandidatePool> storage;
            const CandidatePool& pool = resolve_pool(pool_spec, storage);
            auto timeout = std::chrono::duration<double>(timeout_seconds);
            return for_each_line(in, err, [&](const std::string& line) {
                MmpDiagram d = MmpDiagram::parse(line);
                VectorfindResult r = vectorfind(d, pool, timeout);
                switch (r.outcome) {
                    case VectorfindOutcome::Assigned:
                        out << "ASSIGNED";
                        if (vfind_witness) out << ' ' << witness_rays(*r.assignment);
                        out << "\n";
                        break;
                    case VectorfindOutcome::NoSolution:
                        out << "NO-SOLUTION\n";
                        break;
                    case VectorfindOutcome::Indeterminate:
                        out << "INDETERMINATE\n";
                        break;
                }
            });
        }

        if (canon->parsed()) {
            return for_each_line(in, err, [&](const std::string& line) {
                out << canonical_form(MmpDiagram::parse(line)).key << "\n";
            });
        }

        if (catalog_cmd->parsed()) {
            if (catalog_list) {
                for (const auto& name : catalog::list_names()) {
                    out << name << "\n";
                }
                return 0;
            }
            if (catalog_name.empty()) {
                err << "catalog: need a fixture name or --list\n";
                return 2;
            }
            const auto& set = catalog::get(catalog_name);
            if (catalog_vectors) {
                if (!set.vectors) {
                    err << "fixture '" << catalog_name
                        << "' ships no ray assignment\n";
                    return 1;
                }
                out << set.vectors->str();
            } else {
                out << set.diagram.serialize() << "\n";
            }
            return 0;
        }

        if (table1->parsed()) {
            pipeline::ClassifyOptions options;
            options.jobs = table1_jobs;
            if (table1_progress) {
                options.progress = [&](std::uint64_t done, std::uint64_t total) {
                    err << "\rscanned " << done << "/" << total << std::flush;
                };
            }
            pipeline::ClassifyResult result = pipeline::reproduce_table1(options);
            if (table1_progress) err << "\n";
            std::string tsv = pipeline::table_tsv(result.table);
            out << tsv;
            err << "masks=" << result.masks_scanned
                << " suppressed=" << result.suppressed
                << " ks-subsets=" << result.ks_subsets
                << " classes=" << result.representatives.size()
                << " below-range-ks=" << result.below_range_ks << "\n";
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                std::ofstream tsv_file(out_dir + "/table1.tsv");
                tsv_file << tsv;
                std::ofstream reps(out_dir + "/representatives.mmp");
                for (const auto& rep : result.representatives) {
                    reps << rep.serialize() << "\n";
                }
            }
            return 0;
        }

        if (critical->parsed()) {
            std::vector<MmpDiagram> reps;
            int rc = for_each_line(in, err, [&](const std::string& line) {
                reps.push_back(MmpDiagram::parse(line));
            });
            auto reports = pipeline::find_critical(reps);
            out << "name\tcritical\twitness\n";
            for (const auto& r : reports) {
                out << r.key << '\t' << (r.is_critical ? "yes" : "no") << '\t'
                    << r.witness_key << "\n";
            }
            return rc;
        }

        if (loops->parsed()) {
            return for_each_line(in, err, [&](const std::string& line) {
                out << pipeline::max_edge_loop(MmpDiagram::parse(line)) << "\n";
            });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "no subcommand\n";
    return 2;
}

}  // namespace ksforge::cli
