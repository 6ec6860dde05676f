#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bipyr/decomposition.hpp"
#include "bipyr/diagram.hpp"
#include "bipyr/enumeration.hpp"
#include "bipyr/realization.hpp"
#include "bipyr/report.hpp"
#include "bipyr/volume.hpp"

namespace bipyr::cli {

namespace {

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ValidationError(std::string("bad ") + what + " entry \"" +
                                  item + "\"");
        }
    }
    if (out.empty())
        throw ValidationError(std::string("empty ") + what + " list");
    return out;
}

long realize_cap_from_env() {
    if (const char* cap = std::getenv("BIPYR_MAX_SUM")) {
        try {
            return std::stol(cap);
        } catch (const std::exception&) {
            throw ValidationError("BIPYR_MAX_SUM is not an integer");
        }
    }
    return kDefaultRealizeMaxSum;
}

void cmd_analyze(const std::string& path, bool json, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const MulticrossingDiagram d = parse_diagram(buffer.str());
    out << (json ? analyze_json(d) : analyze_text(d));
}

void cmd_realize(const std::string& seq_text, std::ostream& out) {
    SizeSequence seq{parse_int_list(seq_text, "sequence")};
    const Crossing witness = realize(seq, realize_cap_from_env());
    nlohmann::ordered_json j;
    j["sequence"] = seq.entries;
    j["levels"] = witness.levels;
    j["signature"] = crossing_signature(witness).sizes;
    out << j.dump(2) << "\n";
}

void cmd_enumerate(int n, bool fold, bool json, bool csv, std::ostream& out) {
    const Census census = enumerate_crossings(n, fold);
    if (csv) {
        out << "levels,signature,tetrahedra,mccb_contribution\n";
        for (const auto& [sig, level_lists] : census.entries) {
            const long tets = std::accumulate(sig.begin(), sig.end(), 0L);
            double vol = 0;
            for (int m : sig) vol += maxvol(m);
            for (const auto& levels : level_lists)
                out << join(levels) << "," << join(sig) << "," << tets << ","
                    << fmt6(vol) << "\n";
        }
        return;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = census.n;
        j["folded"] = census.folded;
        j["configurations"] = census.total_configurations();
        j["signatures"] = nlohmann::ordered_json::array();
        for (const auto& [sig, level_lists] : census.entries) {
            nlohmann::ordered_json js;
            js["signature"] = sig;
            js["count"] = level_lists.size();
            js["levels"] = level_lists;
            j["signatures"].push_back(std::move(js));
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << census.total_configurations() << " configurations of size " << n
        << (census.folded ? " (reflections folded)" : "") << "\n";
    for (const auto& [sig, level_lists] : census.entries) {
        out << "signature (" << join(sig, ",") << "): " << level_lists.size()
            << " crossings\n";
        for (const auto& levels : level_lists)
            out << "  " << join(levels) << "\n";
    }
}

void cmd_table(const std::string& ns_text, std::ostream& out) {
    const std::vector<int> ns = parse_int_list(ns_text, "n");
    out << "n,best_mccb,worst_mccb,octahedral\n";
    for (const Table1Row& row : table1(ns))
        out << row.n << "," << fmt6(row.best) << "," << fmt6(row.worst) << ","
            << fmt6(row.octahedral) << "\n";
}

void cmd_examples(const std::string& write_dir, std::ostream& out) {
    for (const std::string& name : builtin_example_names()) {
        const MulticrossingDiagram d = builtin_example(name);
        if (write_dir.empty()) {
            out << name << ": " << d.crossings().size() << " crossings, "
                << d.edges().size() << " edges, "
                << surface_name(d.surface()) << "\n";
        } else {
            const std::filesystem::path path =
                std::filesystem::path(write_dir) / (name + ".json");
            std::ofstream file(path);
            if (!file) throw ValidationError("cannot write " + path.string());
            file << to_diagram_text(d);
            out << path.string() << "\n";
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bipyramid decompositions and volume bounds for multicrossing "
                 "link diagrams"};
    app.require_subcommand(1);

    std::string analyze_path;
    bool analyze_json_flag = false;
    auto* analyze = app.add_subcommand("analyze", "analyze a diagram file");
    analyze->add_option("file", analyze_path, "diagram JSON file")->required();
    analyze->add_flag("--json", analyze_json_flag, "machine-readable output");

    std::string realize_seq;
    auto* realize_cmd = app.add_subcommand(
        "realize", "construct a crossing with the given bipyramid size sequence");
    realize_cmd->add_option("sequence", realize_seq, "comma-separated sizes")
        ->required();

    int enum_n = 0;
    bool enum_fold = false, enum_json = false, enum_csv = false;
    auto* enumerate = app.add_subcommand("enumerate", "census of n-crossings");
    enumerate->add_option("n", enum_n, "crossing size")->required();
    enumerate->add_flag("--fold-reflections", enum_fold,
                        "identify reflected configurations");
    enumerate->add_flag("--json", enum_json);
    enumerate->add_flag("--csv", enum_csv);

    std::string table_ns = "3,4,5,10,100";
    auto* table = app.add_subcommand("table", "per-crossing-size bound table (CSV)");
    table->add_option("--n", table_ns, "comma-separated crossing sizes");

    double lob_theta = 0;
    auto* lob = app.add_subcommand("lob", "evaluate the Lobachevsky function");
    lob->add_option("theta", lob_theta, "angle in radians")->required();

    int maxvol_m = 0;
    auto* maxvol_cmd =
        app.add_subcommand("maxvol", "maximal volume of a size-m bipyramid");
    maxvol_cmd->add_option("m", maxvol_m, "bipyramid size")->required();

    std::string write_dir;
    auto* examples = app.add_subcommand("examples", "list built-in diagrams");
    examples->add_option("--write-dir", write_dir, "write each example here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) cmd_analyze(analyze_path, analyze_json_flag, out);
        if (*realize_cmd) cmd_realize(realize_seq, out);
        if (*enumerate) cmd_enumerate(enum_n, enum_fold, enum_json, enum_csv, out);
        if (*table) cmd_table(table_ns, out);
        if (*lob) out << fmt6(lobachevsky(lob_theta)) << "\n";
        if (*maxvol_cmd) out << fmt6(bipyr::maxvol(maxvol_m)) << "\n";
        if (*examples) cmd_examples(write_dir, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (byte " << e.byte << ")\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bipyr::cli
