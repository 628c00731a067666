#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fcolor/classify.hpp"
#include "fcolor/io.hpp"
#include "fcolor/oracle.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitClass2 = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path);
    out << content;
}

int class_exit(fcolor::GClass c) {
    switch (c) {
        case fcolor::GClass::Class1: return 0;
        case fcolor::GClass::Class2: return kExitClass2;
        case fcolor::GClass::Unknown: return kExitUnknown;
    }
    return kExitError;
}

std::string verdict_text(const fcolor::Verdict& v) {
    return fcolor::explain(v);
}

int run(int argc, char** argv) {
    CLI::App app{"f-edge-coloring toolkit: classification, coloring, exact oracle"};
    app.require_subcommand(1);

    // classify
    std::string cls_file, cls_format = "text";
    fcolor::ClassifyOptions cls_opts;
    auto* cls = app.add_subcommand("classify", "Classify an instance as f-Class 1 / 2 / Unknown");
    cls->add_option("file", cls_file, "instance file (.fgr)")->required();
    cls->add_option("--exact-limit", cls_opts.exact_edge_limit,
                    "edge limit for the exhaustive fallback rule");
    cls->add_option("--cut-budget", cls_opts.cut_budget, "matching-cut search node budget");
    cls->add_option("--format", cls_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // color
    std::string col_file;
    int col_colors = -1;
    auto* colc = app.add_subcommand("color", "Produce a valid f-coloring as JSON");
    colc->add_option("file", col_file, "instance file (.fgr)")->required();
    colc->add_option("--colors", col_colors, "requested color count (delta_f triggers exact search)");

    // verify
    std::string ver_file, ver_coloring;
    auto* ver = app.add_subcommand("verify", "Verify a coloring JSON against an instance");
    ver->add_option("file", ver_file, "instance file (.fgr)")->required();
    ver->add_option("coloring", ver_coloring, "coloring JSON file")->required();

    // oracle
    std::string ora_file;
    auto* ora = app.add_subcommand("oracle", "Exact f-chromatic index (small instances only)");
    ora->add_option("file", ora_file, "instance file (.fgr)")->required();

    // gen
    std::string gen_out, gen_fspec = "const:1";
    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a named family instance");
    gen->add_option("family", gen_args, "family name and parameters")->required()->expected(-1);
    gen->add_option("--f", gen_fspec, "f spec: const:k | list:v1,..,vn | hub:k");
    gen->add_option("-o,--output", gen_out, "output file (stdout when absent)");

    // batch
    std::string batch_dir, batch_format = "text";
    auto* bat = app.add_subcommand("batch", "Classify every .fgr file in a directory");
    bat->add_option("dir", batch_dir, "directory of .fgr files")->required();
    bat->add_option("--format", batch_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // export-dot
    std::string dot_file, dot_coloring;
    auto* dot = app.add_subcommand("export-dot", "Emit DOT with optional edge colors");
    dot->add_option("file", dot_file, "instance file (.fgr)")->required();
    dot->add_option("--coloring", dot_coloring, "coloring JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cls->parsed()) {
        fcolor::FInstance inst = fcolor::parse_fgr(read_file(cls_file));
        if (fcolor::is_connected(inst.graph()) && inst.graph().edge_count() > 0) {
            fcolor::Verdict v = fcolor::classify(inst, cls_opts);
            std::cout << (cls_format == "json" ? fcolor::verdict_to_json(inst, v)
                                               : verdict_text(v));
            return class_exit(v.klass);
        }
        fcolor::AggregateVerdict agg = fcolor::classify_any(inst, cls_opts);
        if (cls_format == "json") {
            std::cout << fcolor::aggregate_to_json(inst, agg);
        } else {
            std::cout << "class: " << fcolor::class_name(agg.klass) << " (aggregate over "
                      << agg.components.size() << " components)\n"
                      << "delta_f: " << agg.delta_f << "\n";
        }
        return class_exit(agg.klass);
    }

    if (colc->parsed()) {
        fcolor::FInstance inst = fcolor::parse_fgr(read_file(col_file));
        fcolor::FColoring coloring;
        if (col_colors >= 0 && col_colors < inst.delta_f()) {
            std::cerr << "error: " << col_colors << " colors requested but delta_f is "
                      << inst.delta_f() << "\n";
            return kExitError;
        }
        if (col_colors == inst.delta_f() && inst.graph().edge_count() > 0) {
            auto out = fcolor::search_delta_f_coloring(inst, 0);
            if (out.status != fcolor::SearchStatus::Found) {
                std::cerr << "error: no f-coloring with " << col_colors
                          << " colors exists (instance is f-Class 2)\n";
                return kExitError;
            }
            coloring = fcolor::compact_colors(*out.coloring);
        } else {
            coloring = fcolor::upper_color_f(inst);
        }
        std::cout << fcolor::coloring_to_json(inst, coloring);
        return 0;
    }

    if (ver->parsed()) {
        fcolor::FInstance inst = fcolor::parse_fgr(read_file(ver_file));
        fcolor::FColoring col = fcolor::coloring_from_json(inst, read_file(ver_coloring));
        fcolor::VerifyReport rep = fcolor::verify_coloring(inst, col);
        if (rep.ok) {
            std::cout << "valid\n";
            return 0;
        }
        for (const auto& viol : rep.violations) {
            std::cout << "violation: vertex " << viol.vertex + 1 << " sees color " << viol.color
                      << " " << viol.count << " times (f = " << viol.limit << ")\n";
        }
        return kExitClass2;
    }

    if (ora->parsed()) {
        fcolor::FInstance inst = fcolor::parse_fgr(read_file(ora_file));
        fcolor::OracleResult res = fcolor::exact_chi_f(inst);
        std::cout << "chi_f: " << res.chi_f << "\n"
                  << "delta_f: " << inst.delta_f() << "\n"
                  << "class: " << (res.chi_f == inst.delta_f() ? "f-Class 1" : "f-Class 2") << "\n"
                  << "nodes: " << res.nodes_expanded << "\n";
        return 0;
    }

    if (gen->parsed()) {
        if (gen_args.empty()) return kExitUsage;
        std::string family = gen_args.front();
        std::vector<std::string> params(gen_args.begin() + 1, gen_args.end());
        fcolor::FInstance inst = fcolor::gen_family(family, params, gen_fspec);
        std::string text = fcolor::serialize_fgr(inst);
        if (gen_out.empty())
            std::cout << text;
        else
            write_file(gen_out, text);
        return 0;
    }

    if (bat->parsed()) {
        namespace fs = std::filesystem;
        if (!fs::is_directory(batch_dir)) throw FileError(batch_dir + " is not a directory");
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(batch_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".fgr")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        bool json = batch_format == "json";
        if (json) std::cout << "[\n";
        for (size_t i = 0; i < files.size(); ++i) {
            fcolor::FInstance inst = fcolor::parse_fgr(read_file(files[i].string()));
            fcolor::AggregateVerdict agg = fcolor::classify_any(inst);
            if (json) {
                std::cout << "  {\"file\": \"" << files[i].filename().string()
                          << "\", \"class\": \"" << fcolor::class_name(agg.klass)
                          << "\", \"delta_f\": " << agg.delta_f << "}"
                          << (i + 1 < files.size() ? "," : "") << "\n";
            } else {
                std::cout << files[i].filename().string() << ": " << fcolor::class_name(agg.klass)
                          << " (delta_f = " << agg.delta_f << ")\n";
            }
        }
        if (json) std::cout << "]\n";
        return 0;
    }

    if (dot->parsed()) {
        fcolor::FInstance inst = fcolor::parse_fgr(read_file(dot_file));
        if (dot_coloring.empty()) {
            std::cout << fcolor::export_dot(inst);
        } else {
            fcolor::FColoring col = fcolor::coloring_from_json(inst, read_file(dot_coloring));
            std::cout << fcolor::export_dot(inst, &col);
        }
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFile;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
