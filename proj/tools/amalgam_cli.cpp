#include "amalgam/cohomology.hpp"
#include "amalgam/corpus.hpp"
#include "amalgam/io.hpp"
#include "amalgam/structure.hpp"
#include "amalgam/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace amalgam;
using nlohmann::json;

namespace {

int cmd_analyze(const std::string& file) {
    AlgebraPtr a = io::load_algebra(file);
    std::optional<Vec> identity = find_identity(*a);
    SpectrumReport spectrum = characters(a);
    Subspace rad = radical(a);

    std::cout << "dimension:            " << a->dim() << "\n";
    std::cout << "identity:             ";
    if (identity) {
        std::cout << "yes [";
        for (std::size_t i = 0; i < identity->size(); ++i)
            std::cout << (i ? ", " : "") << (*identity)[i].str();
        std::cout << "]\n";
    } else {
        std::cout << "no\n";
    }
    std::cout << "commutative:          "
              << (is_commutative(*a).commutative ? "yes" : "no") << "\n";
    std::cout << "square-dense:         " << (is_square_dense(*a) ? "yes" : "no") << "\n";
    std::cout << "radical dim:          " << rad.dim() << "\n";
    std::cout << "semisimple:           " << (rad.is_zero() ? "yes" : "no") << "\n";
    std::cout << "characters:           " << spectrum.characters.size()
              << (spectrum.complete ? "" : " (incomplete: " +
                                               spectrum.obstruction.value_or("") + ")")
              << "\n";
    std::cout << "amenable:             " << (is_amenable(a) ? "yes" : "no") << "\n";
    std::cout << "weakly amenable:      " << (is_weakly_amenable(a) ? "yes" : "no") << "\n";
    std::cout << "cyclically amenable:  " << (is_cyclically_amenable(a) ? "yes" : "no")
              << "\n";
    std::cout << "norm bound:           " << check_submultiplicative(*a).str()
              << " (submultiplicative: "
              << (check_submultiplicative(*a) <= Rational(1) ? "yes" : "no") << ")\n";
    return 0;
}

int cmd_construct(const std::string& descriptor_file, const std::string& output) {
    json desc = io::read_json_file(descriptor_file);
    std::string base = std::filesystem::path(descriptor_file).parent_path().string();
    AmalgamResult r = io::construct_from_descriptor(desc, base);
    io::save_algebra(*r.algebra, output);
    io::write_json_file(io::maps_to_json(r), output + ".maps.json");
    std::cout << "wrote " << output << " (dim " << r.algebra->dim() << ") and " << output
              << ".maps.json\n";
    if (r.theta_norm_warning)
        std::cout << "warning: ||theta|| = " << operator_norm_bound(r.theta).str()
                  << " exceeds 1\n";
    return 0;
}

void print_report(const VerificationReport& rep, bool as_json) {
    if (as_json) {
        json j{{"theorem", rep.theorem_id},
               {"instance", rep.instance},
               {"status", status_name(rep.status)}};
        if (!rep.details.empty()) j["details"] = rep.details;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rep.theorem_id << "  [" << rep.instance << "]  "
                  << status_name(rep.status);
        if (!rep.details.empty()) std::cout << "  -- " << rep.details;
        std::cout << "\n";
    }
}

int cmd_verify(const std::string& theorem, const std::vector<std::string>& files,
               bool as_json) {
    bool any_fail = false, any_input_error = false;
    for (const auto& file : files) {
        VerificationReport rep;
        try {
            if (theorem_takes_algebra(theorem)) {
                rep = run_theorem(theorem, file, io::load_algebra(file));
            } else {
                json desc = io::read_json_file(file);
                std::string base = std::filesystem::path(file).parent_path().string();
                rep = run_theorem(theorem, file, io::construct_from_descriptor(desc, base));
            }
        } catch (const UnknownTheoremId&) {
            throw;
        } catch (const Error& e) {
            rep = {theorem, file, CheckStatus::InputError, e.what()};
        }
        print_report(rep, as_json);
        any_fail = any_fail || rep.status == CheckStatus::Fail;
        any_input_error = any_input_error || rep.status == CheckStatus::InputError;
    }
    return any_input_error ? 2 : (any_fail ? 1 : 0);
}

struct LoadedCorpus {
    std::vector<corpus::Entry> entries;
    std::vector<corpus::AmalgamEntry> amalgams;
    std::vector<VerificationReport> load_errors;
};

/// Corpus resolution: AMALGAM_CORPUS (or --corpus) points at a directory
/// with manifest.json; otherwise the built-in corpus is used.
LoadedCorpus resolve_corpus(const std::string& dir_flag, std::size_t budget) {
    LoadedCorpus out;
    std::string dir = dir_flag;
    if (dir.empty()) {
        const char* env = std::getenv("AMALGAM_CORPUS");
        if (env) dir = env;
    }
    if (dir.empty()) {
        out.entries = corpus::base_entries();
        out.amalgams = corpus::amalgam_entries(budget);
        return out;
    }
    json manifest = io::read_json_file((std::filesystem::path(dir) / "manifest.json").string());
    for (const auto& e : manifest.at("entries")) {
        std::string name = e.at("name").get<std::string>();
        try {
            corpus::Entry entry;
            entry.name = name;
            entry.algebra = io::load_algebra(
                (std::filesystem::path(dir) / e.at("file").get<std::string>()).string());
            if (e.contains("tags"))
                entry.tags = e.at("tags").get<std::vector<std::string>>();
            corpus::verify_corpus_tags({entry});
            out.entries.push_back(std::move(entry));
        } catch (const Error& err) {
            out.load_errors.push_back({"corpus-load", name, CheckStatus::InputError,
                                       err.what()});
        }
    }
    for (const auto& e : manifest.at("amalgams")) {
        std::string name = e.at("name").get<std::string>();
        try {
            out.amalgams.push_back(
                {name, io::construct_from_descriptor(e.at("descriptor"), dir)});
        } catch (const Error& err) {
            out.load_errors.push_back({"corpus-load", name, CheckStatus::InputError,
                                       err.what()});
        }
    }
    // generated instances over the loaded entries, as for the built-ins
    for (const auto& ea : out.entries) {
        if (ea.algebra->dim() == 0 || 2 * ea.algebra->dim() > budget) continue;
        out.amalgams.push_back({"id-amalgam-" + ea.name, identity_amalgam(ea.algebra)});
    }
    for (const auto& ea : out.entries)
        for (const auto& eb : out.entries) {
            if (ea.algebra->dim() + eb.algebra->dim() > budget) continue;
            if (ea.algebra->dim() == 0 && eb.algebra->dim() == 0) continue;
            out.amalgams.push_back({"cartesian-" + ea.name + "-" + eb.name,
                                    cartesian_product(ea.algebra, eb.algebra)});
        }
    return out;
}

int cmd_corpus_run(const std::string& dir_flag, std::size_t budget, bool as_json) {
    LoadedCorpus loaded = resolve_corpus(dir_flag, budget);
    CorpusRunSummary summary = corpus_run(loaded.entries, loaded.amalgams);
    summary.reports.insert(summary.reports.begin(), loaded.load_errors.begin(),
                           loaded.load_errors.end());
    summary.input_errors += loaded.load_errors.size();

    for (const auto& rep : summary.reports) print_report(rep, as_json);
    if (as_json) {
        json j{{"pass", summary.passed},
               {"fail", summary.failed},
               {"hypothesis-not-met", summary.hypothesis_not_met},
               {"input-error", summary.input_errors}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "pass " << summary.passed << ", fail " << summary.failed
                  << ", hypothesis-not-met " << summary.hypothesis_not_met
                  << ", input-error " << summary.input_errors << "\n";
    }
    return summary.exit_code();
}

int cmd_emit_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    json entries = json::array();
    for (const auto& entry : corpus::base_entries()) {
        std::string file = entry.name + ".json";
        io::save_algebra(*entry.algebra, (fs::path(dir) / file).string());
        entries.push_back({{"name", entry.name}, {"file", file}, {"tags", entry.tags}});
    }
    json amalgams = json::array();
    for (const auto& [name, desc] : corpus::named_amalgam_descriptors())
        amalgams.push_back({{"name", name}, {"descriptor", desc}});
    io::write_json_file({{"entries", entries}, {"amalgams", amalgams}},
                        (fs::path(dir) / "manifest.json").string());
    std::cout << "wrote corpus to " << dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for amalgamated structure-constant algebras"};
    app.require_subcommand(1);

    std::string analyze_file;
    CLI::App* analyze = app.add_subcommand("analyze", "structural report for an algebra file");
    analyze->add_option("file", analyze_file, "algebra JSON file")->required();

    std::string construct_in, construct_out;
    CLI::App* construct =
        app.add_subcommand("construct", "build an amalgam from a descriptor file");
    construct->add_option("descriptor", construct_in, "construction descriptor JSON")
        ->required();
    construct->add_option("-o,--output", construct_out, "output algebra file")->required();

    std::string verify_id;
    std::vector<std::string> verify_files;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "run one theorem check on instances");
    verify->add_option("theorem", verify_id, "theorem id (see --list)")->required();
    verify->add_option("files", verify_files, "instance files (descriptors or algebras)")
        ->required();
    verify->add_flag("--json", verify_json, "line-delimited JSON output");

    std::string corpus_dir;
    std::size_t budget = 12;
    bool corpus_json = false;
    CLI::App* run = app.add_subcommand("corpus-run", "run every theorem over the corpus");
    run->add_option("--corpus", corpus_dir, "corpus directory (default: $AMALGAM_CORPUS)");
    run->add_option("--budget", budget, "maximum amalgam dimension for generated instances");
    run->add_flag("--json", corpus_json, "line-delimited JSON output");

    std::string emit_dir;
    CLI::App* emit = app.add_subcommand("emit-corpus", "write the built-in corpus to files");
    emit->add_option("dir", emit_dir, "output directory")->required();

    bool list_theorems = false;
    app.add_flag("--list", list_theorems, "list theorem ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_theorems) {
            for (const auto& info : theorem_catalog())
                std::cout << info.id << (info.takes_algebra ? "  (algebra)" : "  (amalgam)")
                          << "  " << info.description << "\n";
            return 0;
        }
        if (*analyze) return cmd_analyze(analyze_file);
        if (*construct) return cmd_construct(construct_in, construct_out);
        if (*verify) return cmd_verify(verify_id, verify_files, verify_json);
        if (*run) return cmd_corpus_run(corpus_dir, budget, corpus_json);
        if (*emit) return cmd_emit_corpus(emit_dir);
    } catch (const UnknownTheoremId& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
