#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcdg/pipeline.hpp"

namespace fs = std::filesystem;
using namespace pcdg;

namespace {

KnowledgeBase load_kb_paths(const std::vector<std::string>& paths) {
    KnowledgeBase kb = kb_seed_builtin();
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(p))
                if (e.path().extension() == ".kb") files.push_back(e.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) kb.merge(kb_load(f.string()));
        } else {
            kb.merge(kb_load(p));
        }
    }
    return kb;
}

int run_enumerate(int order, bool connected_only, const std::string& out_file) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_file.empty()) {
        file.open(out_file);
        if (!file) throw std::runtime_error("cannot open " + out_file);
        out = &file;
    }
    GraphStream stream(order);
    size_t count = 0;
    while (const Graph* g = stream.next()) {
        if (connected_only && components(*g).size() > 1) continue;
        *out << encode_graph6(*g) << '\n';
        ++count;
    }
    std::cerr << count << " graphs\n";
    return 0;
}

int run_classify(int order, const std::vector<std::string>& kb_paths,
                 const std::string& recipes_path, const std::string& out_dir,
                 const std::string& format, const std::string& explain_key,
                 bool strict_labeling, bool no_primality) {
    KnowledgeBase kb = load_kb_paths(kb_paths);
    std::vector<Recipe> recipes;
    if (!recipes_path.empty()) recipes = load_recipes(recipes_path);
    ClassifyOptions opts;
    opts.labeling_mode =
        strict_labeling ? LabelingMode::ConventionMinimal : LabelingMode::AnyLabeling;
    opts.check_primality = !no_primality;
    ClassificationReport report = classify_order(order, kb, recipes, opts);
    report_render(report, format, out_dir);
    kb_store(report_to_kb(report),
             (fs::path(out_dir) / ("order" + std::to_string(order) + ".kb")).string());
    if (!explain_key.empty()) std::cout << explain(report, explain_key);
    std::cout << "order " << order << ": " << report.total << " classes ("
              << report.connected << " connected, " << report.disconnected
              << " disconnected)\n"
              << "connected survivors " << report.connected_survivors << ": occurs "
              << report.occurs_connected << ", not " << report.not_connected << ", unknown "
              << report.unknown_connected << "\n"
              << "disconnected: occurs " << report.occurs_disconnected << ", not "
              << report.not_disconnected << ", unknown " << report.unknown_disconnected
              << "\n";
    return 0;
}

int run_verify(const std::string& recipes_path, bool no_primality) {
    int rc = 0;
    for (const auto& r : load_recipes(recipes_path)) {
        try {
            RenderedGraph rendered = render_recipe(r, !no_primality);
            std::cout << recipe_name(r) << ": ok, renders to "
                      << canonical_key(rendered.graph) << " (order " << rendered.graph.n
                      << ")\n";
        } catch (const std::exception& e) {
            std::cout << recipe_name(r) << ": FAILED: " << e.what() << "\n";
            rc = 1;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification engine for prime character degree graphs"};
    app.require_subcommand(1);

    auto* enum_cmd = app.add_subcommand("enumerate", "stream graph classes of one order");
    int enum_order = 8;
    bool connected_only = false;
    std::string graph6_out;
    enum_cmd->add_option("--order", enum_order, "graph order")->required();
    enum_cmd->add_flag("--connected-only", connected_only, "skip disconnected classes");
    enum_cmd->add_option("--graph6-out", graph6_out, "output file (default stdout)");

    auto* cls = app.add_subcommand("classify", "run the classification pipeline");
    int cls_order = 8;
    std::vector<std::string> kb_paths;
    std::string recipes_path, out_dir = "report", format = "txt", explain_key;
    bool strict_labeling = false, no_primality = false;
    cls->add_option("--order", cls_order, "graph order");
    cls->add_option("--kb", kb_paths, "seed file or directory of .kb files (builtin always loaded)");
    cls->add_option("--recipes", recipes_path, "construction recipes file");
    cls->add_option("--out", out_dir, "report directory");
    cls->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv", "txt", "dot"}));
    cls->add_option("--explain", explain_key, "print the evidence for one graph6 key");
    cls->add_flag("--strict-labeling", strict_labeling,
                  "diameter-3 tests use only the convention-minimal labeling");
    cls->add_flag("--no-primality", no_primality, "skip Miller-Rabin checks");

    auto* ver = app.add_subcommand("verify-constructions", "check recipe certificates");
    std::string ver_recipes;
    bool ver_no_primality = false;
    ver->add_option("--recipes", ver_recipes, "construction recipes file")->required();
    ver->add_flag("--no-primality", ver_no_primality, "skip Miller-Rabin checks");

    auto* kb_cmd = app.add_subcommand("kb", "knowledge base utilities");
    kb_cmd->require_subcommand(1);
    auto* kb_validate_cmd = kb_cmd->add_subcommand("validate", "check .kb files");
    std::vector<std::string> val_paths;
    kb_validate_cmd->add_option("files", val_paths, "files or directories")->required();
    auto* kb_export_cmd = kb_cmd->add_subcommand("export", "merge and print records");
    std::vector<std::string> exp_paths;
    bool exp_builtin = false;
    kb_export_cmd->add_option("files", exp_paths, "files or directories");
    kb_export_cmd->add_flag("--builtin", exp_builtin, "include the builtin seed");
    auto* kb_diff_cmd = kb_cmd->add_subcommand("diff", "compare two .kb files");
    std::string diff_a, diff_b;
    kb_diff_cmd->add_option("a", diff_a)->required();
    kb_diff_cmd->add_option("b", diff_b)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enum_cmd) return run_enumerate(enum_order, connected_only, graph6_out);
        if (*cls)
            return run_classify(cls_order, kb_paths, recipes_path, out_dir, format,
                                explain_key, strict_labeling, no_primality);
        if (*ver) return run_verify(ver_recipes, ver_no_primality);
        if (*kb_validate_cmd) {
            int rc = 0;
            for (const auto& p : val_paths) {
                KnowledgeBase kb = kb_load(p);
                auto issues = kb_validate(kb);
                for (const auto& i : issues) std::cout << p << ": " << i << "\n";
                if (issues.empty())
                    std::cout << p << ": ok (" << kb.records().size() << " records)\n";
                else
                    rc = 1;
            }
            return rc;
        }
        if (*kb_export_cmd) {
            KnowledgeBase kb = exp_builtin ? kb_seed_builtin() : KnowledgeBase{};
            for (const auto& p : exp_paths) kb.merge(kb_load(p));
            for (const auto& [key, rec] : kb.records())
                std::cout << key << ' ' << status_name(rec.status) << ' '
                          << (rec.reason.empty() ? "NONE" : rec.reason) << ' '
                          << rec.provenance << '\n';
            return 0;
        }
        if (*kb_diff_cmd) {
            for (const auto& line : kb_diff(kb_load(diff_a), kb_load(diff_b)))
                std::cout << line << '\n';
            return 0;
        }
    } catch (const SoundnessError& e) {
        std::cerr << "soundness alarm: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
