#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcdg/admissibility.hpp"
#include "pcdg/canonical.hpp"
#include "pcdg/conditions.hpp"
#include "pcdg/constructions.hpp"
#include "pcdg/diameter3.hpp"
#include "pcdg/dot.hpp"
#include "pcdg/eliminators.hpp"
#include "pcdg/enumeration.hpp"
#include "pcdg/graph.hpp"
#include "pcdg/graph6.hpp"
#include "pcdg/knowledge_base.hpp"

namespace pcdg {

// A verified Occurs certificate clashing with a NotOccurs verdict (or a
// seeded Occurs record failing an unconditional filter) is a fatal
// inconsistency; the CLI maps this to exit code 2.
class SoundnessError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphRecord {
    CanonicalKey key;
    int order = 0;
    bool connected = false;
    std::optional<CliqueSignature> sig;
    std::optional<int> diam;  // nullopt = disconnected
    Status status = Status::Unknown;
    std::string reason = "NONE";
    std::string provenance;
    std::vector<std::string> logged;  // every evaluated verdict, fired or not
    std::vector<AdmissibilityResult> admissibility;  // filled for ADM-ALL verdicts
};

struct ClassificationReport {
    int order = 0;
    std::vector<GraphRecord> records;  // one per isomorphism class, key order
    size_t total = 0, connected = 0, disconnected = 0;
    size_t connected_survivors = 0;  // pass the odd-cycle filter
    std::map<CliqueSignature, size_t> per_signature;
    size_t occurs_connected = 0, not_connected = 0, unknown_connected = 0;
    size_t occurs_disconnected = 0, not_disconnected = 0, unknown_disconnected = 0;

    const GraphRecord* find(const CanonicalKey& key) const {
        for (const auto& r : records)
            if (r.key == key) return &r;
        return nullptr;
    }
};

struct ClassifyOptions {
    LabelingMode labeling_mode = LabelingMode::AnyLabeling;
    bool check_primality = true;
};

inline ClassificationReport classify_order(int n, const KnowledgeBase& kb,
                                           const std::vector<Recipe>& recipes,
                                           const ClassifyOptions& opts = {}) {
    // seeded Occurs records must pass the unconditional filters
    for (const auto& [key, rec] : kb.records())
        if (rec.status == Status::Occurs &&
            !odd_cycle_free_complement(decode_graph6(rec.graph6)))
            throw SoundnessError("seeded Occurs record fails the odd-cycle filter: " + key);

    std::map<CanonicalKey, std::string> recipe_renders;
    for (const auto& r : recipes) {
        RenderedGraph rendered = render_recipe(r, opts.check_primality);
        recipe_renders[canonical_key(rendered.graph)] = recipe_name(r);
    }
    auto closure = join_closure(kb, n);

    ClassificationReport report;
    report.order = n;
    GraphStream stream(n);
    while (const Graph* gp = stream.next()) {
        const Graph& g = *gp;
        GraphRecord rec;
        rec.key = encode_graph6(g);  // stream yields canonical forms
        rec.order = n;
        rec.diam = diameter(g);
        rec.connected = rec.diam.has_value();
        ++report.total;
        ++(rec.connected ? report.connected : report.disconnected);

        std::optional<std::pair<std::string, std::string>> certificate;  // reason, provenance
        std::optional<std::pair<std::string, std::string>> elimination;
        auto log_verdict = [&](const std::string& name, const EliminationVerdict& v) {
            rec.logged.push_back(name + ": " + (v.eliminated ? "fires (" + v.reason + ")"
                                                             : "no verdict"));
            if (v.eliminated && !elimination) elimination = {v.reason, v.provenance};
        };

        if (!palfy_condition(g)) {
            elimination = {"P1", "three vertices spanning no edge"};
        } else if (!odd_cycle_free_complement(g)) {
            elimination = {"P2", "odd cycle in the complement"};
        } else if (!rec.connected) {
            auto shape = disconnected_shape(g);
            if (!shape) {
                elimination = {"P2", "not two complete components"};  // unreachable
            } else if (!palfy_inequality(*shape)) {
                elimination = {"PALFY-INEQ",
                               "components " + std::to_string(shape->n_small) + "+" +
                                   std::to_string(shape->n_large)};
            } else if (auto it = recipe_renders.find(rec.key); it != recipe_renders.end()) {
                certificate = {"RECIPE", it->second};
            }
        } else {
            rec.sig = signature(g);
            ++report.connected_survivors;
            ++report.per_signature[*rec.sig];
            if (auto it = closure.find(rec.key); it != closure.end())
                certificate = {"JOIN", "join(" + it->second.first + "," + it->second.second + ")"};
            if (rec.diam == 3) {
                Diameter3Result d3 = diameter3_test(g, opts.labeling_mode);
                if (d3.eliminated) {
                    std::string reason = d3.reason == Diameter3Reason::Rho3TooSmall
                                             ? "D3-RHO3" : "D3-GROWTH";
                    rec.logged.push_back("diameter3: fires (" + reason + ")");
                    elimination = {reason, "labeling p=" + std::to_string(d3.p) +
                                               ",q=" + std::to_string(d3.q)};
                } else {
                    rec.logged.push_back("diameter3: pass");
                }
            }
            log_verdict("cut_vertex", cut_vertex_eliminator(g));
            log_verdict("gamma_status", gamma_status_eliminator(g));
            log_verdict("degree2_pair", degree2_pair_eliminator(g));
            log_verdict("regularity", regularity_eliminator(g));
            log_verdict("catalog", catalog_eliminator(g, kb));
            if (!certificate)
                if (auto it = recipe_renders.find(rec.key); it != recipe_renders.end())
                    certificate = {"RECIPE", it->second};
        }

        if (certificate && elimination)
            throw SoundnessError("graph " + rec.key + " has Occurs certificate (" +
                                 certificate->second + ") and NotOccurs verdict (" +
                                 elimination->first + ")");
        if (certificate) {
            rec.status = Status::Occurs;
            rec.reason = certificate->first;
            rec.provenance = certificate->second;
        } else if (elimination) {
            rec.status = Status::NotOccurs;
            rec.reason = elimination->first;
            rec.provenance = elimination->second;
        }
        report.records.push_back(std::move(rec));
    }

    // admissibility sweep over the remaining unknowns, against a snapshot of
    // all verdicts so far
    RunVerdicts snapshot;
    for (const auto& r : report.records)
        snapshot[r.key] = {r.status, r.reason};
    OccurrenceOracle oracle{n, &snapshot, &kb};
    for (auto& r : report.records) {
        if (r.status != Status::Unknown || !r.connected) continue;
        std::vector<AdmissibilityResult> chains;
        EliminationVerdict v = all_admissible_eliminator(decode_graph6(r.key), oracle, &chains);
        if (v.eliminated) {
            r.status = Status::NotOccurs;
            r.reason = v.reason;
            r.provenance = v.provenance;
            r.admissibility = std::move(chains);
        }
    }

    for (const auto& r : report.records) {
        // connected tallies cover only the filter survivors; disconnected
        // tallies cover every disconnected class
        if (r.connected && (r.reason == "P1" || r.reason == "P2")) continue;
        auto& occ = r.connected ? report.occurs_connected : report.occurs_disconnected;
        auto& not_ = r.connected ? report.not_connected : report.not_disconnected;
        auto& unk = r.connected ? report.unknown_connected : report.unknown_disconnected;
        if (r.status == Status::Occurs) ++occ;
        else if (r.status == Status::NotOccurs) ++not_;
        else ++unk;
    }
    return report;
}

inline KnowledgeBase report_to_kb(const ClassificationReport& report) {
    KnowledgeBase kb;
    for (const auto& r : report.records)
        kb.add({r.key, r.key, r.order, r.status, r.reason, r.provenance});
    return kb;
}

namespace detail {

inline std::string sig_name(const std::optional<CliqueSignature>& sig) {
    if (!sig) return "-";
    return "(" + std::to_string(sig->a) + "," + std::to_string(sig->b) + ")";
}

}  // namespace detail

// Connected filter survivors, grouped by signature (larger clique first),
// graph6 order within a group.
inline std::vector<const GraphRecord*> survivor_rows(const ClassificationReport& report) {
    std::vector<const GraphRecord*> rows;
    for (const auto& r : report.records)
        if (r.connected && r.reason != "P1" && r.reason != "P2") rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(), [](const GraphRecord* a, const GraphRecord* b) {
        int wa = a->sig ? a->sig->a : a->order, wb = b->sig ? b->sig->a : b->order;
        if (wa != wb) return wa > wb;
        return a->key < b->key;
    });
    return rows;
}

inline void report_render(const ClassificationReport& report, const std::string& format,
                          const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto rows = survivor_rows(report);
    if (format == "csv") {
        std::ofstream out(fs::path(out_dir) / "report.csv");
        out << "graph6,signature,diameter,status,reason,provenance\n";
        for (const auto* r : rows)
            out << '"' << r->key << "\"," << detail::sig_name(r->sig) << ',' << *r->diam << ','
                << status_name(r->status) << ',' << r->reason << ",\"" << r->provenance
                << "\"\n";
    } else if (format == "txt") {
        std::ofstream out(fs::path(out_dir) / "report.txt");
        out << "order " << report.order << ": " << report.total << " classes, "
            << report.connected << " connected, " << report.disconnected << " disconnected\n";
        out << "connected survivors: " << report.connected_survivors << " (occurs "
            << report.occurs_connected << ", not " << report.not_connected << ", unknown "
            << report.unknown_connected << ")\n";
        out << "disconnected: occurs " << report.occurs_disconnected << ", not "
            << report.not_disconnected << ", unknown " << report.unknown_disconnected << "\n";
        std::optional<CliqueSignature> current;
        for (const auto* r : rows) {
            if (r->sig != current) {
                current = r->sig;
                out << "\nsignature " << detail::sig_name(r->sig) << "\n";
            }
            out << (r->status == Status::Unknown ? "* " : "  ") << r->key << "  "
                << status_name(r->status) << " " << r->reason
                << (r->provenance.empty() ? "" : " " + r->provenance) << "\n";
        }
    } else if (format == "dot") {
        fs::path dir = fs::path(out_dir) / "dot";
        fs::create_directories(dir);
        int idx = 0;
        for (const auto* r : rows) {
            char name[32];
            std::snprintf(name, sizeof name, "g%04d.dot", idx++);
            std::ofstream out(dir / name);
            out << to_dot(decode_graph6(r->key), r->key);
        }
    } else {
        throw std::invalid_argument("unknown report format: " + format);
    }
}

inline std::string explain(const ClassificationReport& report, const CanonicalKey& key) {
    const GraphRecord* r = report.find(key);
    if (!r) {
        try {
            Graph g = decode_graph6(key);  // accept any representative
            r = report.find(canonical_key(g));
        } catch (const graph6_error&) {
        }
    }
    if (!r) return "no record for " + key + "\n";
    std::ostringstream out;
    out << r->key << " order " << r->order << " signature " << detail::sig_name(r->sig)
        << " diameter " << (r->diam ? std::to_string(*r->diam) : "inf") << "\n";
    out << "status " << status_name(r->status) << " reason " << r->reason << " ["
        << r->provenance << "]\n";
    for (const auto& line : r->logged) out << "  " << line << "\n";
    for (size_t v = 0; v < r->admissibility.size(); ++v) {
        out << "vertex " << v << " admissibility evidence:\n";
        for (const auto& e : r->admissibility[v].evidence) out << "    " << e << "\n";
    }
    return out.str();
}

}  // namespace pcdg
