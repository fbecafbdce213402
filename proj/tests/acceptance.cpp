// End-to-end acceptance checks for the order-8 classification engine.  Each
// criterion prints one PASS/FAIL line; the exit code is the failure count.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "pcdg/pipeline.hpp"

using namespace pcdg;
namespace fs = std::filesystem;

namespace {

int failures = 0;
std::ostringstream detail;

void criterion(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
    if (!ok) {
        ++failures;
        std::string d = detail.str();
        if (!d.empty()) std::cout << d;
    }
    detail.str("");
}

template <typename T, typename U>
bool expect_eq(const std::string& label, const T& got, const U& want) {
    if (got == T(want)) return true;
    detail << "    " << label << ": got " << got << ", want " << want << "\n";
    return false;
}

bool expect(const std::string& label, bool ok) {
    if (!ok) detail << "    " << label << "\n";
    return ok;
}

Graph from_mask(int n, uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u) {
                g.adj[i] |= uint16_t(1u << j);
                g.adj[j] |= uint16_t(1u << i);
            }
    return g;
}

Graph shape_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int max_v = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int a, b;
        if (fields >> a >> b) {
            edges.emplace_back(a, b);
            max_v = std::max({max_v, a, b});
        }
    }
    return Graph(max_v + 1, edges);
}

std::string data_path(const std::string& name) {
    return std::string(PCDG_DATA_DIR) + "/" + name;
}

}  // namespace

int main() {
    const std::string data = PCDG_DATA_DIR;
    KnowledgeBase builtin = kb_seed_builtin();
    KnowledgeBase full_kb = kb_seed_builtin();
    full_kb.merge(kb_load(data_path("catalog.kb")));
    full_kb.merge(kb_load(data_path("seeds_external.kb")));
    std::vector<Recipe> recipes = load_recipes(data_path("recipes.txt"));

    ClassificationReport full = classify_order(8, full_kb, recipes);
    ClassificationReport reduced = classify_order(8, builtin, {});
    Graph d19 = shape_from_file(data_path("all_admissible_shape.txt"));
    CanonicalKey d19_key = canonical_key(d19);

    // ---- criterion 1: enumeration counts, cross-checked against brute force
    {
        bool ok = true;
        const size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
        for (int n = 0; n <= 8; ++n)
            ok &= expect_eq("classes of order " + std::to_string(n), graph_classes(n).size(),
                            expected[n]);
        for (int n = 0; n <= 6; ++n) {
            std::set<CanonicalKey> oracle;
            for (uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask)
                oracle.insert(canonical_key(from_mask(n, mask)));
            ok &= expect_eq("brute-force class count at order " + std::to_string(n),
                            oracle.size(), expected[n]);
        }
        size_t connected = 0, disconnected = 0;
        for (const Graph& g : graph_classes(8))
            ++(components(g).size() == 1 ? connected : disconnected);
        ok &= expect_eq("connected order-8 classes", connected, 11117);
        ok &= expect_eq("disconnected order-8 classes", disconnected, 1229);
        criterion(1, "isomorphism-class enumeration matches the known counts", ok);
    }

    // ---- criterion 2: unconditional filters
    {
        bool ok = true;
        size_t survivors = 0, shapes = 0;
        for (const Graph& g : graph_classes(8)) {
            bool ocf = odd_cycle_free_complement(g);
            if (ocf) ok &= expect("odd-cycle filter implies the three-vertex condition",
                                  palfy_condition(g));
            if (!ocf) continue;
            if (components(g).size() == 1) ++survivors;
            else ++shapes;
        }
        ok &= expect_eq("connected filter survivors", survivors, 299);
        ok &= expect_eq("disconnected filter survivors", shapes, 4);
        ok &= expect_eq("report survivor tally", full.connected_survivors, 299);
        criterion(2, "filters leave 299 connected survivors and 4 two-component shapes", ok);
    }

    // ---- criterion 3: two-clique signatures
    {
        bool ok = expect_eq("signature groups", full.per_signature.size(), 4);
        auto count = [&](int a, int b) {
            auto it = full.per_signature.find({a, b});
            return it == full.per_signature.end() ? size_t(0) : it->second;
        };
        ok &= expect_eq("(7,1) survivors", count(7, 1), 7);
        ok &= expect_eq("(6,2) survivors", count(6, 2), 45);
        ok &= expect_eq("(5,3) survivors", count(5, 3), 151);
        ok &= expect_eq("(4,4) survivors", count(4, 4), 96);
        criterion(3, "survivors split 7/45/151/96 across the four signatures", ok);
    }

    // ---- criterion 4: disconnected classification
    {
        bool ok = expect_eq("c(8)", c_of(8), 2);
        size_t ineq = 0, recipe_occurs = 0;
        for (const auto& r : full.records) {
            if (r.connected) continue;
            if (r.reason == "PALFY-INEQ") ++ineq;
            if (r.status == Status::Occurs) {
                ++recipe_occurs;
                ok &= expect("disconnected Occurs is recipe-certified", r.reason == "RECIPE");
                auto shape = disconnected_shape(decode_graph6(r.key));
                ok &= expect("recipe-certified shape passes the size inequality",
                             shape && palfy_inequality(*shape));
            }
        }
        ok &= expect_eq("shapes failing the size inequality", ineq, 2);  // 3+5 and 4+4
        ok &= expect_eq("occurring disconnected classes", recipe_occurs, 2);
        ok &= expect_eq("disconnected occurs tally", full.occurs_disconnected, 2);
        ok &= expect_eq("disconnected not-occurs tally", full.not_disconnected, 1227);
        ok &= expect_eq("disconnected unknown tally", full.unknown_disconnected, 0);
        criterion(4, "both inequality-passing shapes occur, the rest are eliminated", ok);
    }

    // ---- criterion 5: big-integer certificates
    {
        bool ok = true;
        for (const auto& r : recipes) {
            if (r.kind != "galois") continue;
            BigInt target = boost::multiprecision::pow(BigInt(2), unsigned(r.params[0])) - 1;
            ok &= expect(recipe_name(r) + " factor list verifies",
                         verify_product(target, r.factors).ok);
            auto mutated = r.factors;
            mutated.back().value ^= 1;
            ok &= expect(recipe_name(r) + " mutated factor list is rejected",
                         !verify_product(target, mutated).ok);
        }
        ok &= expect("composite factor detected",
                     !verify_product(BigInt(23 * 88), {{"23", 23}, {"88", 88}}).ok);
        criterion(5, "Mersenne factorizations verify exactly and reject mutations", ok);
    }

    // ---- criterion 6: diameter-3 tests
    {
        bool ok = true;
        std::map<CliqueSignature, size_t> diam3, eliminated;
        for (const auto& r : full.records) {
            if (!r.connected || r.reason == "P1" || r.reason == "P2") continue;
            if (r.diam != 3) continue;
            ++diam3[*r.sig];
            if (r.reason == "D3-RHO3" || r.reason == "D3-GROWTH") ++eliminated[*r.sig];
        }
        ok &= expect_eq("(6,2) diameter-3 survivors", diam3[{6, 2}], 7);
        ok &= expect_eq("(5,3) diameter-3 survivors", diam3[{5, 3}], 23);
        ok &= expect_eq("(4,4) diameter-3 survivors", diam3[{4, 4}], 21);
        ok &= expect_eq("(7,1) diameter-3 survivors", diam3[{7, 1}], 0);
        ok &= expect_eq("(6,2) eliminated", eliminated[{6, 2}], 4);
        ok &= expect_eq("(5,3) eliminated", eliminated[{5, 3}], 23);
        ok &= expect_eq("(4,4) eliminated", eliminated[{4, 4}], 21);
        criterion(6, "diameter-3 tests eliminate 4/23/21 of the 7/23/21 candidates", ok);
    }

    // ---- criterion 7: skew-ring recipes hit the three surviving (6,2) graphs
    {
        bool ok = true;
        std::set<CanonicalKey> rendered;
        for (const auto& r : recipes) {
            if (r.kind == "galois") continue;
            rendered.insert(canonical_key(render_recipe(r).graph));
        }
        ok &= expect_eq("distinct skew-ring renders", rendered.size(), 3);
        std::set<CanonicalKey> survivors62;
        for (const auto& r : full.records)
            if (r.connected && r.sig == CliqueSignature{6, 2} && r.diam == 3 &&
                r.reason != "D3-RHO3" && r.reason != "D3-GROWTH")
                survivors62.insert(r.key);
        ok &= expect("renders equal the non-eliminated (6,2) diameter-3 classes",
                     rendered == survivors62);
        for (const auto& key : rendered) {
            const GraphRecord* rec = full.find(key);
            ok &= expect("render " + key + " is recipe-certified",
                         rec && rec->status == Status::Occurs && rec->reason == "RECIPE");
        }
        criterion(7, "the three skew-ring recipes render the three open (6,2) graphs", ok);
    }

    // ---- criterion 8: join closure
    {
        bool ok = true;
        // hard gate: the builtin seed alone certifies the named products
        Graph octa(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                       {2, 4}, {2, 5}, {3, 4}, {3, 5}});
        Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        auto du = [](const Graph& a, const Graph& b) { return disjoint_union(a, b); };
        std::vector<std::pair<std::string, Graph>> named{
            {"join(K5+K2, K1)", join(du(complete_graph(5), complete_graph(2)), complete_graph(1))},
            {"join(K5+K1, K1+K1)",
             join(du(complete_graph(5), complete_graph(1)), edgeless_graph(2))},
            {"join(K4+K1, K2+K1)", join(du(complete_graph(4), complete_graph(1)),
                                        du(complete_graph(2), complete_graph(1)))},
            {"join(K3+K1, K3+K1)", join(du(complete_graph(3), complete_graph(1)),
                                        du(complete_graph(3), complete_graph(1)))},
            {"join(K4+K2, K1+K1)",
             join(du(complete_graph(4), complete_graph(2)), edgeless_graph(2))},
            {"join(K3+K2, K2+K1)", join(du(complete_graph(3), complete_graph(2)),
                                        du(complete_graph(2), complete_graph(1)))},
            {"join(bowtie, K2+K1)", join(bowtie, du(complete_graph(2), complete_graph(1)))},
            {"join(octahedron, K1+K1)", join(octa, edgeless_graph(2))},
        };
        for (const auto& [name, g] : named) {
            const GraphRecord* rec = reduced.find(canonical_key(g));
            ok &= expect(name + " certified by the reduced-seed closure",
                         rec && rec->status == Status::Occurs && rec->reason == "JOIN");
        }
        for (const auto& r : reduced.records)
            if (r.connected && r.sig == CliqueSignature{7, 1})
                ok &= expect("(7,1) class " + r.key + " certified by the reduced-seed closure",
                             r.status == Status::Occurs && r.reason == "JOIN");
        // full seed set: exactly 34 closure members with the frozen breakdown
        auto closure = join_closure(full_kb, 8);
        ok &= expect_eq("full-seed closure size", closure.size(), 34);
        std::map<CliqueSignature, size_t> by_sig;
        for (const auto& [key, factors] : closure) ++by_sig[*signature(decode_graph6(key))];
        ok &= expect_eq("(7,1) closure members", by_sig[{7, 1}], 7);
        ok &= expect_eq("(6,2) closure members", by_sig[{6, 2}], 16);
        ok &= expect_eq("(5,3) closure members", by_sig[{5, 3}], 10);
        ok &= expect_eq("(4,4) closure members", by_sig[{4, 4}], 1);
        ok &= expect_eq("final occurs tally", full.occurs_connected, 37);
        ok &= expect_eq("final not-occurs tally", full.not_connected, 56);
        ok &= expect_eq("final unknown tally", full.unknown_connected, 206);
        criterion(8, "join closure certifies the named products and yields 37/56/206", ok);
    }

    // ---- criterion 9: structural eliminators
    {
        bool ok = true;
        size_t cut_fires = 0;
        for (const auto& r : full.records) {
            if (!r.connected || r.reason == "P1" || r.reason == "P2") continue;
            Graph g = decode_graph6(r.key);
            if (cut_vertex_eliminator(g).eliminated) {
                ++cut_fires;
                ok &= expect("cut-vertex class " + r.key + " is also diameter-3 eliminated",
                             r.reason == "D3-RHO3" || r.reason == "D3-GROWTH");
            }
        }
        ok &= expect_eq("survivors with two cut vertices", cut_fires, 3);
        size_t reg_primary = 0;
        for (const auto& r : full.records)
            if (r.reason == "REG") {
                ++reg_primary;
                Graph g = decode_graph6(r.key);
                for (int v = 0; v < g.n; ++v)
                    ok &= expect("REG class " + r.key + " is 5-regular", g.degree(v) == 5);
            }
        ok &= expect_eq("classes eliminated primarily by regularity", reg_primary, 2);
        ok &= expect("degree-2 pair eliminator fires on the matched K6+K2",
                     degree2_pair_eliminator(gamma_family_generate(6, 2)).eliminated);
        for (int k = 4; k <= 6; ++k) {
            Graph g = gamma_family_generate(k, 8 - k);
            const GraphRecord* rec = full.find(canonical_key(g));
            ok &= expect("gamma(" + std::to_string(k) + "," + std::to_string(8 - k) +
                             ") marked NotOccurs",
                         rec && rec->status == Status::NotOccurs);
            ok &= expect("gamma family membership recognized",
                         gamma_status_eliminator(g).eliminated);
        }
        criterion(9, "cut/regularity/degree-2/family eliminators fire exactly as tallied", ok);
    }

    // ---- criterion 10: the all-admissible elimination and its evidence
    {
        bool ok = expect("shipped shape satisfies its structural facts",
                         all_admissible_shape_facts(d19).empty());
        const GraphRecord* rec = full.find(d19_key);
        ok &= expect("shape eliminated in the full run",
                     rec && rec->status == Status::NotOccurs && rec->reason == "ADM-ALL");
        ok &= expect("one evidence chain per vertex", rec && rec->admissibility.size() == 8);
        std::string all_evidence;
        if (rec)
            for (const auto& chain : rec->admissibility)
                for (const auto& line : chain.evidence) all_evidence += line + "\n";
        ok &= expect("evidence replays the three-vertex filter",
                     all_evidence.find("[P1]") != std::string::npos);
        ok &= expect("evidence replays the odd-cycle filter",
                     all_evidence.find("[P2]") != std::string::npos);
        ok &= expect("evidence replays this run's diameter-3 verdicts",
                     all_evidence.find("[RUN D3-") != std::string::npos);

        // the three external order-7 records used by the vertex deletions
        std::set<CanonicalKey> seed_keys;
        for (int v = 0; v < d19.n; ++v) {
            CanonicalKey k = canonical_key(delete_vertex(d19, v));
            const ClassificationRecord* s = full_kb.lookup(k);
            if (s && s->status == Status::NotOccurs) seed_keys.insert(k);
        }
        ok &= expect_eq("distinct external records backing the vertex deletions",
                        seed_keys.size(), 3);
        for (const auto& k : seed_keys)
            ok &= expect("evidence cites knowledge-base record " + k,
                         all_evidence.find("[KB " + k) != std::string::npos);

        // replay with the full oracle fires; dropping any one seed loses the verdict
        RunVerdicts snapshot;
        for (const auto& r : full.records) snapshot[r.key] = {r.status, r.reason};
        OccurrenceOracle oracle{8, &snapshot, &full_kb};
        ok &= expect("replay against the full oracle fires",
                     all_admissible_eliminator(d19, oracle).eliminated);
        for (const auto& dropped : seed_keys) {
            KnowledgeBase partial;
            for (const auto& [key, r] : full_kb.records())
                if (key != dropped) partial.add(r);
            OccurrenceOracle weak{8, &snapshot, &partial};
            ok &= expect("dropping " + dropped + " loses the verdict",
                         !all_admissible_eliminator(d19, weak).eliminated);
        }
        criterion(10, "the all-admissible shape is eliminated with minimal evidence", ok);
    }

    // ---- criterion 11: soundness alarm on a corrupted seed
    {
        bool ok = true;
        KnowledgeBase bad = kb_seed_builtin();
        Graph star(4, {{0, 1}, {0, 2}, {0, 3}});  // fails the odd-cycle filter
        bad.add({canonical_key(star), encode_graph6(canonical_form(star)), 4, Status::Occurs,
                 "SEED", "forced"});
        bool threw = false;
        try {
            classify_order(8, bad, {});
        } catch (const SoundnessError&) {
            threw = true;
        }
        ok &= expect("classify_order raises the soundness alarm", threw);

        fs::path dir = fs::temp_directory_path() / "acceptance_soundness";
        fs::create_directories(dir);
        fs::path kb_file = dir / "bad.kb";
        {
            std::ofstream out(kb_file);
            out << encode_graph6(canonical_form(star)) << " OCCURS SEED forced\n";
        }
        std::string cmd = std::string(PCDG_BIN) + " classify --order 4 --kb " +
                          kb_file.string() + " --out " + (dir / "report").string() +
                          " >/dev/null 2>&1";
        int status = std::system(cmd.c_str());
        ok &= expect_eq("CLI exit code", WIFEXITED(status) ? WEXITSTATUS(status) : -1, 2);
        fs::remove_all(dir);
        criterion(11, "a filter-failing Occurs seed aborts the run with exit code 2", ok);
    }

    std::cout << (failures ? "FAILED" : "OK") << " (" << (11 - failures) << "/11 criteria)\n";
    return failures;
}
