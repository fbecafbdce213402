#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcdg/canonical.hpp"
#include "pcdg/conditions.hpp"
#include "pcdg/graph.hpp"
#include "pcdg/graph6.hpp"

namespace pcdg {

enum class Status { Occurs, NotOccurs, Unknown };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Occurs: return "OCCURS";
        case Status::NotOccurs: return "NOT";
        default: return "UNKNOWN";
    }
}

inline Status parse_status(const std::string& s) {
    if (s == "OCCURS") return Status::Occurs;
    if (s == "NOT") return Status::NotOccurs;
    if (s == "UNKNOWN") return Status::Unknown;
    throw std::invalid_argument("bad status token: " + s);
}

struct ClassificationRecord {
    CanonicalKey key;      // canonical graph6
    std::string graph6;    // as written in the source file (same class as key)
    int order = 0;
    Status status = Status::Unknown;
    std::string reason;
    std::string provenance;
};

class kb_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class KnowledgeBase {
public:
    // Rejects a second record for the same class with a conflicting
    // non-Unknown status; Unknown yields to either definite status.
    void add(ClassificationRecord rec) {
        auto it = records_.find(rec.key);
        if (it == records_.end()) {
            records_.emplace(rec.key, std::move(rec));
            return;
        }
        ClassificationRecord& old = it->second;
        if (old.status == rec.status) return;  // first record wins
        if (old.status == Status::Unknown) {
            old = std::move(rec);
            return;
        }
        if (rec.status == Status::Unknown) return;
        throw kb_error("conflicting statuses for " + rec.key + ": " + old.provenance +
                       " vs " + rec.provenance);
    }

    bool add_if_absent(ClassificationRecord rec) {
        if (records_.count(rec.key)) return false;
        records_.emplace(rec.key, std::move(rec));
        return true;
    }

    const ClassificationRecord* lookup(const CanonicalKey& key) const {
        auto it = records_.find(key);
        return it == records_.end() ? nullptr : &it->second;
    }

    const std::map<CanonicalKey, ClassificationRecord>& records() const { return records_; }

    void merge(const KnowledgeBase& other) {
        for (const auto& [key, rec] : other.records_) add(rec);
    }

private:
    std::map<CanonicalKey, ClassificationRecord> records_;
};

// Line format: <graph6> <status:OCCURS|NOT|UNKNOWN> <reason-code> <provenance...>
// '#' starts a comment; blank lines ignored.
inline KnowledgeBase kb_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw kb_error("cannot open knowledge base file: " + path);
    KnowledgeBase kb;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string g6, status_tok, reason;
        if (!(fields >> g6)) continue;
        if (!(fields >> status_tok >> reason))
            throw kb_error(path + ":" + std::to_string(lineno) + ": missing fields");
        std::string provenance;
        std::getline(fields, provenance);
        if (!provenance.empty() && provenance[0] == ' ') provenance.erase(0, 1);
        try {
            Graph g = decode_graph6(g6);
            kb.add({canonical_key(g), g6, g.n, parse_status(status_tok), reason, provenance});
        } catch (const graph6_error& e) {
            throw kb_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw kb_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return kb;
}

inline void kb_store(const KnowledgeBase& kb, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw kb_error("cannot write knowledge base file: " + path);
    for (const auto& [key, rec] : kb.records())
        out << key << ' ' << status_name(rec.status) << ' '
            << (rec.reason.empty() ? "NONE" : rec.reason) << ' ' << rec.provenance << '\n';
}

// Self-consistency checks; returns human-readable issue list (empty = clean).
inline std::vector<std::string> kb_validate(const KnowledgeBase& kb) {
    std::vector<std::string> issues;
    for (const auto& [key, rec] : kb.records()) {
        Graph g = decode_graph6(rec.graph6);
        if (canonical_key(g) != key)
            issues.push_back(key + ": stored graph6 is a different isomorphism class");
        if (g.n != rec.order)
            issues.push_back(key + ": order mismatch");
        if (rec.status == Status::Occurs && !odd_cycle_free_complement(g))
            issues.push_back(key + ": OCCURS record fails the odd-cycle-free-complement filter");
    }
    return issues;
}

inline std::vector<std::string> kb_diff(const KnowledgeBase& a, const KnowledgeBase& b) {
    std::vector<std::string> out;
    for (const auto& [key, rec] : a.records()) {
        const ClassificationRecord* other = b.lookup(key);
        if (!other)
            out.push_back("- " + key + " " + status_name(rec.status));
        else if (other->status != rec.status)
            out.push_back("~ " + key + " " + status_name(rec.status) + " -> " +
                          status_name(other->status));
    }
    for (const auto& [key, rec] : b.records())
        if (!a.lookup(key)) out.push_back("+ " + key + " " + status_name(rec.status));
    return out;
}

// Facts derivable from the theory alone, orders 1..7: complete graphs; the
// K_k-plus-pendant family; two-complete-component graphs meeting the
// component-size inequality; the bowtie; the octahedron; and the closure of
// all of these under the join (direct product) construction.
inline KnowledgeBase kb_seed_builtin() {
    KnowledgeBase kb;
    auto put = [&](const Graph& g, const std::string& prov) {
        kb.add_if_absent({canonical_key(g), encode_graph6(canonical_form(g)), g.n,
                          Status::Occurs, "SEED", prov});
    };
    for (int n = 1; n <= 7; ++n) put(complete_graph(n), "complete K" + std::to_string(n));
    for (int k = 2; k <= 6; ++k) {
        Graph g = disjoint_union(complete_graph(k), complete_graph(1));
        g.adj[0] |= uint16_t(1u << k);
        g.adj[k] |= uint16_t(1u << 0);
        put(g, "K" + std::to_string(k) + " plus pendant");
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = a; a + b <= 7; ++b)
            if (b >= (1 << a) - 1)
                put(disjoint_union(complete_graph(a), complete_graph(b)),
                    "K" + std::to_string(a) + "+K" + std::to_string(b));
    put(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}), "bowtie");
    put(Graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                  {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
        "octahedron");
    // closure under join within orders <= 7
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<ClassificationRecord> snapshot;
        for (const auto& [key, rec] : kb.records()) snapshot.push_back(rec);
        for (const auto& r1 : snapshot)
            for (const auto& r2 : snapshot) {
                if (r1.order + r2.order > 7) continue;
                Graph j = join(decode_graph6(r1.graph6), decode_graph6(r2.graph6));
                Graph canon = canonical_form(j);
                changed |= kb.add_if_absent({encode_graph6(canon), encode_graph6(canon),
                                             j.n, Status::Occurs, "JOIN",
                                             "join(" + r1.key + "," + r2.key + ")"});
            }
    }
    return kb;
}

inline KnowledgeBase kb_seed_external(const std::string& path) { return kb_load(path); }

}  // namespace pcdg
