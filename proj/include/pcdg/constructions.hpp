#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "pcdg/canonical.hpp"
#include "pcdg/conditions.hpp"
#include "pcdg/graph.hpp"
#include "pcdg/knowledge_base.hpp"

namespace pcdg {

using BigInt = boost::multiprecision::cpp_int;

struct PrimeLabel {
    std::string name;
    BigInt value;
};

// Integer as a multiset of labeled primes; only label co-occurrence matters
// for graph rendering, so huge values stay unexpanded.
using FactoredInteger = std::map<std::string, long long>;  // label -> exponent

struct DegreeSet {
    std::vector<FactoredInteger> degrees;          // contains {} (the degree 1)
    std::map<std::string, BigInt> label_values;
};

// Vertices = labels occurring in some degree; edge iff two labels share a degree.
struct RenderedGraph {
    Graph graph;
    std::vector<std::string> labels;  // vertex index -> label
};

inline RenderedGraph degree_graph(const DegreeSet& d) {
    std::set<std::string> label_set;
    for (const auto& deg : d.degrees)
        for (const auto& [label, exp] : deg) label_set.insert(label);
    std::vector<std::string> labels(label_set.begin(), label_set.end());
    std::map<std::string, int> index;
    for (int i = 0; i < int(labels.size()); ++i) index[labels[i]] = i;
    Graph g(int(labels.size()));
    for (const auto& deg : d.degrees)
        for (auto it = deg.begin(); it != deg.end(); ++it)
            for (auto jt = std::next(it); jt != deg.end(); ++jt) {
                int a = index[it->first], b = index[jt->first];
                g.adj[a] |= uint16_t(1u << b);
                g.adj[b] |= uint16_t(1u << a);
            }
    return {g, labels};
}

struct VerifyResult {
    bool ok = true;
    std::string diagnostic;
};

constexpr unsigned kMillerRabinRounds = 40;

inline VerifyResult verify_product(const BigInt& target, const std::vector<PrimeLabel>& primes,
                                   bool check_primality = true,
                                   unsigned rounds = kMillerRabinRounds) {
    BigInt product = 1;
    for (const auto& p : primes) product *= p.value;
    if (product != target)
        return {false, "product of listed factors does not equal the target"};
    if (check_primality)
        for (const auto& p : primes)
            if (!boost::multiprecision::miller_rabin_test(p.value, rounds))
                return {false, "composite factor: " + p.name};
    return {};
}

namespace detail {

inline std::vector<long long> divisors_of(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline int mobius(long long n) {
    int mu = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<long long> prime_factors_with_multiplicity(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

// nth cyclotomic polynomial at x, via the Moebius product formula.
inline BigInt cyclotomic_value(long long n, const BigInt& x) {
    if (n < 1 || x < 2) throw std::invalid_argument("cyclotomic_value requires n >= 1, x >= 2");
    BigInt num = 1, den = 1;
    for (long long d : detail::divisors_of(n)) {
        int mu = detail::mobius(n / d);
        BigInt term = boost::multiprecision::pow(x, unsigned(d)) - 1;
        if (mu == 1) num *= term;
        else if (mu == -1) den *= term;
    }
    if (num % den != 0) throw std::logic_error("cyclotomic division not exact");
    return num / den;
}

inline bool coprimality_check(long long p, long long q, long long r) {
    BigInt a = cyclotomic_value(q, p), b = cyclotomic_value(r, p),
           c = cyclotomic_value(q * r, p);
    return boost::multiprecision::gcd(a, b) == 1 && boost::multiprecision::gcd(a, c) == 1 &&
           boost::multiprecision::gcd(b, c) == 1;
}

// Degree set {1} u {divisors of m > 1} u {2^m - 1}; renders to two complete
// components (the divisor primes vs the listed factors of 2^m - 1).
inline DegreeSet galois_cd(long long m, const std::vector<PrimeLabel>& mersenne_factors,
                           bool check_primality = true) {
    BigInt target = boost::multiprecision::pow(BigInt(2), unsigned(m)) - 1;
    if (auto v = verify_product(target, mersenne_factors, check_primality); !v.ok)
        throw std::invalid_argument("2^" + std::to_string(m) + "-1 factor list rejected: " +
                                    v.diagnostic);
    DegreeSet cd;
    cd.degrees.push_back({});
    for (long long d : detail::divisors_of(m)) {
        if (d <= 1) continue;
        FactoredInteger deg;
        for (long long p : detail::prime_factors_with_multiplicity(d))
            deg[std::to_string(p)] += 1;
        cd.degrees.push_back(std::move(deg));
    }
    FactoredInteger big;
    for (const auto& f : mersenne_factors) {
        big[f.name] += 1;
        cd.label_values[f.name] = f.value;
    }
    cd.degrees.push_back(std::move(big));
    for (long long p : detail::prime_factors_with_multiplicity(m))
        cd.label_values[std::to_string(p)] = p;
    return cd;
}

namespace detail {

// Sub-multiset of the quotient factors multiplying to phi; throws naming the
// target when none exists.
inline std::vector<int> phi_subproduct(const std::vector<PrimeLabel>& factors,
                                       const BigInt& phi) {
    int n = int(factors.size());
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        BigInt prod = 1;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) prod *= factors[i].value;
        if (prod == phi) {
            std::vector<int> out;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) out.push_back(i);
            return out;
        }
    }
    std::ostringstream msg;
    msg << "no sub-product of the quotient factors equals Phi_q(p) = " << phi;
    throw std::invalid_argument(msg.str());
}

inline void dugan_preconditions(long long p, long long q, long long r,
                                const std::vector<PrimeLabel>& quotient_factors,
                                bool check_primality) {
    BigInt target = (boost::multiprecision::pow(BigInt(p), unsigned(q * r)) - 1) / (p - 1);
    if (auto v = verify_product(target, quotient_factors, check_primality); !v.ok)
        throw std::invalid_argument("(p^(qr)-1)/(p-1) factor list rejected: " + v.diagnostic);
    if (!coprimality_check(p, q, r))
        throw std::invalid_argument("cyclotomic values are not pairwise coprime");
}

}  // namespace detail

// Skew-ring degree set for q = 3 (11 printed degrees).
inline DegreeSet dugan_cd_q3(long long p, long long r,
                             const std::vector<PrimeLabel>& quotient_factors,
                             bool check_primality = true) {
    detail::dugan_preconditions(p, 3, r, quotient_factors, check_primality);
    auto sub = detail::phi_subproduct(quotient_factors, cyclotomic_value(3, p));
    DegreeSet cd;
    for (const auto& f : quotient_factors) cd.label_values[f.name] = f.value;
    cd.label_values["3"] = 3;
    cd.label_values[std::to_string(r)] = r;
    cd.label_values[std::to_string(p)] = p;
    std::string ps = std::to_string(p), rs = std::to_string(r);
    FactoredInteger full, reduced;
    for (int i = 0; i < int(quotient_factors.size()); ++i) {
        full[quotient_factors[i].name] = 1;
        if (std::find(sub.begin(), sub.end(), i) == sub.end())
            reduced[quotient_factors[i].name] = 1;
    }
    auto with = [](FactoredInteger base, std::initializer_list<std::pair<std::string, long long>> extra) {
        for (const auto& [l, e] : extra) base[l] += e;
        return base;
    };
    cd.degrees = {
        {},
        {{"3", 1}},
        {{rs, 1}},
        {{"3", 1}, {rs, 1}},
        full,                                        // stuvw
        with(full, {{ps, (3 * r - 1) / 2}}),         // p^((3r-1)/2) stuvw
        with(reduced, {{"3", 1}, {ps, 3 * r}}),      // 3 p^(3r) (stuvw / Phi_3(p))
        with(reduced, {{ps, 3 * r - 3}}),            // p^(3r-3) (stuvw / Phi_3(p))
        with(reduced, {{"3", 1}, {ps, 3 * r - 3}}),  // 3 p^(3r-3) (stuvw / Phi_3(p))
        with(full, {{ps, 3 * r - 3}}),               // p^(3r-3) stuvw
        with(full, {{ps, 3 * r - 2}}),               // p^(3r-2) stuvw
    };
    return cd;
}

// Skew-ring degree set for general odd q >= 3, families indexed by
// 0 <= i <= q-2 and 0 <= j <= q-1, deduplicated as a set.
inline DegreeSet dugan_cd_general(long long p, long long q, long long r,
                                  const std::vector<PrimeLabel>& quotient_factors,
                                  bool check_primality = true) {
    if (q < 3) throw std::invalid_argument("general formula requires q >= 3");
    detail::dugan_preconditions(p, q, r, quotient_factors, check_primality);
    auto sub = detail::phi_subproduct(quotient_factors, cyclotomic_value(q, p));
    DegreeSet cd;
    for (const auto& f : quotient_factors) cd.label_values[f.name] = f.value;
    cd.label_values[std::to_string(q)] = q;
    cd.label_values[std::to_string(r)] = r;
    cd.label_values[std::to_string(p)] = p;
    std::string ps = std::to_string(p), qs = std::to_string(q), rs = std::to_string(r);
    FactoredInteger full, reduced;
    for (int i = 0; i < int(quotient_factors.size()); ++i) {
        full[quotient_factors[i].name] = 1;
        if (std::find(sub.begin(), sub.end(), i) == sub.end())
            reduced[quotient_factors[i].name] = 1;
    }
    long long h = (q - 1) / 2;
    std::set<FactoredInteger> degrees;
    degrees.insert(FactoredInteger{});
    degrees.insert({{qs, 1}});
    degrees.insert({{rs, 1}});
    degrees.insert({{qs, 1}, {rs, 1}});
    auto with = [](FactoredInteger base, std::initializer_list<std::pair<std::string, long long>> extra) {
        for (const auto& [l, e] : extra) if (e) base[l] += e;
        return base;
    };
    degrees.insert(with(reduced, {{qs, 1}, {ps, h * q * r}}));
    degrees.insert(with(reduced, {{ps, h * (q * r - q)}}));
    degrees.insert(with(reduced, {{qs, 1}, {ps, h * (q * r - q)}}));
    for (long long i = 0; i <= q - 2; ++i)
        degrees.insert(with(full, {{ps, (q * r - 1) / 2 * i}}));
    for (long long j = 0; j <= q - 1; ++j)
        degrees.insert(with(full, {{ps, h * (q * r - q + j - 1)}}));
    cd.degrees.assign(degrees.begin(), degrees.end());
    return cd;
}

// Joins of pairs of Occurs records with orders summing to n; value =
// contributing factor pair.
inline std::map<CanonicalKey, std::pair<CanonicalKey, CanonicalKey>> join_closure(
    const KnowledgeBase& kb, int n) {
    std::vector<const ClassificationRecord*> occurs;
    for (const auto& [key, rec] : kb.records())
        if (rec.status == Status::Occurs && rec.order < n) occurs.push_back(&rec);
    std::map<CanonicalKey, std::pair<CanonicalKey, CanonicalKey>> out;
    for (const auto* r1 : occurs)
        for (const auto* r2 : occurs) {
            if (r1->order + r2->order != n) continue;
            Graph j = join(decode_graph6(r1->graph6), decode_graph6(r2->graph6));
            out.emplace(canonical_key(j), std::make_pair(r1->key, r2->key));
        }
    return out;
}

// ---- recipe files: one construction per line.
//   galois <m> <factor>...          degree set {1, divisors of m, 2^m-1}
//   dugan3 <p> <r> <factor>...      q = 3 skew-ring formula
//   duganQ <p> <q> <r> <factor>...  general-q skew-ring formula
struct Recipe {
    std::string kind;
    std::vector<long long> params;
    std::vector<PrimeLabel> factors;
    std::string source_line;
};

inline std::vector<Recipe> load_recipes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open recipes file: " + path);
    std::vector<Recipe> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        Recipe r;
        if (!(fields >> r.kind)) continue;
        size_t nparams = r.kind == "galois" ? 1 : r.kind == "dugan3" ? 2
                         : r.kind == "duganQ" ? 3 : 0;
        if (!nparams)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": unknown recipe kind " + r.kind);
        for (size_t i = 0; i < nparams; ++i) {
            long long v;
            if (!(fields >> v))
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": missing parameter");
            r.params.push_back(v);
        }
        std::string tok;
        while (fields >> tok) r.factors.push_back({tok, BigInt(tok)});
        if (r.factors.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": missing factor list");
        r.source_line = line;
        out.push_back(std::move(r));
    }
    return out;
}

inline DegreeSet render_recipe_cd(const Recipe& r, bool check_primality = true) {
    if (r.kind == "galois") return galois_cd(r.params[0], r.factors, check_primality);
    if (r.kind == "dugan3")
        return dugan_cd_q3(r.params[0], r.params[1], r.factors, check_primality);
    return dugan_cd_general(r.params[0], r.params[1], r.params[2], r.factors,
                            check_primality);
}

inline RenderedGraph render_recipe(const Recipe& r, bool check_primality = true) {
    return degree_graph(render_recipe_cd(r, check_primality));
}

inline std::string recipe_name(const Recipe& r) {
    std::string out = r.kind;
    for (long long p : r.params) out += "-" + std::to_string(p);
    return out;
}

}  // namespace pcdg
