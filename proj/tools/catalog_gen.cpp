// Generates data/salem_catalog.json.
//
//   catalog_gen scan <trace_degree> <rho_num>/<rho_den> <out.json>
//       exhaustive enumeration below the bound, written as a fragment
//   catalog_gen assemble <out.json> <fragment.json>...
//       merge fragments, add the reconstructed degree-18 entry, check the
//       explicitly known polynomials land at their expected ranks, and
//       report any cited rank that no fragment reaches
//
// Fragments record every trace found, not only the cited ones, so a later
// table edit does not force a rescan.

#include <salemk3/error.hpp>
#include <salemk3/poly.hpp>
#include <salemk3/salem.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace salemk3;
using nlohmann::json;

namespace {

json trace_to_json(const SalemTrace& t, const std::string& provenance,
                   const std::optional<Rat>& bound) {
    json e;
    e["trace_coeffs"] = json::array();
    const IntPoly& u = t.trace_poly();
    for (int i = 0; i <= u.degree(); ++i)
        e["trace_coeffs"].push_back(static_cast<long>(u.coeff(i).get_si()));
    e["provenance"] = provenance;
    if (bound) {
        e["bound"] = bound->get_num().get_si() == 0
                         ? "0"
                         : (bound->get_num().get_str() + "/" + bound->get_den().get_str());
    }
    return e;
}

// Minimal polynomial of a degree-22 Salem number reconstructed from the
// first nine power sums of its roots (enough for a palindromic polynomial
// of degree 18 via Newton's identities and the coefficient mirror).
IntPoly palindromic_from_power_sums(const std::vector<Int>& p, int degree) {
    int half = degree / 2;
    if (static_cast<int>(p.size()) < half)
        throw InputError("need half as many power sums as the degree");
    std::vector<Int> e(half + 1);
    e[0] = 1;
    for (int k = 1; k <= half; ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i) {
            Int term = e[k - i] * p[i - 1];
            if (i % 2 == 0) acc -= term; else acc += term;
        }
        if (acc % k != 0) throw InputError("power sums are not integral");
        e[k] = acc / k;
    }
    std::vector<Int> c(degree + 1);
    for (int k = 0; k <= half; ++k) {
        Int a = (k % 2 == 0) ? e[k] : -e[k];
        c[degree - k] = a;
        c[k] = a;
    }
    return IntPoly(std::move(c));
}

int run_scan(int trace_degree, const Rat& rho_max, const std::string& out_path) {
    std::vector<SalemTrace> traces = salem_traces_up_to(trace_degree, rho_max);
    json frag;
    frag["degree"] = 2 * trace_degree;
    frag["rho_max"] = rho_max.get_num().get_str() + "/" + rho_max.get_den().get_str();
    frag["count"] = traces.size();
    frag["traces"] = json::array();
    for (const SalemTrace& t : traces) {
        json coeffs = json::array();
        for (int i = 0; i <= t.trace_poly().degree(); ++i)
            coeffs.push_back(static_cast<long>(t.trace_poly().coeff(i).get_si()));
        frag["traces"].push_back(std::move(coeffs));
    }
    std::ofstream out(out_path);
    out << frag.dump(1) << "\n";
    std::cerr << "scan d=" << 2 * trace_degree << " rho<=" << rho_max << ": " << traces.size()
              << " traces -> " << out_path << "\n";
    return 0;
}

// Cited ranks, collected from the instance tables; an absent rank is
// reported but does not fail assembly (the consumers refuse such rows
// with a "catalog derivation required" error instead).
const std::map<int, std::set<int>> kCited = {
    {4, {1, 6}},
    {6, {1, 6}},
    {8, {1, 2, 3, 5, 6, 8, 10, 11, 14, 16, 17, 19, 21, 46, 47}},
    {10, {1}},
    {12, {1, 95}},
    {14, {1, 3, 4, 17, 18, 59, 105, 114, 234, 306}},
    {16, {2, 3}},
    {18, {1, 6, 16, 43, 65, 89, 109}},
    {22, {1, 2, 5, 6, 10, 13, 14, 18, 22, 25, 39, 43, 52, 57, 64, 71, 72, 80, 85, 89}},
};

// Polynomials whose coefficients are pinned by explicit text elsewhere;
// assembly insists the enumeration reproduces them at the expected rank.
struct Known {
    int d, i;
    std::vector<long> coeffs;
};
const std::vector<Known> kKnown = {
    {8, 1, {1, -1, -4, 0, 1}},    // w^4 - 4w^2 - w + 1
    {4, 1, {-3, -1, 1}},          // trace of z^4 - z^3 - z^2 - z + 1
    {10, 1, {3, 4, -5, -5, 1, 1}},  // trace of Lehmer's polynomial
};

int run_assemble(const std::string& out_path, const std::vector<std::string>& fragment_paths) {
    std::map<std::pair<int, int>, json> entries;
    std::map<int, int> reach;  // degree -> highest certified rank

    for (const std::string& path : fragment_paths) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open fragment: " + path);
        json frag;
        in >> frag;
        int d = frag.at("degree").get<int>();
        Rat bound(frag.at("rho_max").get<std::string>());
        int rank = 0;
        for (const auto& coeffs : frag.at("traces")) {
            ++rank;
            std::vector<Int> c;
            for (const auto& cv : coeffs) c.push_back(Int(cv.get<long>()));
            SalemTrace t = require_salem_trace(IntPoly(std::move(c)));
            entries[{d, rank}] = trace_to_json(t, "enumerated", bound);
        }
        reach[d] = std::max(reach[d], rank);
    }

    // Degree-18 rank 6: the iterate fixed-point counts 4,6,4,6,4,6,11,14,13
    // pin the first nine power sums of phi-tilde = S * C1^2 * C2^2, hence
    // of S itself after removing the contributions 2 + 2*(-1)^m of the
    // cyclotomic factors.
    {
        const std::vector<long> lefschetz = {4, 6, 4, 6, 4, 6, 11, 14, 13};
        std::vector<Int> p;
        for (size_t m = 1; m <= lefschetz.size(); ++m)
            p.push_back(Int(lefschetz[m - 1]) - 4 - ((m % 2 == 0) ? 2 : -2));
        IntPoly s18 = palindromic_from_power_sums(p, 18);
        SalemTrace t = require_salem_trace(trace_poly(s18));
        auto key = std::make_pair(18, 6);
        if (entries.count(key)) {
            json scanned = entries[key];
            json rebuilt = trace_to_json(t, "", std::nullopt);
            if (scanned.at("trace_coeffs") != rebuilt.at("trace_coeffs"))
                throw InputError("degree-18 rank-6 reconstruction disagrees with enumeration");
        } else {
            entries[key] = trace_to_json(t, "reconstructed", std::nullopt);
        }
    }

    for (const Known& k : kKnown) {
        auto it = entries.find({k.d, k.i});
        if (it == entries.end()) {
            std::cerr << "warning: known entry " << k.d << ":" << k.i
                      << " not reached by any fragment\n";
            continue;
        }
        std::vector<long> got;
        for (const auto& cv : it->second.at("trace_coeffs")) got.push_back(cv.get<long>());
        if (got != k.coeffs)
            throw InputError("entry " + std::to_string(k.d) + ":" + std::to_string(k.i) +
                             " does not match its explicitly known coefficients");
    }

    int missing = 0;
    for (const auto& [d, ranks] : kCited) {
        for (int i : ranks) {
            if (!entries.count({d, i})) {
                ++missing;
                std::cerr << "unreached: " << d << ":" << i << " (certified ranks for degree "
                          << d << " stop at " << reach[d] << ")\n";
            }
        }
    }

    json out;
    for (const auto& [key, val] : entries)
        out[std::to_string(key.first) + ":" + std::to_string(key.second)] = val;
    std::ofstream os(out_path);
    os << out.dump(1) << "\n";
    std::cerr << "assembled " << entries.size() << " entries -> " << out_path << " (" << missing
              << " cited ranks unreached)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Salem trace catalog generator"};
    app.require_subcommand(1);

    auto* scan = app.add_subcommand("scan", "enumerate one trace degree below a rho bound");
    int trace_degree = 0;
    std::string rho_str, scan_out;
    scan->add_option("trace_degree", trace_degree)->required();
    scan->add_option("rho_max", rho_str, "bound as num/den")->required();
    scan->add_option("out", scan_out)->required();

    auto* assemble = app.add_subcommand("assemble", "merge fragments into the catalog");
    std::string asm_out;
    std::vector<std::string> fragments;
    assemble->add_option("out", asm_out)->required();
    assemble->add_option("fragments", fragments)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (scan->parsed()) return run_scan(trace_degree, Rat(rho_str), scan_out);
        return run_assemble(asm_out, fragments);
    } catch (const std::exception& e) {
        std::cerr << "catalog_gen: " << e.what() << "\n";
        return 1;
    }
}
