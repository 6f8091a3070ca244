// Command-line front end for the flagtutte library.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "flagtutte/flagtutte.hpp"

using namespace flagtutte;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInputError = 2, kInternal = 3, kFalsified = 4 };

struct Options {
    std::string invariant;
    std::string input;
    std::string identity;
    std::string format = "text";
    bool equivariant = false;
    std::uint64_t seed = 20240601;
    int threads = 0;
    std::optional<int> element;
};

const std::map<std::string, std::string>& invariant_help() {
    static const std::map<std::string, std::string> m = {
        {"tutte", "Tutte polynomial of a matroid, in x, y"},
        {"kt", "flag-geometric Tutte polynomial, in x, y"},
        {"lvt", "Las Vergnas Tutte polynomial of a two-step flag, in x, z, y"},
        {"h", "h-polynomial of a loopless, coloopless flag matroid, in s"},
        {"h-lv", "Las Vergnas-diagram push-pull phi(u, v) and its Q[uv] membership"},
        {"char", "characteristic polynomial of a matroid, in q"},
        {"beta", "beta invariant of a matroid, or beta polynomial of a two-step flag"},
        {"beta-reduced", "reduced beta polynomial of a two-step flag, in q"},
        {"poincare", "Poincare polynomial of a two-step flag, in q, s"},
        {"kchar", "flag-geometric characteristic polynomial, in q"},
    };
    return m;
}

void need_length(const FlagMatroid& fm, std::size_t k, const std::string& what) {
    if (fm.length() != k)
        fail(ErrorCode::InvalidInput, what + " needs " + (k == 1 ? std::string("a single matroid") : "a two-step flag"));
}

void emit(const Options& o, const std::string& invariant, const ParsedInput& in, const AuxPolynomial& p,
          const std::optional<EquivariantPolynomial>& eq, json extra = json::object()) {
    if (o.format == "json") {
        json j = {{"invariant", invariant}, {"input_hash", in.hash}, {"polynomial", p.to_string()}, {"vars", p.vars()}};
        if (eq) j["equivariant"] = eq->to_json();
        for (auto& [k, v] : extra.items()) j[k] = v;
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (eq) std::cout << eq->to_string() << "\n";
    std::cout << p.to_string() << "\n";
    for (auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int run_compute(const Options& o) {
    if (!invariant_help().count(o.invariant)) fail(ErrorCode::UnknownInvariant, "unknown invariant " + o.invariant);
    const ParsedInput in = parse_input(o.input);
    const FlagMatroid& fm = in.flag;
    const std::string& inv = o.invariant;
    if (inv == "tutte") {
        need_length(fm, 1, inv);
        emit(o, inv, in, tutte(fm.front()), std::nullopt);
    } else if (inv == "kt") {
        std::optional<EquivariantPolynomial> eq;
        if (o.equivariant) eq = kt_equivariant(fm);
        emit(o, inv, in, kt(fm), eq);
    } else if (inv == "lvt") {
        need_length(fm, 2, inv);
        std::optional<EquivariantPolynomial> eq;
        if (o.equivariant) eq = lv_tutte_equivariant(fm.front(), fm.back());
        emit(o, inv, in, lv_tutte(fm.front(), fm.back()), eq);
    } else if (inv == "h") {
        emit(o, inv, in, h_polynomial(fm), std::nullopt, {{"phi", h_phi(fm).to_string()}});
    } else if (inv == "h-lv") {
        auto [phi, in_uv] = h_candidate_lv(fm);
        emit(o, inv, in, phi, std::nullopt, {{"in_uv", in_uv}});
    } else if (inv == "char") {
        need_length(fm, 1, inv);
        emit(o, inv, in, characteristic_polynomial(fm.front()), std::nullopt);
    } else if (inv == "beta") {
        if (fm.length() == 1) {
            const Rational b = beta_invariant(fm.front());
            emit(o, inv, in, AuxPolynomial::constant(b), std::nullopt);
        } else {
            need_length(fm, 2, inv);
            emit(o, inv, in, beta_polynomial_unreduced(fm.front(), fm.back()), std::nullopt);
        }
    } else if (inv == "beta-reduced") {
        need_length(fm, 2, inv);
        emit(o, inv, in, beta_polynomial(fm.front(), fm.back()).reduced, std::nullopt,
             {{"via_higgs", reduced_beta_via_higgs(fm.front(), fm.back()).to_string()}});
    } else if (inv == "poincare") {
        need_length(fm, 2, inv);
        emit(o, inv, in, poincare(fm.front(), fm.back()), std::nullopt);
    } else if (inv == "kchar") {
        emit(o, inv, in, k_char(fm), std::nullopt);
    }
    return kOk;
}

int run_verify(const Options& o) {
    const auto& names = identity_names();
    if (std::find(names.begin(), names.end(), o.identity) == names.end())
        fail(ErrorCode::UnknownIdentity, "unknown identity " + o.identity);
    const VerifyReport r = o.input.empty() ? verify_corpus(o.identity) : verify_input(o.identity, parse_input(o.input), o.element);
    if (o.format == "json")
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_text();
    return r.passed() ? kOk : kFalsified;
}

int run_pseudobases(const Options& o) {
    const ParsedInput in = parse_input(o.input);
    const FlagMatroid& fm = in.flag;
    need_length(fm, 2, "pseudobases");
    std::map<int, std::vector<Subset>> layers;
    for (Subset s : pseudo_bases(fm.front(), fm.back())) layers[card(s)].push_back(s);
    if (o.format == "json") {
        json j = json::object();
        for (const auto& [k, ss] : layers) {
            json arr = json::array();
            for (Subset s : ss) arr.push_back(elements(s));
            j[std::to_string(k)] = arr;
        }
        std::cout << json{{"input_hash", in.hash}, {"layers", j}}.dump(2) << "\n";
        return kOk;
    }
    for (const auto& [k, ss] : layers) {
        std::cout << k << " (" << ss.size() << "):";
        for (Subset s : ss) std::cout << " " << subset_string(s);
        std::cout << "\n";
    }
    return kOk;
}

int run_corpus(const Options& o) {
    const auto ms = matroid_corpus(6, o.seed);
    const auto qs = quotient_corpus(ms);
    const auto ts = three_step_corpus(ms);
    if (o.format == "json") {
        json j = {{"seed", o.seed}, {"matroids", json::array()}, {"quotients", json::array()}, {"three_step", json::array()}};
        for (const auto& m : ms) j["matroids"].push_back({{"name", m.name}, {"matroid", to_json(m.matroid)}});
        for (const auto& q : qs) j["quotients"].push_back({{"name", q.name}, {"flag", to_json(q.flag)}});
        for (const auto& t : ts) j["three_step"].push_back({{"name", t.name}, {"flag", to_json(t.flag)}});
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    for (const auto& m : ms) std::cout << m.name << "\t" << m.matroid.to_string() << "\n";
    std::cout << ms.size() << " matroids, " << qs.size() << " two-step quotients, " << ts.size() << " three-step flags\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tutte-type invariants of matroids and flag matroids"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", o.seed, "seed for the random parts of the corpus");
        sub->add_option("--threads", o.threads, "worker threads (default: FLAGTUTTE_THREADS or all cores)")
            ->check(CLI::NonNegativeNumber);
    };

    auto* compute = app.add_subcommand("compute", "compute an invariant");
    compute->add_option("--invariant", o.invariant, "invariant name")->required();
    compute->add_option("--input", o.input, "input file or inline JSON")->required();
    compute->add_flag("--equivariant", o.equivariant, "also print the torus-equivariant refinement");
    common(compute);

    auto* verify = app.add_subcommand("verify", "check an identity on an input or on the built-in corpus");
    verify->add_option("--identity", o.identity, "identity name")->required();
    verify->add_option("--input", o.input, "input file or inline JSON (default: the corpus)");
    verify->add_option("--element", o.element, "element for delcont");
    common(verify);

    auto* pb = app.add_subcommand("pseudobases", "list pseudo-bases of a two-step flag by cardinality");
    pb->add_option("--input", o.input, "input file or inline JSON")->required();
    common(pb);

    auto* corpus = app.add_subcommand("corpus", "list the built-in test corpus");
    common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (o.threads > 0) set_threads(o.threads);
    try {
        if (compute->parsed()) return run_compute(o);
        if (verify->parsed()) return run_verify(o);
        if (pb->parsed()) return run_pseudobases(o);
        return run_corpus(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_internal(e.code()) ? kInternal : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
