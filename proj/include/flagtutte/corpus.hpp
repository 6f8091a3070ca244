#ifndef FLAGTUTTE_CORPUS_HPP
#define FLAGTUTTE_CORPUS_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flag_matroid.hpp"
#include "matroid.hpp"
#include "subset.hpp"

namespace flagtutte {

/// A labelled corpus entry.
struct CorpusMatroid {
    std::string name;
    Matroid matroid;
};

struct CorpusFlag {
    std::string name;
    FlagMatroid flag;
};

namespace detail {

class CorpusBuilder {
   public:
    explicit CorpusBuilder(int max_n) : max_n_(max_n) {}

    void add(const std::string& name, const Matroid& m) {
        if (m.size() < 1 || m.size() > max_n_) return;
        if (seen_.insert(m).second) out_.push_back({name, m});
    }

    std::vector<CorpusMatroid> take() { return std::move(out_); }
    const std::vector<CorpusMatroid>& current() const { return out_; }

   private:
    int max_n_;
    std::set<Matroid> seen_;
    std::vector<CorpusMatroid> out_;
};

inline std::string uname(int r, int n) { return "U" + std::to_string(r) + "," + std::to_string(n); }

}  // namespace detail

/// Deterministic family of matroids on at most max_n elements: uniform
/// matroids, graphic matroids of all graphs on up to four vertices, duals,
/// direct sums and seeded integer matrices. Duplicates (equal basis sets) are dropped.
inline std::vector<CorpusMatroid> matroid_corpus(int max_n = 6, std::uint64_t seed = 20240601) {
    detail::CorpusBuilder b(max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int r = 0; r <= n; ++r) b.add(detail::uname(r, n), uniform(r, n));

    // every labelled graph on 3 or 4 vertices, edges from the complete graph
    for (int v = 3; v <= 4; ++v) {
        std::vector<std::pair<int, int>> all;
        for (int a = 1; a <= v; ++a)
            for (int c = a + 1; c <= v; ++c) all.emplace_back(a, c);
        const Subset full = full_set(static_cast<int>(all.size()));
        for (Subset s = 1; s <= full; ++s) {
            std::vector<std::pair<int, int>> edges;
            std::string name = "G" + std::to_string(v) + "[";
            for (int e : elements(s)) {
                edges.push_back(all[e - 1]);
                name += std::to_string(all[e - 1].first) + std::to_string(all[e - 1].second) + " ";
            }
            name.back() = ']';
            b.add(name, graphic(v, edges));
        }
    }

    // a few graphs with parallel edges and loops
    b.add("theta", graphic(2, {{1, 2}, {1, 2}, {1, 2}}));
    b.add("loop+edge", graphic(2, {{1, 1}, {1, 2}}));
    b.add("digon+triangle", graphic(3, {{1, 2}, {1, 2}, {2, 3}, {1, 3}}));
    b.add("K4+parallel", graphic(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 2}}));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + trial % (max_n - 3 > 0 ? max_n - 3 : 1);
        const int r = 2 + (trial / 3) % 2;
        if (n > max_n || r > n) continue;
        RationalMatrix m(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        b.add("matrix#" + std::to_string(trial), from_matrix(m));
    }

    // duals and direct sums of what exists so far
    const auto base = b.current();
    for (const auto& c : base) b.add(c.name + "*", dual(c.matroid));
    for (std::size_t i = 0; i < base.size() && i < 40; ++i)
        for (std::size_t j = i; j < base.size() && j < 40; ++j)
            if (base[i].matroid.size() + base[j].matroid.size() <= max_n)
                b.add(base[i].name + "+" + base[j].name, direct_sum(base[i].matroid, base[j].matroid));
    return b.take();
}

/// Two-step quotients derived from the matroid corpus: (M,M), (U0n,M), (trunc M, M),
/// (U1n,M) for loopless M, elementary quotients (N/e, N\e) and adjacent Higgs layers.
inline std::vector<CorpusFlag> quotient_corpus(const std::vector<CorpusMatroid>& ms, int max_n = 6) {
    std::set<FlagMatroid> seen;
    std::vector<CorpusFlag> out;
    auto add = [&](const std::string& name, const Matroid& a, const Matroid& b) {
        if (a.size() > max_n || a.size() != b.size() || a.size() < 1) return;
        auto fm = FlagMatroid::trusted({a, b});
        if (seen.insert(fm).second) out.push_back({name, std::move(fm)});
    };
    for (const auto& c : ms) {
        const Matroid& m = c.matroid;
        const int n = m.size();
        add("(" + c.name + "," + c.name + ")", m, m);
        add("(U0," + std::to_string(n) + "," + c.name + ")", uniform(0, n), m);
        if (m.rank() >= 1) add("(trunc " + c.name + "," + c.name + ")", truncation(m), m);
        if (m.rank() >= 1 && m.loops() == 0) add("(U1," + std::to_string(n) + "," + c.name + ")", uniform(1, n), m);
        if (n >= 2)
            for (int e = 1; e <= n; ++e) {
                if (m.is_loop(e) || m.is_coloop(e)) continue;
                add("(" + c.name + "/" + std::to_string(e) + "," + c.name + "\\" + std::to_string(e) + ")",
                    contraction(m, e), deletion(m, e));
            }
    }
    // Higgs layers of the quotients with rank gap at least two
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
        const auto& fm = out[i].flag;
        if (fm.back().rank() - fm.front().rank() < 2) continue;
        auto layers = higgs_factorization(fm.front(), fm.back());
        for (std::size_t l = 0; l + 1 < layers.size(); ++l)
            add(out[i].name + " higgs" + std::to_string(l), layers[l + 1], layers[l]);
    }
    return out;
}

/// Three-step flags (trunc^2 M, trunc M, M) and (U1n, trunc M, M).
inline std::vector<CorpusFlag> three_step_corpus(const std::vector<CorpusMatroid>& ms, int max_n = 5) {
    std::set<FlagMatroid> seen;
    std::vector<CorpusFlag> out;
    for (const auto& c : ms) {
        const Matroid& m = c.matroid;
        if (m.size() > max_n || m.rank() < 2) continue;
        Matroid t1 = truncation(m), t2 = truncation(t1);
        auto fm = FlagMatroid::trusted({t2, t1, m});
        if (seen.insert(fm).second) out.push_back({"(trunc2,trunc," + c.name + ")", fm});
        if (m.loops() == 0 && t1.rank() >= 1) {
            auto fm2 = FlagMatroid::trusted({uniform(1, m.size()), t1, m});
            if (seen.insert(fm2).second) out.push_back({"(U1,trunc," + c.name + ")", fm2});
        }
    }
    return out;
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_CORPUS_HPP
