#ifndef FLAGTUTTE_MATROID_HPP
#define FLAGTUTTE_MATROID_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "rational.hpp"
#include "subset.hpp"

namespace flagtutte {

/// A matroid on {1..n} given by its explicit family of bases.
///
/// Instances are immutable. For n <= kRankTableLimit the rank of every subset
/// is tabulated at construction.
class Matroid {
   public:
    static constexpr int kRankTableLimit = 16;

    Matroid() : Matroid(0, 0, {Subset{0}}, true) {}

    /// Validating constructor: checks cardinalities and the exchange axiom.
    static Matroid from_bases(int n, int r, std::vector<Subset> bases) {
        require(n >= 0, ErrorCode::InvalidInput, "negative ground set size");
        require(n <= kMaxGroundSet, ErrorCode::GroundSetTooLarge, "n = " + std::to_string(n) + " exceeds 64");
        require(!bases.empty(), ErrorCode::EmptyBases, "basis family is empty");
        const Subset ground = full_set(n);
        for (Subset b : bases) {
            require(is_subset(b, ground), ErrorCode::InvalidInput, "basis " + subset_string(b) + " leaves [n]");
            require(card(b) == r, ErrorCode::NotAMatroid,
                    "basis " + subset_string(b) + " has size " + std::to_string(card(b)) + ", expected " +
                        std::to_string(r));
        }
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        for (Subset b1 : bases)
            for (Subset b2 : bases) {
                for (int i : elements(b1 & ~b2)) {
                    bool ok = false;
                    for (int j : elements(b2 & ~b1))
                        if (std::binary_search(bases.begin(), bases.end(), (b1 & ~element(i)) | element(j))) {
                            ok = true;
                            break;
                        }
                    if (!ok)
                        fail(ErrorCode::NotAMatroid, "exchange fails for " + subset_string(b1) + ", " +
                                                         subset_string(b2) + " at element " + std::to_string(i));
                }
            }
        return Matroid(n, r, std::move(bases), true);
    }

    /// Skips validation; for families that are matroids by construction.
    static Matroid trusted(int n, int r, std::vector<Subset> bases) {
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        return Matroid(n, r, std::move(bases), true);
    }

    int size() const { return n_; }
    int rank() const { return r_; }
    const std::vector<Subset>& bases() const { return bases_; }
    Subset ground() const { return full_set(n_); }

    bool is_basis(Subset s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

    int rank(Subset s) const {
        if (table_) return (*table_)[s];
        int best = 0;
        for (Subset b : bases_) {
            best = std::max(best, card(b & s));
            if (best == card(s)) break;
        }
        return best;
    }

    bool is_independent(Subset s) const { return rank(s) == card(s); }
    bool is_spanning(Subset s) const { return rank(s) == r_; }

    bool is_loop(int e) const { return rank(element(e)) == 0; }
    bool is_coloop(int e) const { return rank(ground() & ~element(e)) < r_; }

    Subset loops() const {
        Subset s = 0;
        for (int e = 1; e <= n_; ++e)
            if (is_loop(e)) s |= element(e);
        return s;
    }

    Subset coloops() const {
        Subset s = 0;
        for (int e = 1; e <= n_; ++e)
            if (is_coloop(e)) s |= element(e);
        return s;
    }

    bool operator==(const Matroid& o) const { return n_ == o.n_ && r_ == o.r_ && bases_ == o.bases_; }
    bool operator!=(const Matroid& o) const { return !(*this == o); }
    bool operator<(const Matroid& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (r_ != o.r_) return r_ < o.r_;
        return bases_ < o.bases_;
    }

    std::string to_string() const {
        std::string out = "Matroid(n=" + std::to_string(n_) + ", r=" + std::to_string(r_) + ", bases={";
        for (std::size_t i = 0; i < bases_.size(); ++i) {
            if (i) out += ",";
            out += subset_string(bases_[i]);
        }
        return out + "})";
    }

   private:
    Matroid(int n, int r, std::vector<Subset> bases, bool) : n_(n), r_(r), bases_(std::move(bases)) {
        if (n_ <= kRankTableLimit) build_table();
    }

    void build_table() {
        const std::size_t size = std::size_t{1} << n_;
        std::vector<std::uint8_t> indep(size, 0);
        for (Subset b : bases_) indep[b] = 1;
        for (std::size_t s = size; s-- > 0;) {
            if (indep[s]) continue;
            for (int e = 0; e < n_; ++e)
                if (!((s >> e) & 1U) && indep[s | (std::size_t{1} << e)]) {
                    indep[s] = 1;
                    break;
                }
        }
        auto table = std::make_shared<std::vector<std::uint8_t>>(size, 0);
        auto& t = *table;
        for (std::size_t s = 1; s < size; ++s) {
            if (indep[s]) {
                t[s] = static_cast<std::uint8_t>(card(s));
                continue;
            }
            std::uint8_t best = 0;
            for (int e = 0; e < n_; ++e)
                if ((s >> e) & 1U) best = std::max(best, t[s & ~(std::size_t{1} << e)]);
            t[s] = best;
        }
        table_ = std::move(table);
    }

    int n_ = 0;
    int r_ = 0;
    std::vector<Subset> bases_;
    std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

inline Matroid uniform(int r, int n) {
    require(n >= 0 && n <= kMaxGroundSet, ErrorCode::GroundSetTooLarge, "bad ground set size");
    require(r >= 0 && r <= n, ErrorCode::InvalidRank,
            "U_{" + std::to_string(r) + "," + std::to_string(n) + "} needs 0 <= r <= n");
    return Matroid::trusted(n, r, k_subsets(n, r));
}

/// Column matroid of an exact rational matrix.
inline Matroid from_matrix(const RationalMatrix& rows) {
    require(!rows.empty() && !rows[0].empty(), ErrorCode::EmptyMatrix, "matrix has no entries");
    const int n = static_cast<int>(rows[0].size());
    for (const auto& row : rows)
        require(static_cast<int>(row.size()) == n, ErrorCode::InvalidInput, "ragged matrix");
    require(n <= kMaxGroundSet, ErrorCode::GroundSetTooLarge, "too many columns");
    const int r = matrix_rank(rows);
    auto column_rank = [&](Subset s) {
        RationalMatrix sub(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int e : elements(s)) sub[i].push_back(rows[i][e - 1]);
        return matrix_rank(std::move(sub));
    };
    std::vector<Subset> bases;
    for (Subset s : k_subsets(n, r))
        if (r == 0 || column_rank(s) == r) bases.push_back(s);
    return Matroid::trusted(n, r, std::move(bases));
}

/// Cycle matroid of a multigraph; edge i is element i.
inline Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
    require(vertices >= 1, ErrorCode::InvalidInput, "graph needs a vertex");
    const int n = static_cast<int>(edges.size());
    require(n <= kMaxGroundSet, ErrorCode::GroundSetTooLarge, "too many edges");
    for (auto [a, b] : edges)
        require(a >= 1 && a <= vertices && b >= 1 && b <= vertices, ErrorCode::InvalidInput,
                "edge endpoint out of range");
    auto forest_rank = [&](Subset s) {
        std::vector<int> parent(static_cast<std::size_t>(vertices) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int rk = 0;
        for (int e : elements(s)) {
            int a = find(edges[e - 1].first), b = find(edges[e - 1].second);
            if (a != b) {
                parent[a] = b;
                ++rk;
            }
        }
        return rk;
    };
    const int r = forest_rank(full_set(n));
    std::vector<Subset> bases;
    for (Subset s : k_subsets(n, r))
        if (forest_rank(s) == r) bases.push_back(s);
    return Matroid::trusted(n, r, std::move(bases));
}

inline Matroid dual(const Matroid& m) {
    std::vector<Subset> bases;
    bases.reserve(m.bases().size());
    for (Subset b : m.bases()) bases.push_back(m.ground() & ~b);
    return Matroid::trusted(m.size(), m.size() - m.rank(), std::move(bases));
}

/// Packs the bits of s that lie in `keep` into consecutive low bits.
inline Subset compress(Subset s, Subset keep) {
    Subset out = 0;
    int k = 0;
    for (int e : elements(keep)) {
        if (contains(s, e)) out |= Subset{1} << k;
        ++k;
    }
    return out;
}

struct MinorResult {
    Matroid matroid;
    /// labels[i-1] is the original label of new element i.
    std::vector<int> labels;
};

/// M \ deletions / contractions, relabelled to 1..n' in increasing order.
inline MinorResult minor(const Matroid& m, Subset deletions, Subset contractions) {
    require((deletions & contractions) == 0, ErrorCode::InvalidInput, "deletion and contraction overlap");
    require(is_subset(deletions | contractions, m.ground()), ErrorCode::InvalidInput, "minor set leaves [n]");
    const Subset keep = m.ground() & ~(deletions | contractions);
    require(keep != 0 || m.size() == 0, ErrorCode::GroundSetExhausted, "minor removes every element");
    const int rc = m.rank(contractions);
    const int r = m.rank(keep | contractions) - rc;
    std::vector<Subset> bases;
    for (Subset b : m.bases())
        if (card(b & contractions) == rc && card(b & keep) == r) bases.push_back(compress(b & keep, keep));
    return {Matroid::trusted(card(keep), r, std::move(bases)), elements(keep)};
}

inline Matroid deletion(const Matroid& m, int e) { return minor(m, element(e), 0).matroid; }
inline Matroid contraction(const Matroid& m, int e) { return minor(m, 0, element(e)).matroid; }

inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
    require(a.size() + b.size() <= kMaxGroundSet, ErrorCode::GroundSetTooLarge, "direct sum exceeds 64 elements");
    std::vector<Subset> bases;
    bases.reserve(a.bases().size() * b.bases().size());
    for (Subset x : a.bases())
        for (Subset y : b.bases()) bases.push_back(x | (y << a.size()));
    return Matroid::trusted(a.size() + b.size(), a.rank() + b.rank(), std::move(bases));
}

/// Truncation to rank r-1 (identity on rank-0 matroids).
inline Matroid truncation(const Matroid& m) {
    if (m.rank() == 0) return m;
    std::vector<Subset> bases;
    for (Subset b : m.bases())
        for (int e : elements(b)) bases.push_back(b & ~element(e));
    return Matroid::trusted(m.size(), m.rank() - 1, std::move(bases));
}

/// True iff m1 is a quotient of m2: every rank increment of m1 is bounded by the one of m2.
inline bool is_quotient(const Matroid& m1, const Matroid& m2) {
    require(m1.size() == m2.size(), ErrorCode::GroundSetMismatch,
            "ground sets differ: " + std::to_string(m1.size()) + " vs " + std::to_string(m2.size()));
    const int n = m1.size();
    require(n <= 24, ErrorCode::GroundSetTooLarge, "quotient test limited to n <= 24");
    const Subset limit = full_set(n);
    for (Subset a = 0;; ++a) {
        const int d1 = m1.rank(a), d2 = m2.rank(a);
        for (int e = 1; e <= n; ++e) {
            if (contains(a, e)) continue;
            const Subset b = a | element(e);
            if (m2.rank(b) - d2 < m1.rank(b) - d1) return false;
        }
        if (a == limit) break;
    }
    return true;
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_MATROID_HPP
