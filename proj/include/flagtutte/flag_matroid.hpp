#ifndef FLAGTUTTE_FLAG_MATROID_HPP
#define FLAGTUTTE_FLAG_MATROID_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "matroid.hpp"
#include "subset.hpp"

namespace flagtutte {

/// Nested chain B_1 ⊆ ... ⊆ B_k with B_i a basis of the i-th constituent.
struct FlagBasis {
    std::vector<Subset> chain;

    bool operator==(const FlagBasis& o) const { return chain == o.chain; }
    bool operator<(const FlagBasis& o) const { return chain < o.chain; }

    /// e_{B_1} + ... + e_{B_k}.
    LatticeVector indicator(int n) const {
        LatticeVector v = zero_vector(n);
        for (Subset b : chain)
            for (int e : elements(b)) v[e - 1] += 1;
        return v;
    }
};

/// Quotient chain M_1 <- M_2 <- ... <- M_k on a common ground set.
class FlagMatroid {
   public:
    FlagMatroid() = default;

    const std::vector<Matroid>& constituents() const { return ms_; }
    const Matroid& operator[](std::size_t i) const { return ms_[i]; }
    const Matroid& front() const { return ms_.front(); }
    const Matroid& back() const { return ms_.back(); }
    std::size_t length() const { return ms_.size(); }
    int size() const { return ms_.empty() ? 0 : ms_.front().size(); }

    std::vector<int> rank_vector() const {
        std::vector<int> r;
        for (const auto& m : ms_) r.push_back(m.rank());
        return r;
    }

    bool operator==(const FlagMatroid& o) const { return ms_ == o.ms_; }
    bool operator<(const FlagMatroid& o) const { return ms_ < o.ms_; }

    /// Validating constructor; reports the first pair that is not a quotient.
    friend FlagMatroid flag(std::vector<Matroid> ms);

    /// Skips the quotient checks.
    static FlagMatroid trusted(std::vector<Matroid> ms) {
        FlagMatroid f;
        f.ms_ = std::move(ms);
        return f;
    }

   private:
    std::vector<Matroid> ms_;
};

inline FlagMatroid flag(std::vector<Matroid> ms) {
    require(!ms.empty(), ErrorCode::InvalidInput, "flag matroid needs a constituent");
    for (std::size_t i = 1; i < ms.size(); ++i) {
        require(ms[i].size() == ms[0].size(), ErrorCode::GroundSetMismatch,
                "constituent " + std::to_string(i + 1) + " has a different ground set");
    }
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
        if (ms[i].rank() > ms[i + 1].rank() || !is_quotient(ms[i], ms[i + 1]))
            fail(ErrorCode::NotAQuotientChain, "constituent " + std::to_string(i + 1) +
                                                   " is not a quotient of constituent " + std::to_string(i + 2));
    }
    return FlagMatroid::trusted(std::move(ms));
}

/// All flag bases, ordered lexicographically by (B_1, ..., B_k) as bit masks.
inline std::vector<FlagBasis> flag_bases(const FlagMatroid& fm) {
    std::vector<FlagBasis> out;
    const std::size_t k = fm.length();
    std::vector<Subset> chain(k);
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == k) {
            out.push_back({chain});
            return;
        }
        for (Subset b : fm[level].bases()) {
            if (level > 0 && !is_subset(chain[level - 1], b)) continue;
            chain[level] = b;
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline bool is_flag_basis(const FlagMatroid& fm, const FlagBasis& b) {
    if (b.chain.size() != fm.length()) return false;
    for (std::size_t i = 0; i < fm.length(); ++i) {
        if (!fm[i].is_basis(b.chain[i])) return false;
        if (i > 0 && !is_subset(b.chain[i - 1], b.chain[i])) return false;
    }
    return true;
}

/// Subsets spanning m1 and independent in m2, in increasing mask order.
inline std::vector<Subset> pseudo_bases(const Matroid& m1, const Matroid& m2) {
    if (!is_quotient(m1, m2)) fail(ErrorCode::NotAQuotient, "first matroid is not a quotient of the second");
    std::vector<Subset> out;
    for (Subset b : m2.bases())
        for_each_subset(b, [&](Subset s) {
            if (m1.is_spanning(s)) out.push_back(s);
        });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Higgs factorization [M^(0) = m2, ..., M^(d) = m1], layer i built from the
/// pseudo-bases of size r2 - i.
inline std::vector<Matroid> higgs_factorization(const Matroid& m1, const Matroid& m2) {
    const auto pb = pseudo_bases(m1, m2);
    std::vector<Matroid> out;
    for (int i = 0; i <= m2.rank() - m1.rank(); ++i) {
        const int r = m2.rank() - i;
        std::vector<Subset> layer;
        for (Subset s : pb)
            if (card(s) == r) layer.push_back(s);
        out.push_back(Matroid::from_bases(m1.size(), r, std::move(layer)));
    }
    return out;
}

/// A flag basis B with |B_i ∩ S_j| = rk_i(S_j) for every constituent i and chain member S_j.
inline FlagBasis face_basis(const FlagMatroid& fm, const std::vector<Subset>& chain) {
    const int n = fm.size();
    for (std::size_t j = 1; j < chain.size(); ++j)
        require(is_subset(chain[j - 1], chain[j]), ErrorCode::InvalidInput, "face chain is not nested");
    std::vector<int> order;
    Subset seen = 0;
    for (Subset s : chain) {
        for (int e : elements(s & ~seen)) order.push_back(e);
        seen |= s;
    }
    for (int e : elements(full_set(n) & ~seen)) order.push_back(e);
    FlagBasis out;
    for (const auto& m : fm.constituents()) {
        Subset b = 0;
        for (int e : order)
            if (m.is_independent(b | element(e))) b |= element(e);
        out.chain.push_back(b);
    }
    require(is_flag_basis(fm, out), ErrorCode::InternalAssertion, "greedy face basis is not a flag basis");
    return out;
}

/// Membership of an integer point in the Minkowski sum of the constituent base polytopes.
inline bool polytope_membership(const FlagMatroid& fm, const LatticeVector& w) {
    const int n = fm.size();
    const auto k = static_cast<std::int64_t>(fm.length());
    if (static_cast<int>(w.size()) != n) return false;
    std::int64_t total = 0;
    for (auto x : w) {
        if (x < 0 || x > k) return false;
        total += x;
    }
    std::int64_t ranks = 0;
    for (const auto& m : fm.constituents()) ranks += m.rank();
    if (total != ranks) return false;
    const Subset limit = full_set(n);
    for (Subset s = 1; s != 0 && s <= limit; ++s) {
        std::int64_t ws = 0, bound = 0;
        for (int e : elements(s)) ws += w[e - 1];
        for (const auto& m : fm.constituents()) bound += m.rank(s);
        if (ws > bound) return false;
        if (s == limit) break;
    }
    return true;
}

/// Dual flag (M_k*, ..., M_1*).
inline FlagMatroid dual(const FlagMatroid& fm) {
    std::vector<Matroid> ms;
    for (auto it = fm.constituents().rbegin(); it != fm.constituents().rend(); ++it) ms.push_back(dual(*it));
    return FlagMatroid::trusted(std::move(ms));
}

/// Constituent-wise direct sum of two flags of equal length.
inline FlagMatroid direct_sum(const FlagMatroid& a, const FlagMatroid& b) {
    require(a.length() == b.length(), ErrorCode::InvalidInput, "flags of different length");
    std::vector<Matroid> ms;
    for (std::size_t i = 0; i < a.length(); ++i) ms.push_back(direct_sum(a[i], b[i]));
    return FlagMatroid::trusted(std::move(ms));
}

inline std::string to_string(const FlagMatroid& fm) {
    std::string out = "Flag[";
    for (std::size_t i = 0; i < fm.length(); ++i) {
        if (i) out += ", ";
        out += fm[i].to_string();
    }
    return out + "]";
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_FLAG_MATROID_HPP
