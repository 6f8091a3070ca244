#ifndef FLAGTUTTE_CONE_HPP
#define FLAGTUTTE_CONE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "flag_matroid.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace flagtutte {

/// apex + {Σ a_i v_i : a_i ≥ 0 for closed rays, a_i ≥ 1 for open rays}, weighted by sign.
struct HalfOpenSimplicialCone {
    LatticeVector apex;
    std::vector<LatticeVector> rays;
    std::vector<bool> open;
    int sign = 1;

    int ambient() const { return static_cast<int>(apex.size()); }
    int dim() const { return static_cast<int>(rays.size()); }

    bool operator==(const HalfOpenSimplicialCone& o) const {
        return apex == o.apex && rays == o.rays && open == o.open && sign == o.sign;
    }
};

inline nlohmann::json to_json(const HalfOpenSimplicialCone& c) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& r : c.rays) rays.push_back(r);
    nlohmann::json open = nlohmann::json::array();
    for (bool b : c.open) open.push_back(b);
    return {{"apex", c.apex}, {"rays", rays}, {"open", open}, {"sign", c.sign}};
}

/// Linear functional ζ plus a coordinate order breaking ties symbolically.
struct Direction {
    std::vector<Rational> zeta;
    /// 0-based coordinate permutation consulted when ⟨ζ,v⟩ = 0.
    std::vector<int> lex_tiebreak;

    static Direction make(std::vector<Rational> zeta, std::vector<int> perm = {}) {
        require(std::any_of(zeta.begin(), zeta.end(), [](const Rational& z) { return sgn(z) != 0; }),
                ErrorCode::HypothesisViolated, "direction vector is zero");
        if (perm.empty()) {
            perm.resize(zeta.size());
            std::iota(perm.begin(), perm.end(), 0);
        }
        require(perm.size() == zeta.size(), ErrorCode::InvalidInput, "tiebreak length mismatch");
        return {std::move(zeta), std::move(perm)};
    }

    /// ζ = (n, n-1, ..., 1) with the identity tiebreak.
    static Direction standard(int n) {
        std::vector<Rational> z;
        for (int i = 0; i < n; ++i) z.emplace_back(n - i);
        return make(std::move(z));
    }

    /// Sign of the perturbed pairing ⟨ζ',v⟩.
    int pairing_sign(const LatticeVector& v) const {
        int s = sgn(dot(zeta, v));
        if (s != 0) return s;
        for (int k : lex_tiebreak)
            if (v[k] != 0) return v[k] > 0 ? 1 : -1;
        fail(ErrorCode::ZeroPairing, "ray " + vector_string(v) + " pairs to zero");
    }
};

/// Exchange vectors e_j - e_i spanning the tangent cone of the flag base polytope at B.
inline std::vector<LatticeVector> tangent_cone_generators(const FlagMatroid& fm, const FlagBasis& b) {
    require(is_flag_basis(fm, b), ErrorCode::NotABasis, "chain is not a flag basis");
    const int n = fm.size();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t l = 0; l < fm.length(); ++l) {
        const Subset bl = b.chain[l];
        for (int i : elements(bl))
            for (int j : elements(fm.back().ground() & ~bl))
                if (fm[l].is_basis((bl & ~element(i)) | element(j))) pairs.emplace_back(i, j);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<LatticeVector> out;
    for (auto [i, j] : pairs) out.push_back(unit_vector(n, j) - unit_vector(n, i));
    return out;
}

/// True iff w - apex has integer ray coordinates meeting the closed/open constraints.
inline bool cone_membership(const HalfOpenSimplicialCone& c, const LatticeVector& w) {
    SpanSolver solver(c.rays, c.ambient());
    auto lam = solver.integer_coordinates(w - c.apex);
    if (!lam) return false;
    for (int i = 0; i < c.dim(); ++i) {
        if ((*lam)[i] < 0) return false;
        if (c.open[i] && (*lam)[i] == 0) return false;
    }
    return true;
}

/// Cone flip: negative rays are reversed and their facet toggled, the sign
/// absorbing one factor of -1 per reversal; the generating function is unchanged.
inline HalfOpenSimplicialCone flip_cone(const HalfOpenSimplicialCone& c, const Direction& d) {
    HalfOpenSimplicialCone out = c;
    for (int i = 0; i < c.dim(); ++i) {
        if (d.pairing_sign(c.rays[i]) > 0) continue;
        out.rays[i] = -c.rays[i];
        out.open[i] = !c.open[i];
        out.sign = -out.sign;
    }
    return out;
}

/// Cone membership after a flip; a cheaper integer solver per cell.
class PreparedCone {
   public:
    explicit PreparedCone(HalfOpenSimplicialCone c) : cone_(std::move(c)), solver_(cone_.rays, cone_.ambient()) {}

    const HalfOpenSimplicialCone& cone() const { return cone_; }
    const SpanSolver& solver() const { return solver_; }

    bool contains(const LatticeVector& w) const {
        auto lam = solver_.integer_coordinates(w - cone_.apex);
        if (!lam) return false;
        for (int i = 0; i < cone_.dim(); ++i)
            if ((*lam)[i] < (cone_.open[i] ? 1 : 0)) return false;
        return true;
    }

   private:
    HalfOpenSimplicialCone cone_;
    SpanSolver solver_;
};

namespace detail {

/// Lexicographic sign of the sequence (first nonzero entry).
inline int lex_sign(const std::vector<Rational>& seq) {
    for (const auto& x : seq)
        if (sgn(x) != 0) return sgn(x);
    return 0;
}

}  // namespace detail

/// Half-open unimodular triangulation of apex + Cone(generators).
///
/// Rays are made primitive and reduced to the extreme ones, then placed in
/// order; every cell keeps closed exactly the facets on the side of a
/// symbolically perturbed interior point.
inline std::vector<HalfOpenSimplicialCone> triangulate_half_open(const LatticeVector& apex,
                                                                  const std::vector<LatticeVector>& generators) {
    const int n = static_cast<int>(apex.size());
    std::vector<LatticeVector> rays;
    for (const auto& g : generators) {
        require(static_cast<int>(g.size()) == n, ErrorCode::InvalidInput, "generator dimension mismatch");
        if (is_zero(g)) continue;
        LatticeVector p = primitive(g);
        if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(std::move(p));
    }
    if (rays.empty()) return {HalfOpenSimplicialCone{apex, {}, {}, 1}};
    require(is_pointed(rays, n), ErrorCode::NotPointed, "generators contain a line");

    std::vector<LatticeVector> ext;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<LatticeVector> others;
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (j != i) others.push_back(rays[j]);
        if (!in_cone(others, rays[i], n)) ext.push_back(rays[i]);
    }

    // placing triangulation; cells hold sorted indices into ext
    std::vector<std::vector<int>> cells{{0}};
    int span = 1;
    for (int p = 1; p < static_cast<int>(ext.size()); ++p) {
        std::vector<LatticeVector> prefix(ext.begin(), ext.begin() + p + 1);
        if (vectors_rank(prefix, n) > span) {
            for (auto& c : cells) c.push_back(p);
            ++span;
            continue;
        }
        std::map<std::vector<int>, int> facet_count;
        for (const auto& c : cells)
            for (std::size_t i = 0; i < c.size(); ++i) {
                std::vector<int> f = c;
                f.erase(f.begin() + static_cast<long>(i));
                ++facet_count[f];
            }
        std::vector<std::vector<int>> added;
        for (const auto& c : cells) {
            std::vector<LatticeVector> cols;
            for (int idx : c) cols.push_back(ext[idx]);
            auto lam = SpanSolver(cols, n).coordinates(ext[p]);
            require(lam.has_value(), ErrorCode::InternalAssertion, "placed ray left the span");
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (sgn((*lam)[i]) >= 0) continue;
                std::vector<int> f = c;
                f.erase(f.begin() + static_cast<long>(i));
                if (facet_count[f] != 1) continue;
                f.push_back(p);
                added.push_back(std::move(f));
            }
        }
        require(!added.empty(), ErrorCode::InternalAssertion, "extreme ray sees no facet");
        for (auto& c : added) cells.push_back(std::move(c));
    }

    // generic interior point y0 + ε g_1 + ε² g_2 + ...
    LatticeVector y0 = zero_vector(n);
    for (const auto& r : ext) y0 = y0 + r;
    std::vector<LatticeVector> probes{y0};
    for (const auto& r : ext) probes.push_back(r);

    std::vector<HalfOpenSimplicialCone> out;
    for (const auto& c : cells) {
        HalfOpenSimplicialCone cell{apex, {}, {}, 1};
        for (int idx : c) cell.rays.push_back(ext[idx]);
        require(maximal_minor_gcd(cell.rays, n) == 1, ErrorCode::NotUnimodular,
                "cell with rays beyond the unimodular class");
        SpanSolver solver(cell.rays, n);
        std::vector<std::vector<Rational>> mu;
        for (const auto& y : probes) mu.push_back(*solver.coordinates(y));
        for (int i = 0; i < cell.dim(); ++i) {
            std::vector<Rational> seq;
            for (const auto& m : mu) seq.push_back(m[i]);
            cell.open.push_back(detail::lex_sign(seq) < 0);
        }
        out.push_back(std::move(cell));
    }
    return out;
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_CONE_HPP
