#ifndef FLAGTUTTE_INVARIANTS_HPP
#define FLAGTUTTE_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aux_polynomial.hpp"
#include "cone.hpp"
#include "error.hpp"
#include "flag_matroid.hpp"
#include "genfun.hpp"
#include "matroid.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "subset.hpp"

namespace flagtutte {

/// A computed invariant with its optional equivariant refinement.
struct InvariantResult {
    std::string name;
    AuxPolynomial polynomial;
    std::optional<EquivariantPolynomial> equivariant;
    std::string input_hash;
    double seconds = 0;
};

namespace detail {

inline AuxPolynomial shifted_var(const std::string& name, long c) {
    return AuxPolynomial::variable(name) + AuxPolynomial::constant(c);
}

inline AuxPolynomial uv_to_xy(const AuxPolynomial& p) {
    return p.substitute({{"u", shifted_var("x", -1)}, {"v", shifted_var("y", -1)}}).with_vars({"x", "y"});
}

inline LatticeVector indicator(int n, Subset s) {
    LatticeVector v = zero_vector(n);
    for (int e : elements(s)) v[e - 1] = 1;
    return v;
}

enum class Diagram { Flag, LasVergnas };

/// Σ_B Hilb(Cone_B) Σ_{p,q} t^{apex(B) + sign_p e_p + e_q} u^{..} v^{|q|}, one
/// triangulation per flag basis with the shifts kept as numerator monomials.
///
/// With twist the apex is e_{B_1} + ... + e_{B_{k-1}} and p carries
/// u^{r_k - |p|}; without it the apex is 0, p enters with t^{-e_p} and u^{|p|}.
inline GenFun localization_sum(const FlagMatroid& fm, bool twist, Diagram diagram) {
    const int n = fm.size();
    const std::vector<std::string> vars{"u", "v"};
    const auto bases = flag_bases(fm);
    std::vector<std::vector<GenFunTerm>> parts(bases.size());
    parallel_for(bases.size(), [&](std::size_t idx) {
        const FlagBasis& b = bases[idx];
        LatticeVector apex = zero_vector(n);
        if (twist)
            for (std::size_t l = 0; l + 1 < fm.length(); ++l)
                for (int e : elements(b.chain[l])) apex[e - 1] += 1;
        const Subset p_range = diagram == Diagram::Flag ? b.chain.back() : b.chain.front();
        const Subset q_range = full_set(n) & ~(diagram == Diagram::Flag ? b.chain.front() : b.chain.back());
        const int rk = fm.back().rank();
        std::map<LatticeVector, AuxPolynomial> numerator;
        for_each_subset(p_range, [&](Subset p) {
            for_each_subset(q_range, [&](Subset q) {
                LatticeVector shift = indicator(n, q);
                if (twist)
                    shift = shift + indicator(n, p);
                else
                    shift = shift - indicator(n, p);
                const int up = twist ? rk - card(p) : card(p);
                auto mono = AuxPolynomial::monomial(vars, {up, card(q)});
                auto it = numerator.find(shift);
                if (it == numerator.end())
                    numerator.emplace(std::move(shift), std::move(mono));
                else
                    it->second += mono;
            });
        });
        std::vector<std::pair<LatticeVector, AuxPolynomial>> num(numerator.begin(), numerator.end());
        for (auto& cell : triangulate_half_open(apex, tangent_cone_generators(fm, b)))
            parts[idx].push_back(GenFunTerm{num, std::move(cell)});
    });
    GenFun g(n, vars);
    for (auto& part : parts)
        for (auto& t : part) g.add(std::move(t));
    return g;
}

inline void require_loopless_coloopless(const FlagMatroid& fm) {
    if (fm.front().loops() != 0 || fm.back().coloops() != 0)
        fail(ErrorCode::HasLoopOrColoop, "flag matroid has a loop or a coloop");
}

/// Splits φ(u,v) into coefficients of (uv)^i; nullopt if some u^a v^b with a != b survives.
inline std::optional<std::vector<Rational>> uv_coefficients(const AuxPolynomial& phi) {
    const AuxPolynomial p = phi.with_vars({"u", "v"});
    std::vector<Rational> c;
    for (const auto& [e, q] : p.terms()) {
        if (e[0] != e[1]) return std::nullopt;
        if (static_cast<int>(c.size()) <= e[0]) c.resize(static_cast<std::size_t>(e[0]) + 1);
        c[e[0]] = q;
    }
    return c;
}

}  // namespace detail

/// Tutte polynomial by the corank-nullity expansion.
inline AuxPolynomial tutte(const Matroid& m) {
    const int n = m.size(), r = m.rank();
    std::map<std::pair<int, int>, long> counts;
    const Subset full = full_set(n);
    for_each_subset(full, [&](Subset s) {
        const int rs = m.rank(s);
        ++counts[{r - rs, card(s) - rs}];
    });
    AuxPolynomial ux = detail::shifted_var("x", -1).with_vars({"x", "y"});
    AuxPolynomial vy = detail::shifted_var("y", -1).with_vars({"x", "y"});
    AuxPolynomial out({"x", "y"});
    for (const auto& [key, c] : counts)
        out += ux.pow(static_cast<unsigned>(key.first)) * vy.pow(static_cast<unsigned>(key.second)) * Rational(c);
    return out;
}

/// Las Vergnas Tutte polynomial of a quotient, in variables (x, z, y).
inline AuxPolynomial lv_tutte(const Matroid& m1, const Matroid& m2) {
    if (m1.size() != m2.size() || !is_quotient(m1, m2))
        fail(ErrorCode::NotAQuotient, "first matroid is not a quotient of the second");
    const int n = m1.size(), r1 = m1.rank(), r2 = m2.rank();
    const std::vector<std::string> vars{"x", "z", "y"};
    std::map<std::vector<int>, long> counts;
    for_each_subset(full_set(n), [&](Subset s) {
        const int a = m1.rank(s), b = m2.rank(s);
        ++counts[{r1 - a, r2 - b - (r1 - a), card(s) - b}];
    });
    AuxPolynomial ux = detail::shifted_var("x", -1).with_vars(vars);
    AuxPolynomial vy = detail::shifted_var("y", -1).with_vars(vars);
    AuxPolynomial z = AuxPolynomial::variable("z", vars);
    AuxPolynomial out(vars);
    for (const auto& [e, c] : counts)
        out += ux.pow(static_cast<unsigned>(e[0])) * z.pow(static_cast<unsigned>(e[1])) *
               vy.pow(static_cast<unsigned>(e[2])) * Rational(c);
    return out;
}

/// Equivariant Las Vergnas polynomial at (u+1, v+1, w): one monomial per subset.
inline EquivariantPolynomial lv_tutte_equivariant(const Matroid& m1, const Matroid& m2) {
    if (m1.size() != m2.size() || !is_quotient(m1, m2))
        fail(ErrorCode::NotAQuotient, "first matroid is not a quotient of the second");
    const int n = m1.size(), r1 = m1.rank(), r2 = m2.rank();
    const std::vector<std::string> vars{"u", "v", "w"};
    EquivariantPolynomial out(n, vars);
    for_each_subset(full_set(n), [&](Subset s) {
        const int a = m1.rank(s), b = m2.rank(s);
        out.add(detail::indicator(n, s), AuxPolynomial::monomial(vars, {r1 - a, card(s) - b, r2 - r1 - b + a}));
    });
    return out;
}

/// Localization sum whose value is KT^T at (u+1, v+1). A rank-zero first
/// constituent contributes B_1 = ∅, matching the t = 1 specialization rule.
inline GenFun kt_genfun(const FlagMatroid& fm) { return detail::localization_sum(fm, true, detail::Diagram::Flag); }

/// KT^T(u+1, v+1) as a Laurent polynomial in t with coefficients in u, v.
inline EquivariantPolynomial kt_equivariant(const FlagMatroid& fm) {
    if (fm.front().rank() == 0)
        fail(ErrorCode::RankZeroConstituent, "first constituent has rank 0; use kt_equivariant_formal");
    return support(kt_genfun(fm));
}

/// Same sum without the rank check; for r_1 = 0 it is only defined formally.
inline EquivariantPolynomial kt_equivariant_formal(const FlagMatroid& fm) { return support(kt_genfun(fm)); }

/// Flag-geometric Tutte polynomial in (x, y).
inline AuxPolynomial kt(const FlagMatroid& fm) { return detail::uv_to_xy(evaluate_t1(kt_genfun(fm))); }

/// KT at (u+1, v+1) without expanding in x, y.
inline AuxPolynomial kt_uv(const FlagMatroid& fm) { return evaluate_t1(kt_genfun(fm)).with_vars({"u", "v"}); }

/// The untwisted push-pull φ(u,v) in the flag diagram.
inline AuxPolynomial h_phi(const FlagMatroid& fm) {
    detail::require_loopless_coloopless(fm);
    return evaluate_t1(detail::localization_sum(fm, false, detail::Diagram::Flag)).with_vars({"u", "v"});
}

/// h(s) with φ(u,v) = h(1 - uv).
inline AuxPolynomial h_polynomial(const FlagMatroid& fm) {
    const auto c = detail::uv_coefficients(h_phi(fm));
    if (!c) fail(ErrorCode::NotInUV, "push-pull is not a polynomial in uv");
    const AuxPolynomial one_minus_s = AuxPolynomial::constant(1, {"s"}) - AuxPolynomial::variable("s");
    AuxPolynomial h({"s"});
    for (std::size_t i = 0; i < c->size(); ++i) h += one_minus_s.pow(static_cast<unsigned>(i)) * (*c)[i];
    return h;
}

/// The analogous construction in the Las Vergnas diagram: (φ(u,v), φ ∈ Q[uv]).
inline std::pair<AuxPolynomial, bool> h_candidate_lv(const FlagMatroid& fm) {
    detail::require_loopless_coloopless(fm);
    AuxPolynomial phi =
        evaluate_t1(detail::localization_sum(fm, false, detail::Diagram::LasVergnas)).with_vars({"u", "v"});
    const bool in_uv = detail::uv_coefficients(phi).has_value();
    return {std::move(phi), in_uv};
}

/// χ_M(q) = (-1)^r T_M(1-q, 0).
inline AuxPolynomial characteristic_polynomial(const Matroid& m) {
    AuxPolynomial one_minus_q = AuxPolynomial::constant(1, {"q"}) - AuxPolynomial::variable("q");
    AuxPolynomial chi =
        tutte(m).substitute({{"x", one_minus_q}, {"y", AuxPolynomial::constant(0)}}).with_vars({"q"});
    return m.rank() % 2 ? -chi : chi;
}

/// β(M) = (-1)^{r-1} χ'(1).
inline Rational beta_invariant(const Matroid& m) {
    Rational d = characteristic_polynomial(m).derivative("q").value({{"q", Rational(1)}});
    return (m.rank() - 1) % 2 ? -d : d;
}

struct BetaPolynomials {
    AuxPolynomial beta;     // (-1)^{r2-r1} LVT(0, 0, -q)
    AuxPolynomial reduced;  // beta / (q - 1)
};

/// (-1)^{r2-r1} LVT(0, 0, -q), without the division.
inline AuxPolynomial beta_polynomial_unreduced(const Matroid& m1, const Matroid& m2) {
    AuxPolynomial b = lv_tutte(m1, m2)
                          .substitute({{"x", AuxPolynomial::constant(0)},
                                       {"y", AuxPolynomial::constant(0)},
                                       {"z", -AuxPolynomial::variable("q")}})
                          .with_vars({"q"});
    return (m2.rank() - m1.rank()) % 2 ? -b : b;
}

inline BetaPolynomials beta_polynomial(const Matroid& m1, const Matroid& m2) {
    AuxPolynomial b = beta_polynomial_unreduced(m1, m2);
    if (m1.rank() == m2.rank()) fail(ErrorCode::RankGapZero, "reduced beta polynomial needs r2 > r1");
    AuxPolynomial q_minus_1 = AuxPolynomial::variable("q") - AuxPolynomial::constant(1, {"q"});
    return {b, b.divide_univariate(q_minus_1, "q").with_vars({"q"})};
}

/// Σ_{i<d} (-1)^{d-1-i} (β(M^(i)) + β(M^(i+1))) q^i over the Higgs factorization.
inline AuxPolynomial reduced_beta_via_higgs(const Matroid& m1, const Matroid& m2) {
    if (m1.size() != m2.size() || !is_quotient(m1, m2))
        fail(ErrorCode::NotAQuotient, "first matroid is not a quotient of the second");
    const int d = m2.rank() - m1.rank();
    if (d == 0) fail(ErrorCode::RankGapZero, "Higgs sum is empty for r2 = r1");
    const auto layers = higgs_factorization(m1, m2);
    std::vector<Rational> betas;
    for (const auto& l : layers) betas.push_back(beta_invariant(l));
    AuxPolynomial out({"q"});
    for (int i = 0; i < d; ++i) {
        Rational c = betas[i] + betas[i + 1];
        if ((d - 1 - i) % 2) c = -c;
        out += AuxPolynomial::monomial({"q"}, {i}, c);
    }
    return out;
}

/// Las Vergnas' Poincaré polynomial (-1)^{r2} LVT(1-q, 0, -s), in (q, s).
inline AuxPolynomial poincare(const Matroid& m1, const Matroid& m2) {
    const std::vector<std::string> vars{"q", "s"};
    AuxPolynomial p =
        lv_tutte(m1, m2)
            .substitute({{"x", AuxPolynomial::constant(1, vars) - AuxPolynomial::variable("q", vars)},
                         {"y", AuxPolynomial::constant(0)},
                         {"z", -AuxPolynomial::variable("s", vars)}})
            .with_vars(vars);
    return m2.rank() % 2 ? -p : p;
}

/// Flag-geometric characteristic polynomial (-1)^{r_k} KT(1-q, 0).
inline AuxPolynomial k_char(const FlagMatroid& fm) {
    AuxPolynomial p = kt(fm)
                          .substitute({{"x", AuxPolynomial::constant(1, {"q"}) - AuxPolynomial::variable("q")},
                                       {"y", AuxPolynomial::constant(0)}})
                          .with_vars({"q"});
    return fm.back().rank() % 2 ? -p : p;
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_INVARIANTS_HPP
