#ifndef FLAGTUTTE_VERIFY_HPP
#define FLAGTUTTE_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "aux_polynomial.hpp"
#include "cone.hpp"
#include "corpus.hpp"
#include "flag_matroid.hpp"
#include "genfun.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "matroid.hpp"

namespace flagtutte {

/// Outcome of one identity on one instance.
struct Check {
    std::string instance;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string identity;
    std::vector<Check> checks;
    /// Observations only: never counted as failures.
    bool informational = false;

    bool passed() const {
        return informational || std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
    }

    nlohmann::json to_json() const {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : checks) cs.push_back({{"instance", c.instance}, {"passed", c.passed}, {"detail", c.detail}});
        return {{"identity", identity}, {"passed", passed()}, {"informational", informational}, {"checks", cs}};
    }

    std::string to_text() const {
        std::string out;
        for (const auto& c : checks) {
            out += (c.passed ? "PASS " : (informational ? "NOTE " : "FAIL ")) + identity + " " + c.instance;
            if (!c.detail.empty()) out += ": " + c.detail;
            out += "\n";
        }
        out += std::string(passed() ? "PASS" : "FAIL") + " " + identity + " (" + std::to_string(checks.size() - failures()) +
               "/" + std::to_string(checks.size()) + ")\n";
        return out;
    }
};

namespace detail {

inline EquivariantPolynomial kt_equivariant_any(const FlagMatroid& fm) { return kt_equivariant_formal(fm); }

/// KT^T(u+1, v+1) by coefficient extraction and KT(x, y) by the Todd evaluation, from one generating function.
struct KtBoth {
    EquivariantPolynomial equivariant;
    AuxPolynomial plain;
};

/// Memoized per flag, since the corpus suites revisit the same flags and their duals.
inline KtBoth kt_both(const FlagMatroid& fm) {
    static std::mutex mu;
    static std::map<std::string, KtBoth> cache;
    const std::string key = to_json(fm).dump();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const GenFun g = kt_genfun(fm);
    KtBoth out{support(g), uv_to_xy(evaluate_t1(g))};
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

inline AuxPolynomial swap_vars(const AuxPolynomial& p, const std::string& a, const std::string& b) {
    const auto vars = p.vars();
    return p.substitute({{a, AuxPolynomial::variable(b)}, {b, AuxPolynomial::variable(a)}}).with_vars(vars);
}

/// Π_i (1 + t_i c) as an equivariant polynomial.
inline EquivariantPolynomial product_one_plus(int n, const AuxPolynomial& c) {
    EquivariantPolynomial out(n, c.vars());
    out.add(zero_vector(n), AuxPolynomial::constant(1, c.vars()));
    for (int i = 1; i <= n; ++i) {
        EquivariantPolynomial f(n, c.vars());
        f.add(zero_vector(n), AuxPolynomial::constant(1, c.vars()));
        f.add(unit_vector(n, i), c);
        out = out * f;
    }
    return out;
}

inline std::string flag_name(const FlagMatroid& fm) { return to_string(fm); }

}  // namespace detail

/// Pseudo-basis identity for a two-step flag and its three corollaries. The
/// pseudo-basis sum carries q^{|S| - r1}, as the localization argument produces.
inline Check check_kt22(const FlagMatroid& fm, std::string name = {}) {
    if (name.empty()) name = detail::flag_name(fm);
    require(fm.length() == 2, ErrorCode::InvalidInput, "KT22 needs a two-step flag matroid");
    const int n = fm.size(), r1 = fm.front().rank(), r2 = fm.back().rank();
    const auto pb = pseudo_bases(fm.front(), fm.back());
    const std::vector<std::string> qv{"q"};
    const AuxPolynomial q = AuxPolynomial::variable("q");

    // q^{r1+r2} KT^T(1 + 1/q, 1 + q): u^a v^b -> q^{r1 + r2 - a + b}
    const GenFun g = kt_genfun(fm);
    const auto eq = support(g);
    auto to_q = [&](const AuxPolynomial& c) {
        AuxPolynomial out(qv);
        const AuxPolynomial cc = c.with_vars({"u", "v"});
        for (const auto& [e, k] : cc.terms()) out.add_term({r1 + r2 - e[0] + e[1]}, k);
        return out;
    };
    const auto lhs = eq.map_coefficients(to_q);
    EquivariantPolynomial pbsum(n, qv);
    for (Subset s : pb) pbsum.add(detail::indicator(n, s), AuxPolynomial::monomial(qv, {card(s)}));
    const auto rhs = detail::product_one_plus(n, q) * pbsum;
    bool ok = lhs == rhs;
    std::string detail;
    if (!ok) detail += "equivariant identity fails; ";

    // the t = 1 value comes from the Todd evaluation, not from the support
    const AuxPolynomial at_one = evaluate_t1(g).with_vars({"u", "v"});
    const AuxPolynomial rhs_q = (AuxPolynomial::constant(1, qv) + q).pow(static_cast<unsigned>(n)) * pbsum.at_one();
    if (to_q(at_one) != rhs_q) {
        ok = false;
        detail += "specialization at t = 1 fails; ";
    }
    auto at_uv1 = [](const AuxPolynomial& c) { return AuxPolynomial::constant(c.value({{"u", 1}, {"v", 1}})); };
    EquivariantPolynomial pb1(n, {});
    for (Subset s : pb) pb1.add(detail::indicator(n, s), AuxPolynomial::constant(1));
    if (eq.map_coefficients(at_uv1) != detail::product_one_plus(n, AuxPolynomial::constant(1)) * pb1) {
        ok = false;
        detail += "KT^T(2,2) fails; ";
    }
    const Rational kt22 = at_one.value({{"u", 1}, {"v", 1}});
    const Rational expect = Rational(static_cast<long>(pb.size())) * pow(Rational(2), static_cast<unsigned>(n));
    if (kt22 != expect) ok = false;
    detail += "KT(2,2)=" + kt22.get_str() + ", |pB|=" + std::to_string(pb.size());
    return {std::move(name), ok, detail};
}

namespace detail {

inline Check delcont_against(const Matroid& m, int e, int ell, const EquivariantPolynomial& lhs, const AuxPolynomial& lhs_plain,
                             std::string name) {
    const int n = m.size();
    const auto con = minor(m, 0, element(e));
    const auto del = minor(m, element(e), 0);
    EquivariantPolynomial rhs(n, {"u", "v"});
    AuxPolynomial rhs_plain({"x", "y"});
    for (int j = 0; j <= ell; ++j) {
        std::vector<Matroid> ms(static_cast<std::size_t>(j), con.matroid);
        for (int i = j; i < ell; ++i) ms.push_back(del.matroid);
        const auto fm = FlagMatroid::trusted(ms);
        const GenFun g = kt_genfun(fm);
        LatticeVector s = zero_vector(n);
        s[e - 1] = j;
        // the relabel maps of M/e and M\e coincide
        rhs += support(g).embedded(n, con.labels).shifted(s);
        rhs_plain += uv_to_xy(evaluate_t1(g));
    }
    bool ok = lhs == rhs;
    std::string detail = ok ? "" : "equivariant identity fails; ";
    if (lhs_plain != rhs_plain) {
        ok = false;
        detail += "specialization fails; ";
    }
    detail += "ell=" + std::to_string(ell);
    return {std::move(name), ok, detail};
}

}  // namespace detail

/// KT^T of (M,...,M) (ell copies) against Σ_j t_e^j KT^T((M/e)^j, (M\e)^{ell-j}), plus t = 1.
inline Check check_delcont(const Matroid& m, int e, int ell = 2, std::string name = {}) {
    if (name.empty()) name = m.to_string() + " e=" + std::to_string(e);
    if (e < 1 || e > m.size()) fail(ErrorCode::InvalidInput, "element " + std::to_string(e) + " outside the ground set");
    if (m.is_loop(e) || m.is_coloop(e))
        fail(ErrorCode::LoopOrColoop, "element " + std::to_string(e) + " is a loop or a coloop");
    const GenFun g = kt_genfun(FlagMatroid::trusted(std::vector<Matroid>(static_cast<std::size_t>(ell), m)));
    return detail::delcont_against(m, e, ell, support(g), detail::uv_to_xy(evaluate_t1(g)), std::move(name));
}

/// check_delcont for every element that is neither a loop nor a coloop.
inline std::vector<Check> check_delcont_all(const Matroid& m, int ell = 2, const std::string& name = {}) {
    std::vector<Check> out;
    std::vector<int> es;
    for (int e = 1; e <= m.size(); ++e)
        if (!m.is_loop(e) && !m.is_coloop(e)) es.push_back(e);
    if (es.empty()) return out;
    const GenFun g = kt_genfun(FlagMatroid::trusted(std::vector<Matroid>(static_cast<std::size_t>(ell), m)));
    const auto lhs = support(g);
    const auto lhs_plain = detail::uv_to_xy(evaluate_t1(g));
    for (int e : es)
        out.push_back(detail::delcont_against(m, e, ell, lhs, lhs_plain,
                                              (name.empty() ? m.to_string() : name) + " e=" + std::to_string(e)));
    return out;
}

/// LVT(M,M) = T_M, LVT(U0n,M) = T_M(z+1,y), LVT(2,2,1) = 2^n.
inline Check check_lvt_special(const Matroid& m, std::string name = {}) {
    if (name.empty()) name = m.to_string();
    const int n = m.size();
    const AuxPolynomial t = tutte(m);
    bool ok = true;
    std::string detail;
    if (lv_tutte(m, m) != t) {
        ok = false;
        detail += "LVT(M,M) != T; ";
    }
    const AuxPolynomial shifted = t.substitute({{"x", detail::shifted_var("z", 1)}});
    if (lv_tutte(uniform(0, n), m) != shifted) {
        ok = false;
        detail += "LVT(U0n,M) != T(z+1,y); ";
    }
    if (lv_tutte(m, m).value({{"x", 2}, {"y", 2}, {"z", 1}}) != pow(Rational(2), static_cast<unsigned>(n))) {
        ok = false;
        detail += "LVT(2,2,1) != 2^n";
    }
    return {std::move(name), ok, detail};
}

/// Equivariant closed form against corank-nullity, and LVT(2,2,1) = 2^n, for a quotient.
inline Check check_lvt_quotient(const Matroid& m1, const Matroid& m2, std::string name = {}) {
    if (name.empty()) name = "(" + m1.to_string() + ", " + m2.to_string() + ")";
    const int n = m1.size();
    const AuxPolynomial lvt = lv_tutte(m1, m2);
    const AuxPolynomial from_eq = lv_tutte_equivariant(m1, m2)
                                      .at_one()
                                      .substitute({{"u", detail::shifted_var("x", -1)},
                                                   {"v", detail::shifted_var("y", -1)},
                                                   {"w", AuxPolynomial::variable("z")}});
    bool ok = true;
    std::string detail;
    if (from_eq != lvt) {
        ok = false;
        detail += "equivariant form disagrees; ";
    }
    if (lvt.value({{"x", 2}, {"y", 2}, {"z", 1}}) != pow(Rational(2), static_cast<unsigned>(n))) {
        ok = false;
        detail += "LVT(2,2,1) != 2^n";
    }
    return {std::move(name), ok, detail};
}

/// LVT(M1,M2) = LVT(M1\i,M2\i) + LVT(M1/i,M2/i) for every i that is neither a loop nor a coloop of M2.
inline Check check_lvt_delcont(const Matroid& m1, const Matroid& m2, std::string name = {}) {
    if (name.empty()) name = "(" + m1.to_string() + ", " + m2.to_string() + ")";
    const AuxPolynomial lvt = lv_tutte(m1, m2);
    bool ok = true;
    std::string detail;
    int tested = 0;
    for (int i = 1; i <= m1.size(); ++i) {
        if (m2.is_loop(i) || m2.is_coloop(i) || m1.size() < 2) continue;
        ++tested;
        const AuxPolynomial sum =
            lv_tutte(deletion(m1, i), deletion(m2, i)) + lv_tutte(contraction(m1, i), contraction(m2, i));
        if (sum != lvt) {
            ok = false;
            detail += "fails at " + std::to_string(i) + "; ";
        }
    }
    detail += std::to_string(tested) + " elements";
    return {std::move(name), ok, detail};
}

/// KT(FM)(y,x) = KT(FM*)(x,y) and t^{k e_[n]} KT^{T^{-1}}(v,u) = KT^T of the dual.
inline Check check_duality(const FlagMatroid& fm, std::string name = {}) {
    if (name.empty()) name = detail::flag_name(fm);
    const int n = fm.size();
    const auto a = detail::kt_both(fm);
    const auto b = detail::kt_both(dual(fm));
    bool ok = true;
    std::string detail;
    if (detail::swap_vars(a.plain, "x", "y") != b.plain) {
        ok = false;
        detail += "KT(y,x) != KT*(x,y); ";
    }
    const auto lhs = a.equivariant.inverted()
                         .map_coefficients([](const AuxPolynomial& c) { return detail::swap_vars(c, "u", "v"); })
                         .shifted(LatticeVector(static_cast<std::size_t>(n), static_cast<std::int64_t>(fm.length())));
    if (lhs != b.equivariant) {
        ok = false;
        detail += "equivariant duality fails";
    }
    return {std::move(name), ok, detail};
}

/// KT^T of a direct sum is the product over the split variable sets.
inline Check check_direct_sum(const FlagMatroid& a, const FlagMatroid& b, std::string name = {}) {
    if (name.empty()) name = detail::flag_name(a) + " + " + detail::flag_name(b);
    const auto s = detail::kt_both(direct_sum(a, b));
    const auto ka = detail::kt_both(a), kb = detail::kt_both(b);
    bool ok = true;
    std::string detail;
    if (s.equivariant != tensor(ka.equivariant, kb.equivariant)) {
        ok = false;
        detail += "equivariant product fails; ";
    }
    if (s.plain != ka.plain * kb.plain) {
        ok = false;
        detail += "product fails";
    }
    return {std::move(name), ok, detail};
}

/// x^c y^l divides KT with l loops of M_1 and c coloops of M_k.
inline Check check_loops_coloops(const FlagMatroid& fm, std::string name = {}) {
    if (name.empty()) name = detail::flag_name(fm);
    const int l = card(fm.front().loops()), c = card(fm.back().coloops());
    const AuxPolynomial p = detail::kt_both(fm).plain.with_vars({"x", "y"});
    bool ok = true;
    for (const auto& [e, k] : p.terms())
        if (e[0] < c || e[1] < l) ok = false;
    return {std::move(name), ok, "c=" + std::to_string(c) + ", l=" + std::to_string(l)};
}

/// Lattice points of Q(FM) by direct enumeration of the box [0,k]^n.
inline std::vector<LatticeVector> polytope_lattice_points(const FlagMatroid& fm) {
    const int n = fm.size();
    const auto k = static_cast<std::int64_t>(fm.length());
    std::vector<LatticeVector> out;
    LatticeVector w(static_cast<std::size_t>(n), 0);
    while (true) {
        if (polytope_membership(fm, w)) out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == k) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

/// KT^T(1,1) = Σ_{w ∈ Q ∩ Z^n} t^w and KT(1,1) = #(Q ∩ Z^n).
inline Check check_lattice_points(const FlagMatroid& fm, std::string name = {}) {
    if (name.empty()) name = detail::flag_name(fm);
    const int n = fm.size();
    const auto pts = polytope_lattice_points(fm);
    EquivariantPolynomial expect(n, {});
    for (const auto& w : pts) expect.add(w, AuxPolynomial::constant(1));
    const auto both = detail::kt_both(fm);
    const auto eq = both.equivariant.map_coefficients(
        [](const AuxPolynomial& c) { return AuxPolynomial::constant(c.value({{"u", 0}, {"v", 0}})); });
    const Rational at11 = both.plain.value({{"x", 1}, {"y", 1}});
    const bool ok = eq == expect && at11 == Rational(static_cast<long>(pts.size()));
    return {std::move(name), ok, "KT(1,1)=" + at11.get_str() + ", points=" + std::to_string(pts.size())};
}

/// φ ∈ Q[uv] for the flag diagram, or the Las Vergnas analogue's membership status.
inline Check check_h_uv(const FlagMatroid& fm, bool lv_diagram, std::string name = {}) {
    if (name.empty()) name = detail::flag_name(fm);
    if (lv_diagram) {
        auto [phi, in_uv] = h_candidate_lv(fm);
        return {std::move(name), !in_uv,
                std::string("Las Vergnas diagram: phi = ") + phi.to_string() + (in_uv ? " (in Q[uv])" : " (not in Q[uv])")};
    }
    const AuxPolynomial phi = h_phi(fm);
    const bool in_uv = detail::uv_coefficients(phi).has_value();
    return {std::move(name), in_uv,
            "phi = " + phi.to_string() + (in_uv ? ", h = " + h_polynomial(fm).to_string() : " (not in Q[uv])")};
}

/// Reduced beta polynomial from LVT against the Higgs-factorization sum.
inline Check check_beta_higgs(const Matroid& m1, const Matroid& m2, std::string name = {}) {
    if (name.empty()) name = "(" + m1.to_string() + ", " + m2.to_string() + ")";
    const auto b = beta_polynomial(m1, m2);
    const auto h = reduced_beta_via_higgs(m1, m2);
    return {std::move(name), b.reduced == h, "reduced = " + b.reduced.to_string()};
}

/// Kχ(U1n, M) = (q-1)^r for loopless M.
inline Check check_kchi_conjecture(const Matroid& m, std::string name = {}) {
    if (name.empty()) name = m.to_string();
    const int n = m.size();
    const AuxPolynomial k = k_char(FlagMatroid::trusted({uniform(1, n), m}));
    const AuxPolynomial expect =
        (AuxPolynomial::variable("q") - AuxPolynomial::constant(1, {"q"})).pow(static_cast<unsigned>(m.rank()));
    return {std::move(name), k == expect, "Kchi = " + k.to_string()};
}

/// The 0/1 coefficient rule for two-step KT^T(u+1, v+1): with k = e_{S1} + e_{S2}
/// and c = |r1 + j - i| ones, the coefficient of t^k u^{r2-i} v^j is 1 exactly when
/// the larger of S1, S2 spans M1 and the smaller is independent in M2 (i <= r1 + j),
/// or S1 spans M1 and S2 is independent in M2 (i > r1 + j).
inline Check check_coefficient_theorem(const FlagMatroid& fm, std::string name = {}) {
    if (name.empty()) name = detail::flag_name(fm);
    require(fm.length() == 2, ErrorCode::InvalidInput, "coefficient rule needs a two-step flag matroid");
    const int n = fm.size(), r1 = fm.front().rank(), r2 = fm.back().rank();
    const auto eq = detail::kt_equivariant_any(fm);
    bool ok = true;
    std::string detail;
    // every stored monomial obeys the degree rule
    for (const auto& [k, c] : eq.support()) {
        std::int64_t sum = coordinate_sum(k);
        const AuxPolynomial cc = c.with_vars({"u", "v"});
        for (const auto& [e, coef] : cc.terms()) {
            const int i = r2 - e[0], j = e[1];
            if (sum != r1 + i + j) ok = false;
        }
    }
    if (!ok) detail += "degree rule fails; ";
    int decided = 0;
    LatticeVector k(static_cast<std::size_t>(n), 0);
    while (true) {
        Subset s1 = 0, s2 = 0;
        int ones = 0;
        for (int l = 0; l < n; ++l) {
            if (k[l] >= 1) s2 |= element(l + 1);
            if (k[l] == 2) s1 |= element(l + 1);
            if (k[l] == 1) ++ones;
        }
        const AuxPolynomial c = eq.at(k).with_vars({"u", "v"});
        for (int i = 0; i <= r2; ++i)
            for (int j = 0; j <= n; ++j) {
                if (coordinate_sum(k) != r1 + i + j) continue;
                const int gap = std::abs(r1 + j - i);
                if (ones > gap) continue;
                ++decided;
                // for i > r1 + j the two sets trade roles
                const Subset span = i <= r1 + j ? s2 : s1, indep = i <= r1 + j ? s1 : s2;
                const bool one = fm.front().is_spanning(span) && fm.back().is_independent(indep) && ones == gap;
                if (c.coefficient({r2 - i, j}) != Rational(one ? 1 : 0)) {
                    ok = false;
                    detail += "t^" + vector_string(k) + " u^" + std::to_string(r2 - i) + " v^" + std::to_string(j) + "; ";
                }
            }
        int l = n - 1;
        while (l >= 0 && k[l] == 2) k[l--] = 0;
        if (l < 0) break;
        ++k[l];
    }
    detail += std::to_string(decided) + " coefficients decided";
    return {std::move(name), ok, detail};
}

/// Vertex cones of Q(U13,U23) with the apex monomials of the worked example.
inline GenFun example_vertex_genfun() {
    const FlagMatroid fm = FlagMatroid::trusted({uniform(1, 3), uniform(2, 3)});
    const std::vector<std::pair<LatticeVector, LatticeVector>> moves = {
        {{2, 1, 0}, {1, 1, 0}}, {{2, 0, 1}, {1, 0, 1}}, {{1, 2, 0}, {0, 2, 0}},
        {{1, 0, 2}, {0, 0, 2}}, {{0, 2, 1}, {0, 2, 0}}, {{0, 1, 2}, {0, 0, 2}}};
    GenFun g(3, {});
    for (const auto& b : flag_bases(fm)) {
        const LatticeVector v = b.indicator(3);
        for (const auto& [vertex, apex] : moves)
            if (vertex == v)
                for (const auto& cell : triangulate_half_open(apex, tangent_cone_generators(fm, b)))
                    g.add(cell, AuxPolynomial::constant(1));
    }
    return g;
}

/// The worked example: full series, the e1 = 0 slice, two coefficients and Brion on the trapezoid.
inline VerifyReport verify_brion_example() {
    VerifyReport r{"brion-example", {}, false};
    const GenFun g = example_vertex_genfun();
    EquivariantPolynomial expect(3, {});
    for (LatticeVector w : {LatticeVector{1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}})
        expect.add(w, AuxPolynomial::constant(1));
    const auto series = support(g);
    r.checks.push_back({"series", series == expect, "t1t2 + t1t3 + t2^2 + t2t3 + t3^2"});
    EquivariantPolynomial slice_expect(3, {});
    for (LatticeVector w : {LatticeVector{0, 2, 0}, {0, 1, 1}, {0, 0, 2}}) slice_expect.add(w, AuxPolynomial::constant(1));
    const auto sl = support(slice(g, {Rational(1), Rational(0), Rational(0)}, Rational(0)));
    r.checks.push_back({"slice e1=0", sl == slice_expect, "t2^2 + t2t3 + t3^2"});
    r.checks.push_back({"coefficient t1^2", coefficient_at(g, {2, 0, 0}).is_zero(), "0"});
    r.checks.push_back({"coefficient t2^2", coefficient_at(g, {0, 2, 0}) == AuxPolynomial::constant(1), "1"});
    r.checks.push_back({"value at t=1", evaluate_t1(g) == AuxPolynomial::constant(5), "5"});
    const auto trap = brion_series({{{0, 2, 0}, {{0, -1, 1}, {1, -1, 0}}},
                                    {{0, 0, 2}, {{0, 1, -1}, {1, 0, -1}}},
                                    {{1, 1, 0}, {{-1, 1, 0}, {0, -1, 1}}},
                                    {{1, 0, 1}, {{-1, 0, 1}, {0, 1, -1}}}});
    r.checks.push_back({"trapezoid", trap == expect, "Brion over four vertex cones"});
    return r;
}

/// Names accepted by verify_identity.
inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "brion-example", "tutte-oracle", "kt22",        "delcont",    "lvt-special",   "lvt-delcont",
        "duality",       "direct-sum",   "loops-coloops", "latticepoints", "coefficients", "h-uv",
        "beta-higgs",    "kchi-conjecture"};
    return names;
}

namespace detail {

/// Runs one check and turns a library error into a failed check.
inline Check guarded(const std::string& instance, const std::function<Check()>& f) {
    try {
        return f();
    } catch (const Error& e) {
        return {instance, false, e.what()};
    }
}

inline void guarded_many(VerifyReport& r, const std::string& instance, const std::function<std::vector<Check>()>& f) {
    try {
        for (auto& c : f()) r.checks.push_back(std::move(c));
    } catch (const Error& e) {
        r.checks.push_back({instance, false, e.what()});
    }
}

struct Corpora {
    std::vector<CorpusMatroid> matroids;
    std::vector<CorpusFlag> quotients;
    std::vector<CorpusFlag> three_step;
};

inline const Corpora& corpora() {
    static const Corpora c = [] {
        Corpora out;
        out.matroids = matroid_corpus();
        out.quotients = quotient_corpus(out.matroids);
        out.three_step = three_step_corpus(out.matroids);
        return out;
    }();
    return c;
}

inline bool loopless_coloopless(const FlagMatroid& fm) { return fm.front().loops() == 0 && fm.back().coloops() == 0; }

/// One-step flags of the matroid corpus, then the quotients, then three-step flags.
inline std::vector<CorpusFlag> all_flags(int max_n) {
    std::vector<CorpusFlag> out;
    for (const auto& m : corpora().matroids)
        if (m.matroid.size() <= max_n) out.push_back({m.name, FlagMatroid::trusted({m.matroid})});
    for (const auto& q : corpora().quotients)
        if (q.flag.size() <= max_n) out.push_back(q);
    for (const auto& t : corpora().three_step)
        if (t.flag.size() <= max_n) out.push_back(t);
    return out;
}

inline Check check_tutte_oracle(const Matroid& m, std::string name) {
    const AuxPolynomial a = kt(FlagMatroid::trusted({m}));
    const AuxPolynomial b = tutte(m);
    return {std::move(name), a == b, a == b ? "" : "kt = " + a.to_string() + ", tutte = " + b.to_string()};
}

inline Check check_beta_chi(const Matroid& m, std::string name) {
    const auto b = beta_polynomial_unreduced(uniform(0, m.size()), m);
    return {std::move(name), b == characteristic_polynomial(m), "beta = " + b.to_string()};
}

inline Check check_h_u12() {
    const AuxPolynomial h = h_polynomial(FlagMatroid::trusted({uniform(1, 2)}));
    return {"h(U1,2)", h == AuxPolynomial::variable("s"), "h = " + h.to_string()};
}

inline Check check_beta_u13_u23() {
    const auto b = beta_polynomial(uniform(1, 3), uniform(2, 3));
    const AuxPolynomial expect = AuxPolynomial::monomial({"q"}, {1}, 2) - AuxPolynomial::constant(2, {"q"});
    return {"beta(U1,3,U2,3)", b.beta == expect, "beta = " + b.beta.to_string()};
}

/// The Las Vergnas-diagram control instance.
inline FlagMatroid lv_control() { return FlagMatroid::trusted({uniform(2, 4), uniform(3, 4)}); }

}  // namespace detail

/// Runs an identity over the built-in corpus.
inline VerifyReport verify_corpus(const std::string& id) {
    using detail::guarded;
    VerifyReport r{id, {}, id == "kchi-conjecture"};
    const auto& C = detail::corpora();
    if (id == "brion-example") return verify_brion_example();
    if (id == "tutte-oracle") {
        for (const auto& m : C.matroids)
            r.checks.push_back(guarded(m.name, [&] { return detail::check_tutte_oracle(m.matroid, m.name); }));
    } else if (id == "kt22") {
        for (const auto& q : C.quotients) r.checks.push_back(guarded(q.name, [&] { return check_kt22(q.flag, q.name); }));
    } else if (id == "delcont") {
        for (const auto& m : C.matroids) {
            detail::guarded_many(r, m.name, [&] { return check_delcont_all(m.matroid, 2, m.name); });
            if (m.matroid.size() <= 5) detail::guarded_many(r, m.name, [&] { return check_delcont_all(m.matroid, 3, m.name); });
        }
    } else if (id == "lvt-special") {
        for (const auto& m : C.matroids)
            r.checks.push_back(guarded(m.name, [&] { return check_lvt_special(m.matroid, m.name); }));
        for (const auto& q : C.quotients)
            r.checks.push_back(guarded(q.name, [&] { return check_lvt_quotient(q.flag.front(), q.flag.back(), q.name); }));
    } else if (id == "lvt-delcont") {
        for (const auto& q : C.quotients)
            r.checks.push_back(guarded(q.name, [&] { return check_lvt_delcont(q.flag.front(), q.flag.back(), q.name); }));
    } else if (id == "duality") {
        for (const auto& f : detail::all_flags(6)) r.checks.push_back(guarded(f.name, [&] { return check_duality(f.flag, f.name); }));
    } else if (id == "direct-sum") {
        // small flags of equal length paired with a stride, total size at most 6
        std::vector<CorpusFlag> small;
        for (const auto& f : detail::all_flags(3)) small.push_back(f);
        for (std::size_t i = 0; i < small.size(); i += 3)
            for (std::size_t j = i % 7; j < small.size(); j += 7) {
                const auto& a = small[i].flag;
                const auto& b = small[j].flag;
                if (a.length() != b.length() || a.size() + b.size() > 6) continue;
                const std::string name = small[i].name + " + " + small[j].name;
                r.checks.push_back(guarded(name, [&] { return check_direct_sum(a, b, name); }));
            }
    } else if (id == "loops-coloops") {
        for (const auto& f : detail::all_flags(6))
            r.checks.push_back(guarded(f.name, [&] { return check_loops_coloops(f.flag, f.name); }));
    } else if (id == "latticepoints") {
        for (const auto& f : detail::all_flags(6))
            r.checks.push_back(guarded(f.name, [&] { return check_lattice_points(f.flag, f.name); }));
    } else if (id == "coefficients") {
        for (const auto& q : C.quotients)
            if (q.flag.size() <= 5) r.checks.push_back(guarded(q.name, [&] { return check_coefficient_theorem(q.flag, q.name); }));
    } else if (id == "h-uv") {
        for (const auto& f : detail::all_flags(5))
            if (detail::loopless_coloopless(f.flag))
                r.checks.push_back(guarded(f.name, [&] { return check_h_uv(f.flag, false, f.name); }));
        r.checks.push_back(guarded("h(U1,2)", detail::check_h_u12));
        r.checks.push_back(guarded("control (U2,4,U3,4)", [] { return check_h_uv(detail::lv_control(), true, "control (U2,4,U3,4)"); }));
    } else if (id == "beta-higgs") {
        for (const auto& q : C.quotients)
            if (q.flag.back().rank() > q.flag.front().rank())
                r.checks.push_back(guarded(q.name, [&] { return check_beta_higgs(q.flag.front(), q.flag.back(), q.name); }));
        r.checks.push_back(guarded("beta(U1,3,U2,3)", detail::check_beta_u13_u23));
        for (const auto& m : C.matroids)
            r.checks.push_back(guarded("(U0," + std::to_string(m.matroid.size()) + "," + m.name + ")",
                                       [&] { return detail::check_beta_chi(m.matroid, m.name); }));
    } else if (id == "kchi-conjecture") {
        for (const auto& m : C.matroids)
            if (m.matroid.loops() == 0 && m.matroid.rank() >= 1)
                r.checks.push_back(guarded(m.name, [&] { return check_kchi_conjecture(m.matroid, m.name); }));
    } else {
        fail(ErrorCode::UnknownIdentity, "unknown identity " + id);
    }
    return r;
}

/// Runs an identity on one parsed input; element restricts delcont to a single element.
inline VerifyReport verify_input(const std::string& id, const ParsedInput& in, std::optional<int> element = {}) {
    VerifyReport r{id, {}, id == "kchi-conjecture"};
    const FlagMatroid& fm = in.flag;
    const std::string name = to_string(fm);
    auto need = [&](std::size_t k) {
        if (fm.length() != k)
            fail(ErrorCode::InvalidInput,
                 "identity " + id + " needs a " + (k == 1 ? std::string("single matroid") : std::to_string(k) + "-step flag"));
    };
    if (id == "brion-example") return verify_brion_example();
    if (id == "tutte-oracle") {
        need(1);
        r.checks.push_back(detail::check_tutte_oracle(fm.front(), name));
    } else if (id == "kt22") {
        need(2);
        r.checks.push_back(check_kt22(fm, name));
    } else if (id == "delcont") {
        need(1);
        const Matroid& m = fm.front();
        if (element) {
            r.checks.push_back(check_delcont(m, *element, 2, name + " e=" + std::to_string(*element)));
            if (m.size() <= 5) r.checks.push_back(check_delcont(m, *element, 3, name + " e=" + std::to_string(*element)));
        } else {
            for (auto& c : check_delcont_all(m, 2, name)) r.checks.push_back(std::move(c));
            if (m.size() <= 5)
                for (auto& c : check_delcont_all(m, 3, name)) r.checks.push_back(std::move(c));
            if (r.checks.empty()) fail(ErrorCode::LoopOrColoop, "every element is a loop or a coloop");
        }
    } else if (id == "lvt-special") {
        if (fm.length() == 1)
            r.checks.push_back(check_lvt_special(fm.front(), name));
        else {
            need(2);
            r.checks.push_back(check_lvt_quotient(fm.front(), fm.back(), name));
        }
    } else if (id == "lvt-delcont") {
        need(2);
        r.checks.push_back(check_lvt_delcont(fm.front(), fm.back(), name));
    } else if (id == "duality") {
        r.checks.push_back(check_duality(fm, name));
    } else if (id == "direct-sum") {
        r.checks.push_back(check_direct_sum(fm, fm, name + " + " + name));
    } else if (id == "loops-coloops") {
        r.checks.push_back(check_loops_coloops(fm, name));
    } else if (id == "latticepoints") {
        r.checks.push_back(check_lattice_points(fm, name));
    } else if (id == "coefficients") {
        need(2);
        r.checks.push_back(check_coefficient_theorem(fm, name));
    } else if (id == "h-uv") {
        r.checks.push_back(check_h_uv(fm, in.diagram == "lv", name));
    } else if (id == "beta-higgs") {
        need(2);
        r.checks.push_back(check_beta_higgs(fm.front(), fm.back(), name));
    } else if (id == "kchi-conjecture") {
        need(1);
        r.checks.push_back(check_kchi_conjecture(fm.front(), name));
    } else {
        fail(ErrorCode::UnknownIdentity, "unknown identity " + id);
    }
    return r;
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_VERIFY_HPP
