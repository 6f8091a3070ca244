#ifndef FLAGTUTTE_GENFUN_HPP
#define FLAGTUTTE_GENFUN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "aux_polynomial.hpp"
#include "cone.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "parallel.hpp"
#include "rational.hpp"

namespace flagtutte {

/// Laurent polynomial in t_1..t_n with AuxPolynomial coefficients.
class EquivariantPolynomial {
   public:
    using Map = std::map<LatticeVector, AuxPolynomial>;

    EquivariantPolynomial() = default;
    EquivariantPolynomial(int n, std::vector<std::string> vars) : n_(n), vars_(std::move(vars)) {}

    int ambient() const { return n_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const Map& support() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const LatticeVector& t, const AuxPolynomial& c) {
        require(static_cast<int>(t.size()) == n_, ErrorCode::InternalAssertion, "exponent length mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c.with_vars(merged(c.vars())));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AuxPolynomial at(const LatticeVector& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? AuxPolynomial(vars_) : it->second;
    }

    /// Specialization t_i = 1.
    AuxPolynomial at_one() const {
        AuxPolynomial s(vars_);
        for (const auto& [t, c] : terms_) s += c;
        return s;
    }

    EquivariantPolynomial& operator+=(const EquivariantPolynomial& o) {
        require(o.n_ == n_, ErrorCode::InternalAssertion, "ambient mismatch");
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }

    EquivariantPolynomial& operator-=(const EquivariantPolynomial& o) {
        require(o.n_ == n_, ErrorCode::InternalAssertion, "ambient mismatch");
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }

    friend EquivariantPolynomial operator+(EquivariantPolynomial a, const EquivariantPolynomial& b) { return a += b; }
    friend EquivariantPolynomial operator-(EquivariantPolynomial a, const EquivariantPolynomial& b) { return a -= b; }

    friend EquivariantPolynomial operator*(const EquivariantPolynomial& a, const EquivariantPolynomial& b) {
        require(a.n_ == b.n_, ErrorCode::InternalAssertion, "ambient mismatch");
        EquivariantPolynomial out(a.n_, a.vars_);
        for (const auto& [s, c] : a.terms_)
            for (const auto& [t, d] : b.terms_) out.add(s + t, c * d);
        return out;
    }

    /// Multiplies by t^shift.
    EquivariantPolynomial shifted(const LatticeVector& shift) const {
        EquivariantPolynomial out(n_, vars_);
        for (const auto& [t, c] : terms_) out.terms_.emplace(t + shift, c);
        return out;
    }

    /// Replaces every t_i by t_i^{-1}.
    EquivariantPolynomial inverted() const {
        EquivariantPolynomial out(n_, vars_);
        for (const auto& [t, c] : terms_) out.terms_.emplace(-t, c);
        return out;
    }

    /// Applies f to every coefficient.
    template <class F>
    EquivariantPolynomial map_coefficients(F&& f) const {
        EquivariantPolynomial out(n_, {});
        for (const auto& [t, c] : terms_) out.add(t, f(c));
        if (!out.terms_.empty()) out.vars_ = out.terms_.begin()->second.vars();
        return out;
    }

    /// Moves coordinate i of this polynomial to coordinate labels[i]-1 of an ambient of size n.
    EquivariantPolynomial embedded(int n, const std::vector<int>& labels) const {
        require(static_cast<int>(labels.size()) == n_, ErrorCode::InternalAssertion, "relabel size mismatch");
        EquivariantPolynomial out(n, vars_);
        for (const auto& [t, c] : terms_) {
            LatticeVector u = zero_vector(n);
            for (int i = 0; i < n_; ++i) u[labels[i] - 1] = t[i];
            out.terms_.emplace(std::move(u), c);
        }
        return out;
    }

    /// Product over disjoint coordinate blocks: the result lives on n_a + n_b coordinates.
    friend EquivariantPolynomial tensor(const EquivariantPolynomial& a, const EquivariantPolynomial& b) {
        EquivariantPolynomial out(a.n_ + b.n_, a.vars_);
        for (const auto& [s, c] : a.terms_)
            for (const auto& [t, d] : b.terms_) {
                LatticeVector u = s;
                u.insert(u.end(), t.begin(), t.end());
                out.add(u, c * d);
            }
        return out;
    }

    bool operator==(const EquivariantPolynomial& o) const {
        if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
        for (const auto& [t, c] : terms_) {
            auto it = o.terms_.find(t);
            if (it == o.terms_.end() || it->second != c) return false;
        }
        return true;
    }
    bool operator!=(const EquivariantPolynomial& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [t, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")*t^" + vector_string(t);
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [t, c] : terms_) {
            nlohmann::json monos = nlohmann::json::array();
            for (const auto& [e, q] : c.terms()) monos.push_back({{"e", e}, {"c", q.get_str()}});
            terms.push_back({{"t", t}, {"coeff", {{"vars", c.vars()}, {"monomials", monos}}}});
        }
        return {{"n", n_}, {"terms", terms}};
    }

    static EquivariantPolynomial from_json(const nlohmann::json& j) {
        EquivariantPolynomial out(j.at("n").get<int>(), {});
        for (const auto& term : j.at("terms")) {
            auto vars = term.at("coeff").at("vars").get<std::vector<std::string>>();
            AuxPolynomial c(vars);
            for (const auto& m : term.at("coeff").at("monomials"))
                c.add_term(m.at("e").get<std::vector<int>>(), parse_rational(m.at("c").get<std::string>()));
            out.add(term.at("t").get<LatticeVector>(), c);
        }
        return out;
    }

   private:
    std::vector<std::string> merged(const std::vector<std::string>& more) {
        for (const auto& v : more)
            if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) {
                vars_.push_back(v);
                for (auto& [t, c] : terms_) c = c.with_vars(vars_);
            }
        return vars_;
    }

    int n_ = 0;
    std::vector<std::string> vars_;
    Map terms_;
};

/// One cone together with its numerator Σ coeff · t^shift.
struct GenFunTerm {
    std::vector<std::pair<LatticeVector, AuxPolynomial>> numerator;
    HalfOpenSimplicialCone cone;
};

/// Finite formal sum Σ numerator_λ · Hilb(C_λ).
class GenFun {
   public:
    GenFun() = default;
    GenFun(int n, std::vector<std::string> vars) : n_(n), vars_(std::move(vars)) {}

    int ambient() const { return n_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<GenFunTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(GenFunTerm term) {
        require(term.cone.ambient() == n_, ErrorCode::InternalAssertion, "cone ambient mismatch");
        for (auto& [s, c] : term.numerator) {
            require(static_cast<int>(s.size()) == n_, ErrorCode::InternalAssertion, "shift length mismatch");
            c = c.with_vars(vars_);
        }
        terms_.push_back(std::move(term));
    }

    void add(const HalfOpenSimplicialCone& cone, const AuxPolynomial& coeff) {
        add(GenFunTerm{{{zero_vector(n_), coeff}}, cone});
    }

    GenFun& operator+=(const GenFun& o) {
        for (const auto& t : o.terms_) add(t);
        return *this;
    }

    /// Same sum with every cone flipped along d.
    GenFun flipped(const Direction& d) const {
        GenFun out(n_, vars_);
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({t.numerator, flip_cone(t.cone, d)});
        return out;
    }

    /// Negated copy.
    GenFun negated() const {
        GenFun out = *this;
        for (auto& t : out.terms_) t.cone.sign = -t.cone.sign;
        return out;
    }

   private:
    int n_ = 0;
    std::vector<std::string> vars_;
    std::vector<GenFunTerm> terms_;
};

/// Coefficient of t^w, read off from the flipped cones.
inline AuxPolynomial coefficient_at(const GenFun& g, const LatticeVector& w, const Direction& d) {
    AuxPolynomial out(g.vars());
    for (const auto& term : g.terms()) {
        PreparedCone cone(flip_cone(term.cone, d));
        for (const auto& [shift, coeff] : term.numerator)
            if (cone.contains(w - shift)) out += coeff * Rational(cone.cone().sign);
    }
    return out;
}

inline AuxPolynomial coefficient_at(const GenFun& g, const LatticeVector& w) {
    return coefficient_at(g, w, Direction::standard(g.ambient()));
}

namespace detail {

/// Lattice points of the box with coordinate sum in [lo_sum, hi_sum], in lexicographic order.
inline std::vector<LatticeVector> box_points(const LatticeVector& lo, const LatticeVector& hi, std::int64_t lo_sum,
                                             std::int64_t hi_sum) {
    const std::size_t n = lo.size();
    std::vector<std::int64_t> rest_lo(n + 1, 0), rest_hi(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        rest_lo[i] = rest_lo[i + 1] + lo[i];
        rest_hi[i] = rest_hi[i + 1] + hi[i];
    }
    std::vector<LatticeVector> out;
    LatticeVector cur(n);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
        if (i == n) {
            if (sum >= lo_sum && sum <= hi_sum) out.push_back(cur);
            return;
        }
        for (std::int64_t x = lo[i]; x <= hi[i]; ++x) {
            const std::int64_t s = sum + x;
            if (s + rest_lo[i + 1] > hi_sum) break;
            if (s + rest_hi[i + 1] < lo_sum) continue;
            cur[i] = x;
            self(self, i + 1, s);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// A flipped cell with linear data precomputed for every numerator shift.
struct ExtractionCell {
    HalfOpenSimplicialCone cone;
    SpanSolver solver;
    std::int64_t den = 1;
    std::vector<std::vector<std::int64_t>> shift_num;  // solver numerators of shift + apex
    std::vector<LatticeVector> shift_res;              // den*x - C*num(x) for x = shift + apex
    const std::vector<std::pair<LatticeVector, AuxPolynomial>>* numerator = nullptr;
};

inline LatticeVector residual(const SpanSolver& s, const LatticeVector& x, const std::int64_t* num) {
    LatticeVector r(x.size());
    const auto& cols = s.columns();
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::int64_t v = s.denominator() * x[i];
        for (int j = 0; j < s.dim(); ++j) v -= cols[j][i] * num[j];
        r[i] = v;
    }
    return r;
}

}  // namespace detail

/// Full coefficient map of g, assuming g sums to a Laurent polynomial. The
/// search region is the bounding box of all shifted apexes.
inline EquivariantPolynomial support(const GenFun& g, const Direction& d) {
    const int n = g.ambient();
    EquivariantPolynomial out(n, g.vars());
    if (g.empty()) return out;
    LatticeVector lo(static_cast<std::size_t>(n), std::numeric_limits<std::int64_t>::max());
    LatticeVector hi(static_cast<std::size_t>(n), std::numeric_limits<std::int64_t>::min());
    std::int64_t lo_sum = std::numeric_limits<std::int64_t>::max(), hi_sum = std::numeric_limits<std::int64_t>::min();
    bool any = false;
    for (const auto& t : g.terms())
        for (const auto& [shift, c] : t.numerator) {
            LatticeVector a = t.cone.apex + shift;
            for (int i = 0; i < n; ++i) {
                lo[i] = std::min(lo[i], a[i]);
                hi[i] = std::max(hi[i], a[i]);
            }
            lo_sum = std::min(lo_sum, coordinate_sum(a));
            hi_sum = std::max(hi_sum, coordinate_sum(a));
            any = true;
        }
    if (!any) return out;

    std::vector<detail::ExtractionCell> cells;
    cells.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
        detail::ExtractionCell c;
        c.cone = flip_cone(t.cone, d);
        c.solver = SpanSolver(c.cone.rays, n);
        c.den = c.solver.denominator();
        c.numerator = &t.numerator;
        for (const auto& [shift, coeff] : t.numerator) {
            LatticeVector x = shift + c.cone.apex;
            std::vector<std::int64_t> num(static_cast<std::size_t>(c.solver.dim()));
            c.solver.numerators(x, num.data());
            c.shift_res.push_back(detail::residual(c.solver, x, num.data()));
            c.shift_num.push_back(std::move(num));
        }
        cells.push_back(std::move(c));
    }

    const auto points = detail::box_points(lo, hi, lo_sum, hi_sum);
    std::vector<AuxPolynomial> values(points.size(), AuxPolynomial(g.vars()));
    parallel_for(points.size(), [&](std::size_t p) {
        const LatticeVector& w = points[p];
        AuxPolynomial acc(g.vars());
        std::vector<std::int64_t> num;
        for (const auto& c : cells) {
            const int dim = c.solver.dim();
            num.resize(static_cast<std::size_t>(dim));
            c.solver.numerators(w, num.data());
            LatticeVector res = detail::residual(c.solver, w, num.data());
            for (std::size_t s = 0; s < c.shift_num.size(); ++s) {
                if (res != c.shift_res[s]) continue;
                bool inside = true;
                for (int i = 0; i < dim && inside; ++i) {
                    const std::int64_t diff = num[i] - c.shift_num[s][i];
                    if (diff % c.den != 0) {
                        inside = false;
                        break;
                    }
                    const std::int64_t lam = diff / c.den;
                    if (lam < (c.cone.open[i] ? 1 : 0)) inside = false;
                }
                if (!inside) continue;
                const auto& coeff = (*c.numerator)[s].second;
                if (c.cone.sign > 0)
                    acc += coeff;
                else
                    acc -= coeff;
            }
        }
        values[p] = std::move(acc);
    });
    for (std::size_t p = 0; p < points.size(); ++p)
        if (!values[p].is_zero()) out.add(points[p], values[p]);
    return out;
}

inline EquivariantPolynomial support(const GenFun& g) { return support(g, Direction::standard(g.ambient())); }

/// Restriction of g to the hyperplane ⟨ζ,x⟩ = b as a new GenFun; requires
/// every cone with ⟨ζ,apex⟩ < b to have all rays pairing ≥ 0 with ζ.
inline GenFun slice(const GenFun& g, const std::vector<Rational>& zeta, const Rational& b) {
    require(std::any_of(zeta.begin(), zeta.end(), [](const Rational& z) { return sgn(z) != 0; }),
            ErrorCode::HypothesisViolated, "slice direction is zero");
    const int n = g.ambient();
    GenFun out(n, g.vars());
    for (std::size_t ti = 0; ti < g.terms().size(); ++ti) {
        const auto& term = g.terms()[ti];
        const auto& cone = term.cone;
        std::vector<int> pos, zero;
        std::vector<Rational> pair;
        bool pointed = true;
        for (int i = 0; i < cone.dim(); ++i) {
            Rational p = dot(zeta, cone.rays[i]);
            pair.push_back(p);
            if (sgn(p) < 0) pointed = false;
            (sgn(p) > 0 ? pos : zero).push_back(i);
        }
        for (const auto& [shift, coeff] : term.numerator) {
            const LatticeVector w = cone.apex + shift;
            const Rational level = dot(zeta, w);
            if (!pointed) {
                if (level < b)
                    fail(ErrorCode::HypothesisViolated,
                         "term " + std::to_string(ti) + " with apex " + vector_string(w) + " is not pointed along zeta");
                continue;
            }
            if (level > b) continue;
            // integer tuples over positive rays reaching the hyperplane
            std::vector<std::int64_t> a(pos.size(), 0);
            auto rec = [&](auto&& self, std::size_t k, const Rational& remaining) -> void {
                if (k == pos.size()) {
                    if (sgn(remaining) != 0) return;
                    HalfOpenSimplicialCone c{w, {}, {}, cone.sign};
                    for (std::size_t j = 0; j < pos.size(); ++j) c.apex = c.apex + a[j] * cone.rays[pos[j]];
                    for (int z : zero) {
                        c.rays.push_back(cone.rays[z]);
                        c.open.push_back(cone.open[z]);
                    }
                    out.add(GenFunTerm{{{zero_vector(n), coeff}}, std::move(c)});
                    return;
                }
                const int r = pos[k];
                std::int64_t start = cone.open[r] ? 1 : 0;
                for (std::int64_t x = start;; ++x) {
                    Rational rem = remaining - pair[r] * Rational(static_cast<long>(x));
                    if (sgn(rem) < 0) break;
                    a[k] = x;
                    self(self, k + 1, rem);
                }
            };
            rec(rec, 0, b - level);
        }
    }
    return out;
}

namespace detail {

/// Bernoulli numbers with B_1 = -1/2, i.e. x/(e^x - 1) = Σ B_k x^k / k!.
inline const std::vector<Rational>& bernoulli(std::size_t count) {
    static const std::vector<Rational> table = [] {
        constexpr std::size_t kMax = 70;
        std::vector<Rational> b(kMax);
        b[0] = 1;
        for (std::size_t m = 1; m < kMax; ++m) {
            // Σ_{j<=m} C(m+1, j) B_j = 0
            Rational s(0);
            Integer binom(1);
            for (std::size_t j = 0; j < m; ++j) {
                s += Rational(binom) * b[j];
                binom = binom * Integer(static_cast<unsigned long>(m + 1 - j)) / Integer(static_cast<unsigned long>(j + 1));
            }
            b[m] = -s / Rational(static_cast<unsigned long>(m + 1));
        }
        return b;
    }();
    require(count <= table.size(), ErrorCode::InternalAssertion, "cone dimension too large for series table");
    return table;
}

inline std::vector<Integer> weight_vector(int n, int attempt) {
    std::vector<Integer> c(static_cast<std::size_t>(n));
    if (attempt == 0) {
        Integer p(1);
        for (int i = 0; i < n; ++i) {
            c[i] = p;
            p *= (n + 1);
        }
    } else if (attempt == 1) {
        int found = 0;
        for (long v = 2; found < n; ++v) {
            bool prime = true;
            for (long q = 2; q * q <= v; ++q)
                if (v % q == 0) prime = false;
            if (prime) c[found++] = Integer(v);
        }
    } else {
        std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(attempt));
        std::uniform_int_distribution<long> dist(-1000000, 1000000);
        for (auto& x : c) x = Integer(dist(rng));
    }
    return c;
}

inline Integer weight_pairing(const std::vector<Integer>& c, const LatticeVector& v) {
    Integer s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s += c[i] * Integer(static_cast<long>(v[i]));
    return s;
}

}  // namespace detail

/// Value of g at t_1 = ... = t_n = 1, assuming g sums to a Laurent polynomial.
///
/// Substitutes t_i = exp(c_i s) for a generic integer weight c and reads off
/// the constant term of the Laurent expansion in s. Every cone contributes
/// sign · e^{⟨c,apex⟩s} Π_j (-1/(d_j s)) Td(±d_j s) with d_j = ⟨c,v_j⟩ and the
/// minus sign for open rays; all negative powers must cancel in the sum.
inline AuxPolynomial evaluate_t1(const GenFun& g) {
    const int n = g.ambient();
    int max_dim = 0;
    for (const auto& t : g.terms()) max_dim = std::max(max_dim, t.cone.dim());
    std::vector<Integer> c;
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
        c = detail::weight_vector(n, attempt);
        ok = true;
        for (const auto& t : g.terms()) {
            for (const auto& r : t.cone.rays)
                if (detail::weight_pairing(c, r) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
    }
    if (!ok) fail(ErrorCode::DegenerateWeights, "no generic weight vector found");
    const auto& bern = detail::bernoulli(static_cast<std::size_t>(max_dim) + 1);

    // acc[o] collects the coefficient of s^{-o}
    std::vector<std::map<AuxPolynomial::Exponent, Rational>> acc(static_cast<std::size_t>(max_dim) + 1);
    std::vector<std::string> vars = g.vars();
    for (const auto& term : g.terms()) {
        const auto& cone = term.cone;
        const int m = cone.dim();
        // Todd product Π Td(σ_j d_j s), truncated at s^m
        std::vector<Rational> todd(static_cast<std::size_t>(m) + 1);
        todd[0] = 1;
        Rational factor(cone.sign);
        if (m % 2) factor = -factor;
        for (int j = 0; j < m; ++j) {
            Integer dj = detail::weight_pairing(c, cone.rays[j]);
            factor /= Rational(dj);
            Rational x = cone.open[j] ? Rational(-dj) : Rational(dj);
            std::vector<Rational> f(static_cast<std::size_t>(m) + 1);
            Rational pw(1), fact(1);
            for (int k = 0; k <= m; ++k) {
                if (k > 0) {
                    pw *= x;
                    fact *= k;
                }
                f[k] = bern[k] * pw / fact;
            }
            std::vector<Rational> next(static_cast<std::size_t>(m) + 1);
            for (int a = 0; a <= m; ++a) {
                if (sgn(todd[a]) == 0) continue;
                for (int b2 = 0; a + b2 <= m; ++b2) next[a + b2] += todd[a] * f[b2];
            }
            todd = std::move(next);
        }
        // moments[ex][k] = Σ_shift q_ex a^k / k!, with a the weight of the shifted apex
        const Integer base = detail::weight_pairing(c, cone.apex);
        std::map<AuxPolynomial::Exponent, std::vector<Rational>> moments;
        for (const auto& [shift, coeff] : term.numerator) {
            if (coeff.is_zero()) continue;
            const Integer a = base + detail::weight_pairing(c, shift);
            const AuxPolynomial cf = coeff.vars() == vars ? coeff : coeff.with_vars(vars);
            for (const auto& [ex, q] : cf.terms()) {
                auto& mo = moments[ex];
                if (mo.empty()) mo.assign(static_cast<std::size_t>(m) + 1, Rational(0));
                Rational pw = q;
                for (int k = 0; k <= m; ++k) {
                    mo[k] += pw;
                    pw *= a;
                }
            }
        }
        std::vector<Rational> inv_fact(static_cast<std::size_t>(m) + 1);
        inv_fact[0] = 1;
        for (int k = 1; k <= m; ++k) inv_fact[k] = inv_fact[k - 1] / Rational(k);
        for (const auto& [ex, mo] : moments)
            for (int k = 0; k <= m; ++k) {
                Rational p(0);
                for (int i = 0; i <= k; ++i) p += todd[i] * mo[k - i] * inv_fact[k - i];
                if (sgn(p) == 0) continue;
                acc[static_cast<std::size_t>(m - k)][ex] += p * factor;
            }
    }
    for (std::size_t o = 1; o < acc.size(); ++o)
        for (const auto& [ex, q] : acc[o])
            if (sgn(q) != 0)
                fail(ErrorCode::NonCancellingPole, "pole of order " + std::to_string(o) + " survives summation");
    AuxPolynomial out(vars);
    for (const auto& [ex, q] : acc[0]) out.add_term(ex, q);
    return out;
}

/// Lattice-point series of a polytope from its vertex cones.
inline EquivariantPolynomial brion_series(const std::vector<std::pair<LatticeVector, std::vector<LatticeVector>>>& vertex_cones) {
    require(!vertex_cones.empty(), ErrorCode::InvalidInput, "no vertex cones");
    const int n = static_cast<int>(vertex_cones.front().first.size());
    GenFun g(n, {});
    for (const auto& [apex, gens] : vertex_cones)
        for (const auto& cell : triangulate_half_open(apex, gens)) g.add(cell, AuxPolynomial::constant(1));
    return support(g);
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_GENFUN_HPP
