#ifndef FLAGTUTTE_AUX_POLYNOMIAL_HPP
#define FLAGTUTTE_AUX_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace flagtutte {

/// Multivariate polynomial with exact rational coefficients over a declared,
/// ordered list of named variables.
///
/// Binary operations align operands by variable name; variables missing from
/// the left operand are appended in the order they appear on the right.
class AuxPolynomial {
   public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, Rational>;

    AuxPolynomial() = default;

    explicit AuxPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    AuxPolynomial(std::vector<std::string> vars, const Rational& c) : vars_(std::move(vars)) {
        if (sgn(c) != 0) terms_[Exponent(vars_.size(), 0)] = c;
    }

    static AuxPolynomial constant(const Rational& c, std::vector<std::string> vars = {}) {
        return AuxPolynomial(std::move(vars), c);
    }

    static AuxPolynomial variable(const std::string& name, std::vector<std::string> vars = {}) {
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        AuxPolynomial p(vars);
        Exponent e(vars.size(), 0);
        e[p.index_of(name)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static AuxPolynomial monomial(std::vector<std::string> vars, Exponent e, const Rational& c = 1) {
        AuxPolynomial p(std::move(vars));
        require(e.size() == p.vars_.size(), ErrorCode::InternalAssertion, "monomial arity mismatch");
        if (sgn(c) != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    /// Adds c times the monomial with exponent e (over vars()).
    void add_term(const Exponent& e, const Rational& c) {
        if (sgn(c) == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Degree in the named variable (-1 for the zero polynomial).
    int degree(const std::string& name) const {
        int i = index_of(name), d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, i < 0 ? 0 : e[i]);
        return d;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    /// Re-expresses the polynomial over `vars`, which must contain every variable in use.
    AuxPolynomial with_vars(const std::vector<std::string>& vars) const {
        AuxPolynomial out(vars);
        std::vector<int> map(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(vars.begin(), vars.end(), vars_[i]);
            map[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
        }
        for (const auto& [e, c] : terms_) {
            Exponent f(vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                require(map[i] >= 0, ErrorCode::InternalAssertion, "variable " + vars_[i] + " dropped");
                f[map[i]] = e[i];
            }
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    AuxPolynomial& operator+=(const AuxPolynomial& o) {
        if (o.vars_ != vars_) {
            auto vars = merged_vars(o);
            if (vars != vars_) *this = with_vars(vars);
            return *this += o.with_vars(vars_);
        }
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    AuxPolynomial& operator-=(const AuxPolynomial& o) { return *this += -o; }

    AuxPolynomial operator-() const {
        AuxPolynomial out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    AuxPolynomial& operator*=(const Rational& k) {
        if (sgn(k) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    friend AuxPolynomial operator+(AuxPolynomial a, const AuxPolynomial& b) { return a += b; }
    friend AuxPolynomial operator-(AuxPolynomial a, const AuxPolynomial& b) { return a -= b; }
    friend AuxPolynomial operator*(AuxPolynomial a, const Rational& k) { return a *= k; }
    friend AuxPolynomial operator*(const Rational& k, AuxPolynomial a) { return a *= k; }

    friend AuxPolynomial operator*(const AuxPolynomial& a, const AuxPolynomial& b) {
        auto vars = a.merged_vars(b);
        AuxPolynomial x = a.vars_ == vars ? a : a.with_vars(vars);
        AuxPolynomial y = b.vars_ == vars ? b : b.with_vars(vars);
        AuxPolynomial out(vars);
        for (const auto& [e, c] : x.terms_)
            for (const auto& [f, d] : y.terms_) {
                Exponent g = e;
                for (std::size_t i = 0; i < g.size(); ++i) g[i] += f[i];
                out.add_term(g, c * d);
            }
        return out;
    }

    AuxPolynomial& operator*=(const AuxPolynomial& o) { return *this = *this * o; }

    AuxPolynomial pow(unsigned k) const {
        AuxPolynomial out = constant(1, vars_);
        for (unsigned i = 0; i < k; ++i) out *= *this;
        return out;
    }

    /// Replaces every listed variable by a polynomial; the result keeps the
    /// untouched variables followed by any new ones.
    AuxPolynomial substitute(const std::vector<std::pair<std::string, AuxPolynomial>>& subs) const {
        std::vector<std::string> keep;
        std::vector<int> keep_idx;
        std::vector<int> sub_of(vars_.size(), -1);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            for (std::size_t j = 0; j < subs.size(); ++j)
                if (subs[j].first == vars_[i]) sub_of[i] = static_cast<int>(j);
            if (sub_of[i] < 0) {
                keep.push_back(vars_[i]);
                keep_idx.push_back(static_cast<int>(i));
            }
        }
        std::vector<std::string> vars = keep;
        for (const auto& [name, p] : subs)
            for (const auto& v : p.vars_)
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        // cache powers of each substituted polynomial
        std::vector<std::vector<AuxPolynomial>> powers(subs.size());
        AuxPolynomial out(vars);
        for (const auto& [e, c] : terms_) {
            Exponent base(vars.size(), 0);
            for (std::size_t k = 0; k < keep_idx.size(); ++k) base[k] = e[keep_idx[k]];
            AuxPolynomial term = monomial(vars, base, c);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (sub_of[i] < 0 || e[i] == 0) continue;
                auto& pw = powers[sub_of[i]];
                if (pw.empty()) pw.push_back(constant(1, vars));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[sub_of[i]].second);
                term = term * pw[e[i]];
            }
            out += term;
        }
        return out.with_vars(vars);
    }

    AuxPolynomial substitute(const std::string& name, const AuxPolynomial& value) const {
        return substitute({{name, value}});
    }

    /// Evaluates the listed variables at rationals, keeping the rest symbolic.
    AuxPolynomial evaluate(const std::vector<std::pair<std::string, Rational>>& values) const {
        std::vector<std::pair<std::string, AuxPolynomial>> subs;
        for (const auto& [name, v] : values) subs.emplace_back(name, constant(v));
        return substitute(subs);
    }

    /// Value when every variable has been fixed.
    Rational value(const std::vector<std::pair<std::string, Rational>>& values) const {
        AuxPolynomial p = evaluate(values);
        require(p.total_degree() <= 0, ErrorCode::InternalAssertion, "value(): free variables remain");
        return p.coefficient(Exponent(p.vars_.size(), 0));
    }

    AuxPolynomial derivative(const std::string& name) const {
        AuxPolynomial out(vars_);
        int i = index_of(name);
        if (i < 0) return out;
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponent f = e;
            f[i] -= 1;
            out.add_term(f, c * e[i]);
        }
        return out;
    }

    /// Exact quotient by another polynomial in one shared variable; throws
    /// NotDivisible if a remainder is left.
    AuxPolynomial divide_univariate(const AuxPolynomial& d, const std::string& name) const {
        int di = d.index_of(name);
        require(di >= 0 && d.size() > 0, ErrorCode::InternalAssertion, "bad divisor");
        for (const auto& [e, c] : d.terms_)
            for (std::size_t k = 0; k < e.size(); ++k)
                require(static_cast<int>(k) == di || e[k] == 0, ErrorCode::InternalAssertion,
                        "divisor must be univariate");
        AuxPolynomial rem = with_vars(merged_vars(d));
        AuxPolynomial den = d.with_vars(rem.vars_);
        int vi = rem.index_of(name);
        int dd = den.degree(name);
        Rational lead = den.coefficient([&] {
            Exponent e(rem.vars_.size(), 0);
            e[vi] = dd;
            return e;
        }());
        AuxPolynomial quot(rem.vars_);
        while (!rem.is_zero() && rem.degree(name) >= dd) {
            // pick the term of highest degree in `name`
            auto it = std::max_element(rem.terms_.begin(), rem.terms_.end(),
                                       [&](const auto& a, const auto& b) { return a.first[vi] < b.first[vi]; });
            Exponent e = it->first;
            e[vi] -= dd;
            AuxPolynomial q = monomial(rem.vars_, e, it->second / lead);
            quot += q;
            rem -= q * den;
        }
        if (!rem.is_zero()) fail(ErrorCode::NotDivisible, "nonzero remainder dividing by " + d.to_string());
        return quot;
    }

    bool operator==(const AuxPolynomial& o) const {
        if (vars_ == o.vars_) return terms_ == o.terms_;
        return (*this - o).is_zero();
    }
    bool operator!=(const AuxPolynomial& o) const { return !(*this == o); }

    /// Graded-lex text: higher total degree first, ties by lexicographically
    /// larger exponent in declared variable order, e.g. "x^2*y + 2*x - 1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int da = 0, db = 0;
            for (int x : a.first) da += x;
            for (int x : b.first) db += x;
            if (da != db) return da > db;
            return a.first > b.first;
        });
        std::string out;
        bool first = true;
        for (const auto& [e, c] : ts) {
            Rational mag = abs(c);
            if (first) {
                if (sgn(c) < 0) out += "-";
            } else {
                out += sgn(c) < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.get_str() + "*" + mono;
            }
        }
        return out;
    }

   private:
    std::vector<std::string> merged_vars(const AuxPolynomial& o) const {
        std::vector<std::string> vars = vars_;
        for (const auto& v : o.vars_)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        return vars;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace flagtutte

#endif  // FLAGTUTTE_AUX_POLYNOMIAL_HPP
