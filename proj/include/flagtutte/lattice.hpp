#ifndef FLAGTUTTE_LATTICE_HPP
#define FLAGTUTTE_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace flagtutte {

/// Integer point of Z^n, coordinate i-1 for element i.
using LatticeVector = std::vector<std::int64_t>;

inline LatticeVector zero_vector(int n) { return LatticeVector(static_cast<std::size_t>(n), 0); }

inline LatticeVector unit_vector(int n, int i) {
    LatticeVector v = zero_vector(n);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

inline LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline LatticeVector operator-(LatticeVector a) {
    for (auto& x : a) x = -x;
    return a;
}

inline LatticeVector operator*(std::int64_t k, LatticeVector a) {
    for (auto& x : a) x *= k;
    return a;
}

inline bool is_zero(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

inline std::int64_t coordinate_sum(const LatticeVector& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

inline Rational dot(const std::vector<Rational>& a, const LatticeVector& v) {
    Rational s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s += a[i] * Rational(static_cast<long>(v[i]));
    return s;
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline LatticeVector primitive(LatticeVector v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline std::string vector_string(const LatticeVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Matrix with the given vectors as columns.
inline RationalMatrix column_matrix(const std::vector<LatticeVector>& cols, int n) {
    RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i) m[i][j] = Rational(static_cast<long>(cols[j][i]));
    return m;
}

/// Row-reduces in place; returns the pivot columns.
inline std::vector<int> row_reduce(RationalMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int matrix_rank(RationalMatrix m) { return static_cast<int>(row_reduce(m).size()); }

inline int vectors_rank(const std::vector<LatticeVector>& vs, int n) {
    if (vs.empty()) return 0;
    return matrix_rank(column_matrix(vs, n));
}

inline Rational determinant(RationalMatrix m) {
    const std::size_t d = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && sgn(m[p][c]) == 0) ++p;
        if (p == d) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < d; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < d; ++k) m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

/// gcd of all maximal minors of the column matrix; equals 1 exactly when the
/// columns generate every lattice point of their real span.
inline Integer maximal_minor_gcd(const std::vector<LatticeVector>& cols, int n) {
    const int d = static_cast<int>(cols.size());
    if (d == 0) return Integer(1);
    Integer g(0);
    std::vector<int> rows(static_cast<std::size_t>(d));
    std::iota(rows.begin(), rows.end(), 0);
    while (true) {
        RationalMatrix sub(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) sub[i][j] = Rational(static_cast<long>(cols[j][rows[i]]));
        Rational det = determinant(sub);
        Integer v = abs(det.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return g;
        int k = d - 1;
        while (k >= 0 && rows[k] == n - d + k) --k;
        if (k < 0) break;
        ++rows[k];
        for (int j = k + 1; j < d; ++j) rows[j] = rows[j - 1] + 1;
    }
    return g;
}

/// Coordinates of points in the span of a fixed set of independent columns.
///
/// Stores the inverse of a nonsingular square submatrix as integer numerators
/// over a common denominator, so repeated membership solves avoid rational
/// arithmetic.
class SpanSolver {
   public:
    SpanSolver() = default;

    SpanSolver(const std::vector<LatticeVector>& cols, int n) : n_(n), d_(static_cast<int>(cols.size())), cols_(cols) {
        if (d_ == 0) return;
        // pick independent rows by reducing the transpose
        RationalMatrix t(static_cast<std::size_t>(d_), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int j = 0; j < d_; ++j)
            for (int i = 0; i < n; ++i) t[j][i] = Rational(static_cast<long>(cols[j][i]));
        rows_ = row_reduce(t);
        require(static_cast<int>(rows_.size()) == d_, ErrorCode::InternalAssertion, "columns are not independent");
        RationalMatrix sub(static_cast<std::size_t>(d_), std::vector<Rational>(2 * static_cast<std::size_t>(d_)));
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) sub[i][j] = Rational(static_cast<long>(cols[j][rows_[i]]));
            sub[i][d_ + i] = 1;
        }
        row_reduce(sub);
        Integer den(1);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), sub[i][d_ + j].get_den_mpz_t());
        require(den.fits_slong_p(), ErrorCode::InternalAssertion, "solver denominator overflow");
        den_ = den.get_si();
        inv_.assign(static_cast<std::size_t>(d_) * d_, 0);
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) {
                Rational v = sub[i][d_ + j] * Rational(den);
                require(v.get_num().fits_slong_p(), ErrorCode::InternalAssertion, "solver entry overflow");
                inv_[static_cast<std::size_t>(i) * d_ + j] = v.get_num().get_si();
            }
    }

    int dim() const { return d_; }
    const std::vector<LatticeVector>& columns() const { return cols_; }

    /// Numerators of the coordinates of x over denominator(); x need not lie in the span.
    void numerators(const LatticeVector& x, std::int64_t* out) const {
        for (int i = 0; i < d_; ++i) {
            std::int64_t s = 0;
            const std::int64_t* row = &inv_[static_cast<std::size_t>(i) * d_];
            for (int j = 0; j < d_; ++j) s += row[j] * x[rows_[j]];
            out[i] = s;
        }
    }

    std::int64_t denominator() const { return den_; }

    /// Integer coordinates of x, or nullopt if x is outside the span or the lattice they generate.
    std::optional<std::vector<std::int64_t>> integer_coordinates(const LatticeVector& x) const {
        std::vector<std::int64_t> lam(static_cast<std::size_t>(d_));
        numerators(x, lam.data());
        for (auto& l : lam) {
            if (l % den_ != 0) return std::nullopt;
            l /= den_;
        }
        for (int i = 0; i < n_; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < d_; ++j) s += lam[j] * cols_[j][i];
            if (s != x[i]) return std::nullopt;
        }
        return lam;
    }

    /// Rational coordinates of x, or nullopt if x is outside the span.
    std::optional<std::vector<Rational>> coordinates(const LatticeVector& x) const {
        std::vector<std::int64_t> num(static_cast<std::size_t>(d_));
        numerators(x, num.data());
        std::vector<Rational> lam(static_cast<std::size_t>(d_));
        for (int j = 0; j < d_; ++j) {
            lam[j] = Rational(static_cast<long>(num[j]), static_cast<unsigned long>(den_));
            lam[j].canonicalize();
        }
        for (int i = 0; i < n_; ++i) {
            Rational s(0);
            for (int j = 0; j < d_; ++j) s += lam[j] * Rational(static_cast<long>(cols_[j][i]));
            if (s != Rational(static_cast<long>(x[i]))) return std::nullopt;
        }
        return lam;
    }

   private:
    int n_ = 0;
    int d_ = 0;
    std::vector<LatticeVector> cols_;
    std::vector<int> rows_;
    std::vector<std::int64_t> inv_;
    std::int64_t den_ = 1;
};

/// Decides whether {x >= 0 : A x = b} is nonempty (phase one of the simplex
/// method with Bland's rule, exact arithmetic).
inline bool lp_feasible(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t m = a.size();
    if (m == 0) return true;
    const std::size_t k = a[0].size();
    for (std::size_t i = 0; i < m; ++i)
        if (sgn(b[i]) < 0) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }
    // tableau: k original columns, m artificial columns, rhs
    const std::size_t cols = k + m;
    RationalMatrix t(m, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) t[i][j] = a[i][j];
        t[i][k + i] = 1;
        t[i][cols] = b[i];
        basis[i] = k + i;
    }
    // reduced costs of minimizing the artificial sum
    std::vector<Rational> cost(cols + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= cols; ++j)
            if (j < k || j == cols) cost[j] -= t[i][j];
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded cannot happen in phase one
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        Rational f = cost[enter];
        for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return sgn(cost[cols]) == 0;
}

/// True if v is a nonnegative combination of the given vectors.
inline bool in_cone(const std::vector<LatticeVector>& gens, const LatticeVector& v, int n) {
    if (is_zero(v)) return true;
    if (gens.empty()) return false;
    RationalMatrix a = column_matrix(gens, n);
    std::vector<Rational> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b[i] = Rational(static_cast<long>(v[i]));
    return lp_feasible(std::move(a), std::move(b));
}

/// True if no nontrivial nonnegative combination of the vectors vanishes.
inline bool is_pointed(const std::vector<LatticeVector>& gens, int n) {
    if (gens.empty()) return true;
    RationalMatrix a = column_matrix(gens, n);
    a.emplace_back(gens.size(), Rational(1));
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[static_cast<std::size_t>(n)] = 1;
    return !lp_feasible(std::move(a), std::move(b));
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_LATTICE_HPP
