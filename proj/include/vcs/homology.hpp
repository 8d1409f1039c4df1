#pragma once

// Exact integer linear algebra: Smith normal form, first homology of Seifert
// blocks, and integer solution lattices of sum n_i z_i in image(R).

#include "vcs/error.hpp"
#include "vcs/integer.hpp"
#include "vcs/manifold_model.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vcs {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix data does not match its dimensions");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            for (long long x : r) data_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Columns are the given vectors, all of length `rows`.
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
        return v;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
        IntMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Integer& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    IntVector operator*(const IntVector& v) const {
        if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
        IntVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

    /// Fraction-free (Bareiss) determinant of a square matrix.
    Integer determinant() const {
        if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        Integer sign = 1;
        Integer prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0) ++p;
                if (p == n) return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SNFDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const {
        std::size_t r = 0;
        while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
        return r;
    }

    IntVector diagonal() const {
        IntVector d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

/// Smith normal form by elimination around a pivot of minimal absolute value
/// (ties: lowest row, then lowest column).
inline SNFDecomposition smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    IntMatrix D = A;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);

    auto swap_r = [&](std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
    };
    auto swap_c = [&](std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // global pivot search over the trailing block
        std::optional<std::pair<std::size_t, std::size_t>> piv;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D(i, j) != 0 && (!piv || abs_value(D(i, j)) < abs_value(D(piv->first, piv->second))))
                    piv = {i, j};
        if (!piv) break;
        swap_r(t, piv->first);
        swap_c(t, piv->second);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                const Integer q = D(i, t) / D(t, t);
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                const Integer q = D(t, j) / D(t, t);
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                // move the smallest remainder in row/column t onto the diagonal
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (D(i, t) != 0 && abs_value(D(i, t)) < abs_value(D(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(t, j) != 0 && abs_value(D(t, j)) < abs_value(D(bi, bj))) bi = t, bj = j;
                swap_r(t, bi);
                swap_c(t, bj);
                continue;
            }
            // divisibility: fold an offending row into row t and repeat
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < m && !bad; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (!bad) break;
            D.add_row(t, *bad, 1);
            U.add_row(t, *bad, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return SNFDecomposition{std::move(U), std::move(D), std::move(V)};
}

/// Finitely generated abelian group Z^free_rank + sum Z/t_i (t_i > 1, t_i | t_{i+1}).
struct AbelianGroup {
    std::size_t free_rank = 0;
    IntVector torsion;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

inline std::string to_string(const AbelianGroup& g) {
    std::string out;
    auto add = [&](const std::string& part) { out += (out.empty() ? "" : " + ") + part; };
    if (g.free_rank == 1) add("Z");
    else if (g.free_rank > 1) add("Z^" + std::to_string(g.free_rank));
    for (const auto& t : g.torsion) add("Z/" + t.str());
    return out.empty() ? "0" : out;
}

/// Cokernel of a relation matrix whose rows are generators and columns relations.
inline AbelianGroup cokernel(const IntMatrix& relations) {
    const SNFDecomposition snf = smith_normal_form(relations);
    AbelianGroup g;
    const std::size_t r = snf.rank();
    g.free_rank = relations.rows() - r;
    for (std::size_t i = 0; i < r; ++i)
        if (snf.D(i, i) != 1) g.torsion.push_back(snf.D(i, i));
    return g;
}

/// Generators and relations (columns) for an abelian group.
struct AbelianPresentation {
    std::vector<std::string> labels;
    IntMatrix relations;

    std::size_t index_of(const std::string& label) const {
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw Error(ErrorCode::IndexOutOfRange, "no generator " + label);
        return static_cast<std::size_t>(it - labels.begin());
    }

    AbelianGroup group() const { return cokernel(relations); }
};

/// Abelianized Seifert presentation over an orientable base:
/// generators x1,y1,...,xg,yg, q1..qm, d0..d(p-1), h; relations
/// a_j q_j + b_j h = 0 and sum q + sum d + (p == 0 ? b : 0) h = 0.
inline AbelianPresentation presentation_h1(const SeifertBlockData& b) {
    AbelianPresentation pres;
    for (std::size_t i = 1; i <= b.genus; ++i) {
        pres.labels.push_back("x" + std::to_string(i));
        pres.labels.push_back("y" + std::to_string(i));
    }
    const std::size_t q0 = pres.labels.size();
    for (std::size_t j = 1; j <= b.exceptional.size(); ++j) pres.labels.push_back("q" + std::to_string(j));
    const std::size_t d0 = pres.labels.size();
    for (std::size_t k = 0; k < b.num_boundary; ++k) pres.labels.push_back("d" + std::to_string(k));
    const std::size_t h = pres.labels.size();
    pres.labels.push_back("h");

    const std::size_t m = b.exceptional.size();
    pres.relations = IntMatrix(pres.labels.size(), m + 1);
    for (std::size_t j = 0; j < m; ++j) {
        pres.relations(q0 + j, j) = b.exceptional[j].a;
        pres.relations(h, j) = b.exceptional[j].b;
    }
    for (std::size_t j = 0; j < m; ++j) pres.relations(q0 + j, m) = 1;
    for (std::size_t k = 0; k < b.num_boundary; ++k) pres.relations(d0 + k, m) = 1;
    pres.relations(h, m) = b.num_boundary == 0 ? b.section_obstruction : Integer(0);
    return pres;
}

/// Class of the curve p*d_k + q*h in presentation coordinates.
inline IntVector class_in_h1(const SeifertBlockData& b, std::size_t boundary_index, const Slope& s) {
    if (boundary_index >= b.num_boundary)
        throw Error(ErrorCode::IndexOutOfRange, "boundary index " + std::to_string(boundary_index) + " out of range");
    const std::size_t d0 = 2 * b.genus + b.exceptional.size();
    const std::size_t n = d0 + b.num_boundary + 1;
    IntVector v(n);
    v[d0 + boundary_index] = s.p;
    v[n - 1] = s.q;
    return v;
}

/// A lattice in Z^dim given by Q-independent basis vectors.
struct LatticeBasis {
    std::size_t dim = 0;
    std::vector<IntVector> vectors;

    std::size_t rank() const { return vectors.size(); }
    friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

/// Hermite normal form (row style) of the lattice spanned by `gens`: pivots
/// strictly increase, are positive, and entries above a pivot are reduced into
/// [0, pivot). Zero rows are dropped.
inline LatticeBasis hermite_basis(std::size_t dim, std::vector<IntVector> gens) {
    for (const auto& g : gens)
        if (g.size() != dim) throw Error(ErrorCode::DimensionMismatch, "generator length mismatch");
    std::vector<IntVector> basis;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < gens.size(); ++col) {
        // Euclid down the column among rows >= row
        for (;;) {
            std::optional<std::size_t> piv;
            for (std::size_t i = row; i < gens.size(); ++i)
                if (gens[i][col] != 0 && (!piv || abs_value(gens[i][col]) < abs_value(gens[*piv][col]))) piv = i;
            if (!piv) break;
            std::swap(gens[row], gens[*piv]);
            bool clean = true;
            for (std::size_t i = row + 1; i < gens.size(); ++i) {
                if (gens[i][col] == 0) continue;
                const Integer q = gens[i][col] / gens[row][col];
                for (std::size_t j = col; j < dim; ++j) gens[i][j] -= q * gens[row][j];
                if (gens[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (gens[row][col] == 0) continue;
        if (gens[row][col] < 0)
            for (auto& x : gens[row]) x = -x;
        for (std::size_t i = 0; i < row; ++i) {
            Integer q = gens[i][col] / gens[row][col];
            if (gens[i][col] - q * gens[row][col] < 0) q -= 1;
            if (q != 0)
                for (std::size_t j = col; j < dim; ++j) gens[i][j] -= q * gens[row][j];
        }
        ++row;
    }
    basis.assign(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(row));
    return LatticeBasis{dim, std::move(basis)};
}

/// Whether v lies in the integer column span of R.
inline bool in_image(const IntMatrix& R, const IntVector& v) {
    if (v.size() != R.rows()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from row count");
    const SNFDecomposition snf = smith_normal_form(R);
    const IntVector w = snf.U * v;
    const std::size_t r = snf.rank();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < r) {
            if (w[i] % snf.D(i, i) != 0) return false;
        } else if (w[i] != 0) {
            return false;
        }
    }
    return true;
}

/// L = { n in Z^k : sum n_i z_i in image(R) }, via the integer kernel of the
/// stacked matrix [Z | R] projected onto the first k coordinates.
inline LatticeBasis kernel_lattice(const std::vector<IntVector>& z, const IntMatrix& R) {
    const std::size_t k = z.size();
    const std::size_t g = R.rows();
    for (const auto& v : z)
        if (v.size() != g)
            throw Error(ErrorCode::DimensionMismatch, "class vector has length " + std::to_string(v.size()) +
                                                          ", relation matrix has " + std::to_string(g) + " rows");
    if (k == 0) return LatticeBasis{0, {}};

    IntMatrix M(g, k + R.cols());
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < g; ++i) M(i, j) = z[j][i];
    for (std::size_t j = 0; j < R.cols(); ++j)
        for (std::size_t i = 0; i < g; ++i) M(i, k + j) = R(i, j);

    const SNFDecomposition snf = smith_normal_form(M);
    std::vector<IntVector> gens;
    for (std::size_t c = snf.rank(); c < M.cols(); ++c) {
        IntVector v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = snf.V(i, c);
        gens.push_back(std::move(v));
    }
    return hermite_basis(k, std::move(gens));
}

/// Largest t the witness search may need: each coordinate of sum_j t^j b_j is
/// a nonzero polynomial of degree < r, so one of t = 1..k(r-1)+1 avoids all roots.
inline std::size_t witness_search_bound(std::size_t k, std::size_t r) {
    return r == 0 ? 1 : k * (r - 1) + 1;
}

/// A lattice vector with every coordinate nonzero, or nullopt when some
/// coordinate vanishes on the whole lattice. Tries t = 1, 2, ... in order.
inline std::optional<IntVector> all_nonzero_vector(const LatticeBasis& L) {
    const std::size_t k = L.dim;
    for (std::size_t i = 0; i < k; ++i) {
        const bool covered =
            std::any_of(L.vectors.begin(), L.vectors.end(), [i](const IntVector& b) { return b[i] != 0; });
        if (!covered) return std::nullopt;
    }
    const std::size_t bound = witness_search_bound(k, L.rank());
    for (std::size_t t = 1; t <= bound; ++t) {
        IntVector v(k);
        Integer power = 1;
        for (const auto& b : L.vectors) {
            for (std::size_t i = 0; i < k; ++i) v[i] += power * b[i];
            power *= t;
        }
        if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) return v;
    }
    // unreachable by the root-counting argument
    throw Error(ErrorCode::InvalidManifold, "witness search exceeded its proven bound");
}

/// First coordinate (0-based) that vanishes on every basis vector.
inline std::optional<std::size_t> vanishing_coordinate(const LatticeBasis& L) {
    for (std::size_t i = 0; i < L.dim; ++i)
        if (std::all_of(L.vectors.begin(), L.vectors.end(), [i](const IntVector& b) { return b[i] == 0; }))
            return i;
    return std::nullopt;
}

}  // namespace vcs
