#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilq/fields.hpp"
#include "nilq/rng.hpp"

namespace nilq {

template <ExactField F>
using Vec = std::vector<typename F::Elem>;

/// Dense matrix over an exact field. Desk-scale dimensions only, so no
/// sparsity; all eliminations are exact Gauss with first-nonzero pivoting.
template <ExactField F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : f_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, f_.zero()) {}

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.f_.one();
        return m;
    }

    static Matrix random(F field, std::size_t rows, std::size_t cols, Rng& rng) {
        Matrix m(field, rows, cols);
        for (auto& e : m.a_) e = m.f_.random(rng);
        return m;
    }

    static Matrix from_rows(F field, const std::vector<Vec<F>>& rows) {
        std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const F& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!f_.is_zero(e)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!f_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-() const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.neg(a_[i]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (f_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(aik, o.at(k, j)));
            }
        return r;
    }

    Matrix scaled(const Elem& c) const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], c);
        return r;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        Vec<F> r(rows_, f_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!f_.is_zero(at(i, j))) r[i] = f_.add(r[i], f_.mul(at(i, j), v[j]));
        return r;
    }

    Matrix transpose() const {
        Matrix r(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) at(r0 + i, c0 + j) = m.at(i, j);
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix m(f_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
        return m;
    }

    std::size_t rank() const {
        Matrix work(*this);
        return work.echelonize().size();
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Basis of the right null space as column vectors; size = cols - rank.
    std::vector<Vec<F>> kernel_basis() const {
        Matrix work(*this);
        const std::vector<std::size_t> pivots = work.echelonize();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        std::vector<Vec<F>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            Vec<F> v(cols_, f_.zero());
            v[free_col] = f_.one();
            // back-substitute: row i has leading 1 at pivots[i]
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = f_.neg(work.at(i, free_col));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Some solution of m·x = b, or nullopt when inconsistent.
    std::optional<Vec<F>> solve(const Vec<F>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
        Matrix work(f_, rows_, cols_ + 1);
        work.set_block(0, 0, *this);
        for (std::size_t i = 0; i < rows_; ++i) work.at(i, cols_) = b[i];
        std::vector<std::size_t> pivots = work.echelonize();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        Vec<F> x(cols_, f_.zero());
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = work.at(i, cols_);
        return x;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i == 0 ? "[" : " ";
            for (std::size_t j = 0; j < cols_; ++j) {
                out += f_.str(at(i, j));
                if (j + 1 < cols_) out += " ";
            }
            out += i + 1 == rows_ ? "]" : "\n";
        }
        return out;
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> echelonize() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pr = row;
            while (pr < rows_ && f_.is_zero(at(pr, col))) ++pr;
            if (pr == rows_) continue;
            swap_rows(pr, row);
            const Elem inv = f_.inv(at(row, col));
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = f_.mul(at(row, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || f_.is_zero(at(i, col))) continue;
                const Elem c = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) = f_.sub(at(i, j), f_.mul(c, at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    F f_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

/// Incrementally maintained subspace of k^n in reduced echelon form.
/// Backs submodule closures, socle chains and quotient coordinates.
template <ExactField F>
class Subspace {
public:
    Subspace(F field, std::size_t ambient)
        : f_(std::move(field)), ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const F& field() const { return f_; }

    /// Reduce v against the current basis; the residual is zero iff v lies
    /// in the span.
    Vec<F> reduce(Vec<F> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (f_.is_zero(c)) continue;
            const auto coef = c;
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = f_.sub(v[j], f_.mul(coef, rows_[i][j]));
        }
        return v;
    }

    bool contains(const Vec<F>& v) const {
        Vec<F> r = reduce(v);
        for (const auto& e : r)
            if (!f_.is_zero(e)) return false;
        return true;
    }

    /// Insert v; returns true when the dimension grows.
    bool insert(const Vec<F>& v) {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: bad vector length");
        Vec<F> r = reduce(v);
        std::size_t pivot = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!f_.is_zero(r[j])) {
                pivot = j;
                break;
            }
        if (pivot == ambient_) return false;
        const auto inv = f_.inv(r[pivot]);
        for (auto& e : r) e = f_.mul(e, inv);
        // back-reduce existing rows and keep rows ordered by pivot
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto c = rows_[i][pivot];
            if (f_.is_zero(c)) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                rows_[i][j] = f_.sub(rows_[i][j], f_.mul(c, r[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(r));
        pivots_.insert(pivots_.begin() + pos, pivot);
        return true;
    }

    /// Echelon basis, deterministic given insertion history.
    const std::vector<Vec<F>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    std::vector<std::size_t> free_columns() const {
        std::vector<bool> is_pivot(ambient_, false);
        for (std::size_t p : pivots_) is_pivot[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!is_pivot[j]) free.push_back(j);
        return free;
    }

    /// Coordinates of a member vector in the echelon basis.
    Vec<F> coords_of(const Vec<F>& v) const {
        Vec<F> c(rows_.size(), f_.zero());
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

private:
    F f_;
    std::size_t ambient_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace nilq
