#ifndef QGAIN_MATRIX_HPP
#define QGAIN_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "qgain/quaternion.hpp"

namespace qgain {

/// Dense rectangular quaternion matrix, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        e_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw precondition_error("ragged matrix initializer");
            for (const auto& q : r) e_.push_back(q);
        }
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int d = 0; d < n; ++d) m(d, d) = Quaternion::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Quaternion& operator()(int r, int c) { return e_[idx(r, c)]; }
    const Quaternion& operator()(int r, int c) const { return e_[idx(r, c)]; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols_; ++c) std::swap(e_[idx(a, c)], e_[idx(b, c)]);
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    QMatrix conj_transpose() const {
        QMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = conj((*this)(r, c));
        return t;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_, cols_;
    std::vector<Quaternion> e_;
};

/// The four one-sided ranks of a quaternion matrix. Coefficients act on the
/// named side of rows or columns; over quaternions the four values can differ.
enum class RankSide { row_left, row_right, col_left, col_right };

const char* to_string(RankSide side);

/// One-sided rank by side-respecting Gaussian elimination. Row-left mode adds
/// c*row, row-right adds row*c; column modes act on columns the same way.
/// Dispatches to the OpenMP kernel when built with OpenMP.
int rank(const QMatrix& m, RankSide side);

/// Serial reference elimination.
int rank_serial(const QMatrix& m, RankSide side);

/// OpenMP elimination; row updates below the pivot run in parallel. Identical
/// results to rank_serial.
int rank_parallel(const QMatrix& m, RankSide side);

/// True iff square and m(j,i) == conj(m(i,j)) for all i, j.
bool is_hermitian(const QMatrix& m);

/// Row r replaced by c * row r (left multiplication entrywise); c must be
/// nonzero. Preserves the row-left rank; may change the row-right rank.
QMatrix left_scale_row(const QMatrix& m, int r, const Quaternion& c);

/// Row dst replaced by row dst + c * row src — the row-left elementary
/// addition the elimination is built from.
QMatrix left_add_row(const QMatrix& m, int dst, int src, const Quaternion& c);

std::string to_string(const QMatrix& m);

} // namespace qgain

#endif
