#include "qgain/matrix.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qgain {
namespace {

enum class Hand { left, right };

// Echelon elimination with coefficients on one side of the rows. The pivot
// row is scaled on the same side so its pivot becomes 1; this is a legal
// operation for that side's rank and keeps later coefficients small.
// Returns the number of nonzero rows (= number of pivots).
int echelon_rank(QMatrix m, Hand hand, bool parallel) {
    const int rows = m.rows();
    const int cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int rr = r; rr < rows; ++rr) {
            if (!m(rr, c).is_zero()) { pivot = rr; break; }
        }
        if (pivot < 0) continue;
        m.swap_rows(r, pivot);

        const Quaternion piv_inv = inv(m(r, c));
        for (int cc = c; cc < cols; ++cc) {
            m(r, cc) = hand == Hand::left ? piv_inv * m(r, cc) : m(r, cc) * piv_inv;
        }

        // Pivot entry is now 1, so the elimination coefficient for a row is
        // just the negated entry. Each row update is independent.
        auto update_row = [&m, &hand, c, r, cols](int rr) {
            const Quaternion factor = -m(rr, c);
            if (factor.is_zero()) return;
            for (int cc = c; cc < cols; ++cc) {
                m(rr, cc) = m(rr, cc) + (hand == Hand::left ? factor * m(r, cc)
                                                            : m(r, cc) * factor);
            }
        };
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (rows - r > 4)
#endif
            for (int rr = r + 1; rr < rows; ++rr) update_row(rr);
        } else {
            for (int rr = r + 1; rr < rows; ++rr) update_row(rr);
        }
        ++r;
    }
    return r;
}

// Column modes reduce to row modes on the plain transpose: transposing turns
// "add c*col_i to col_j" into "add c*row_i to row_j" with the coefficient on
// the same side, so the handedness is preserved.
int dispatch(const QMatrix& m, RankSide side, bool parallel) {
    switch (side) {
        case RankSide::row_left: return echelon_rank(m, Hand::left, parallel);
        case RankSide::row_right: return echelon_rank(m, Hand::right, parallel);
        case RankSide::col_left: return echelon_rank(m.transpose(), Hand::left, parallel);
        case RankSide::col_right: return echelon_rank(m.transpose(), Hand::right, parallel);
    }
    return 0;
}

} // namespace

const char* to_string(RankSide side) {
    switch (side) {
        case RankSide::row_left: return "row-left";
        case RankSide::row_right: return "row-right";
        case RankSide::col_left: return "col-left";
        case RankSide::col_right: return "col-right";
    }
    return "?";
}

int rank_serial(const QMatrix& m, RankSide side) { return dispatch(m, side, false); }

int rank_parallel(const QMatrix& m, RankSide side) { return dispatch(m, side, true); }

int rank(const QMatrix& m, RankSide side) {
#ifdef _OPENMP
    if (omp_get_max_threads() > 1) return rank_parallel(m, side);
#endif
    return rank_serial(m, side);
}

bool is_hermitian(const QMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = i; j < m.cols(); ++j) {
            if (m(j, i) != conj(m(i, j))) return false;
        }
    }
    return true;
}

QMatrix left_scale_row(const QMatrix& m, int r, const Quaternion& c) {
    if (c.is_zero()) throw precondition_error("left_scale_row: zero scalar");
    if (r < 0 || r >= m.rows()) throw precondition_error("left_scale_row: row out of range");
    QMatrix out = m;
    for (int cc = 0; cc < m.cols(); ++cc) out(r, cc) = c * out(r, cc);
    return out;
}

QMatrix left_add_row(const QMatrix& m, int dst, int src, const Quaternion& c) {
    if (dst < 0 || dst >= m.rows() || src < 0 || src >= m.rows())
        throw precondition_error("left_add_row: row out of range");
    QMatrix out = m;
    for (int cc = 0; cc < m.cols(); ++cc) out(dst, cc) = out(dst, cc) + c * out(src, cc);
    return out;
}

std::string to_string(const QMatrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        os << "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << m(r, c);
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace qgain
