#pragma once

// Exact integer linear algebra on Eigen integer matrices (fraction-free elimination).

#include <Eigen/Core>

#include <cstdint>
#include <type_traits>
#include <vector>

namespace homtoric {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

namespace detail {

/// Row-major 128-bit working copy used by the elimination kernels.
struct WideMatrix {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    std::vector<__int128> data;
    __int128& at(Eigen::Index r, Eigen::Index c) { return data[static_cast<std::size_t>(r * cols + c)]; }
};

template <typename Derived>
WideMatrix widen(const Eigen::MatrixBase<Derived>& m) {
    static_assert(std::is_integral_v<typename Derived::Scalar>, "exact routines need an integer scalar");
    WideMatrix w{m.rows(), m.cols(), {}};
    w.data.resize(static_cast<std::size_t>(m.rows() * m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) w.at(r, c) = static_cast<__int128>(m(r, c));
    return w;
}

std::vector<Eigen::Index> bareiss_pivot_columns(WideMatrix w);
__int128 bareiss_determinant(WideMatrix w);

}  // namespace detail

/// Pivot columns of the row echelon form, scanned left to right.
template <typename Derived>
std::vector<Eigen::Index> pivot_columns(const Eigen::MatrixBase<Derived>& m) {
    return detail::bareiss_pivot_columns(detail::widen(m));
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
    return static_cast<Eigen::Index>(pivot_columns(m).size());
}

/// Greedy maximal independent row subset, earliest rows preferred.
template <typename Derived>
std::vector<Eigen::Index> independent_rows(const Eigen::MatrixBase<Derived>& m) {
    return pivot_columns(m.transpose());
}

/// Determinant of a square integer matrix. Throws ResourceLimit if it leaves int64.
template <typename Derived>
std::int64_t exact_determinant(const Eigen::MatrixBase<Derived>& m);

/// Generalised cross product of an (r-1) x r matrix: the vector of signed maximal
/// minors, orthogonal to every row. Zero iff the rows are dependent.
template <typename Derived>
IntVector cofactor_normal(const Eigen::MatrixBase<Derived>& m) {
    const Eigen::Index r = m.cols();
    IntVector out(r);
    IntMatrix minor(m.rows(), r - 1);
    for (Eigen::Index j = 0; j < r; ++j) {
        minor << m.leftCols(j), m.rightCols(r - 1 - j);
        std::int64_t d = exact_determinant(minor);
        out(j) = (j % 2 == 0) ? d : -d;
    }
    return out;
}

/// Divide by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

std::int64_t narrow_checked(__int128 x);

template <typename Derived>
std::int64_t exact_determinant(const Eigen::MatrixBase<Derived>& m) {
    return narrow_checked(detail::bareiss_determinant(detail::widen(m)));
}

}  // namespace homtoric
