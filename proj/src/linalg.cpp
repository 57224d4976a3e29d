#include "homtoric/linalg.hpp"

#include "homtoric/error.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace homtoric {

namespace {

// Entries beyond this magnitude make the next Bareiss product unsafe in 128 bits.
constexpr __int128 kWideLimit = static_cast<__int128>(1) << 62;

void check_size(__int128 x) {
    if (x > kWideLimit || x < -kWideLimit) throw ResourceLimit("integer overflow in exact elimination");
}

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

}  // namespace

std::int64_t narrow_checked(__int128 x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw ResourceLimit("integer overflow: value exceeds 64 bits");
    return static_cast<std::int64_t>(x);
}

namespace detail {

std::vector<Eigen::Index> bareiss_pivot_columns(WideMatrix w) {
    std::vector<Eigen::Index> pivots;
    __int128 prev = 1;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < w.cols && row < w.rows; ++col) {
        Eigen::Index p = row;
        while (p < w.rows && w.at(p, col) == 0) ++p;
        if (p == w.rows) continue;
        if (p != row)
            for (Eigen::Index c = 0; c < w.cols; ++c) std::swap(w.at(p, c), w.at(row, c));
        __int128 piv = w.at(row, col);
        for (Eigen::Index r = row + 1; r < w.rows; ++r) {
            __int128 lead = w.at(r, col);
            for (Eigen::Index c = col + 1; c < w.cols; ++c) {
                __int128 v = (piv * w.at(r, c) - lead * w.at(row, c)) / prev;
                check_size(v);
                w.at(r, c) = v;
            }
            w.at(r, col) = 0;
        }
        prev = piv;
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

__int128 bareiss_determinant(WideMatrix w) {
    if (w.rows != w.cols) throw PreconditionError("determinant of a non-square matrix");
    const Eigen::Index n = w.rows;
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = k;
        while (p < n && w.at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (Eigen::Index c = 0; c < n; ++c) std::swap(w.at(p, c), w.at(k, c));
            sign = -sign;
        }
        for (Eigen::Index r = k + 1; r < n; ++r) {
            for (Eigen::Index c = k + 1; c < n; ++c) {
                __int128 v = (w.at(k, k) * w.at(r, c) - w.at(r, k) * w.at(k, c)) / prev;
                check_size(v);
                w.at(r, c) = v;
            }
            w.at(r, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

}  // namespace detail

IntVector primitive(const IntVector& v) {
    std::int64_t g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, static_cast<std::int64_t>(abs128(v(i))));
    if (g <= 1) return v;
    return v / g;
}

}  // namespace homtoric
