#include "wirsing/linalg.hpp"

#include <algorithm>

namespace wirsing {

Int bareiss_det(Mat m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw UsageError("bareiss_det: matrix not square");
    if (n == 0) return 1;

    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        // pivot search
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

int bareiss_rank(Mat m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw UsageError("bareiss_rank: ragged matrix");

    Int prev(1);
    size_t r = 0;  // current pivot row
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<Vec> kernel_basis(const Mat& m) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();

    // rational row reduction to reduced echelon form
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = Rat(m[i][j]);

    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<Vec> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        // free column fc -> kernel vector with v[fc] = 1
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<size_t>(pivot_col[i])] = -a[i][fc];
        // clear denominators, make primitive
        Int den_lcm(1);
        for (const auto& x : v) den_lcm = lcm(den_lcm, x.get_den());
        Vec w(cols);
        for (size_t j = 0; j < cols; ++j) w[j] = Int(v[j] * Rat(den_lcm));
        basis.push_back(primitive_vector(std::move(w)));
    }
    return basis;
}

Vec cross3(const Vec& a, const Vec& b) {
    if (a.size() != 3 || b.size() != 3) throw UsageError("cross3: vectors must have length 3");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec primitive_vector(Vec v) {
    Int g = vector_gcd(v);
    if (g == 0) throw ZeroInput("primitive_vector: zero vector");
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
    return v;
}

} // namespace wirsing
