#include "prc/ratlin.hpp"

#include <algorithm>

#include "prc/errors.hpp"

namespace prc {

int rat_rank(RatMatrix M) {
    if (M.empty()) return 0;
    std::size_t rows = M.size(), cols = M[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && M[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[rank], M[sel]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (M[r][col] == 0) continue;
            Rat f = M[r][col] / M[rank][col];
            for (std::size_t c = col; c < cols; ++c) M[r][c] -= f * M[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<Rat> rat_solve(RatMatrix M, std::vector<Rat> b) {
    std::size_t n = M.size();
    if (n == 0 || M[0].size() != n || b.size() != n)
        throw Error("rat_solve: need square system");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) throw Error("rat_solve: singular matrix");
        std::swap(M[col], M[sel]);
        std::swap(b[col], b[sel]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col] / M[col][col];
            for (std::size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
    return x;
}

std::vector<Int> primitive_normalize(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    std::vector<Int> out(v.size(), 0);
    Int content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        content = boost::multiprecision::gcd(content, out[i]);
    }
    if (content == 0) return out; // zero vector
    Int sign = 0;
    for (const auto& x : out)
        if (x != 0) { sign = x < 0 ? -1 : 1; break; }
    Int div = content * sign;
    for (auto& x : out) x /= div;
    return out;
}

std::vector<std::vector<Int>> integer_kernel(IntMatrix M) {
    if (M.empty()) return {};
    std::size_t rows = M.size(), cols = M[0].size();

    // Bareiss fraction-free forward elimination to echelon form.
    std::vector<std::size_t> pivot_col;
    Int prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && M[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[rank], M[sel]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                M[r][c] = (M[rank][col] * M[r][c] - M[r][col] * M[rank][c]) / prev_pivot;
            M[r][col] = 0;
        }
        prev_pivot = M[rank][col];
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivot_col) is_pivot[c] = 1;

    std::vector<std::vector<Int>> kernel;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> x(cols, 0);
        x[free_col] = 1;
        for (std::size_t r = rank; r-- > 0;) {
            Rat s = 0;
            for (std::size_t c = pivot_col[r] + 1; c < cols; ++c)
                if (M[r][c] != 0) s += Rat(M[r][c]) * x[c];
            x[pivot_col[r]] = -s / Rat(M[r][pivot_col[r]]);
        }
        kernel.push_back(primitive_normalize(x));
    }
    return kernel;
}

bool in_span(const std::vector<std::vector<Rat>>& span, const std::vector<Rat>& v) {
    RatMatrix rows = span;
    int base = rat_rank(rows);
    rows.push_back(v);
    return rat_rank(rows) == base;
}

} // namespace prc
