#include "conewright/framing.hpp"

#include <stdexcept>

namespace cw {

namespace {

uint8_t mod2(long long v) { return static_cast<uint8_t>(((v % 2) + 2) % 2); }

using Gf2Matrix = std::vector<std::vector<uint8_t>>;

// Row-reduce in place; returns the rank and records pivot columns.
int gf2_eliminate(Gf2Matrix& m, std::vector<int>* pivot_cols = nullptr) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int row = rank; row < rows; ++row) {
            if (m[row][col]) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int row = 0; row < rows; ++row) {
            if (row != rank && m[row][col]) {
                for (int j = col; j < cols; ++j) m[row][j] ^= m[rank][j];
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

int gf2_rank(Gf2Matrix m) { return gf2_eliminate(m); }

// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<uint8_t>> gf2_kernel(Gf2Matrix m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivots;
    const int rank = gf2_eliminate(m, &pivots);
    std::vector<uint8_t> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<uint8_t>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint8_t> v(cols, 0);
        v[free_col] = 1;
        // Back-substitute: pivot row i has its pivot in pivots[i].
        for (int i = 0; i < rank; ++i) {
            if (m[i][free_col]) v[pivots[i]] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// r x (n + m) combined relation matrix over GF(2).
Gf2Matrix combined_matrix(const HandleData& h) {
    Gf2Matrix m(h.r, std::vector<uint8_t>(h.n + h.m, 0));
    for (int k = 0; k < h.r; ++k) {
        for (int i = 0; i < h.n; ++i) m[k][i] = mod2(h.a[k][i]);
        for (int j = 0; j < h.m; ++j) m[k][h.n + j] = h.c[k][j] ? 1 : 0;
    }
    return m;
}

}  // namespace

void HandleData::validate() const {
    if (n < 0 || m < 0 || r < 0) throw std::invalid_argument("handle data: negative size");
    if (static_cast<int>(a.size()) != r || static_cast<int>(c.size()) != r)
        throw std::invalid_argument("handle data: relation count mismatch");
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("handle data: twist coefficient row has wrong length");
    }
    for (const auto& row : c) {
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("handle data: handle coefficient row has wrong length");
        for (uint8_t bit : row) {
            if (bit > 1) throw std::invalid_argument("handle data: handle coefficients must be bits");
        }
    }
}

FramingVector canonical(FramingVector v) {
    if (!v.y.empty() && v.y[0]) {
        for (auto& bit : v.y) bit ^= 1;
    }
    return v;
}

std::vector<uint8_t> obstruction(const HandleData& h, const FramingVector& v) {
    h.validate();
    if (static_cast<int>(v.x.size()) != h.n || static_cast<int>(v.y.size()) != h.n ||
        static_cast<int>(v.z.size()) != h.m)
        throw std::invalid_argument("framing vector does not match handle data shape");
    std::vector<uint8_t> u(h.r, 0);
    for (int k = 0; k < h.r; ++k) {
        uint8_t s = 0;
        for (int i = 0; i < h.n; ++i) s ^= static_cast<uint8_t>(mod2(h.a[k][i]) & mod2(v.x[i]));
        for (int j = 0; j < h.m; ++j) s ^= static_cast<uint8_t>(h.c[k][j] & v.z[j]);
        u[k] = s;
    }
    return u;
}

bool unobstructed(const HandleData& h, const FramingVector& v) {
    for (uint8_t u : obstruction(h, v)) {
        if (u) return false;
    }
    return true;
}

FramingGroup framing_group(const HandleData& h) {
    h.validate();
    FramingGroup g;
    g.infinite = h.n >= 1;
    g.free_rank = h.n;

    const Gf2Matrix combined = combined_matrix(h);
    const int rank_combined = gf2_rank(combined);
    if (rank_combined >= 62) throw std::overflow_error("relation rank too large for an index value");
    g.index = 1LL << rank_combined;

    Gf2Matrix cblock(h.r, std::vector<uint8_t>(h.m, 0));
    for (int k = 0; k < h.r; ++k) {
        for (int j = 0; j < h.m; ++j) cblock[k][j] = h.c[k][j] ? 1 : 0;
    }
    g.torsion2 = (h.n >= 1 ? h.n - 1 : 0) + (h.m - gf2_rank(cblock));

    // Doubled unit twists always pass (even coordinates vanish mod 2).
    for (int i = 0; i < h.n; ++i) {
        FramingVector v;
        v.x.assign(h.n, 0);
        v.x[i] = 2;
        v.y.assign(h.n, 0);
        v.z.assign(h.m, 0);
        g.generators.push_back(std::move(v));
    }
    // Mod-2 kernel vectors of the combined matrix, lifted to 0/1 twists.
    for (const auto& kv : gf2_kernel(combined)) {
        FramingVector v;
        v.x.assign(h.n, 0);
        v.y.assign(h.n, 0);
        v.z.assign(h.m, 0);
        for (int i = 0; i < h.n; ++i) v.x[i] = kv[i];
        for (int j = 0; j < h.m; ++j) v.z[j] = kv[h.n + j];
        g.generators.push_back(std::move(v));
    }
    // Independent sign flips: the class of y is insensitive to a global
    // flip, so flips of positions 2..n generate, each canonical already.
    for (int i = 1; i < h.n; ++i) {
        FramingVector v;
        v.x.assign(h.n, 0);
        v.y.assign(h.n, 0);
        v.y[i] = 1;
        v.z.assign(h.m, 0);
        g.generators.push_back(std::move(v));
    }
    return g;
}

HandleData stabilize(const HandleData& h) {
    h.validate();
    HandleData out = h;
    out.m = h.m + 1;
    out.r = h.r + 1;
    for (auto& row : out.c) row.push_back(0);
    out.a.push_back(std::vector<long long>(h.n, 0));
    std::vector<uint8_t> new_row(out.m, 0);
    new_row[out.m - 1] = 1;
    out.c.push_back(std::move(new_row));
    return out;
}

}  // namespace cw
