#include "hyp5/smith.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace hyp5 {

namespace {

// Arithmetic that traps int64 overflow and is plain for BigInt.
inline std::int64_t cmul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in Smith reduction");
    return r;
}
inline std::int64_t cadd(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in Smith reduction");
    return r;
}
inline std::int64_t csub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in Smith reduction");
    return r;
}
inline std::int64_t cabs(std::int64_t a) { return a < 0 ? csub(0, a) : a; }
inline BigInt cmul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt cadd(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt csub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt cabs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

template <class I>
struct Dense {
    int r = 0, c = 0;
    std::vector<I> a;
    Dense(int rows, int cols) : r(rows), c(cols), a(static_cast<std::size_t>(rows) * cols, I(0)) {}
    I& at(int i, int j) { return a[static_cast<std::size_t>(i) * c + j]; }

    void swap_rows(int i, int j) {
        if (i != j)
            for (int k = 0; k < c; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(int i, int j) {
        if (i != j)
            for (int k = 0; k < r; ++k) std::swap(at(k, i), at(k, j));
    }
    // row i += q * row j
    void add_row(int i, int j, const I& q) {
        for (int k = 0; k < c; ++k)
            if (at(j, k) != 0) at(i, k) = cadd(at(i, k), cmul(q, at(j, k)));
    }
    void add_col(int i, int j, const I& q) {
        for (int k = 0; k < r; ++k)
            if (at(k, j) != 0) at(k, i) = cadd(at(k, i), cmul(q, at(k, j)));
    }
};

template <class I>
Dense<I> identity(int n) {
    Dense<I> m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = I(1);
    return m;
}

// In-place Smith reduction; optional U (row operations) and V (column operations).
template <class I>
int smith_dense(Dense<I>& m, Dense<I>* U, Dense<I>* V) {
    auto swap_rows = [&](int i, int j) {
        m.swap_rows(i, j);
        if (U) U->swap_rows(i, j);
    };
    auto swap_cols = [&](int i, int j) {
        m.swap_cols(i, j);
        if (V) V->swap_cols(i, j);
    };
    auto add_row = [&](int i, int j, const I& q) {
        m.add_row(i, j, q);
        if (U) U->add_row(i, j, q);
    };
    auto add_col = [&](int i, int j, const I& q) {
        m.add_col(i, j, q);
        if (V) V->add_col(i, j, q);
    };

    const int n = std::min(m.r, m.c);
    int t = 0;
    for (; t < n; ++t) {
        int bi = -1, bj = -1;
        I best(0);
        for (int i = t; i < m.r; ++i)
            for (int j = t; j < m.c; ++j)
                if (m.at(i, j) != 0 && (bi < 0 || cabs(m.at(i, j)) < best)) {
                    best = cabs(m.at(i, j));
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        swap_rows(t, bi);
        swap_cols(t, bj);
        for (;;) {
            const I p = m.at(t, t);
            for (int i = t + 1; i < m.r; ++i)
                if (m.at(i, t) != 0) add_row(i, t, I(-(m.at(i, t) / p)));
            for (int j = t + 1; j < m.c; ++j)
                if (m.at(t, j) != 0) add_col(j, t, I(-(m.at(t, j) / p)));
            // Remainders are strictly smaller than the pivot; move the smallest in.
            int ri = -1, rj = -1;
            I small(0);
            auto consider = [&](const I& v, int i, int j) {
                if (v != 0 && ((ri < 0 && rj < 0) || cabs(v) < small)) {
                    small = cabs(v);
                    ri = i;
                    rj = j;
                }
            };
            for (int i = t + 1; i < m.r; ++i) consider(m.at(i, t), i, -1);
            for (int j = t + 1; j < m.c; ++j) consider(m.at(t, j), -1, j);
            if (ri >= 0) {
                swap_rows(t, ri);
                continue;
            }
            if (rj >= 0) {
                swap_cols(t, rj);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < m.r && bad < 0; ++i)
                for (int j = t + 1; j < m.c; ++j)
                    if (m.at(i, j) % p != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            add_row(t, bad, I(1));
        }
        if (m.at(t, t) < 0) {
            for (int k = 0; k < m.c; ++k) m.at(t, k) = -m.at(t, k);
            if (U)
                for (int k = 0; k < U->c; ++k) U->at(t, k) = -U->at(t, k);
        }
    }
    return t;
}

// Sparse elimination on unit pivots, then dense Smith reduction of what is left.
template <class I>
SmithSummary summary_sparse(const SparseIntMatrix& sm) {
    using Row = std::vector<std::pair<int, I>>;
    std::vector<Row> rows(sm.rows);
    {
        std::vector<std::map<int, I>> acc(sm.rows);
        for (const auto& e : sm.entries) {
            if (e.row < 0 || e.row >= sm.rows || e.col < 0 || e.col >= sm.cols)
                throw std::out_of_range("sparse matrix entry out of range");
            acc[e.row][e.col] = cadd(acc[e.row][e.col], I(e.value));
        }
        for (int r = 0; r < sm.rows; ++r)
            for (auto& [c, v] : acc[r])
                if (v != 0) rows[r].emplace_back(c, v);
    }
    std::vector<std::vector<int>> col_rows(sm.cols);
    for (int r = 0; r < sm.rows; ++r)
        for (auto& e : rows[r]) col_rows[e.first].push_back(r);
    std::vector<char> row_alive(sm.rows, 1), col_alive(sm.cols, 1);
    std::set<std::pair<std::size_t, int>> queue;
    for (int r = 0; r < sm.rows; ++r)
        if (!rows[r].empty()) queue.insert({rows[r].size(), r});

    auto value_at = [&](int r, int c) -> const I* {
        auto it = std::lower_bound(rows[r].begin(), rows[r].end(), c,
                                   [](const std::pair<int, I>& e, int col) { return e.first < col; });
        return it != rows[r].end() && it->first == c ? &it->second : nullptr;
    };

    int rank = 0;
    Row merged;
    while (!queue.empty()) {
        const int r = queue.begin()->second;
        queue.erase(queue.begin());
        int pc = -1;
        std::size_t pcount = 0;
        for (auto& [c, v] : rows[r])
            if ((v == 1 || v == -1) && (pc < 0 || col_rows[c].size() < pcount)) pc = c, pcount = col_rows[c].size();
        if (pc < 0) continue;
        const I p = *value_at(r, pc);
        for (int r2 : col_rows[pc]) {
            if (r2 == r || !row_alive[r2]) continue;
            const I* ap = value_at(r2, pc);
            if (!ap) continue;
            const I q = cmul(*ap, p);
            queue.erase({rows[r2].size(), r2});
            merged.clear();
            auto a = rows[r2].begin(), ae = rows[r2].end();
            auto b = rows[r].begin(), be = rows[r].end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    merged.emplace_back(b->first, I(-cmul(q, b->second)));
                    col_rows[b->first].push_back(r2);
                    ++b;
                } else {
                    I v = csub(a->second, cmul(q, b->second));
                    if (v != 0) merged.emplace_back(a->first, std::move(v));
                    ++a, ++b;
                }
            }
            rows[r2].swap(merged);
            if (!rows[r2].empty()) queue.insert({rows[r2].size(), r2});
        }
        row_alive[r] = 0;
        col_alive[pc] = 0;
        col_rows[pc].clear();
        ++rank;
    }

    std::vector<int> rmap, cmap(sm.cols, -1);
    int nc = 0;
    for (int c = 0; c < sm.cols; ++c)
        if (col_alive[c]) cmap[c] = nc++;
    for (int r = 0; r < sm.rows; ++r)
        if (row_alive[r] && !rows[r].empty()) rmap.push_back(r);
    Dense<I> d(static_cast<int>(rmap.size()), nc);
    for (int i = 0; i < d.r; ++i)
        for (auto& [c, v] : rows[rmap[i]]) d.at(i, cmap[c]) = v;
    const int dr = smith_dense<I>(d, nullptr, nullptr);
    SmithSummary s;
    s.rank = rank + dr;
    for (int i = 0; i < dr; ++i)
        if (d.at(i, i) != 1) s.torsion.push_back(BigInt(d.at(i, i)));
    return s;
}

SparseIntMatrix to_sparse(const IntMatrix& m) {
    SparseIntMatrix s(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) s.add(i, j, m(i, j));
    return s;
}

IntMatrix to_int(const Dense<std::int64_t>& d) {
    IntMatrix m(d.r, d.c);
    m.a = d.a;
    return m;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k)
            if (x(i, k) != 0)
                for (int j = 0; j < y.cols; ++j) z(i, j) = cadd(z(i, j), cmul(x(i, k), y(k, j)));
    return z;
}

IntMatrix SparseIntMatrix::dense() const {
    IntMatrix m(rows, cols);
    for (const auto& e : entries) m(e.row, e.col) = cadd(m(e.row, e.col), e.value);
    return m;
}

SmithSummary smith_summary(const SparseIntMatrix& m) {
    try {
        return summary_sparse<std::int64_t>(m);
    } catch (const ArithmeticOverflow&) {
        return summary_sparse<BigInt>(m);
    }
}

SmithSummary smith_summary(const IntMatrix& m) { return smith_summary(to_sparse(m)); }

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
    const auto s = smith_summary(m);
    std::vector<BigInt> f(s.rank - s.torsion.size(), BigInt(1));
    f.insert(f.end(), s.torsion.begin(), s.torsion.end());
    return f;
}

SmithForm smith_form(const IntMatrix& m) {
    Dense<std::int64_t> d(m.rows, m.cols);
    d.a = m.a;
    auto U = identity<std::int64_t>(m.rows);
    auto V = identity<std::int64_t>(m.cols);
    SmithForm f;
    f.rank = smith_dense<std::int64_t>(d, &U, &V);
    f.U = to_int(U);
    f.D = to_int(d);
    f.V = to_int(V);
    return f;
}

std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& m, const std::vector<std::int64_t>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve_integer: shape mismatch");
    const auto f = smith_form(m);
    IntMatrix bc(m.rows, 1);
    for (int i = 0; i < m.rows; ++i) bc(i, 0) = b[i];
    const IntMatrix c = f.U * bc;
    IntMatrix y(m.cols, 1);
    for (int i = 0; i < m.rows; ++i) {
        if (i < f.rank) {
            if (c(i, 0) % f.D(i, i) != 0) return std::nullopt;
            y(i, 0) = c(i, 0) / f.D(i, i);
        } else if (c(i, 0) != 0) {
            return std::nullopt;
        }
    }
    const IntMatrix x = f.V * y;
    return x.a;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const auto f = smith_form(m);
    IntMatrix k(m.cols, m.cols - f.rank);
    for (int i = 0; i < m.cols; ++i)
        for (int j = f.rank; j < m.cols; ++j) k(i, j - f.rank) = f.V(i, j);
    return k;
}

std::optional<std::array<int, 3>> AbelianGroup::triple() const {
    std::array<int, 3> t{rank, 0, 0};
    for (const auto& x : torsion) {
        if (x == 2)
            ++t[1];
        else if (x == 4)
            ++t[2];
        else
            return std::nullopt;
    }
    return t;
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (rank > 0) parts.push_back(rank == 1 ? "Z" : "Z^" + std::to_string(rank));
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        std::string s = "Z/" + torsion[i].str();
        if (j - i > 1) s += "^" + std::to_string(j - i);
        parts.push_back(s);
        i = j;
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

AbelianGroup cokernel(const SparseIntMatrix& relations) {
    const auto s = smith_summary(relations);
    return {relations.cols - s.rank, s.torsion};
}

AbelianGroup cokernel(const IntMatrix& relations) { return cokernel(to_sparse(relations)); }

}  // namespace hyp5
