#include "hyp5/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace hyp5 {

namespace {

// Row-echelon insertion with gcd-normalised integer rows.
struct Echelon {
    std::vector<Vec6> rows;
    std::vector<int> lead;

    bool insert(Vec6 v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = lead[r];
            if (v[c] == 0) continue;
            std::int64_t a = rows[r][c], b = v[c];
            for (int j = 0; j < 6; ++j) v[j] = v[j] * a - rows[r][j] * b;
            std::int64_t g = 0;
            for (auto x : v) g = std::gcd(g, x);
            if (g > 1)
                for (auto& x : v) x /= g;
        }
        for (int c = 0; c < 6; ++c)
            if (v[c] != 0) {
                rows.push_back(v);
                lead.push_back(c);
                return true;
            }
        return false;
    }
};

}  // namespace

int rank_of(const std::vector<Vec6>& vs) {
    Echelon e;
    int r = 0;
    for (const auto& v : vs)
        if (e.insert(v) && ++r == 6) break;
    return r;
}

std::vector<int> independent_subset(const std::vector<Vec6>& vs) {
    Echelon e;
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
        if (e.insert(vs[i])) out.push_back(i);
    return out;
}

std::int64_t small_det(const std::vector<std::int64_t>& in, int n) {
    if (n == 0) return 1;
    std::vector<__int128> m(in.begin(), in.end());
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k] == 0) {
            int p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        prev = m[k * n + k];
    }
    return sign * static_cast<std::int64_t>(m[n * n - 1]);
}

std::vector<int> pivot_coordinates(const std::vector<Vec6>& basis) {
    const int n = static_cast<int>(basis.size());
    std::vector<int> pick;
    // Enumerate coordinate subsets of size n in lexicographic order.
    for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) != n) continue;
        pick.clear();
        for (int c = 0; c < 6; ++c)
            if (mask >> c & 1) pick.push_back(c);
        std::vector<std::int64_t> m;
        for (const auto& b : basis)
            for (int c : pick) m.push_back(b[c]);
        if (small_det(m, n) != 0) return pick;
    }
    throw std::logic_error("pivot_coordinates: basis is degenerate");
}

}  // namespace hyp5
