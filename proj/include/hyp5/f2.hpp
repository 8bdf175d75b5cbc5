#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hyp5::f2 {

// Vectors of F_2^n (n <= 32) are bitmasks.

// Reduced row-echelon basis with distinct leading bits.
struct Basis {
    std::array<std::uint32_t, 32> by_lead{};  // by_lead[b] has highest bit b, or 0
    int rank = 0;

    // Returns true if v was independent of the current span.
    bool insert(std::uint32_t v) {
        v = reduce(v);
        if (v == 0) return false;
        by_lead[31 - __builtin_clz(v)] = v;
        ++rank;
        return true;
    }
    // Canonical representative of v modulo the span.
    std::uint32_t reduce(std::uint32_t v) const {
        for (int b = 31; b >= 0 && v; --b)
            if ((v >> b & 1) && by_lead[b]) v ^= by_lead[b];
        return v;
    }
    bool contains(std::uint32_t v) const { return reduce(v) == 0; }
};

inline int rank(const std::uint32_t* v, int n) {
    Basis b;
    for (int i = 0; i < n; ++i) b.insert(v[i]);
    return b.rank;
}

inline int rank(const std::vector<std::uint32_t>& v) { return rank(v.data(), static_cast<int>(v.size())); }

// Solves sum_i x_i cols[i] = target; returns x as a bitmask or -1.
long long solve(const std::vector<std::uint32_t>& cols, std::uint32_t target);

// Basis of {x : sum_i x_i cols[i] = 0} as bitmasks over the column index.
std::vector<std::uint32_t> kernel(const std::vector<std::uint32_t>& cols);

// Inverse of an invertible n x n matrix given by its columns; empty if singular.
std::vector<std::uint32_t> inverse(const std::vector<std::uint32_t>& cols, int n);

// Matrix (by columns) times vector.
inline std::uint32_t apply_cols(const std::vector<std::uint32_t>& cols, std::uint32_t x) {
    std::uint32_t y = 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (x >> i & 1) y ^= cols[i];
    return y;
}

}  // namespace hyp5::f2
