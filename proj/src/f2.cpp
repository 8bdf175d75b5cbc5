#include "hyp5/f2.hpp"

namespace hyp5::f2 {

long long solve(const std::vector<std::uint32_t>& cols, std::uint32_t target) {
    std::array<std::pair<std::uint32_t, std::uint64_t>, 32> piv{};
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::uint32_t v = cols[i];
        std::uint64_t combo = 1ull << i;
        while (v) {
            int b = 31 - __builtin_clz(v);
            if (!piv[b].first) {
                piv[b] = {v, combo};
                break;
            }
            v ^= piv[b].first;
            combo ^= piv[b].second;
        }
    }
    std::uint64_t x = 0;
    while (target) {
        int b = 31 - __builtin_clz(target);
        if (!piv[b].first) return -1;
        target ^= piv[b].first;
        x ^= piv[b].second;
    }
    return static_cast<long long>(x);
}

std::vector<std::uint32_t> kernel(const std::vector<std::uint32_t>& cols) {
    std::array<std::pair<std::uint32_t, std::uint64_t>, 32> piv{};
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::uint32_t v = cols[i];
        std::uint64_t combo = 1ull << i;
        while (v) {
            int b = 31 - __builtin_clz(v);
            if (!piv[b].first) {
                piv[b] = {v, combo};
                break;
            }
            v ^= piv[b].first;
            combo ^= piv[b].second;
        }
        if (!v) out.push_back(static_cast<std::uint32_t>(combo));
    }
    return out;
}

std::vector<std::uint32_t> inverse(const std::vector<std::uint32_t>& cols, int n) {
    std::vector<std::uint32_t> inv(n);
    for (int j = 0; j < n; ++j) {
        long long x = solve(cols, 1u << j);
        if (x < 0) return {};
        inv[j] = static_cast<std::uint32_t>(x);
    }
    return inv;
}

}  // namespace hyp5::f2
