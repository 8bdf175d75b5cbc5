#include <numeric>
#include <random>

#include "doctest.h"
#include "hyp5/smith.hpp"

using namespace hyp5;

namespace {

// Determinantal divisors: d_k = gcd of all k x k minors; factors are d_k / d_{k-1}.
BigInt minor_det(const IntMatrix& m, const std::vector<int>& r, const std::vector<int>& c) {
    const int n = static_cast<int>(r.size());
    if (n == 0) return 1;
    BigInt sum = 0;
    std::vector<int> rest(r.begin() + 1, r.end());
    for (int j = 0; j < n; ++j) {
        std::vector<int> cc;
        for (int k = 0; k < n; ++k)
            if (k != j) cc.push_back(c[k]);
        const BigInt term = BigInt(m(r[0], c[j])) * minor_det(m, rest, cc);
        sum += (j % 2 ? -term : term);
    }
    return sum;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<BigInt> factors_by_minors(const IntMatrix& m) {
    std::vector<BigInt> out;
    BigInt prev = 1;
    for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(m.rows, k, 0, cur, rs);
        subsets(m.cols, k, 0, cur, cs);
        BigInt g = 0;
        for (auto& r : rs)
            for (auto& c : cs) g = boost::multiprecision::gcd(g, BigInt(abs(minor_det(m, r, c))));
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace

TEST_CASE("smith: small cases") {
    IntMatrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 4;
    CHECK(invariant_factors(d) == std::vector<BigInt>{2, 4});
    CHECK(invariant_factors(IntMatrix(3, 4)).empty());
    IntMatrix e(2, 2);
    e(0, 0) = 2;
    e(1, 1) = 3;
    CHECK(invariant_factors(e) == std::vector<BigInt>{1, 6});
}

TEST_CASE("smith: random matrices agree with determinantal divisors") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> val(-5, 5), dim(1, 6), sparse(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& x : m.a) x = sparse(rng) ? val(rng) : 0;
        CAPTURE(trial);
        CHECK(invariant_factors(m) == factors_by_minors(m));
        const auto f = smith_form(m);
        CHECK(f.U * m * f.V == f.D);
        for (int i = 0; i + 1 < f.rank; ++i) CHECK(f.D(i + 1, i + 1) % f.D(i, i) == 0);
    }
}

TEST_CASE("smith: overflow falls back to big integers") {
    IntMatrix m(3, 3);
    const std::int64_t big = std::int64_t(1) << 40;
    m(0, 0) = big;
    m(0, 1) = big + 1;
    m(1, 0) = big - 1;
    m(1, 1) = big;
    m(2, 2) = big * 3;
    CHECK(invariant_factors(m) == factors_by_minors(m));
}

TEST_CASE("integer solving and kernels") {
    IntMatrix a(2, 3);
    a.a = {2, 4, 6, 1, 3, 5};
    auto x = solve_integer(a, {4, 3});
    REQUIRE(x);
    CHECK(2 * (*x)[0] + 4 * (*x)[1] + 6 * (*x)[2] == 4);
    CHECK((*x)[0] + 3 * (*x)[1] + 5 * (*x)[2] == 3);
    CHECK_FALSE(solve_integer(a, {1, 0}));
    const auto k = integer_kernel(a);
    CHECK(k.cols == 1);
    CHECK(a * k == IntMatrix(2, 1));
}

TEST_CASE("abelian group formatting") {
    IntMatrix r(3, 4);
    r(0, 0) = 2;
    r(1, 1) = 2;
    r(2, 2) = 4;
    const auto g = cokernel(r);
    CHECK(g.rank == 1);
    CHECK(g.triple() == std::array<int, 3>{1, 2, 1});
    CHECK(g.to_string() == "Z+Z/2^2+Z/4");
    CHECK(AbelianGroup{}.to_string() == "0");
}
