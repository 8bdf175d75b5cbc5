#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyp5 {

using BigInt = boost::multiprecision::cpp_int;

struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Dense row-major int64 matrix.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    std::int64_t& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    bool operator==(const IntMatrix&) const = default;

    static IntMatrix identity(int n);
};

// Checked product; throws ArithmeticOverflow.
IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

// Triplet form; repeated (row, col) entries are summed.
struct SparseIntMatrix {
    struct Entry {
        int row, col;
        std::int64_t value;
    };
    int rows = 0, cols = 0;
    std::vector<Entry> entries;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c) {}
    void add(int r, int c, std::int64_t v) { entries.push_back({r, c, v}); }
    IntMatrix dense() const;
};

// Rank and the invariant factors larger than one.
struct SmithSummary {
    int rank = 0;
    std::vector<BigInt> torsion;  // ascending, each divides the next
};

SmithSummary smith_summary(const SparseIntMatrix& m);
SmithSummary smith_summary(const IntMatrix& m);

// All nonzero invariant factors d1 | d2 | ..., ascending.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

// U * M * V = D with U, V unimodular and D diagonal in Smith form.
struct SmithForm {
    IntMatrix U, D, V;
    int rank = 0;
};
SmithForm smith_form(const IntMatrix& m);

// Integer solution of M x = b, if any.
std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& m, const std::vector<std::int64_t>& b);

// Columns form a basis of the integer kernel {x : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Finitely generated abelian group Z^rank + sum Z/t.
struct AbelianGroup {
    int rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, ascending

    bool operator==(const AbelianGroup&) const = default;
    bool operator<(const AbelianGroup& o) const {
        return rank != o.rank ? rank < o.rank : torsion < o.torsion;
    }
    // (free rank, number of Z/2, number of Z/4) when all torsion is 2 or 4.
    std::optional<std::array<int, 3>> triple() const;
    std::string to_string() const;  // e.g. "Z^4+Z/2^7"
};

// Z^gens modulo the row space of `relations` (one relation per row).
AbelianGroup cokernel(const IntMatrix& relations);
AbelianGroup cokernel(const SparseIntMatrix& relations);

}  // namespace hyp5
