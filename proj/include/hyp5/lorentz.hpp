#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyp5 {

using Vec6 = std::array<std::int64_t, 6>;
using Mat6 = std::array<std::array<std::int64_t, 6>, 6>;

// x o y = x1 y1 + ... + x5 y5 - x6 y6
std::int64_t lorentz_inner(const Vec6& x, const Vec6& y);

Mat6 identity6();
Mat6 mul(const Mat6& a, const Mat6& b);
Vec6 apply_to(const Mat6& a, const Vec6& x);
Mat6 transpose(const Mat6& a);
// For a Lorentzian A the inverse is J A^T J.
Mat6 lorentz_inverse(const Mat6& a);
std::int64_t det(const Mat6& a);

bool is_lorentzian(const Mat6& a);
// Throws std::invalid_argument if a is not Lorentzian.
bool is_positive(const Mat6& a);
bool is_congruence_two(const Mat6& a);

// R = I - 2 s (Js)^T, requires s o s = 1.
Mat6 reflection_matrix(const Vec6& s);

// Diagonal sign matrix diag(+-1,...,+-1,1); bit i-1 set iff entry i is -1.
struct K5Element {
    std::uint8_t mask = 0;
    friend bool operator==(K5Element, K5Element) = default;
    K5Element operator*(K5Element o) const { return {std::uint8_t(mask ^ o.mask)}; }
};

Mat6 k5_matrix(K5Element k);
std::optional<K5Element> k5_from_matrix(const Mat6& a);
Vec6 k5_apply(K5Element k, const Vec6& x);

char k5_encode(K5Element k);
// Throws std::invalid_argument outside 0-9A-V.
K5Element k5_decode(char c);

struct GroupTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Breadth-first closure; throws GroupTooLarge past `bound` elements.
std::vector<Mat6> generate_group(const std::vector<Mat6>& generators, std::size_t bound);

struct Mat6Hash {
    std::size_t operator()(const Mat6& a) const;
};

std::string to_string(const Vec6& v);
std::string to_string(const Mat6& a);

}  // namespace hyp5
