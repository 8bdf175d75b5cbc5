#include "hyp5/lorentz.hpp"

#include <sstream>
#include <unordered_set>

namespace hyp5 {

std::int64_t lorentz_inner(const Vec6& x, const Vec6& y) {
    std::int64_t s = 0;
    for (int i = 0; i < 5; ++i) s += x[i] * y[i];
    return s - x[5] * y[5];
}

Mat6 identity6() {
    Mat6 a{};
    for (int i = 0; i < 6; ++i) a[i][i] = 1;
    return a;
}

Mat6 mul(const Mat6& a, const Mat6& b) {
    Mat6 c{};
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 6; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Vec6 apply_to(const Mat6& a, const Vec6& x) {
    Vec6 y{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) y[i] += a[i][j] * x[j];
    return y;
}

Mat6 transpose(const Mat6& a) {
    Mat6 t{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) t[i][j] = a[j][i];
    return t;
}

Mat6 lorentz_inverse(const Mat6& a) {
    Mat6 t = transpose(a);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if ((i == 5) != (j == 5)) t[i][j] = -t[i][j];
    return t;
}

std::int64_t det(const Mat6& a) {
    // Bareiss fraction-free elimination; exact for integer input.
    std::array<std::array<__int128, 6>, 6> m{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m[i][j] = a[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < 5; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < 6 && m[p][k] == 0) ++p;
            if (p == 6) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < 6; ++i)
            for (int j = k + 1; j < 6; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * static_cast<std::int64_t>(m[5][5]);
}

bool is_lorentzian(const Mat6& a) {
    // A^T J A = J
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 6; ++k) s += (k == 5 ? -1 : 1) * a[k][i] * a[k][j];
            std::int64_t want = i != j ? 0 : (i == 5 ? -1 : 1);
            if (s != want) return false;
        }
    return true;
}

bool is_positive(const Mat6& a) {
    if (!is_lorentzian(a)) throw std::invalid_argument("is_positive: matrix is not Lorentzian");
    return a[5][5] >= 1;
}

bool is_congruence_two(const Mat6& a) {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (((a[i][j] - (i == j)) & 1) != 0) return false;
    return true;
}

Mat6 reflection_matrix(const Vec6& s) {
    if (lorentz_inner(s, s) != 1) throw std::invalid_argument("reflection_matrix: normal is not a unit vector");
    Vec6 js = s;
    js[5] = -js[5];
    Mat6 r = identity6();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i][j] -= 2 * s[i] * js[j];
    return r;
}

Mat6 k5_matrix(K5Element k) {
    Mat6 a = identity6();
    for (int i = 0; i < 5; ++i)
        if (k.mask >> i & 1) a[i][i] = -1;
    return a;
}

std::optional<K5Element> k5_from_matrix(const Mat6& a) {
    K5Element k;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i != j) {
                if (a[i][j] != 0) return std::nullopt;
            } else if (i == 5) {
                if (a[i][j] != 1) return std::nullopt;
            } else if (a[i][j] == -1) {
                k.mask |= std::uint8_t(1u << i);
            } else if (a[i][j] != 1) {
                return std::nullopt;
            }
        }
    return k;
}

Vec6 k5_apply(K5Element k, const Vec6& x) {
    Vec6 y = x;
    for (int i = 0; i < 5; ++i)
        if (k.mask >> i & 1) y[i] = -y[i];
    return y;
}

char k5_encode(K5Element k) {
    static constexpr char alphabet[] = "0123456789ABCDEFGHIJKLMNOPQRSTUV";
    return alphabet[k.mask & 31];
}

K5Element k5_decode(char c) {
    if (c >= '0' && c <= '9') return {std::uint8_t(c - '0')};
    if (c >= 'A' && c <= 'V') return {std::uint8_t(c - 'A' + 10)};
    throw std::invalid_argument(std::string("invalid digit '") + c + "'");
}

std::size_t Mat6Hash::operator()(const Mat6& a) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& row : a)
        for (auto x : row) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
}

std::vector<Mat6> generate_group(const std::vector<Mat6>& generators, std::size_t bound) {
    std::vector<Mat6> elems{identity6()};
    std::unordered_set<Mat6, Mat6Hash> seen(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : generators) {
            Mat6 h = mul(elems[i], g);
            if (seen.insert(h).second) {
                if (seen.size() > bound) throw GroupTooLarge("group closure exceeded bound");
                elems.push_back(h);
            }
        }
    }
    return elems;
}

std::string to_string(const Vec6& v) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < 6; ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const Mat6& a) {
    std::ostringstream os;
    for (int i = 0; i < 6; ++i) {
        os << (i ? "\n" : "");
        for (int j = 0; j < 6; ++j) os << (j ? " " : "") << a[i][j];
    }
    return os.str();
}

}  // namespace hyp5
