#include "hyp5/reference_data.hpp"

namespace hyp5 {

const std::array<Mat6, 5>& sigma5_generators() {
    static const std::array<Mat6, 5> g = {{
        Mat6{{{0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}},
        Mat6{{{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}},
        Mat6{{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}},
        Mat6{{{0, -1, -1, 0, 0, 1}, {-1, 0, -1, 0, 0, 1}, {-1, -1, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {-1, -1, -1, 0, 0, 2}}},
        Mat6{{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1}}},
    }};
    return g;
}

const Mat6& quotient_alpha() {
    static const Mat6 a{{{1, 0, 0, 1, 0, -1}, {0, 0, 0, 0, 1, 0}, {-1, 0, -1, 0, 0, 1}, {0, 1, 0, 0, 0, 0}, {0, 0, -1, -1, 0, 1}, {-1, 0, -1, -1, 0, 2}}};
    return a;
}

const Mat6& quotient_beta() {
    static const Mat6 b{{{0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, -1}, {0, 0, -1, 0, -1, 1}, {0, 0, 0, -1, -1, 1}, {0, 0, -1, -1, -1, 2}}};
    return b;
}

const std::array<NPairing, 16>& n_pairings() {
    static const std::array<NPairing, 16> p = {{
        {1, 13, Mat6{{{1, 0, -1, 0, 0, 1}, {0, 0, 0, 1, 0, 0}, {0, 0, -1, 0, -1, 1}, {1, 0, 0, 0, -1, 1}, {0, 1, 0, 0, 0, 0}, {1, 0, -1, 0, -1, 2}}}},
        {2, 18, Mat6{{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}}},
        {3, 8, Mat6{{{0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 1}, {0, 0, 1, 0, -1, 1}, {0, 0, 0, -1, -1, 1}, {0, 0, 1, -1, -1, 2}}}},
        {4, 6, Mat6{{{-1, 0, 0, 0, -1, 1}, {0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, -1, 1}, {-1, 0, 0, 1, 0, 1}, {-1, 0, 0, 1, -1, 2}}}},
        {5, 20, Mat6{{{0, -1, -1, 0, 0, 1}, {0, 0, 1, 1, 0, -1}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, -1, 0, -1, 0, 1}, {0, -1, -1, -1, 0, 2}}}},
        {7, 22, Mat6{{{0, -1, -1, 0, 0, 1}, {0, 0, 1, 1, 0, -1}, {1, 0, 0, 0, 0, 0}, {0, 0, -2, 0, -1, 2}, {0, -1, -2, -1, -2, 3}, {0, -1, -3, -1, -2, 4}}}},
        {9, 16, Mat6{{{-1, -2, 0, -1, -2, 3}, {0, -2, 0, 0, -1, 2}, {-1, -2, -1, 0, -2, 3}, {0, -1, 0, 0, -2, 2}, {0, -2, -1, -1, -2, 3}, {-1, -4, -1, -1, -4, 6}}}},
        {10, 19, Mat6{{{0, 0, 0, 0, 1, 0}, {1, 0, 0, 1, 0, -1}, {0, 1, 0, 1, 0, -1}, {0, 0, 1, 0, 0, 0}, {-1, -1, 0, 0, 0, 1}, {-1, -1, 0, -1, 0, 2}}}},
        {11, 25, Mat6{{{0, -1, 0, -1, 0, 1}, {0, 2, 2, 1, 1, -3}, {0, -1, 0, 0, -1, 1}, {1, 0, 0, 0, 0, 0}, {0, -2, -1, 0, 0, 2}, {0, -3, -2, -1, -1, 4}}}},
        {12, 29, Mat6{{{-2, -1, 0, -1, -2, 3}, {0, 0, 0, 1, 1, -1}, {0, -1, 0, 0, -1, 1}, {-1, 0, 0, 0, -2, 2}, {0, 0, 1, 0, 0, 0}, {-2, -1, 0, -1, -3, 4}}}},
        {14, 24, Mat6{{{0, 0, 0, 0, 1, 0}, {1, 0, 0, 1, 0, -1}, {-2, -1, -2, -1, 0, 3}, {-2, 0, -1, 0, 0, 2}, {-1, -1, 0, 0, 0, 1}, {-3, -1, -2, -1, 0, 4}}}},
        {15, 31, Mat6{{{-1, -2, 0, 0, 0, 2}, {2, 1, 0, 0, 0, -2}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {-2, -2, 0, 0, 0, 3}}}},
        {17, 30, Mat6{{{1, 0, 0, -1, 0, 1}, {0, 0, 0, 0, -1, 0}, {1, 0, -1, 0, 0, 1}, {0, -1, 0, 0, 0, 0}, {0, 0, -1, -1, 0, 1}, {1, 0, -1, -1, 0, 2}}}},
        {21, 23, Mat6{{{0, 0, -1, -1, 0, 1}, {0, -1, 1, 0, 0, -1}, {-1, 1, -1, -1, 1, 2}, {-1, 0, -1, 0, 0, 1}, {0, 0, -1, 0, 1, 1}, {-1, 1, -2, -1, 1, 3}}}},
        {26, 32, Mat6{{{-1, 2, -1, -2, 0, 3}, {0, -2, 0, 1, 0, -2}, {0, 2, -1, -2, -1, 3}, {-1, 2, 0, -2, -1, 3}, {0, 1, 0, -2, 0, 2}, {-1, 4, -1, -4, -1, 6}}}},
        {27, 28, Mat6{{{0, 1, -2, 0, 0, 2}, {-1, 0, 0, 0, 0, 0}, {0, 0, -1, -1, 0, 1}, {0, 0, -1, 0, -1, 1}, {0, 2, -2, -1, -1, 3}, {0, 2, -3, -1, -1, 4}}}},
    }};
    return p;
}

}  // namespace hyp5
