#pragma once

// Reference energies for V1 = 2 V2 = V3 = V4 = 4, M = 1.

#include <array>
#include <string_view>

namespace ref {

inline constexpr std::array<double, 4> deltas = {0.05, 0.10, 0.15, 0.20};
inline constexpr std::array<std::string_view, 8> labels = {"1s", "2s", "2p", "3p",
                                                           "3d", "4p", "4d", "4f"};
inline constexpr double table1[4][8] = {
    {-0.99649604, -0.99099814, -0.98794323, -0.97940763, -0.97382843, -0.96814486, -0.96204162,
     -0.95403227},
    {-0.98722148, -0.96718290, -0.95527801, -0.92347287, -0.90142687, -0.88075546, -0.85604396,
     -0.82343121},
    {-0.97386879, -0.93295875, -0.90640172, -0.83931973, -0.78898097, -0.74667285, -0.68788398,
     -0.60890610},
    {-0.95804186, -0.89278636, -0.84524937, -0.73363358, -0.64058725, -0.57365805, -0.45761787,
     -0.29378707},
};

}  // namespace ref
