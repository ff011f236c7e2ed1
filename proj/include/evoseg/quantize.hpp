#pragma once

#include "evoseg/image.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace evoseg {

/// One non-empty axis-aligned bin of RGB space.
struct Cube {
    std::array<double, 3> mean_color{};  // weighted mean of member pixels
    std::int64_t weight = 0;             // member pixel count
    std::array<int, 3> bin_index{};
};

/// The quantized image: cubes in lexicographic bin order (the canonical
/// gene order) plus the pixel -> cube mapping. pixel_to_cube is empty for
/// cube sets assembled directly rather than from an image.
struct CubeSet {
    int bins_per_axis = 0;
    std::vector<Cube> cubes;
    std::vector<std::int32_t> pixel_to_cube;

    std::size_t size() const { return cubes.size(); }
};

/// Partitions [0,255]^3 into bins_per_axis^3 near-equal bins
/// (axis bin = channel * bins_per_axis / 256) and keeps the non-empty ones.
CubeSet quantize(const RasterImage& img, int bins_per_axis);

}  // namespace evoseg
