#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace evoseg {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    bool operator==(const Rgb&) const = default;
};

/// Row-major 8-bit RGB raster.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;
    bool operator==(const RasterImage&) const = default;
};

/// Decodes a PPM file, magic "P3" (ASCII) or "P6" (binary), maxval 255.
/// Malformed input raises std::runtime_error naming the byte offset.
RasterImage read_ppm(std::span<const std::uint8_t> bytes);

/// Encodes to P6 (binary) or P3 (ASCII). read_ppm(write_ppm(img)) == img.
std::vector<std::uint8_t> write_ppm(const RasterImage& img, bool binary);

RasterImage read_ppm_file(const std::string& path);
void write_ppm_file(const RasterImage& img, const std::string& path, bool binary = true);

/// Deterministic test image: k_colors vertical stripes of distinct base
/// colors with per-pixel uniform noise in [-noise_amplitude, +noise_amplitude],
/// clamped to [0,255]. k_colors in [2,8], noise_amplitude in [0,64].
RasterImage synth_image(int width, int height, int k_colors, int noise_amplitude,
                        std::uint64_t seed);

}  // namespace evoseg
