#pragma once

#include <cstddef>
#include <vector>

#include "qmae/errors.hpp"

namespace qmae {

/// Grayscale image, row-major doubles. Pixel values are nominally in [0,1];
/// intermediate images (e.g. with an unclamped mask token inserted) may
/// step outside that range.
struct Image {
    int h = 0;
    int w = 0;
    std::vector<double> pix;

    Image() = default;
    Image(int height, int width, double fill = 0.0)
        : h(height), w(width), pix(static_cast<std::size_t>(height) * width, fill) {}

    double& at(int r, int c) { return pix[static_cast<std::size_t>(r) * w + c]; }
    double at(int r, int c) const { return pix[static_cast<std::size_t>(r) * w + c]; }

    std::size_t size() const { return pix.size(); }

    bool same_shape(const Image& other) const { return h == other.h && w == other.w; }
};

} // namespace qmae
