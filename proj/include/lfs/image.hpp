// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfs {

/// Error type for all domain-level failures (bad indices, missing views,
/// malformed files, interpolator failures).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Angular position on the view grid: u = row, v = column.
struct ViewIndex {
    int u = 0;
    int v = 0;

    friend bool operator==(const ViewIndex&, const ViewIndex&) = default;
    friend auto operator<=>(const ViewIndex&, const ViewIndex&) = default;
};

/// One view of the light field: interleaved 8-bit RGB, row-major.
class ViewImage {
public:
    ViewImage() = default;
    ViewImage(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height),
          samples_(static_cast<std::size_t>(width) * height * 3, fill) {
        if (width <= 0 || height <= 0)
            throw Error("ViewImage: dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t& at(int x, int y, int c) {
        return samples_[idx(x, y, c)];
    }
    std::uint8_t at(int x, int y, int c) const {
        return samples_[idx(x, y, c)];
    }

    const std::vector<std::uint8_t>& samples() const { return samples_; }
    std::vector<std::uint8_t>& samples() { return samples_; }

    bool same_size(const ViewImage& o) const {
        return width_ == o.width_ && height_ == o.height_;
    }

    /// Spatial transpose (swaps x and y).
    ViewImage transposed() const {
        ViewImage t(height_, width_);
        for (int y = 0; y < height_; ++y)
            for (int x = 0; x < width_; ++x)
                for (int c = 0; c < 3; ++c)
                    t.at(y, x, c) = at(x, y, c);
        return t;
    }

    /// Center crop to (w, h).
    ViewImage center_crop(int w, int h) const {
        if (w <= 0 || h <= 0 || w > width_ || h > height_)
            throw Error("center_crop: target exceeds native resolution");
        const int x0 = (width_ - w) / 2;
        const int y0 = (height_ - h) / 2;
        ViewImage out(w, h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                for (int c = 0; c < 3; ++c)
                    out.at(x, y, c) = at(x0 + x, y0 + y, c);
        return out;
    }

    friend bool operator==(const ViewImage& a, const ViewImage& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ &&
               a.samples_ == b.samples_;
    }

private:
    std::size_t idx(int x, int y, int c) const {
        return (static_cast<std::size_t>(y) * width_ + x) * 3 + c;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> samples_;
};

/// Rounds half away from zero and clamps to [0, 255]. The single rounding
/// rule used by every interpolation path.
inline std::uint8_t round_to_u8(double v) {
    double r = (v >= 0.0) ? std::floor(v + 0.5) : std::ceil(v - 0.5);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

} // namespace lfs
