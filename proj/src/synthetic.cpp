// SPDX-License-Identifier: Apache-2.0

#include "lfs/synthetic.hpp"

#include <cmath>
#include <random>

namespace lfs {

namespace {

double floor_mod(double x, double p) {
    double m = x - p * std::floor(x / p);
    return (m >= p) ? m - p : m;
}

// Per-channel texture value on the integer lattice, wrapped by the period.
double lattice_value(const TextureSpec& t, long i, long j, int c,
                     const std::vector<std::uint8_t>& noise) {
    const int p = t.period;
    long ii = ((i % p) + p) % p;
    long jj = ((j % p) + p) % p;
    switch (t.kind) {
    case TextureSpec::Kind::Solid:
        return t.color_a[c];
    case TextureSpec::Kind::Stripes:
        return (ii < p / 2) ? t.color_a[c] : t.color_b[c];
    case TextureSpec::Kind::Checker: {
        const int hp = std::max(1, p / 2);
        return (((ii / hp) + (jj / hp)) % 2 == 0) ? t.color_a[c] : t.color_b[c];
    }
    case TextureSpec::Kind::SineMix: {
        const double phase = 2.1 * c;
        const double s = std::sin(2.0 * M_PI * ii / p + phase) *
                         std::cos(2.0 * M_PI * jj / p + 0.7 * c);
        return 127.5 + 110.0 * s;
    }
    case TextureSpec::Kind::Noise:
        return noise[(static_cast<std::size_t>(ii) * p + jj) * 3 + c];
    }
    return 0.0;
}

struct PreparedLayer {
    const LayerSpec* spec;
    std::vector<std::uint8_t> noise;  // Noise lattice, else empty

    bool covers(double lx, double ly) const {
        const RegionSpec& r = spec->region;
        switch (r.kind) {
        case RegionSpec::Kind::Full:
            return true;
        case RegionSpec::Kind::Rect:
            return lx >= r.x && lx < r.x + r.w && ly >= r.y && ly < r.y + r.h;
        case RegionSpec::Kind::Disc: {
            const double dx = lx - r.x, dy = ly - r.y;
            return dx * dx + dy * dy <= r.radius * r.radius;
        }
        }
        return false;
    }

    // Bilinear between lattice values; exact at integer coordinates.
    double sample(double lx, double ly, int c) const {
        const TextureSpec& t = spec->texture;
        const double x = floor_mod(lx, t.period);
        const double y = floor_mod(ly, t.period);
        const long x0 = static_cast<long>(std::floor(x));
        const long y0 = static_cast<long>(std::floor(y));
        const double fx = x - x0, fy = y - y0;
        if (fx == 0.0 && fy == 0.0)
            return lattice_value(t, x0, y0, c, noise);
        const double v00 = lattice_value(t, x0, y0, c, noise);
        const double v10 = lattice_value(t, x0 + 1, y0, c, noise);
        const double v01 = lattice_value(t, x0, y0 + 1, c, noise);
        const double v11 = lattice_value(t, x0 + 1, y0 + 1, c, noise);
        return v00 * (1 - fx) * (1 - fy) + v10 * fx * (1 - fy) +
               v01 * (1 - fx) * fy + v11 * fx * fy;
    }
};

std::vector<PreparedLayer> prepare(const SyntheticSceneSpec& spec) {
    std::vector<PreparedLayer> out;
    out.reserve(spec.layers.size());
    for (const LayerSpec& l : spec.layers) {
        PreparedLayer p{&l, {}};
        if (l.texture.kind == TextureSpec::Kind::Noise) {
            const int per = l.texture.period;
            std::mt19937 rng(l.texture.seed);
            std::uniform_int_distribution<int> dist(0, 255);
            p.noise.resize(static_cast<std::size_t>(per) * per * 3);
            for (auto& s : p.noise)
                s = static_cast<std::uint8_t>(dist(rng));
        }
        out.push_back(std::move(p));
    }
    return out;
}

ViewImage render(const std::vector<PreparedLayer>& layers,
                 const SyntheticSceneSpec& spec, double du, double dv,
                 int width, int height) {
    ViewImage img(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const PreparedLayer* top = nullptr;
            double lx = 0, ly = 0;
            // front-most covering layer wins (layers are back-to-front)
            for (const PreparedLayer& l : layers) {
                const double cx = x - l.spec->disparity * dv;
                const double cy = y - l.spec->disparity * du;
                if (l.covers(cx, cy)) {
                    top = &l;
                    lx = cx;
                    ly = cy;
                }
            }
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) =
                    top ? round_to_u8(top->sample(lx, ly, c)) : spec.background[c];
        }
    }
    return img;
}

} // namespace

ViewImage render_synthetic_view(const SyntheticSceneSpec& spec, double du,
                                double dv, int width, int height) {
    auto layers = prepare(spec);
    return render(layers, spec, du, dv, width, height);
}

LightField generate_synthetic_lf(const SyntheticSceneSpec& spec, int rows,
                                 int cols, int width, int height) {
    const double cu = (rows - 1) / 2.0;
    const double cv = (cols - 1) / 2.0;
    const double max_off = std::max(cu, cv);
    for (const LayerSpec& l : spec.layers)
        if (std::abs(l.disparity) * max_off >= std::min(width, height))
            throw Error("generate_synthetic_lf: disparity too large for image extent");

    auto layers = prepare(spec);
    LightField lf(rows, cols);
    for (int u = 0; u < rows; ++u)
        for (int v = 0; v < cols; ++v)
            lf.set_view({u, v}, render(layers, spec, u - cu, v - cv, width, height));
    return lf;
}

} // namespace lfs
