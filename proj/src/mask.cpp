// SPDX-License-Identifier: Apache-2.0

#include "lfs/mask.hpp"

namespace lfs {

int ViewMask::count(ViewRole r) const {
    int n = 0;
    for (ViewRole x : roles_)
        if (x == r) ++n;
    return n;
}

std::vector<ViewIndex> ViewMask::positions(ViewRole r) const {
    std::vector<ViewIndex> out;
    for (int u = 0; u < rows_; ++u)
        for (int v = 0; v < cols_; ++v)
            if (role({u, v}) == r) out.push_back({u, v});
    return out;
}

ViewMask ViewMask::transposed() const {
    ViewMask t(cols_, rows_);
    for (int u = 0; u < rows_; ++u)
        for (int v = 0; v < cols_; ++v)
            t.set_role({v, u}, role({u, v}));
    return t;
}

ViewMask generate_pattern(PatternKind kind, int rows, int cols) {
    using Tag = PatternKind::Tag;
    switch (kind.tag) {
    case Tag::RowWise:
        if (rows % 2 == 0)
            throw Error("generate_pattern: row-wise needs an odd row count");
        break;
    case Tag::ColumnWise:
        if (cols % 2 == 0)
            throw Error("generate_pattern: column-wise needs an odd column count");
        break;
    case Tag::Checkerboard:
        if (rows % 2 == 0 || cols % 2 == 0)
            throw Error("generate_pattern: checkerboard needs odd rows and columns");
        break;
    case Tag::GridLevel: {
        if (kind.level < 1 || kind.level > 3)
            throw Error("generate_pattern: grid level must be 1, 2 or 3");
        const int s = 1 << kind.level;
        if ((rows - 1) % s != 0 || (cols - 1) % s != 0)
            throw Error("generate_pattern: grid dims incompatible with level " +
                        std::to_string(kind.level));
        break;
    }
    }

    ViewMask mask(rows, cols, ViewRole::Output);
    const int s = (kind.tag == Tag::GridLevel) ? (1 << kind.level) : 0;
    for (int u = 0; u < rows; ++u) {
        for (int v = 0; v < cols; ++v) {
            bool input = false;
            switch (kind.tag) {
            case Tag::RowWise:      input = u % 2 == 0; break;
            case Tag::ColumnWise:   input = v % 2 == 0; break;
            case Tag::Checkerboard: input = (u + v) % 2 == 0; break;
            case Tag::GridLevel:    input = u % s == 0 && v % s == 0; break;
            }
            if (input) mask.set_role({u, v}, ViewRole::Input);
        }
    }
    return mask;
}

double compute_input_ratio(const ViewMask& mask) {
    const int n_in = mask.count(ViewRole::Input);
    const int n_out = mask.count(ViewRole::Output);
    if (n_in == 0)
        throw Error("compute_input_ratio: mask has no input views");
    return static_cast<double>(n_in) / (n_in + n_out);
}

LightField subsample(const LightField& lf, const ViewMask& mask) {
    if (lf.rows() != mask.rows() || lf.cols() != mask.cols())
        throw Error("subsample: mask dimensions do not match light field");
    if (!lf.complete())
        throw Error("subsample: light field is incomplete");
    LightField out(lf.rows(), lf.cols());
    for (int u = 0; u < lf.rows(); ++u)
        for (int v = 0; v < lf.cols(); ++v)
            if (mask.role({u, v}) == ViewRole::Input)
                out.set_view({u, v}, lf.view({u, v}));
    return out;
}

} // namespace lfs
