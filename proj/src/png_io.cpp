// SPDX-License-Identifier: Apache-2.0

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

#include "lfs/io.hpp"

namespace lfs {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

} // namespace

ViewImage read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp)
        throw Error("read_png: cannot open " + path.string());

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 ||
        png_sig_cmp(header, 0, 8) != 0)
        throw Error("read_png: not a PNG file: " + path.string());

    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("read_png: libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("read_png: decode failure in " + path.string());
    }

    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    png_set_gray_to_rgb(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    if (png_get_channels(png, info) != 3 ||
        png_get_bit_depth(png, info) != 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("read_png: expected 8-bit RGB after expansion: " +
                    path.string());
    }

    ViewImage img(width, height);
    std::vector<png_bytep> row_ptrs(height);
    for (int y = 0; y < height; ++y)
        row_ptrs[y] = img.samples().data() +
                      static_cast<std::size_t>(y) * width * 3;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png(const std::filesystem::path& path, const ViewImage& img) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp)
        throw Error("write_png: cannot open " + path.string());

    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw Error("write_png: libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("write_png: encode failure for " + path.string());
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.width(), img.height(), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_bytep> row_ptrs(img.height());
    for (int y = 0; y < img.height(); ++y)
        row_ptrs[y] = const_cast<png_bytep>(
            img.samples().data() + static_cast<std::size_t>(y) * img.width() * 3);
    png_write_image(png, row_ptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace lfs
