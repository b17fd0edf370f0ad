// Copyright 2026 the vcod-bench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcod/image_io.hpp"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <vector>

namespace vcod {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw IoError("cannot open '" + path + "'");
  return f;
}

// 8-bit grayscale pixels, row-major.
struct Gray8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

bool has_png_signature(std::FILE* f) {
  unsigned char sig[8] = {};
  size_t n = std::fread(sig, 1, 8, f);
  std::rewind(f);
  return n == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

Gray8 read_png_gray(std::FILE* f, const std::string& path) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png: allocation failure");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png: allocation failure");
  }

  Gray8 out;
  std::vector<png_bytep> row_ptrs;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("png: failed to decode '" + path + "'");
  }

  png_init_io(png, f);
  png_read_info(png, info);

  png_uint_32 width = png_get_image_width(png, info);
  png_uint_32 height = png_get_image_height(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  int color_type = png_get_color_type(png, info);

  if (width == 0 || height == 0) longjmp(png_jmpbuf(png), 1);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (color_type == PNG_COLOR_TYPE_RGB || color_type == PNG_COLOR_TYPE_RGB_ALPHA ||
      color_type == PNG_COLOR_TYPE_PALETTE) {
    // Default libpng luma coefficients.
    png_set_rgb_to_gray_fixed(png, 1, -1, -1);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  out.width = static_cast<int>(width);
  out.height = static_cast<int>(height);
  out.pixels.assign(static_cast<size_t>(width) * height, 0);
  row_ptrs.resize(height);
  for (png_uint_32 r = 0; r < height; ++r) {
    row_ptrs[r] = out.pixels.data() + static_cast<size_t>(r) * width;
  }
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  longjmp(mgr->jump, 1);
}

Gray8 read_jpeg_gray(std::FILE* f, const std::string& path) {
  jpeg_decompress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;

  Gray8 out;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw IoError("jpeg: failed to decode '" + path + "'");
  }

  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, f);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_GRAYSCALE;
  jpeg_start_decompress(&cinfo);

  if (cinfo.output_width == 0 || cinfo.output_height == 0 || cinfo.output_components != 1) {
    longjmp(err.jump, 1);
  }
  out.width = static_cast<int>(cinfo.output_width);
  out.height = static_cast<int>(cinfo.output_height);
  out.pixels.assign(static_cast<size_t>(out.width) * out.height, 0);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = out.pixels.data() + static_cast<size_t>(cinfo.output_scanline) * out.width;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return out;
}

Gray8 read_gray8(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  if (has_png_signature(f.get())) return read_png_gray(f.get(), path);

  unsigned char magic[2] = {};
  size_t n = std::fread(magic, 1, 2, f.get());
  std::rewind(f.get());
  if (n == 2 && magic[0] == 0xFF && magic[1] == 0xD8) return read_jpeg_gray(f.get(), path);
  throw IoError("unsupported image encoding in '" + path + "'");
}

void write_png_gray(const std::string& path, int width, int height,
                    const std::vector<std::uint8_t>& pixels) {
  if (width <= 0 || height <= 0) throw IoError("refusing to write zero-sized image '" + path + "'");
  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png: allocation failure");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png: allocation failure");
  }
  std::vector<png_bytep> row_ptrs(height);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("png: failed to write '" + path + "'");
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int r = 0; r < height; ++r) {
    row_ptrs[r] = const_cast<png_bytep>(pixels.data() + static_cast<size_t>(r) * width);
  }
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

GrayFrame load_gray(const std::string& path) {
  Gray8 img = read_gray8(path);
  GrayFrame frame(img.height, img.width);
  const std::uint8_t* src = img.pixels.data();
  double* dst = frame.data();
  const Eigen::Index n = frame.size();
  for (Eigen::Index i = 0; i < n; ++i) dst[i] = src[i] / 255.0;
  return frame;
}

BinaryMask load_binary_mask(const std::string& path) {
  Gray8 img = read_gray8(path);
  BinaryMask mask(img.height, img.width);
  const std::uint8_t* src = img.pixels.data();
  bool* dst = mask.data();
  const Eigen::Index n = mask.size();
  for (Eigen::Index i = 0; i < n; ++i) dst[i] = src[i] >= 128;
  return mask;
}

InstanceMask load_instance_mask(const std::string& path) {
  Gray8 img = read_gray8(path);
  InstanceMask out;
  out.labels.resize(img.height, img.width);
  const std::uint8_t* src = img.pixels.data();
  std::int32_t* dst = out.labels.data();
  const Eigen::Index n = out.labels.size();
  std::int32_t max_label = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    dst[i] = src[i];
    max_label = std::max(max_label, dst[i]);
  }
  out.instance_count = max_label;
  return out;
}

void save_mask_png(const std::string& path, const BinaryMask& mask) {
  std::vector<std::uint8_t> pixels(static_cast<size_t>(mask.size()));
  const bool* src = mask.data();
  for (size_t i = 0; i < pixels.size(); ++i) pixels[i] = src[i] ? 255 : 0;
  write_png_gray(path, static_cast<int>(mask.cols()), static_cast<int>(mask.rows()), pixels);
}

void save_label_png(const std::string& path, const LabelArray& labels) {
  std::vector<std::uint8_t> pixels(static_cast<size_t>(labels.size()));
  const std::int32_t* src = labels.data();
  for (size_t i = 0; i < pixels.size(); ++i) {
    if (src[i] < 0 || src[i] > 255) {
      throw IoError("label " + std::to_string(src[i]) + " does not fit an 8-bit PNG");
    }
    pixels[i] = static_cast<std::uint8_t>(src[i]);
  }
  write_png_gray(path, static_cast<int>(labels.cols()), static_cast<int>(labels.rows()), pixels);
}

void save_gray_png(const std::string& path, const GrayFrame& frame) {
  std::vector<std::uint8_t> pixels(static_cast<size_t>(frame.size()));
  const double* src = frame.data();
  for (size_t i = 0; i < pixels.size(); ++i) {
    double v = std::min(1.0, std::max(0.0, src[i]));
    pixels[i] = static_cast<std::uint8_t>(v * 255.0 + 0.5);
  }
  write_png_gray(path, static_cast<int>(frame.cols()), static_cast<int>(frame.rows()), pixels);
}

}  // namespace vcod
