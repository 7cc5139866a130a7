#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sigma/decide.hpp"
#include "sigma/render.hpp"

namespace sigma {

/// In 0, PresumedIn 64, Unknown 128, Out 255.
std::uint8_t gray_level(Verdict v);
Verdict verdict_from_gray(std::uint8_t g);

/// Binary P5, maxval 255, first row at y_max.
void write_pgm(std::ostream& out, const Raster& r);

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

GrayImage read_pgm(std::istream& in);

}  // namespace sigma
