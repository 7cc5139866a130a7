#include "sigma/pgm.hpp"

#include <istream>
#include <ostream>

#include "sigma/error.hpp"

namespace sigma {

std::uint8_t gray_level(Verdict v) {
  switch (v) {
    case Verdict::In: return 0;
    case Verdict::PresumedIn: return 64;
    case Verdict::Unknown: return 128;
    case Verdict::Out: return 255;
  }
  return 128;
}

Verdict verdict_from_gray(std::uint8_t g) {
  switch (g) {
    case 0: return Verdict::In;
    case 64: return Verdict::PresumedIn;
    case 255: return Verdict::Out;
    default: return Verdict::Unknown;
  }
}

void write_pgm(std::ostream& out, const Raster& r) {
  out << "P5\n" << r.width() << ' ' << r.height() << "\n255\n";
  std::vector<char> bytes(r.codes.size());
  for (std::size_t i = 0; i < r.codes.size(); ++i)
    bytes[i] = static_cast<char>(gray_level(static_cast<Verdict>(r.codes[i])));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      while (in && in.get() != '\n') {
      }
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      in.get();
    } else {
      return;
    }
  }
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') throw Error(ErrorKind::InvalidInput, "not a binary PGM (P5)");
  GrayImage img;
  int maxval = 0;
  skip_space_and_comments(in);
  in >> img.width;
  skip_space_and_comments(in);
  in >> img.height;
  skip_space_and_comments(in);
  in >> maxval;
  if (!in || img.width < 1 || img.height < 1 || maxval != 255) throw Error(ErrorKind::InvalidInput, "bad PGM header");
  in.get();
  img.pixels.resize(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height));
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (!in) throw Error(ErrorKind::InvalidInput, "truncated PGM data");
  return img;
}

}  // namespace sigma
