#include "eqbeam/pgm.hpp"

#include <cstdint>
#include <fstream>
#include <vector>

#include <json.hpp>

namespace eqbeam {

ImageScale write_pgm16(const IntensityImage& image,
                       const std::filesystem::path& path) {
  const int n = image.spec.resolution;
  ImageScale scale{image.values.minCoeff(), image.values.maxCoeff()};
  const double span = scale.max - scale.min;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write image: " + path.string());
  out << "P5\n" << n << " " << n << "\n65535\n";

  std::vector<unsigned char> row_bytes(2 * n);
  for (int row = 0; row < n; ++row) {
    const int iy = n - 1 - row;  // top row = largest y
    for (int ix = 0; ix < n; ++ix) {
      std::uint16_t level = 0;
      if (span > 0.0) {
        const double u = (image.values(iy, ix) - scale.min) / span;
        level = static_cast<std::uint16_t>(std::lround(u * 65535.0));
      }
      row_bytes[2 * ix] = static_cast<unsigned char>(level >> 8);
      row_bytes[2 * ix + 1] = static_cast<unsigned char>(level & 0xff);
    }
    out.write(reinterpret_cast<const char*>(row_bytes.data()),
              static_cast<std::streamsize>(row_bytes.size()));
  }
  if (!out) throw Error("short write: " + path.string());
  return scale;
}

void write_image_sidecar(
    const ImageScale& scale, const GridSpec& grid,
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, double>>& extra) {
  nlohmann::json j;
  j["min"] = scale.min;
  j["max"] = scale.max;
  j["grid"]["extent"] = grid.extent;
  j["grid"]["resolution"] = grid.resolution;
  for (const auto& [key, value] : extra) j[key] = value;
  std::ofstream out(path);
  if (!out) throw Error("cannot write sidecar: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace eqbeam
