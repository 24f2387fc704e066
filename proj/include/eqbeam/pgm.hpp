#pragma once

#include <filesystem>

#include "eqbeam/optics.hpp"
#include "eqbeam/types.hpp"

namespace eqbeam {

/// Linear scaling applied when quantizing an image to 16 bits.
struct ImageScale {
  double min = 0.0;
  double max = 0.0;
};

/// Writes a 16-bit big-endian binary PGM ("P5\n<w> <h>\n65535\n" header).
/// Values are scaled linearly from [min, max] to [0, 65535]; a constant
/// image maps to all zeros. Rows are written top-down with the positive
/// y axis at the top. Returns the scale used.
ImageScale write_pgm16(const IntensityImage& image,
                       const std::filesystem::path& path);

/// JSON sidecar {min, max, grid:{extent, resolution}} plus any extra
/// key/value pairs handed in (serialized, sorted by key).
void write_image_sidecar(
    const ImageScale& scale, const GridSpec& grid,
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, double>>& extra = {});

}  // namespace eqbeam
