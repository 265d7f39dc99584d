#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "opsqft/field.hpp"
#include "opsqft/qft.hpp"

namespace opsqft {

// QF2D binary layout, all little-endian:
//   offset  0  "QF2D"
//   offset  4  u32 version (= 1)
//   offset  8  u32 n1
//   offset 12  u32 n2
//   offset 16  n1*n2 records of four f64 (r, i, j, k), row-major
inline constexpr char kQf2dMagic[4] = {'Q', 'F', '2', 'D'};
inline constexpr std::uint32_t kQf2dVersion = 1;
inline constexpr std::size_t kQf2dHeaderBytes = 16;
inline constexpr std::size_t kQf2dRecordBytes = 32;

struct Qf2dHeader {
  std::uint32_t version = kQf2dVersion;
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
};

/// Reads and validates the header only.
Qf2dHeader read_header(const std::filesystem::path& path);

QuaternionField2D read_field(const std::filesystem::path& path);
void write_field(const QuaternionField2D& field, const std::filesystem::path& path);

/// P3 or P6 pixmap with maxval 255. Pixel (r, g, b) in row y, column x becomes
/// (r/255) i + (g/255) j + (b/255) k at grid index (y, x).
QuaternionField2D read_image_ppm(const std::filesystem::path& path);

/// P5 image of per-sample norms scaled so the largest maps to 255. With
/// centered set, index (k1, k2) is drawn at ((k1 + n1/2) mod n1, (k2 + n2/2) mod n2).
void export_magnitude_pgm(const QuaternionField2D& spectrum, const std::filesystem::path& path,
                          bool centered);

// Text forms used on the command line.

/// "twosided", "phased" or "conjc".
Family parse_family(std::string_view text);
std::string_view family_name(Family family);

/// Three comma-separated reals x,y,z read as x i + y j + z k, normalized.
PureUnitQuaternion parse_pure_unit(std::string_view text);

/// Four reals (r,i,j,k), three reals (a pure quaternion, normalized), or the
/// keyword "scalar" for 1.
Quaternion parse_quaternion(std::string_view text);

TransformVariant parse_variant(std::string_view family, std::string_view f,
                               std::string_view g);

/// Shortest form that round-trips a double (17 significant digits).
std::string format_real(double value);
std::string format_quaternion(const Quaternion& q);

}  // namespace opsqft
