#include "opsqft/field_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "opsqft/errors.hpp"

namespace opsqft {

namespace {

namespace fs = std::filesystem;

std::string located(const fs::path& path, std::size_t offset, const std::string& what) {
  std::ostringstream msg;
  msg << path.string() << ": " << what << " at offset " << offset;
  return msg.str();
}

std::vector<unsigned char> slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(located(path, 0, "cannot open for reading"));
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoFailure(located(path, bytes.size(), "read error"));
  return bytes;
}

void dump(const fs::path& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure(located(path, 0, "cannot open for writing"));
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoFailure(located(path, 0, "write error"));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
}

void put_f64(std::vector<unsigned char>& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<unsigned char>(bits >> (8 * b)));
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(p[b]) << (8 * b);
  return v;
}

double get_f64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(p[b]) << (8 * b);
  return std::bit_cast<double>(v);
}

Qf2dHeader parse_header(const fs::path& path, const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kQf2dMagic, 4) != 0) {
    throw BadMagic(located(path, 0, "missing QF2D magic"));
  }
  if (bytes.size() < kQf2dHeaderBytes) {
    throw TruncatedPayload(located(path, bytes.size(), "header ends early"));
  }
  Qf2dHeader header{get_u32(bytes.data() + 4), get_u32(bytes.data() + 8),
                    get_u32(bytes.data() + 12)};
  if (header.version != kQf2dVersion) {
    throw BadVersion(located(path, 4, "unsupported version " + std::to_string(header.version)));
  }
  return header;
}

// Minimal tokenizer for the netpbm header: whitespace separated, '#' comments.
class PnmReader {
 public:
  PnmReader(const fs::path& path, const std::vector<unsigned char>& bytes)
      : path_(path), bytes_(bytes) {}

  std::string token() {
    skip_space_and_comments();
    std::string tok;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      tok.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (tok.empty()) throw MalformedHeader(located(path_, pos_, "unexpected end of header"));
    return tok;
  }

  unsigned number() {
    const std::size_t at = pos_;
    const std::string tok = token();
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size()) {
      throw MalformedHeader(located(path_, at, "expected an unsigned integer, got '" + tok + "'"));
    }
    return value;
  }

  /// Consumes the single whitespace byte that ends a binary header.
  void end_binary_header() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw MalformedHeader(located(path_, pos_, "missing whitespace after maxval"));
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const fs::path& path_;
  const std::vector<unsigned char>& bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view token) {
  const std::string_view t = trim(token);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || end != t.data() + t.size() || !std::isfinite(value)) {
    throw ParseError("invalid real number '" + std::string(token) + "'");
  }
  return value;
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> values;
  for (const auto token : split_commas(text)) values.push_back(parse_real(token));
  return values;
}

}  // namespace

Qf2dHeader read_header(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(located(path, 0, "cannot open for reading"));
  std::vector<unsigned char> bytes(kQf2dHeaderBytes);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  bytes.resize(static_cast<std::size_t>(in.gcount()));
  return parse_header(path, bytes);
}

QuaternionField2D read_field(const fs::path& path) {
  const std::vector<unsigned char> bytes = slurp(path);
  const Qf2dHeader header = parse_header(path, bytes);
  const std::size_t count = static_cast<std::size_t>(header.n1) * header.n2;
  const std::size_t expected = kQf2dHeaderBytes + kQf2dRecordBytes * count;
  if (bytes.size() < expected) {
    throw TruncatedPayload(located(path, bytes.size(),
                                   "payload ends early, expected " + std::to_string(expected) +
                                       " bytes"));
  }
  if (bytes.size() > expected) {
    throw TruncatedPayload(located(path, expected, "trailing bytes after payload"));
  }
  std::vector<Quaternion> data(count);
  const unsigned char* p = bytes.data() + kQf2dHeaderBytes;
  for (auto& q : data) {
    q = {get_f64(p), get_f64(p + 8), get_f64(p + 16), get_f64(p + 24)};
    p += kQf2dRecordBytes;
  }
  return QuaternionField2D(header.n1, header.n2, std::move(data));
}

void write_field(const QuaternionField2D& field, const fs::path& path) {
  std::vector<unsigned char> bytes;
  bytes.reserve(kQf2dHeaderBytes + kQf2dRecordBytes * field.size());
  bytes.insert(bytes.end(), std::begin(kQf2dMagic), std::end(kQf2dMagic));
  put_u32(bytes, kQf2dVersion);
  put_u32(bytes, static_cast<std::uint32_t>(field.n1()));
  put_u32(bytes, static_cast<std::uint32_t>(field.n2()));
  for (const auto& q : field.data()) {
    put_f64(bytes, q.r);
    put_f64(bytes, q.i);
    put_f64(bytes, q.j);
    put_f64(bytes, q.k);
  }
  dump(path, bytes);
}

QuaternionField2D read_image_ppm(const fs::path& path) {
  const std::vector<unsigned char> bytes = slurp(path);
  PnmReader reader(path, bytes);
  std::string magic;
  try {
    magic = reader.token();
  } catch (const MalformedHeader&) {
    throw UnsupportedFormat(located(path, 0, "empty file"));
  }
  if (magic != "P3" && magic != "P6") {
    throw UnsupportedFormat(located(path, 0, "expected P3 or P6, got '" + magic + "'"));
  }
  const unsigned width = reader.number();
  const unsigned height = reader.number();
  const std::size_t maxval_at = reader.pos();
  const unsigned maxval = reader.number();
  if (width == 0 || height == 0) throw MalformedHeader(located(path, 0, "zero image size"));
  if (maxval != 255) {
    throw UnsupportedFormat(located(path, maxval_at, "maxval must be 255"));
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<unsigned> channels(3 * count);
  if (magic == "P6") {
    reader.end_binary_header();
    const std::size_t start = reader.pos();
    if (bytes.size() - start < channels.size()) {
      throw TruncatedPayload(located(path, bytes.size(), "pixel data ends early"));
    }
    for (std::size_t n = 0; n < channels.size(); ++n) channels[n] = bytes[start + n];
  } else {
    for (auto& c : channels) {
      const std::size_t at = reader.pos();
      try {
        c = reader.number();
      } catch (const MalformedHeader&) {
        throw TruncatedPayload(located(path, at, "pixel data ends early"));
      }
      if (c > maxval) throw MalformedHeader(located(path, at, "sample exceeds maxval"));
    }
  }

  QuaternionField2D field(height, width);
  for (std::size_t n = 0; n < count; ++n) {
    field.data()[n] = {0.0, channels[3 * n] / 255.0, channels[3 * n + 1] / 255.0,
                       channels[3 * n + 2] / 255.0};
  }
  return field;
}

void export_magnitude_pgm(const QuaternionField2D& spectrum, const fs::path& path,
                          bool centered) {
  const std::size_t n1 = spectrum.n1();
  const std::size_t n2 = spectrum.n2();
  double peak = 0.0;
  for (const auto& q : spectrum.data()) peak = std::max(peak, norm(q));

  std::ostringstream header;
  header << "P5\n" << n2 << ' ' << n1 << "\n255\n";
  const std::string head = header.str();
  std::vector<unsigned char> bytes(head.begin(), head.end());
  const std::size_t offset = bytes.size();
  bytes.resize(offset + n1 * n2, 0);
  const std::size_t shift1 = centered ? n1 / 2 : 0;
  const std::size_t shift2 = centered ? n2 / 2 : 0;
  for (std::size_t k1 = 0; k1 < n1; ++k1) {
    for (std::size_t k2 = 0; k2 < n2; ++k2) {
      const double level = peak > 0.0 ? 255.0 * norm(spectrum(k1, k2)) / peak : 0.0;
      const std::size_t y = (k1 + shift1) % n1;
      const std::size_t x = (k2 + shift2) % n2;
      bytes[offset + y * n2 + x] =
          static_cast<unsigned char>(std::clamp(std::lround(level), 0L, 255L));
    }
  }
  dump(path, bytes);
}

Family parse_family(std::string_view text) {
  if (text == "twosided") return Family::TwoSided;
  if (text == "phased") return Family::PhaseAngleD;
  if (text == "conjc") return Family::ConjugateC;
  throw ParseError("unknown transform family '" + std::string(text) +
                   "' (expected twosided, phased or conjc)");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::TwoSided:
      return "twosided";
    case Family::PhaseAngleD:
      return "phased";
    case Family::ConjugateC:
      return "conjc";
  }
  return "unknown";
}

PureUnitQuaternion parse_pure_unit(std::string_view text) {
  const std::vector<double> v = parse_reals(text);
  if (v.size() != 3) {
    throw ParseError("expected three comma-separated reals, got '" + std::string(text) + "'");
  }
  try {
    return PureUnitQuaternion(v[0], v[1], v[2]);
  } catch (const InvalidPureUnit& e) {
    throw ParseError("'" + std::string(text) + "': " + e.what());
  }
}

Quaternion parse_quaternion(std::string_view text) {
  if (trim(text) == "scalar") return kOne;
  const std::vector<double> v = parse_reals(text);
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  if (v.size() == 3) return parse_pure_unit(text).value();
  throw ParseError("expected 3 or 4 comma-separated reals or 'scalar', got '" +
                   std::string(text) + "'");
}

TransformVariant parse_variant(std::string_view family, std::string_view f,
                               std::string_view g) {
  return {parse_family(family), make_context(parse_pure_unit(f), parse_pure_unit(g))};
}

std::string format_real(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::general, 17);
  (void)ec;
  return std::string(buf.data(), end);
}

std::string format_quaternion(const Quaternion& q) {
  return format_real(q.r) + "," + format_real(q.i) + "," + format_real(q.j) + "," +
         format_real(q.k);
}

}  // namespace opsqft
