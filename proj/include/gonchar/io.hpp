// Artifacts: zero and census CSV, JSON envelopes, SVG zero plots, and the zero-set cache.
#ifndef GONCHAR_IO_HPP
#define GONCHAR_IO_HPP

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

#include "gonchar/zerogeom.hpp"

namespace gonchar::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// zeros CSV

inline constexpr const char* kZerosHeader = "d,index,re,im,radius,region,on_c0";

struct ZeroRow {
  int d = 0;
  int index = 0;
  std::string re, im, radius;  // decimal strings
  Region region = Region::A1;
  bool on_c0 = false;
};

inline bool operator==(const ZeroRow& a, const ZeroRow& b) {
  return a.d == b.d && a.index == b.index && a.re == b.re && a.im == b.im && a.radius == b.radius &&
         a.region == b.region && a.on_c0 == b.on_c0;
}

// Centres at the working precision's digit count; radii rounded upward so they still enclose.
inline std::vector<ZeroRow> zero_rows(const ClassifiedZeros& cz) {
  std::vector<ZeroRow> rows;
  const int digits = mp::decimal_digits(cz.zeros.working_precision);
  for (std::size_t i = 0; i < cz.zeros.zeros.size(); ++i) {
    const ZeroDisk& z = cz.zeros.zeros[i];
    const Region r = cz.regions[i];
    rows.push_back(ZeroRow{cz.zeros.d, static_cast<int>(i), mp::to_decimal(z.value.re, digits),
                           mp::to_decimal(z.value.im, digits), mp::to_decimal(z.radius, 6, MPFR_RNDU), r,
                           r == Region::OnC0 || r == Region::IntersectionPoint});
  }
  return rows;
}

inline std::string emit_zeros_csv(const std::vector<ZeroRow>& rows) {
  std::string out = kZerosHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.d) + ',' + std::to_string(r.index) + ',' + r.re + ',' + r.im + ',' + r.radius + ',' +
           to_string(r.region) + ',' + (r.on_c0 ? "true" : "false") + '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline std::vector<std::string> csv_lines(const std::string& text, const char* header) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.empty() || lines.front() != header) throw ParseError(std::string("expected CSV header ") + header);
  lines.erase(lines.begin());
  return lines;
}

inline int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

inline bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("not a boolean: '" + s + "'");
}

inline void check_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty decimal field");
  std::size_t i = s[0] == '-' ? 1 : 0;
  bool digit = false, dot = false;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      digit = true;
    } else if (s[i] == '.' && !dot) {
      dot = true;
    } else if (s[i] == 'e' || s[i] == 'E') {
      // exponent form only for magnitudes >= 1e6
      check_decimal(s.substr(i + 1));
      break;
    } else if (s[i] == '+' && i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E')) {
      continue;
    } else {
      throw ParseError("not a decimal: '" + s + "'");
    }
  }
  if (!digit) throw ParseError("not a decimal: '" + s + "'");
}

}  // namespace detail

inline std::vector<ZeroRow> parse_zeros_csv(const std::string& text) {
  std::vector<ZeroRow> rows;
  for (const auto& line : detail::csv_lines(text, kZerosHeader)) {
    const auto c = detail::split_csv_line(line);
    if (c.size() != 7) throw ParseError("zeros CSV row must have 7 fields: " + line);
    ZeroRow r;
    r.d = detail::parse_int(c[0]);
    r.index = detail::parse_int(c[1]);
    for (int k = 2; k <= 4; ++k) detail::check_decimal(c[static_cast<std::size_t>(k)]);
    r.re = c[2];
    r.im = c[3];
    r.radius = c[4];
    const auto reg = region_from_string(c[5]);
    if (!reg) throw ParseError("unknown region: '" + c[5] + "'");
    r.region = *reg;
    r.on_c0 = detail::parse_bool(c[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// census CSV

inline constexpr const char* kCensusHeader = "d,n,N1,N2,N3,on_circle,intersection_pair";

inline std::string emit_census_csv(const std::vector<Census>& rows) {
  std::string out = kCensusHeader;
  out += '\n';
  for (const auto& c : rows) {
    out += std::to_string(c.d) + ',' + std::to_string(c.n()) + ',' + std::to_string(c.N1) + ',' +
           std::to_string(c.N2) + ',' + std::to_string(c.N3) + ',' + std::to_string(c.on_circle) + ',' +
           (c.has_intersection_pair ? "true" : "false") + '\n';
  }
  return out;
}

inline std::vector<Census> parse_census_csv(const std::string& text) {
  std::vector<Census> rows;
  for (const auto& line : detail::csv_lines(text, kCensusHeader)) {
    const auto c = detail::split_csv_line(line);
    if (c.size() != 7) throw ParseError("census CSV row must have 7 fields: " + line);
    Census r;
    r.d = detail::parse_int(c[0]);
    if (detail::parse_int(c[1]) != r.n()) throw ParseError("census row has n != 2d - 1: " + line);
    r.N1 = detail::parse_int(c[2]);
    r.N2 = detail::parse_int(c[3]);
    r.N3 = detail::parse_int(c[4]);
    r.on_circle = detail::parse_int(c[5]);
    r.has_intersection_pair = detail::parse_bool(c[6]);
    rows.push_back(r);
  }
  return rows;
}

// Same counting rule as census_of, applied to serialized rows.
inline Census census_from_rows(int d, const std::vector<ZeroRow>& rows) {
  Census c;
  c.d = d;
  int inter = 0;
  for (const auto& r : rows) {
    switch (r.region) {
      case Region::A1:
        ++c.N1;
        break;
      case Region::A2:
        ++c.N2;
        break;
      case Region::A3:
        ++c.N3;
        break;
      case Region::OnC0:
        ++c.N1;
        ++c.on_circle;
        break;
      case Region::IntersectionPoint:
        ++inter;
        ++c.on_circle;
        break;
    }
  }
  c.has_intersection_pair = inter == 2;
  return c;
}

// ---------------------------------------------------------------------------
// JSON

inline Json zero_rows_json(const std::vector<ZeroRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    a.push_back(Json{{"d", r.d},
                     {"index", r.index},
                     {"re", r.re},
                     {"im", r.im},
                     {"radius", r.radius},
                     {"region", to_string(r.region)},
                     {"on_c0", r.on_c0}});
  }
  return a;
}

inline std::vector<ZeroRow> zero_rows_from_json(const Json& a) {
  std::vector<ZeroRow> rows;
  try {
    for (const auto& j : a) {
      ZeroRow r;
      r.d = j.at("d").get<int>();
      r.index = j.at("index").get<int>();
      r.re = j.at("re").get<std::string>();
      r.im = j.at("im").get<std::string>();
      r.radius = j.at("radius").get<std::string>();
      const auto reg = region_from_string(j.at("region").get<std::string>());
      if (!reg) throw ParseError("unknown region in JSON");
      r.region = *reg;
      r.on_c0 = j.at("on_c0").get<bool>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed zero rows: ") + e.what());
  }
  return rows;
}

inline Json census_json(const Census& c) {
  return Json{{"d", c.d},         {"n", c.n()},
              {"N1", c.N1},       {"N2", c.N2},
              {"N3", c.N3},       {"on_circle", c.on_circle},
              {"intersection_pair", c.has_intersection_pair}};
}

inline Json real_json(const mp::Real& x, int digits = 0) {
  return Json{{"value", mp::to_decimal(x, digits)}, {"precision_bits", static_cast<long>(x.precision())}};
}

// SOURCE_DATE_EPOCH pins the timestamp for reproducible output; otherwise the wall clock.
inline std::string timestamp_utc() {
  std::time_t t = std::time(nullptr);
  if (const char* s = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v >= 0) t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json envelope(const Json& command, const std::string& status, Json payload) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"timestamp", timestamp_utc()},
              {"status", status},
              {"payload", std::move(payload)}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// files

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.empty()) throw IoError("empty output path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Write to a sibling temporary and rename over the target.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
  write_file(tmp, content);
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into '" + path.string() + "'");
  }
}

// ---------------------------------------------------------------------------
// SVG

namespace detail {

inline constexpr double kSvgSize = 800.0;
inline constexpr double kReMin = -1.6, kReMax = 2.6, kImMin = -2.1, kImMax = 2.1;

inline double sx(double re) { return (re - kReMin) / (kReMax - kReMin) * kSvgSize; }
inline double sy(double im) { return (kImMax - im) / (kImMax - kImMin) * kSvgSize; }
inline double sr(double r) { return r / (kReMax - kReMin) * kSvgSize; }

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

inline std::string marker(Region r, double x, double y) {
  const double k = 3.5;
  const std::string X = num(x), Y = num(y);
  switch (r) {
    case Region::A1:
      return "<path class=\"A1\" d=\"M" + num(x - k) + ' ' + num(y - k) + " L" + num(x + k) + ' ' + num(y + k) +
             " M" + num(x - k) + ' ' + num(y + k) + " L" + num(x + k) + ' ' + num(y - k) + "\"/>\n";
    case Region::A2:
      return "<path class=\"A2\" d=\"M" + X + ' ' + num(y - k) + " L" + num(x + k) + ' ' + Y + " L" + X + ' ' +
             num(y + k) + " L" + num(x - k) + ' ' + Y + " Z\"/>\n";
    case Region::A3:
      return "<path class=\"A3\" d=\"M" + num(x - k) + ' ' + Y + " L" + num(x + k) + ' ' + Y + " M" + X + ' ' +
             num(y - k) + " L" + X + ' ' + num(y + k) + "\"/>\n";
    case Region::OnC0:
      return "<circle class=\"OnC0\" cx=\"" + X + "\" cy=\"" + Y + "\" r=\"" + num(k) + "\"/>\n";
    case Region::IntersectionPoint: {
      std::string d = "M";
      for (int i = 0; i < 10; ++i) {
        const double a = -std::numbers::pi / 2 + i * std::numbers::pi / 5;
        const double rr = i % 2 == 0 ? 2 * k : k;
        d += (i == 0 ? "" : " L") + num(x + rr * std::cos(a)) + ' ' + num(y + rr * std::sin(a));
      }
      return "<path class=\"IntersectionPoint\" d=\"" + d + " Z\"/>\n";
    }
  }
  return {};
}

}  // namespace detail

// Deterministic scatter of zero rows against C0, C1, Re z = 1/2 and the segment of Gamma.
inline std::string emit_svg_zeroplot(const std::vector<ZeroRow>& rows) {
  using namespace detail;
  if (rows.empty()) throw std::invalid_argument("emit_svg_zeroplot: no zeros to plot");
  const double h = std::sqrt(3.0) / 2;
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  s += "<style>.guide{fill:none;stroke:#999;stroke-width:1}.gamma{fill:none;stroke:#000;stroke-width:1.5}"
       ".A1,.A3{fill:none;stroke:#c00;stroke-width:1.2}.A2{fill:#06c}.OnC0{fill:none;stroke:#070;stroke-width:1.2}"
       ".IntersectionPoint{fill:#f90;stroke:#000;stroke-width:0.5}</style>\n";
  s += "<rect width=\"800\" height=\"800\" fill=\"#fff\"/>\n";
  s += "<line class=\"guide\" x1=\"0\" y1=\"" + num(sy(0)) + "\" x2=\"800\" y2=\"" + num(sy(0)) + "\"/>\n";
  s += "<line class=\"guide\" x1=\"" + num(sx(0)) + "\" y1=\"0\" x2=\"" + num(sx(0)) + "\" y2=\"800\"/>\n";
  s += "<circle class=\"guide\" cx=\"" + num(sx(0)) + "\" cy=\"" + num(sy(0)) + "\" r=\"" + num(sr(1)) + "\"/>\n";
  s += "<circle class=\"guide\" cx=\"" + num(sx(1)) + "\" cy=\"" + num(sy(0)) + "\" r=\"" + num(sr(1)) + "\"/>\n";
  s += "<line class=\"guide\" stroke-dasharray=\"4 4\" x1=\"" + num(sx(0.5)) + "\" y1=\"0\" x2=\"" + num(sx(0.5)) +
       "\" y2=\"800\"/>\n";
  // Gamma: outer arcs of C0 and C1 joined at the intersection points, plus the segment between them
  const std::string top = num(sx(0.5)) + ' ' + num(sy(h)), bottom = num(sx(0.5)) + ' ' + num(sy(-h));
  const std::string R = num(sr(1));
  s += "<path class=\"gamma\" d=\"M" + top + " A" + R + ' ' + R + " 0 1 0 " + bottom + " A" + R + ' ' + R +
       " 0 1 0 " + top + " L" + bottom + "\"/>\n";
  for (const auto& r : rows) {
    const double re = std::strtod(r.re.c_str(), nullptr), im = std::strtod(r.im.c_str(), nullptr);
    s += marker(r.region, sx(re), sy(im));
  }
  s += "</svg>\n";
  return s;
}

// ---------------------------------------------------------------------------
// cache of classified zero sets keyed by (d, q, precision bits)

// Bumped whenever the serialized rows change meaning; older entries are recomputed.
inline constexpr int kCacheFormat = 2;

inline std::filesystem::path cache_dir() {
  if (const char* e = std::getenv("GONCHAR_CACHE"); e != nullptr && *e != '\0') return e;
  return ".gonchar-cache";
}

inline std::filesystem::path cache_path(int d, const RatQ& q, long bits) {
  return cache_dir() / ("zeros_d" + std::to_string(d) + "_q" + q.get_num().get_str() + "_" +
                        q.get_den().get_str() + "_p" + std::to_string(bits) + ".json");
}

inline std::optional<std::vector<ZeroRow>> cache_load(int d, const RatQ& q, long bits) {
  const auto path = cache_path(d, q, bits);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    const Json j = Json::parse(read_file(path));
    if (j.at("schema_version") != kSchemaVersion || j.value("cache_format", 0) != kCacheFormat || j.at("d") != d || j.at("precision_bits") != bits ||
        j.at("q") != rat_to_string(q)) {
      return std::nullopt;
    }
    return zero_rows_from_json(j.at("zeros"));
  } catch (const std::exception&) {
    return std::nullopt;  // a corrupt entry is recomputed and overwritten
  }
}

inline void cache_store(int d, const RatQ& q, long bits, const std::vector<ZeroRow>& rows) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir(), ec);
  if (ec) throw IoError("cannot create cache directory '" + cache_dir().string() + "'");
  const Json j{{"schema_version", kSchemaVersion},
               {"cache_format", kCacheFormat},
               {"d", d},
               {"q", rat_to_string(q)},
               {"precision_bits", bits},
               {"zeros", zero_rows_json(rows)}};
  write_file_atomic(cache_path(d, q, bits), dump(j));
}

}  // namespace gonchar::io

#endif  // GONCHAR_IO_HPP
