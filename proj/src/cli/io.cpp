// Copyright 2026 The nslct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nslct/cli/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "nslct/error.hpp"

namespace nslct::cli {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Non-blank, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back({number, raw});
    if (text.empty()) break;
  }
  return lines;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(std::string_view s, std::size_t line) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    parse_fail(line, "malformed number '" + std::string(s) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view s, std::size_t line) {
  std::vector<double> out;
  for (auto part : split(s, ',')) out.push_back(parse_number(part, line));
  return out;
}

struct Field {
  std::string value;
  std::size_t line;
};
using Fields = std::map<std::string, Field, std::less<>>;

void parse_fields_into(Fields& fields, const Line& line) {
  for (auto part : split(line.text, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) parse_fail(line.number, "expected key=value, got '" + std::string(part) + "'");
    std::string key(trim(part.substr(0, eq)));
    if (key.empty()) parse_fail(line.number, "empty key");
    if (fields.contains(key)) parse_fail(line.number, "duplicate key '" + key + "'");
    fields.emplace(std::move(key), Field{std::string(trim(part.substr(eq + 1))), line.number});
  }
}

const Field& require(const Fields& f, const std::string& key, std::size_t line) {
  const auto it = f.find(key);
  if (it == f.end()) parse_fail(line, "missing field '" + key + "'");
  return it->second;
}

int parse_dim(const Fields& f, std::size_t line) {
  const Field& field = require(f, "n", line);
  const double n = parse_number(field.value, field.line);
  if (n != 1.0 && n != 2.0) parse_fail(field.line, "n must be 1 or 2");
  return static_cast<int>(n);
}

Matrix to_matrix(const std::vector<double>& v, int n, const Field& field, bool allow_scalar) {
  const auto nn = static_cast<std::size_t>(n * n);
  if (allow_scalar && v.size() == 1) return Matrix(Matrix::Identity(n, n) * v[0]);
  if (v.size() != nn) {
    parse_fail(field.line, "expected " + std::to_string(nn) + " row-major entries, got " +
                               std::to_string(v.size()));
  }
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = v[static_cast<std::size_t>(r * n + c)];
  return m;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_list(std::span<const double> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt(v[i]);
  }
  return out;
}

std::string fmt_matrix(const Matrix& m) {
  std::vector<double> v;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return fmt_list(v);
}

std::string grid_header(const Grid& g) {
  std::vector<double> counts, spacing, origin;
  for (int j = 0; j < g.dim(); ++j) {
    counts.push_back(static_cast<double>(g.count(j)));
    spacing.push_back(g.spacing(j));
    origin.push_back(g.origin(j));
  }
  return "n=" + std::to_string(g.dim()) + "; N=" + fmt_list(counts) + "; delta=" +
         fmt_list(spacing) + "; origin=" + fmt_list(origin);
}

Grid parse_grid(const Fields& f, std::size_t line) {
  const int n = parse_dim(f, line);
  auto per_axis = [&](const char* key) {
    const Field& field = require(f, key, line);
    auto v = parse_list(field.value, field.line);
    if (v.size() != static_cast<std::size_t>(n)) {
      parse_fail(field.line, std::string(key) + " needs " + std::to_string(n) + " entries");
    }
    return v;
  };
  const auto counts_d = per_axis("N");
  std::vector<std::size_t> counts;
  for (double c : counts_d) {
    if (c < 1 || c != static_cast<double>(static_cast<std::size_t>(c))) {
      parse_fail(line, "N must be a positive integer");
    }
    counts.push_back(static_cast<std::size_t>(c));
  }
  try {
    return Grid(counts, per_axis("delta"), per_axis("origin"));
  } catch (const Error& e) {
    parse_fail(line, e.what());
  }
}

// Header fields and body rows of a signal-like document.
struct Document {
  Fields fields;
  std::size_t header_line = 0;
  std::vector<Line> body;
};

Document split_document(std::string_view text, std::string_view kind) {
  if (document_kind(text) != kind) {
    throw Error(ErrorKind::ParseError,
                "line 1: expected a '# nslct " + std::string(kind) + " v1' document");
  }
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "line 1: missing header");
  Document doc;
  doc.header_line = lines.front().number;
  parse_fields_into(doc.fields, lines.front());
  doc.body.assign(lines.begin() + 1, lines.end());
  return doc;
}

std::vector<Complex> parse_values(const std::vector<Line>& body, std::size_t expected,
                                  std::size_t header_line) {
  if (body.size() != expected) {
    parse_fail(body.empty() ? header_line : body.back().number,
               "expected " + std::to_string(expected) + " sample rows, got " +
                   std::to_string(body.size()));
  }
  std::vector<Complex> values;
  values.reserve(expected);
  for (const Line& l : body) {
    const auto parts = split(l.text, ',');
    if (parts.size() != 2) parse_fail(l.number, "expected 're,im'");
    values.emplace_back(parse_number(parts[0], l.number), parse_number(parts[1], l.number));
  }
  return values;
}

void append_value(std::string& out, Complex v) {
  out += fmt(v.real());
  out += ',';
  out += fmt(v.imag());
  out += '\n';
}

}  // namespace

std::string document_kind(std::string_view text) {
  const auto nl = text.find('\n');
  std::string_view first = trim(text.substr(0, nl));
  constexpr std::string_view prefix = "# nslct ";
  if (!first.starts_with(prefix)) return {};
  first.remove_prefix(prefix.size());
  return std::string(first.substr(0, first.find(' ')));
}

// ---------------------------------------------------------------------------
// Matrix

FreeSymplecticMatrix parse_matrix(std::string_view text) {
  Fields f;
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "line 1: empty matrix document");
  for (const Line& l : lines) parse_fields_into(f, l);
  const std::size_t first = lines.front().number;
  const int n = parse_dim(f, first);

  static const std::map<std::string, std::vector<std::string>, std::less<>> allowed = {
      {"fourier", {"n", "preset"}},
      {"frft", {"n", "preset", "alpha"}},
      {"fresnel", {"n", "preset", "B"}},
      {"separable", {"n", "preset", "a", "b", "c", "d"}},
      {"", {"n", "A", "B", "C", "D"}},
  };
  std::string preset;
  if (auto it = f.find("preset"); it != f.end()) preset = it->second.value;
  const auto rule = allowed.find(preset);
  if (rule == allowed.end()) parse_fail(f.at("preset").line, "unknown preset '" + preset + "'");
  for (const auto& [key, field] : f) {
    if (std::find(rule->second.begin(), rule->second.end(), key) == rule->second.end()) {
      parse_fail(field.line, "unexpected field '" + key + "'");
    }
  }

  auto list = [&](const char* key) {
    const Field& field = require(f, key, first);
    return std::pair{parse_list(field.value, field.line), field};
  };

  if (preset == "fourier") return preset::fourier(n);
  if (preset == "frft") {
    const Field& field = require(f, "alpha", first);
    return preset::frft(n, parse_number(field.value, field.line));
  }
  if (preset == "fresnel") {
    auto [v, field] = list("B");
    return preset::fresnel(to_matrix(v, n, field, true));
  }
  if (preset == "separable") {
    std::array<std::vector<double>, 4> blocks;
    const char* keys[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
      auto [v, field] = list(keys[i]);
      if (v.size() == 1) v.assign(static_cast<std::size_t>(n), v[0]);
      if (v.size() != static_cast<std::size_t>(n)) {
        parse_fail(field.line, std::string(keys[i]) + " needs 1 or n entries");
      }
      blocks[i] = std::move(v);
    }
    return preset::separable(blocks[0], blocks[1], blocks[2], blocks[3]);
  }
  auto block = [&](const char* key) {
    auto [v, field] = list(key);
    return to_matrix(v, n, field, false);
  };
  return FreeSymplecticMatrix::validate(block("A"), block("B"), block("C"), block("D"));
}

FreeSymplecticMatrix read_matrix(const std::filesystem::path& path) {
  return parse_matrix(read_text(path));
}

std::string format_matrix(const FreeSymplecticMatrix& m) {
  return "# nslct matrix v1\nn=" + std::to_string(m.dim()) + "; A=" + fmt_matrix(m.a()) +
         "; B=" + fmt_matrix(m.b()) + "; C=" + fmt_matrix(m.c()) + "; D=" + fmt_matrix(m.d()) +
         "\n";
}

// ---------------------------------------------------------------------------
// Signal / spectrum

std::string format_signal(const SampledSignal& s) {
  std::string out = "# nslct signal v1\n" + grid_header(s.grid) + "\n";
  out.reserve(out.size() + s.values.size() * 48);
  for (const Complex& v : s.values) append_value(out, v);
  return out;
}

SampledSignal parse_signal(std::string_view text) {
  const Document doc = split_document(text, "signal");
  Grid grid = parse_grid(doc.fields, doc.header_line);
  auto values = parse_values(doc.body, grid.size(), doc.header_line);
  try {
    return SampledSignal(std::move(grid), std::move(values));
  } catch (const Error& e) {
    parse_fail(doc.header_line, e.what());
  }
}

std::string format_spectrum(const Spectrum& s) {
  std::string out = "# nslct spectrum v1\n" + grid_header(s.wgrid.signal_grid()) +
                    "; warp=" + fmt_matrix(s.wgrid.map()) + "\n";
  out.reserve(out.size() + s.values.size() * 48);
  for (const Complex& v : s.values) append_value(out, v);
  return out;
}

namespace {

WarpedGrid parse_warped(const Fields& f, std::size_t line) {
  Grid grid = parse_grid(f, line);
  const Field& field = require(f, "warp", line);
  Matrix warp = to_matrix(parse_list(field.value, field.line), grid.dim(), field, false);
  try {
    return WarpedGrid(std::move(grid), std::move(warp));
  } catch (const Error& e) {
    parse_fail(field.line, e.what());
  }
}

}  // namespace

Spectrum parse_spectrum(std::string_view text) {
  const Document doc = split_document(text, "spectrum");
  WarpedGrid wgrid = parse_warped(doc.fields, doc.header_line);
  auto values = parse_values(doc.body, wgrid.size(), doc.header_line);
  try {
    return Spectrum(std::move(wgrid), std::move(values));
  } catch (const Error& e) {
    parse_fail(doc.header_line, e.what());
  }
}

// ---------------------------------------------------------------------------
// Gram

std::string format_gram(const Gram& g, std::string_view window_id, const FreeSymplecticMatrix& m) {
  std::string id(window_id.empty() ? "unspecified" : window_id);
  for (char& c : id) {
    if (c == ';' || c == '\n' || c == '#') c = '_';
  }
  std::string out = "# nslct gram v1\n" + grid_header(g.wgrid.signal_grid()) +
                    "; warp=" + fmt_matrix(g.wgrid.map()) + "; stride=" +
                    std::to_string(g.stride) + "; window=" + id + "; A=" + fmt_matrix(m.a()) +
                    "; B=" + fmt_matrix(m.b()) + "; C=" + fmt_matrix(m.c()) +
                    "; D=" + fmt_matrix(m.d()) + "\n";
  const std::size_t len = g.row_length();
  out.reserve(out.size() + g.values.size() * 56);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t i = 0; i < len; ++i) {
      out += std::to_string(r);
      out += ',';
      out += std::to_string(i);
      out += ',';
      append_value(out, g.values[r * len + i]);
    }
  }
  return out;
}

GramDocument parse_gram(std::string_view text) {
  const Document doc = split_document(text, "gram");
  WarpedGrid wgrid = parse_warped(doc.fields, doc.header_line);
  const Field& stride_field = require(doc.fields, "stride", doc.header_line);
  const double stride_d = parse_number(stride_field.value, stride_field.line);
  if (stride_d < 1 || stride_d != static_cast<double>(static_cast<std::size_t>(stride_d))) {
    parse_fail(stride_field.line, "stride must be a positive integer");
  }
  const auto stride = static_cast<std::size_t>(stride_d);
  Grid ugrid = [&] {
    try {
      return shift_grid(wgrid.signal_grid(), stride);
    } catch (const Error& e) {
      parse_fail(stride_field.line, e.what());
    }
  }();

  const std::size_t len = wgrid.size();
  const std::size_t expected = ugrid.size() * len;
  if (doc.body.size() != expected) {
    parse_fail(doc.body.empty() ? doc.header_line : doc.body.back().number,
               "expected " + std::to_string(expected) + " gram rows, got " +
                   std::to_string(doc.body.size()));
  }
  std::vector<Complex> values(expected);
  for (std::size_t idx = 0; idx < expected; ++idx) {
    const Line& l = doc.body[idx];
    const auto parts = split(l.text, ',');
    if (parts.size() != 4) parse_fail(l.number, "expected 'u,w,re,im'");
    const double u = parse_number(parts[0], l.number);
    const double w = parse_number(parts[1], l.number);
    if (u != static_cast<double>(idx / len) || w != static_cast<double>(idx % len)) {
      parse_fail(l.number, "gram rows must be in u-major order");
    }
    values[idx] = {parse_number(parts[2], l.number), parse_number(parts[3], l.number)};
  }

  GramDocument out{Gram(std::move(wgrid), stride, std::move(values)), "", std::nullopt};
  if (auto it = doc.fields.find("window"); it != doc.fields.end()) out.window_id = it->second.value;
  if (doc.fields.contains("A")) {
    const int n = out.gram.wgrid.dim();
    auto block = [&](const char* key) {
      const Field& field = require(doc.fields, key, doc.header_line);
      return to_matrix(parse_list(field.value, field.line), n, field, false);
    };
    out.matrix = Blocks{block("A"), block("B"), block("C"), block("D")};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Point lists

std::vector<Vector> parse_wlist(std::string_view text) {
  const Document doc = split_document(text, "wlist");
  const int n = parse_dim(doc.fields, doc.header_line);
  std::vector<Vector> points;
  for (const Line& l : doc.body) {
    const auto v = parse_list(l.text, l.number);
    if (v.size() != static_cast<std::size_t>(n)) {
      parse_fail(l.number, "expected " + std::to_string(n) + " coordinates");
    }
    Vector p(n);
    for (int j = 0; j < n; ++j) p(j) = v[static_cast<std::size_t>(j)];
    points.push_back(p);
  }
  return points;
}

std::string format_points(std::span<const Vector> points, std::span<const Complex> values) {
  const long n = points.empty() ? 1 : points.front().size();
  std::string out = "# nslct points v1\nn=" + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int j = 0; j < points[i].size(); ++j) {
      out += fmt(points[i](j));
      out += ',';
    }
    append_value(out, values[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Files

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nslct::cli
