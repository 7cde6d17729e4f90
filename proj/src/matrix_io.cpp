#include "braidkit/matrix_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace braidkit {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream out;
  out << "{\n  \"rows\": " << m.rows() << ",\n  \"cols\": " << m.cols() << ",\n  \"entries\": [";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << (r == 0 ? "\n    " : ",\n    ");
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ", ";
      out << '[' << format_double(m(r, c).real()) << ", " << format_double(m(r, c).imag()) << ']';
    }
  }
  out << "\n  ]\n}\n";
  return out.str();
}

namespace {

Eigen::Index read_extent(const json& doc, const char* key) {
  if (!doc.contains(key)) throw MatrixFormatError(std::string("matrix document: missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw MatrixFormatError(std::string("matrix document: '") + key + "' must be a positive integer");
  return static_cast<Eigen::Index>(v.get<long long>());
}

std::string where(Eigen::Index k, Eigen::Index cols) {
  std::ostringstream s;
  s << "entry " << k << " (row " << k / cols << ", column " << k % cols << ")";
  return s.str();
}

} // namespace

ComplexMatrix parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MatrixFormatError(std::string("matrix document: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MatrixFormatError("matrix document: top level must be an object");
  const Eigen::Index rows = read_extent(doc, "rows");
  const Eigen::Index cols = read_extent(doc, "cols");
  if (!doc.contains("entries") || !doc.at("entries").is_array())
    throw MatrixFormatError("matrix document: missing array field 'entries'");
  const auto& entries = doc.at("entries");
  const auto expected = static_cast<std::size_t>(rows * cols);
  if (entries.size() != expected) {
    std::ostringstream msg;
    msg << "matrix document: declared " << rows << "x" << cols << " needs " << expected
        << " entries, found " << entries.size();
    if (entries.size() < expected) msg << " (short by " << expected - entries.size() << ")";
    else msg << " (" << entries.size() - expected << " extra)";
    throw MatrixFormatError(msg.str());
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw MatrixFormatError("matrix document: " + where(k, cols) + " must be [re, im]");
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw MatrixFormatError("matrix document: non-finite value at " + where(k, cols));
    m(k / cols, k % cols) = Complex(re, im);
  }
  return m;
}

void save_matrix(const ComplexMatrix& m, const std::filesystem::path& path) {
  require_finite(m, "save_matrix");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << format_matrix(m);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const MatrixFormatError& e) {
    throw MatrixFormatError(path.string() + ": " + e.what());
  }
}

std::string sweep_csv_header(int local_dim) {
  std::string h = "theta,c_closed";
  for (int m = 0; m < local_dim; ++m)
    for (int n = 0; n < local_dim; ++n) h += ",c" + std::to_string(m) + std::to_string(n);
  return h + ",max_abs_diff";
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> rows, int local_dim) {
  out << sweep_csv_header(local_dim) << '\n';
  for (const auto& r : rows) {
    if (r.concurrence_numeric.size() != std::size_t(local_dim) * local_dim)
      throw DimensionError("write_sweep_csv: record has wrong number of columns");
    out << format_double(r.theta) << ',' << format_double(r.concurrence_closed);
    for (double c : r.concurrence_numeric) out << ',' << format_double(c);
    out << ',' << format_double(r.max_abs_diff) << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MatrixFormatError("sweep CSV: empty input");
  const auto header_fields = std::count(line.begin(), line.end(), ',') + 1;
  if (header_fields < 4 || line.rfind("theta,c_closed,", 0) != 0)
    throw MatrixFormatError("sweep CSV: unexpected header '" + line + "'");
  const auto numeric = static_cast<std::size_t>(header_fields - 3);

  std::vector<SweepRecord> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> values;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p <= end) {
      const char* comma = std::find(p, end, ',');
      double v = 0.0;
      const auto res = std::from_chars(p, comma, v);
      if (res.ec != std::errc{} || res.ptr != comma)
        throw MatrixFormatError("sweep CSV: bad number on line " + std::to_string(lineno));
      values.push_back(v);
      p = comma + 1;
    }
    if (values.size() != numeric + 3)
      throw MatrixFormatError("sweep CSV: wrong field count on line " + std::to_string(lineno));
    SweepRecord rec;
    rec.theta = values[0];
    rec.concurrence_closed = values[1];
    rec.concurrence_numeric.assign(values.begin() + 2, values.end() - 1);
    rec.max_abs_diff = values.back();
    rows.push_back(std::move(rec));
  }
  return rows;
}

} // namespace braidkit
