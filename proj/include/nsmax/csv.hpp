#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsmax {

// Locale-independent, deterministic float formatting for CSV output.
inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Minimal RFC-4180-style writer: header row, comma separator, '\n' line ends,
// quoting only when a cell contains a comma, quote, or newline.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) { add_row(std::move(header)); }

  void add_row(std::vector<std::string> cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += ',';
      line += escape(cells[i]);
    }
    line += '\n';
    body_ += line;
  }

  const std::string& str() const { return body_; }

  void write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("CsvWriter: cannot open " + path);
    out << body_;
  }

 private:
  static std::string escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  }

  std::string body_;
};

}  // namespace nsmax
