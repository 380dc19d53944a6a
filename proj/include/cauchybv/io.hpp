#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cauchybv/common.hpp"

namespace cauchybv {

// Scientific format with 17 significant digits (round-trips a double
// exactly); non-finite values print as nan / inf / -inf.
std::string fmt_double(double v);

// Incrementally assembled CSV document: optional '#' comment lines, one
// header row, data rows.
class Csv {
 public:
  void comment(const std::string& line);
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::size_t ncols_ = 0;
};

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Reads a CSV of doubles: '#' lines are ignored, and a single leading
// non-numeric row (column headers) is skipped.  Every remaining row must
// parse completely.
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path);

}  // namespace cauchybv
