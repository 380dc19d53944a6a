#include "cauchybv/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cauchybv {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void Csv::comment(const std::string& line) {
  text_ += "# ";
  text_ += line;
  text_ += '\n';
}

void Csv::header(const std::vector<std::string>& cols) {
  ncols_ = cols.size();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) text_ += ',';
    text_ += cols[i];
  }
  text_ += '\n';
}

void Csv::row(const std::vector<std::string>& cells) {
  if (ncols_ && cells.size() != ncols_)
    throw ConfigError("csv row width does not match header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw ConfigError("write failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_numeric_csv(
    const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first_data_line = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    bool ok = true;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string cell = line.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
          ++used;
        if (used != cell.size()) ok = false;
        row.push_back(v);
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok || comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!ok) {
      if (first_data_line) {
        first_data_line = false;  // header row
        continue;
      }
      throw ConfigError("non-numeric csv row in " + path.string() + ": " + line);
    }
    first_data_line = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cauchybv
