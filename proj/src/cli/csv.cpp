#include "graphene/cli/csv.hpp"

#include <cstdio>
#include <sstream>

namespace graphene::cli {

std::string format_sig17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void CsvWriter::comment(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) os_ << "# " << line << "\n";
}

void CsvWriter::header(const std::vector<std::string>& names) {
  row_cells(names);
}

void CsvWriter::row_cells(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) os_ << ",";
    os_ << cells[i];
  }
  os_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os_ << ",";
    os_ << format_sig17(values[i]);
  }
  os_ << "\n";
}

}  // namespace graphene::cli
