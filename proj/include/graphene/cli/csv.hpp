#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphene::cli {

// Round-trip-safe decimal rendering with 17 significant digits ("%.16e").
std::string format_sig17(double v);

// Minimal CSV emitter: UTF-8, comma separated, LF line endings, '#' comment
// lines before or between rows.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void comment(const std::string& text);  // one line per embedded newline
  void header(const std::vector<std::string>& names);
  void row_cells(const std::vector<std::string>& cells);
  void row(const std::vector<double>& values);

 private:
  std::ostream& os_;
};

}  // namespace graphene::cli
