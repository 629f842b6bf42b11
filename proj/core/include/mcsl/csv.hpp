#ifndef MCSL_CSV_HPP
#define MCSL_CSV_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace mcsl {

inline std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Comment-header + rows CSV assembly with locale-independent formatting.
class CsvBuilder {
 public:
  void comment(const std::string& line) { os_ << "# " << line << "\n"; }
  void raw(const std::string& text) { os_ << text; }
  void header(const std::vector<std::string>& cols) { line(cols); }
  void row(const std::vector<double>& vals) {
    for (size_t i = 0; i < vals.size(); ++i) os_ << (i ? "," : "") << csv_num(vals[i]);
    os_ << "\n";
  }
  void line(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << "\n";
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

}  // namespace mcsl

#endif
