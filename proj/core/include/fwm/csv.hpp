#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace fwm {

// 17 significant digits, '.' decimal point, locale independent.
std::string format_double(double x);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  void row(std::initializer_list<double> values);

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace fwm
