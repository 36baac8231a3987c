#pragma once

#include <string>
#include <vector>

#include "sphclif/pi_operator.hpp"

namespace sphclif::cli {

/// Parses "re", "re+imi" or "re-imi" (no whitespace), e.g. "0.5",
/// "0.001+0.7i", "-1.2-0.3i". Throws std::invalid_argument on anything
/// else.
Complex parse_alpha(const std::string& s);

/// Parses a resolution ladder "Nt:Np[,Nt:Np...]".
std::vector<std::pair<int, int>> parse_resolutions(const std::string& s);

/// 17-significant-digit decimal formatting (shortest round-trip not
/// required; reruns must be byte-identical).
std::string fmt(double x);
std::string fmt(Complex z);

struct CsvWriter {
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void comment(const std::string& line);
  void row(const std::vector<std::string>& fields);

 private:
  void* file_;
};

}  // namespace sphclif::cli
