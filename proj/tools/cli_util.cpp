#include "cli_util.hpp"

#include <cstdio>
#include <stdexcept>

namespace sphclif::cli {

Complex parse_alpha(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("alpha: empty string");
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("alpha: whitespace not allowed");
    }
  }
  auto parse_num = [](const std::string& t) {
    std::size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("alpha: trailing characters");
    return v;
  };
  // find the sign that separates re from im (skip a leading sign and any
  // exponent signs)
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;  // keep the last such sign: handles "1e-3+0.7i"
    }
  }
  if (s.back() == 'i') {
    if (split == std::string::npos) {
      // pure imaginary "0.7i"
      return Complex(0.0, parse_num(s.substr(0, s.size() - 1)));
    }
    const double re = parse_num(s.substr(0, split));
    std::string imp = s.substr(split, s.size() - split - 1);
    if (imp == "+" ) imp = "1";
    if (imp == "-") imp = "-1";
    return Complex(re, parse_num(imp));
  }
  if (split != std::string::npos && s.find('i') != std::string::npos) {
    throw std::invalid_argument("alpha: malformed complex literal");
  }
  return Complex(parse_num(s), 0.0);
}

std::vector<std::pair<int, int>> parse_resolutions(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    const std::string item = s.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("resolutions: expected Nt:Np");
    }
    const int nt = std::stoi(item.substr(0, colon));
    const int np = std::stoi(item.substr(colon + 1));
    if (nt < 2 || np < 4) throw std::invalid_argument("resolutions: Nt>=2, Np>=4");
    out.emplace_back(nt, np);
    start = comma + 1;
    if (comma == s.size()) break;
  }
  if (out.empty()) throw std::invalid_argument("resolutions: empty list");
  return out;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

CsvWriter::CsvWriter(const std::string& path) {
  if (path.empty() || path == "-") {
    file_ = stdout;
  } else {
    file_ = std::fopen(path.c_str(), "wb");
    if (file_ == nullptr) throw std::runtime_error("cannot open output file: " + path);
  }
}

CsvWriter::~CsvWriter() {
  auto* f = static_cast<std::FILE*>(file_);
  if (f != stdout) std::fclose(f);
}

void CsvWriter::comment(const std::string& line) {
  std::fprintf(static_cast<std::FILE*>(file_), "# %s\n", line.c_str());
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  auto* f = static_cast<std::FILE*>(file_);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string& s = fields[i];
    const bool quote = s.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      std::fputc('"', f);
      for (char c : s) {
        if (c == '"') std::fputc('"', f);
        std::fputc(c, f);
      }
      std::fputc('"', f);
    } else {
      std::fputs(s.c_str(), f);
    }
    std::fputc(i + 1 == fields.size() ? '\n' : ',', f);
  }
}

}  // namespace sphclif::cli
