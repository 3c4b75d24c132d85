#pragma once

// Coefficient files:
//   N <half-width>
//   n1 n2 re im
//   ...
// Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hnls/report.hpp"
#include "hnls/spectrum.hpp"

namespace hnls {

inline void write_coeffs(std::ostream& os, const FourierCoeffs& c) {
  os << "N " << c.half_width() << '\n';
  for (const auto& [n, v] : c.entries())
    os << n.n1 << ' ' << n.n2 << ' ' << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
}

inline FourierCoeffs read_coeffs(std::istream& is) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ValidationError("coefficient file: missing 'N <int>' header");
  std::istringstream header(line);
  std::string tag;
  i64 n = 0;
  if (!(header >> tag >> n) || tag != "N" || n < 1)
    throw ValidationError("coefficient file: bad header at line " + std::to_string(line_no));
  FourierCoeffs c(n);
  while (next_line()) {
    std::istringstream row(line);
    i64 n1 = 0, n2 = 0;
    double re = 0.0, im = 0.0;
    std::string extra;
    if (!(row >> n1 >> n2 >> re >> im) || (row >> extra))
      throw ValidationError("coefficient file: malformed entry at line " + std::to_string(line_no));
    if (!c.contains({n1, n2}))
      throw ValidationError("coefficient file: frequency (" + std::to_string(n1) + "," + std::to_string(n2) +
                            ") outside (-N, N]^2 at line " + std::to_string(line_no));
    c.add({n1, n2}, {re, im});
  }
  return c;
}

inline FourierCoeffs read_coeffs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open coefficient file '" + path + "'");
  return read_coeffs(in);
}

inline void write_coeffs_file(const std::string& path, const FourierCoeffs& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_coeffs(out, c);
}

}  // namespace hnls
