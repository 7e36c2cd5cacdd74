#pragma once

// Datum descriptions as flat key-value text with [section] headers.
//
//   [group]        abelian = 2,2            (or order = N plus rowK = ... lines)
//                  labels  = 1,c,b,bc       (optional)
//   [characters]   charK   = 1, -1, ...     (optional for abelian groups)
//   [irreps]       irrepK_E = a,b; c,d      (matrix of element E in row K)
//   [datum]        chi = 3   g = b   alpha = 0
//
// Cyclotomic literals are sums of terms  a/b * zeta(N)^k  (each factor
// optional), e.g.  -1/2*zeta(3)^2 + 1/2.

#include "rankone/hopf.hpp"

#include <stdexcept>
#include <string>

namespace rankone {

// Syntax problem in a config document; carries the 1-based line number.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

Cyclotomic parse_cyclotomic(const std::string& text);

// Parse and validate; ConfigError for syntax, std::invalid_argument for a
// datum the validator rejects.
DatumPtr load_datum_text(const std::string& text);
DatumPtr load_datum_file(const std::string& path);

}  // namespace rankone
