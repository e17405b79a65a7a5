#pragma once

#include "ribbonrec/symmetric.hpp"

#include <string>
#include <vector>

namespace ribbonrec {

// One row of the reference table of integrated multicurve counts VN_{g,n}(L;t).
struct Table1Row {
  int g = 0;
  int n = 0;
  std::vector<SymTerm> terms;  // pisq == tsq on every term
};

// Parses the fixture format "g n num den k partition" with '#' comments.
std::vector<Table1Row> parse_table1(const std::string& text);
// The fixture compiled into the library.
const std::vector<Table1Row>& table1_rows();
// Row as a polynomial in Lsq, PiSq, Tsq.
Poly table1_poly(const Table1Row& row);

}  // namespace ribbonrec
