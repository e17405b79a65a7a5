#include "ribbonrec/table1.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ribbonrec {

namespace {

const char* const kEmbedded =
#include "table1_data.inc"
    ;

Partition parse_partition(const std::string& s) {
  Partition p;
  if (s == "-") return p;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) p.push_back(std::stoi(part));
  return p;
}

}  // namespace

std::vector<Table1Row> parse_table1(const std::string& text) {
  std::vector<Table1Row> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    int g, n, k;
    std::string num, den, part;
    if (!(ls >> g >> n >> num >> den >> k >> part))
      throw std::invalid_argument("table1: malformed line " + std::to_string(lineno));
    if (rows.empty() || rows.back().g != g || rows.back().n != n) rows.push_back({g, n, {}});
    SymTerm t;
    t.partition = parse_partition(part);
    t.pisq = k;
    t.tsq = k;
    t.coeff = make_rational(Integer(num), Integer(den));
    rows.back().terms.push_back(std::move(t));
  }
  return rows;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = parse_table1(kEmbedded);
  return rows;
}

Poly table1_poly(const Table1Row& row) { return expand_terms(row.terms, row.n); }

}  // namespace ribbonrec
