#ifndef TAUT_TABLES_HPP
#define TAUT_TABLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "taut/secants.hpp"
#include "taut/taut_ring.hpp"

namespace taut {

/// Reference relation for one (genus, g^r_d) entry of the plane-curve (r = 2)
/// and space-curve (r = 3) tables, as a primitive integer vector.
struct GoldenRow {
  int table;                 // 1 = plane curves, 2 = space curves
  LinearSystemSignature system;
  long pencil_degree;        // reference degree d' of the induced pencil
  std::vector<std::pair<std::vector<long>, long>> relation;
};

const std::vector<GoldenRow>& golden_rows();

TautPolynomial golden_polynomial(const GoldenRow& row);

struct TableRow {
  long genus;
  LinearSystemSignature system;
  TautPolynomial raw_relation;     // generate_relation at s = d - 2r + 1
  long pencil_degree;
  TautPolynomial reduced_relation; // modulo the pencil's vanishing components
};

TableRow build_table_row(const LinearSystemSignature& s);

enum class TableMatch { reduced, raw, mismatch };

struct TableCheck {
  const GoldenRow* golden;
  TableRow row;
  TableMatch match;
  bool pencil_matches;
  bool ok() const { return match != TableMatch::mismatch && pencil_matches; }
};

/// Checks every golden row with genus <= genus_max. A row matches when the
/// reduced relation equals the reference one; failing that, when the
/// unreduced relation does (some reference rows are stored unreduced).
std::vector<TableCheck> check_tables(long genus_max);

std::string to_string(TableMatch m);

} // namespace taut

#endif // TAUT_TABLES_HPP
