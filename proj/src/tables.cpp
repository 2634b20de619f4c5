#include "taut/tables.hpp"

namespace taut {

const std::vector<GoldenRow>& golden_rows() {
  // Reference rows verbatim. Plane-curve rows g=5 and g=7 are given before
  // reduction by the induced pencil; every other row after it.
  static const std::vector<GoldenRow> rows = {
      {1, {2, 5, 5}, 3, {{{0, 2}, 3}, {{1, 1}, 1}}},
      {1, {2, 5, 6}, 4, {{{0, 2}, 3}, {{1, 1}, 1}}},
      {1, {2, 6, 7}, 4, {{{0, 3}, 2}, {{1, 2}, 1}}},
      {1, {2, 7, 8}, 5, {{{1, 3}, 8}, {{2, 2}, 3}}},
      {1, {2, 6, 8}, 4, {{{1, 2}, 1}}},
      {1, {2, 7, 9}, 5, {{{1, 3}, 8}, {{2, 2}, 3}}},
      {1, {2, 6, 9}, 4, {{{1, 2}, 1}}},
      {2, {3, 7, 6}, 3, {{{0, 1, 1}, 1}}},
      {2, {3, 8, 7}, 4, {{{0, 1, 2}, 9}, {{1, 1, 1}, 1}}},
      {2, {3, 8, 8}, 4, {{{0, 1, 2}, 9}, {{1, 1, 1}, 1}}},
      {2, {3, 9, 9}, 5, {{{0, 1, 3}, 8}, {{0, 2, 2}, 3}, {{1, 1, 2}, 2}}},
      {2, {3, 8, 9}, 4, {{{0, 1, 2}, 9}, {{1, 1, 1}, 1}}},
  };
  return rows;
}

TautPolynomial golden_polynomial(const GoldenRow& row) {
  TautPolynomial p(row.system.g);
  for (const auto& [idx, c] : row.relation)
    p.add_term(TautMonomial(row.system.g, idx), Rational(c));
  return p;
}

TableRow build_table_row(const LinearSystemSignature& s) {
  s.validate();
  const long pencil = induced_pencil_degree(s);
  TautPolynomial raw = generate_relation(s.g, s.r, s.d, s.d - 2 * s.r + 1);
  TautPolynomial reduced = reduce_mod_vanishing(raw, cvg_vanishing_indices(pencil, s.g));
  return {s.g, s, std::move(raw), pencil, std::move(reduced)};
}

std::vector<TableCheck> check_tables(long genus_max) {
  std::vector<TableCheck> out;
  for (const auto& golden : golden_rows()) {
    if (golden.system.g > genus_max)
      continue;
    TableRow row = build_table_row(golden.system);
    const TautPolynomial expected = golden_polynomial(golden);
    TableMatch m = TableMatch::mismatch;
    if (row.reduced_relation == expected)
      m = TableMatch::reduced;
    else if (row.raw_relation == expected)
      m = TableMatch::raw;
    bool pencil_ok = row.pencil_degree == golden.pencil_degree;
    out.push_back({&golden, std::move(row), m, pencil_ok});
  }
  return out;
}

std::string to_string(TableMatch m) {
  switch (m) {
  case TableMatch::reduced: return "reduced";
  case TableMatch::raw: return "raw";
  case TableMatch::mismatch: return "mismatch";
  }
  return "mismatch";
}

} // namespace taut
