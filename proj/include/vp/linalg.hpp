#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vp {

// Sparse integer row, sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<int, mpz_class>>;
using SparseQRow = std::vector<std::pair<int, mpq_class>>;

// Incremental row echelon form over Z (fraction-free). Each stored row has a
// distinct leading column; a lower column index is a higher pivot priority,
// so the non-pivot columns of a fully built echelon are the latest columns
// that cannot be eliminated.
class Echelon {
public:
  explicit Echelon(int ncols = 0) : pivot_row_(ncols, -1) {}

  int ncols() const { return static_cast<int>(pivot_row_.size()); }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Adds a row; returns true if it increased the rank.
  bool add(SparseRow r);
  bool add(const SparseQRow& r);
  // Exact normal form of r modulo the row space, supported on non-pivot columns.
  SparseQRow reduce(const SparseQRow& r) const;
  bool in_span(const SparseQRow& r) const { return reduce(r).empty(); }

  const std::vector<SparseRow>& rows() const { return rows_; }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  std::vector<int> non_pivot_columns() const;

private:
  // Reduces r in place; if scale is given it is multiplied by s with r_out = s * r_in - (row combination).
  void reduce_int(SparseRow& r, mpq_class* scale) const;

  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
};

// Clears denominators: returns an integer row proportional to r.
SparseRow to_integer_row(const SparseQRow& r);

}  // namespace vp
