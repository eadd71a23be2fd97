#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "islrc/finite_field.hpp"

namespace islrc {

// Ordered set of row/column indices with nonzero entries.
using Support = std::vector<int>;

// Dense matrix over GF(q). Entries are element indices. Immutable usage is
// the norm after assembly; all query operations are const and pure.
class GfMatrix {
 public:
  GfMatrix(Field field, int rows, int cols);
  GfMatrix(Field field, int rows, int cols, std::vector<Elem> entries);

  static GfMatrix identity(Field field, int n);
  static GfMatrix zero(Field field, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }
  int q() const { return field_->q(); }

  Elem at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, Elem v) { entries_[static_cast<size_t>(i) * cols_ + j] = v; }
  const std::vector<Elem>& entries() const { return entries_; }

  bool operator==(const GfMatrix& other) const;

  GfMatrix transpose() const;
  GfMatrix negate() const;
  GfMatrix multiply(const GfMatrix& other) const;
  GfMatrix hstack(const GfMatrix& right) const;
  GfMatrix vstack(const GfMatrix& below) const;

  Support row_support(int i) const;
  Support col_support(int j) const;
  int row_weight(int i) const;
  int col_weight(int j) const;

  int rank() const;
  GfMatrix rref() const;

  // Basis of the right null space, one vector per row of the result.
  GfMatrix null_space() const;

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Elem> entries_;
};

GfMatrix kronecker(const GfMatrix& a, const GfMatrix& b);

struct Submatrix {
  GfMatrix mat;
  std::vector<int> kept_rows;  // kept row index -> original row index
  std::vector<int> kept_cols;
};

// Removes the given rows and columns; the index maps lead back to the
// original matrix. Throws when the result would be empty.
Submatrix delete_rows_cols(const GfMatrix& m, const std::vector<int>& rows,
                           const std::vector<int>& cols);

// Matrix text format:
//   line 1: `q rows cols`
//   lines 2..rows+1: `cols` space-separated element indices in [0,q)
// Lines end with a single linefeed, no trailing whitespace. Comment lines
// starting with '#' before the header are permitted on read and skipped.
void write_matrix(std::ostream& os, const GfMatrix& m);
GfMatrix read_matrix(std::istream& is);
GfMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const GfMatrix& m,
                       const std::string& header_comment = "");

}  // namespace islrc
