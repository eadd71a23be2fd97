#include "islrc/gf_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace islrc {

GfMatrix::GfMatrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * cols, 0) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

GfMatrix::GfMatrix(Field field, int rows, int cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (entries_.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match dimensions");
  for (Elem e : entries_)
    if (e >= field_->q()) throw std::invalid_argument("entry out of field range");
}

GfMatrix GfMatrix::identity(Field field, int n) {
  GfMatrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GfMatrix GfMatrix::zero(Field field, int rows, int cols) {
  return GfMatrix(std::move(field), rows, cols);
}

bool GfMatrix::operator==(const GfMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         *field_ == *other.field_ && entries_ == other.entries_;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

GfMatrix GfMatrix::negate() const {
  GfMatrix t(field_, rows_, cols_, entries_);
  for (Elem& e : t.entries_) e = field_->neg(e);
  return t;
}

GfMatrix GfMatrix::multiply(const GfMatrix& other) const {
  if (!(*field_ == *other.field_)) throw std::invalid_argument("field mismatch");
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  const FieldSpec& f = *field_;
  GfMatrix out(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      Elem a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        Elem b = other.at(k, j);
        if (b == 0) continue;
        out.set(i, j, f.add(out.at(i, j), f.mul(a, b)));
      }
    }
  }
  return out;
}

GfMatrix GfMatrix::hstack(const GfMatrix& right) const {
  if (!(*field_ == *right.field_)) throw std::invalid_argument("field mismatch");
  if (rows_ != right.rows_) throw std::invalid_argument("row count mismatch");
  GfMatrix out(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int j = 0; j < right.cols_; ++j) out.set(i, cols_ + j, right.at(i, j));
  }
  return out;
}

GfMatrix GfMatrix::vstack(const GfMatrix& below) const {
  if (!(*field_ == *below.field_)) throw std::invalid_argument("field mismatch");
  if (cols_ != below.cols_) throw std::invalid_argument("column count mismatch");
  GfMatrix out(field_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, below.at(i, j));
  return out;
}

Support GfMatrix::row_support(int i) const {
  if (i < 0 || i >= rows_) throw std::out_of_range("row index");
  Support s;
  for (int j = 0; j < cols_; ++j)
    if (at(i, j) != 0) s.push_back(j);
  return s;
}

Support GfMatrix::col_support(int j) const {
  if (j < 0 || j >= cols_) throw std::out_of_range("column index");
  Support s;
  for (int i = 0; i < rows_; ++i)
    if (at(i, j) != 0) s.push_back(i);
  return s;
}

int GfMatrix::row_weight(int i) const { return static_cast<int>(row_support(i).size()); }
int GfMatrix::col_weight(int j) const { return static_cast<int>(col_support(j).size()); }

GfMatrix GfMatrix::rref() const {
  const FieldSpec& f = *field_;
  GfMatrix m(*this);
  int pr = 0;
  for (int pc = 0; pc < cols_ && pr < rows_; ++pc) {
    int pivot = -1;
    for (int i = pr; i < rows_; ++i)
      if (m.at(i, pc) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != pr)
      for (int j = 0; j < cols_; ++j) std::swap(m.entries_[static_cast<size_t>(pivot) * cols_ + j],
                                                m.entries_[static_cast<size_t>(pr) * cols_ + j]);
    Elem s = f.inv(m.at(pr, pc));
    if (s != 1)
      for (int j = pc; j < cols_; ++j) m.set(pr, j, f.mul(m.at(pr, j), s));
    for (int i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      Elem c = m.at(i, pc);
      if (c == 0) continue;
      for (int j = pc; j < cols_; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(c, m.at(pr, j))));
    }
    ++pr;
  }
  return m;
}

int GfMatrix::rank() const {
  GfMatrix r = rref();
  int rank = 0;
  for (int i = 0; i < rows_; ++i)
    if (r.row_weight(i) > 0) ++rank;
  return rank;
}

GfMatrix GfMatrix::null_space() const {
  const FieldSpec& f = *field_;
  GfMatrix r = rref();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols_, false);
  for (int i = 0; i < rows_; ++i) {
    int j = 0;
    while (j < cols_ && r.at(i, j) == 0) ++j;
    if (j == cols_) break;
    pivot_col_of_row.push_back(j);
    is_pivot[j] = true;
  }
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  if (free_cols.empty())
    throw std::domain_error("null space is trivial");
  GfMatrix basis(field_, static_cast<int>(free_cols.size()), cols_);
  for (size_t v = 0; v < free_cols.size(); ++v) {
    int fc = free_cols[v];
    basis.set(static_cast<int>(v), fc, 1);
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
      basis.set(static_cast<int>(v), pivot_col_of_row[i],
                f.neg(r.at(static_cast<int>(i), fc)));
  }
  return basis;
}

GfMatrix kronecker(const GfMatrix& a, const GfMatrix& b) {
  if (!(*a.field() == *b.field())) throw std::invalid_argument("field mismatch");
  const FieldSpec& f = *a.field();
  GfMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      Elem c = a.at(ia, ja);
      if (c == 0) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out.set(ia * b.rows() + ib, ja * b.cols() + jb, f.mul(c, b.at(ib, jb)));
    }
  return out;
}

Submatrix delete_rows_cols(const GfMatrix& m, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  std::vector<bool> drop_row(m.rows(), false), drop_col(m.cols(), false);
  for (int r : rows) {
    if (r < 0 || r >= m.rows()) throw std::out_of_range("row index");
    drop_row[r] = true;
  }
  for (int c : cols) {
    if (c < 0 || c >= m.cols()) throw std::out_of_range("column index");
    drop_col[c] = true;
  }
  std::vector<int> kept_rows, kept_cols;
  for (int i = 0; i < m.rows(); ++i)
    if (!drop_row[i]) kept_rows.push_back(i);
  for (int j = 0; j < m.cols(); ++j)
    if (!drop_col[j]) kept_cols.push_back(j);
  if (kept_rows.empty() || kept_cols.empty())
    throw std::invalid_argument("deletion leaves an empty matrix");
  GfMatrix sub(m.field(), static_cast<int>(kept_rows.size()),
               static_cast<int>(kept_cols.size()));
  for (size_t i = 0; i < kept_rows.size(); ++i)
    for (size_t j = 0; j < kept_cols.size(); ++j)
      sub.set(static_cast<int>(i), static_cast<int>(j), m.at(kept_rows[i], kept_cols[j]));
  return Submatrix{std::move(sub), std::move(kept_rows), std::move(kept_cols)};
}

void write_matrix(std::ostream& os, const GfMatrix& m) {
  os << m.q() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
}

namespace {

[[noreturn]] void format_error(int line, int col, const std::string& what) {
  std::ostringstream oss;
  oss << "matrix format error at line " << line << ", column " << col << ": " << what;
  throw std::runtime_error(oss.str());
}

Field field_of_order(int q) {
  if (q < 2) throw std::runtime_error("field order must be at least 2");
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p > q) throw std::runtime_error("not a prime power");
  }
  int m = 0, v = q;
  while (v % p == 0) { v /= p; ++m; }
  if (v != 1) throw std::runtime_error("field order is not a prime power");
  return make_field_shared(p, m);
}

}  // namespace

GfMatrix read_matrix(std::istream& is) {
  std::string line;
  int lineno = 0;
  // Skip leading comment lines.
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    break;
  }
  if (line.empty() && !is) format_error(lineno, 1, "missing header line");
  std::istringstream hdr(line);
  long long q = 0, rows = 0, cols = 0;
  if (!(hdr >> q >> rows >> cols)) format_error(lineno, 1, "expected `q rows cols`");
  std::string extra;
  if (hdr >> extra) format_error(lineno, static_cast<int>(line.size()), "trailing tokens in header");
  if (q < 2 || q > kMaxFieldOrder) format_error(lineno, 1, "field order out of range");
  if (rows <= 0 || cols <= 0) format_error(lineno, 1, "non-positive dimensions");

  Field field = field_of_order(static_cast<int>(q));
  GfMatrix m(field, static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < rows; ++i) {
    if (!std::getline(is, line)) format_error(lineno + 1, 1, "unexpected end of file");
    ++lineno;
    std::istringstream row(line);
    for (int j = 0; j < cols; ++j) {
      long long v;
      if (!(row >> v)) format_error(lineno, j + 1, "expected element index");
      if (v < 0 || v >= q) format_error(lineno, j + 1, "element out of field range");
      m.set(i, j, static_cast<Elem>(v));
    }
    if (row >> extra) format_error(lineno, static_cast<int>(cols) + 1, "trailing tokens in row");
  }
  return m;
}

GfMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_matrix(in);
}

void write_matrix_file(const std::string& path, const GfMatrix& m,
                       const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (!header_comment.empty()) out << "# " << header_comment << '\n';
  write_matrix(out, m);
}

}  // namespace islrc
