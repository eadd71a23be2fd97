#include "islrc/constructions.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace islrc {

FillSpec FillSpec::uniform(Field f, Elem e) {
  FillSpec s;
  s.mode = Mode::Uniform;
  s.field = std::move(f);
  s.elem = e;
  return s;
}

FillSpec FillSpec::random(Field f, std::uint64_t seed) {
  FillSpec s;
  s.mode = Mode::Random;
  s.field = std::move(f);
  s.seed = seed;
  return s;
}

std::string FillSpec::describe() const {
  std::ostringstream oss;
  switch (mode) {
    case Mode::None: oss << "binary"; break;
    case Mode::Uniform: oss << "uniform(q=" << field->q() << ",e=" << elem << ")"; break;
    case Mode::Random: oss << "random(q=" << field->q() << ",seed=" << seed << ")"; break;
  }
  return oss.str();
}

GfMatrix indicator_block(const FieldSpec& f, Elem c) {
  if (c >= f.q()) throw std::invalid_argument("element out of field range");
  Field gf2 = make_field_shared(2, 1);
  GfMatrix m(gf2, f.q(), f.q());
  for (int i = 0; i < f.q(); ++i)
    for (int j = 0; j < f.q(); ++j)
      if (f.add(static_cast<Elem>(i), static_cast<Elem>(j)) == c) m.set(i, j, 1);
  return m;
}

namespace {

// 0/1 pattern of Construction 1 over GF(2): block (i,j) is the additive
// indicator of the multiplicative-table entry (i,j).
GfMatrix construct1_pattern(const FieldSpec& f) {
  const int g = f.q();
  Field gf2 = make_field_shared(2, 1);
  GfMatrix p1(gf2, g * g, g * g);
  for (int bi = 0; bi < g; ++bi)
    for (int bj = 0; bj < g; ++bj) {
      Elem c = f.mul(static_cast<Elem>(bi), static_cast<Elem>(bj));
      GfMatrix block = indicator_block(f, c);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
          p1.set(bi * g + i, bj * g + j, block.at(i, j));
    }
  return p1;
}

GfMatrix apply_fill(const GfMatrix& pattern, const FillSpec& fill) {
  if (fill.mode == FillSpec::Mode::None) return pattern;
  if (!fill.field) throw std::invalid_argument("fill requires a target field");
  const int q = fill.field->q();
  if (fill.mode == FillSpec::Mode::Uniform && (fill.elem == 0 || fill.elem >= q))
    throw std::invalid_argument("fill element must be a nonzero field element");
  GfMatrix out(fill.field, pattern.rows(), pattern.cols());
  std::mt19937_64 rng(fill.seed);
  for (int i = 0; i < pattern.rows(); ++i)
    for (int j = 0; j < pattern.cols(); ++j) {
      if (pattern.at(i, j) == 0) continue;
      if (fill.mode == FillSpec::Mode::Uniform) {
        out.set(i, j, fill.elem);
      } else {
        out.set(i, j, static_cast<Elem>(1 + rng() % (q - 1)));
      }
    }
  return out;
}

ConstructedCode finish(GfMatrix p1, int construction, int p, int m, int r,
                       int claimed_d, const FillSpec& fill) {
  const int k = p1.cols();
  StandardParityCheck check = assemble_H(p1, p1.rows());
  ConstructedCode code{std::move(check),
                       CodeParams{2 * k, k, claimed_d, r, r, p1.q()},
                       construction, p, m, fill.describe()};
  IslrcCertificate cert = check_islrc(code.check, r, r);
  if (!cert.passed || cert.r_observed != r || cert.t_observed != r)
    throw std::logic_error("constructed code failed its locality certificate");
  return code;
}

}  // namespace

ConstructedCode construct1(int p, int m, const FillSpec& fill, int size_cap) {
  FieldSpec f = make_field(p, m);
  const long long k = static_cast<long long>(f.q()) * f.q();
  if (k > size_cap) throw std::invalid_argument("p^{2m} exceeds the size cap");
  GfMatrix p1 = apply_fill(construct1_pattern(f), fill);
  return finish(std::move(p1), 1, p, m, f.q(), f.q() + 1, fill);
}

ConstructedCode construct2(int p, int m, const FillSpec& fill, int size_cap) {
  FieldSpec f = make_field(p, m);
  const int g = f.q();
  if (static_cast<long long>(g) * g > size_cap)
    throw std::invalid_argument("p^{2m} exceeds the size cap");

  Field gf2 = make_field_shared(2, 1);
  GfMatrix base = construct1_pattern(f);

  GfMatrix ones_row_g(gf2, 1, g);
  for (int j = 0; j < g; ++j) ones_row_g.set(0, j, 1);
  GfMatrix ones_col_g = ones_row_g.transpose();

  // Top block row: [ ones_{g+1} | zeros_{g^2} ].
  GfMatrix top(gf2, 1, (g + 1) + g * g);
  for (int j = 0; j < g + 1; ++j) top.set(0, j, 1);

  GfMatrix bottom_left = kronecker(GfMatrix::identity(gf2, g + 1), ones_col_g);
  GfMatrix bottom_right = kronecker(GfMatrix::identity(gf2, g), ones_row_g).vstack(base);
  GfMatrix p1 = top.vstack(bottom_left.hstack(bottom_right));

  p1 = apply_fill(p1, fill);
  return finish(std::move(p1), 2, p, m, g + 1, g + 2, fill);
}

StandardParityCheck assemble_H(const GfMatrix& p, int l) {
  if (l > p.rows()) throw std::invalid_argument("l exceeds the row count of P");
  GfMatrix h = p.hstack(GfMatrix::identity(p.field(), p.rows()));
  return StandardParityCheck(std::move(h), l);
}

std::string construction_header(const ConstructedCode& code) {
  std::ostringstream oss;
  oss << "construction=" << code.construction << " p=" << code.p
      << " m=" << code.m << " n=" << code.declared.n << " k=" << code.declared.k
      << " r=" << code.declared.r << " t=" << code.declared.t
      << " d_claimed=" << code.declared.d << " q=" << code.declared.q;
  return oss.str();
}

}  // namespace islrc
