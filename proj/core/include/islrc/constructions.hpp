#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "islrc/lrc_core.hpp"

namespace islrc {

struct CodeParams {
  int n = 0;
  int k = 0;
  int d = 0;
  int r = 0;
  int t = 0;
  int q = 0;
};

// How the 1 entries of the 0/1 pattern are written into the target field.
struct FillSpec {
  enum class Mode { None, Uniform, Random };
  Mode mode = Mode::None;
  Field field;          // target field; GF(2) when absent
  Elem elem = 1;        // uniform mode, must be nonzero
  std::uint64_t seed = 0;  // random mode: independent uniform nonzero entries

  static FillSpec uniform(Field f, Elem e);
  static FillSpec random(Field f, std::uint64_t seed);

  std::string describe() const;
};

struct ConstructedCode {
  StandardParityCheck check;
  CodeParams declared;
  int construction = 0;  // 1 or 2
  int p = 0;
  int m = 0;
  std::string fill;
};

// Default cap on the information length p^{2m}.
constexpr int kDefaultSizeCap = 4096;

// Permutation matrix marking where element c appears in the additive
// Cayley table of f.
GfMatrix indicator_block(const FieldSpec& f, Elem c);

// Affine Cayley-table family: P1 is the p^{2m}-square block matrix whose
// (i,j) block is the indicator of entry (i,j) of the multiplicative table.
// Parameters (2p^{2m}, p^{2m}, p^m, p^m), distance p^m + 1, rate 1/2.
ConstructedCode construct1(int p, int m, const FillSpec& fill = {},
                           int size_cap = kDefaultSizeCap);

// Projective-style extension of construct1: parameters
// (2(p^{2m}+p^m+1), p^{2m}+p^m+1, p^m+1, p^m+1), distance p^m + 2, rate 1/2.
ConstructedCode construct2(int p, int m, const FillSpec& fill = {},
                           int size_cap = kDefaultSizeCap);

// H = [P | I], first l rows of P designated as P1.
StandardParityCheck assemble_H(const GfMatrix& p, int l);

// Header comment emitted with constructed matrices, e.g.
// `construction=1 p=5 m=1 n=50 k=25 r=5 t=5 d_claimed=6 q=2`.
std::string construction_header(const ConstructedCode& code);

}  // namespace islrc
