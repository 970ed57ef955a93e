#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isofam/gf2.hpp"

namespace isofam::families {

using gf2::BitVector;
using gf2::Subspace;
using gf2::Word;

// Line spanned by e_a + e_{a+1} + ... + e_b, 1 <= a <= b <= D.
struct Line {
  int a = 1;
  int b = 1;

  // 0 when b - a is odd (class G0), 1 when b - a is even (class G1).
  int parity() const { return (b - a) % 2 == 0 ? 1 : 0; }
  Word bits() const { return gf2::low_mask(b - a + 1) << (a - 1); }
  BitVector vector(int ambient_dim) const { return BitVector(ambient_dim, bits()); }

  friend auto operator<=>(const Line&, const Line&) = default;
};

std::string to_string(const Line& line);

struct LineClasses {
  std::vector<Line> g0;
  std::vector<Line> g1;
};

// All consecutive-sum lines of V_D split by parity of b - a.
LineClasses lines_G(int ambient_dim);

// B_E: the consecutive-sum lines contained in E, sorted by (a, b).
std::vector<Line> lines_in(const Subspace& e);

enum class Shape { kF0, kF1, kOther };

struct Classification {
  Shape shape = Shape::kOther;
  std::optional<Line> distinguished;  // L_E, set only for kF1
};

// Total on arbitrary subspaces. E is F0-shaped when it is the direct sum of
// its lines and none of them is in G0; F1-shaped when it is the direct sum of
// its lines and exactly one of them (L_E) is in G0.
Classification classify_by_lines(const Subspace& e);

// T_i : V_{D-2} -> V_D with D = v.dim() + 2.
BitVector embed_T(int i, const BitVector& v);
Word embed_T_bits(int ambient_dim, int i, Word v);
Subspace embed_T(int i, const Subspace& e);

// The two inductively generated families for one even D, members sorted by
// gf2::canonical_less.
struct FamilyTable {
  int D = 0;
  std::vector<Subspace> f0;
  std::vector<Subspace> f1;
  std::vector<Subspace> f0_lagrangian;  // dim == D/2
  std::vector<Subspace> f0_sub;         // dim <  D/2

  bool in_f0(const Subspace& e) const;
  bool in_f1(const Subspace& e) const;
  bool in_f0_lagrangian(const Subspace& e) const;
  bool in_f0_sub(const Subspace& e) const;
};

// Tables for D = 0, 2, ..., max_D; element k holds D = 2k.
std::vector<FamilyTable> build_families_upto(int max_D);
FamilyTable build_families(int D);

// Xi_D(E) = direct sum of the lines of B_E other than L_E.
Subspace xi(const FamilyTable& table, const Subspace& e);

// Forward and inverse Xi tables for one D.
class XiMap {
 public:
  explicit XiMap(const FamilyTable& table);

  int D() const { return D_; }
  const Subspace& image(const Subspace& e) const;
  const Subspace& preimage(const Subspace& e0) const;
  // Pairs (E, Xi(E)) in canonical order of E.
  const std::vector<std::pair<Subspace, Subspace>>& pairs() const { return pairs_; }

 private:
  int D_;
  std::vector<std::pair<Subspace, Subspace>> pairs_;
  std::unordered_map<Subspace, std::size_t, gf2::SubspaceHash> forward_;
  std::unordered_map<Subspace, std::size_t, gf2::SubspaceHash> inverse_;
};

Subspace xi_inverse(const XiMap& map, const Subspace& e0);

}  // namespace isofam::families
