#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isofam/families.hpp"
#include "isofam/gf2.hpp"

namespace isofam::noncrossing {

using gf2::BitVector;
using gf2::Subspace;
using gf2::Word;

// e_{a,b} = e_a + e_{a+2} + ... + e_b with a <= b both odd.
struct Arc {
  int a = 1;
  int b = 1;

  Word bits() const;
  int length() const { return b - a; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& arc);

// True iff [a, b] and [a', b'] are disjoint or strictly nested.
bool arcs_compatible(const Arc& x, const Arc& y);
bool is_noncrossing(const std::vector<Arc>& arcs);

// A noncrossing set of arcs over V_D, held sorted by (a, b).
class ArcSequence {
 public:
  explicit ArcSequence(int D) : ArcSequence(D, {}) {}
  // Throws std::invalid_argument on a bad arc, a repeated arc or a crossing.
  ArcSequence(int D, std::vector<Arc> arcs);

  int D() const { return D_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  bool empty() const { return arcs_.empty(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const ArcSequence&, const ArcSequence&) = default;
  friend auto operator<=>(const ArcSequence& x, const ArcSequence& y) {
    if (auto c = x.D_ <=> y.D_; c != 0) return c;
    if (auto c = x.arcs_.size() <=> y.arcs_.size(); c != 0) return c;
    return x.arcs_ <=> y.arcs_;
  }

 private:
  int D_;
  std::vector<Arc> arcs_;
};

std::string to_string(const ArcSequence& seq);

// Z_D: all noncrossing arc sets, sorted by (size, arcs).
std::vector<ArcSequence> enumerate_Z(int D);

// sigma_i : Z*_{D-2} -> Z*_D.
Arc sigma(int D, int i, const Arc& arc);
// Sigma_i : Z_{D-2} -> Z_D; appends e_i when i is odd.
ArcSequence big_sigma(int i, const ArcSequence& seq);

struct Decomposition {
  int i;
  ArcSequence previous;  // over D - 2
};

// Picks the arc of minimal b - a (smallest a on ties) and returns the unique
// (i, seq') with big_sigma(i, seq') == seq.
Decomposition decompose(const ArcSequence& seq);

// cT_i : V^1_{D-2} -> V^1_D with D = v.dim() + 2.
BitVector embed_cT(int i, const BitVector& v);
Word embed_cT_bits(int D, int i, Word v);
Subspace embed_cT(int i, const Subspace& e);

// Mask of the odd coordinates e_1, e_3, ..., e_{D-1}.
Word odd_mask(int D);
Word even_mask(int D);

// C(V^1_D): members sorted by gf2::canonical_less, ambient dimension D.
struct CollectionC {
  int D = 0;
  std::vector<Subspace> members;

  bool contains(const Subspace& e) const;
  std::vector<Subspace> grade(int s) const;
};

std::vector<CollectionC> build_C_upto(int max_D);
CollectionC build_C(int D);

Subspace theta(const ArcSequence& seq);

// Theta_D tabulated over Z_D with an inverse lookup.
class ThetaMap {
 public:
  explicit ThetaMap(int D);

  int D() const { return D_; }
  const std::vector<ArcSequence>& domain() const { return domain_; }
  const ArcSequence& preimage(const Subspace& e) const;

 private:
  int D_;
  std::vector<ArcSequence> domain_;
  std::unordered_map<Subspace, std::size_t, gf2::SubspaceHash> inverse_;
};

ArcSequence theta_inverse(const ThetaMap& map, const Subspace& e);

// E^! = {x in V^0_D : <x, E> = 0}.
Subspace shriek(const Subspace& e);
// E + E^! and E' cap V^1_D without any family membership checks.
Subspace lagrangian_sum(const Subspace& e);
Subspace odd_part(const Subspace& e);

Subspace to_lagrangian(const CollectionC& c, const Subspace& e);
Subspace from_lagrangian(const families::FamilyTable& table, const Subspace& e);

// The noncrossing partition of {0, ..., d} whose blocks are joined by the
// arcs: e_{a,b} links (a - 1) / 2 with (b + 1) / 2. Returned as block labels
// (smallest element of each block).
std::vector<int> to_partition(const ArcSequence& seq);
// Every block of `fine` lies inside a block of `coarse`.
bool refines(const std::vector<int>& fine, const std::vector<int>& coarse);

}  // namespace isofam::noncrossing
