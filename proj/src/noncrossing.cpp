#include "isofam/noncrossing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace isofam::noncrossing {

namespace {

void check_even_D(int D) {
  if (D < 0 || D % 2 != 0 || D > gf2::kMaxDim) {
    throw gf2::DimensionError("D must be even in [0, 64], got " + std::to_string(D));
  }
}

void check_index(int D, int i, const char* what) {
  if (D < 2 || i < 1 || i > D) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) +
                            " outside [1, " + std::to_string(D) + "]");
  }
}

void check_arc(int D, const Arc& arc) {
  if (arc.a % 2 == 0 || arc.b % 2 == 0 || arc.a < 1 || arc.a > arc.b || arc.b > D - 1) {
    throw std::invalid_argument("arc " + to_string(arc) + " is not valid for D = " +
                                std::to_string(D));
  }
}

// Noncrossing arc sets on the odd points lo, lo + 2, ..., hi. At most one arc
// starts at lo; anything it covers is strictly nested inside it.
void generate(int lo, int hi, std::vector<std::vector<Arc>>& out) {
  if (lo > hi) {
    out.emplace_back();
    return;
  }
  generate(lo + 2, hi, out);
  for (int b = lo; b <= hi; b += 2) {
    std::vector<std::vector<Arc>> inside;
    std::vector<std::vector<Arc>> after;
    generate(lo + 2, b - 2, inside);
    generate(b + 2, hi, after);
    for (const auto& in : inside) {
      for (const auto& rest : after) {
        std::vector<Arc> arcs{Arc{lo, b}};
        arcs.insert(arcs.end(), in.begin(), in.end());
        arcs.insert(arcs.end(), rest.begin(), rest.end());
        out.push_back(std::move(arcs));
      }
    }
  }
}

}  // namespace

Word Arc::bits() const {
  Word w = 0;
  for (int k = a; k <= b; k += 2) w |= Word{1} << (k - 1);
  return w;
}

std::string to_string(const Arc& arc) {
  return "[" + std::to_string(arc.a) + "," + std::to_string(arc.b) + "]";
}

bool arcs_compatible(const Arc& x, const Arc& y) {
  if (x.b < y.a || y.b < x.a) return true;
  if (x.a < y.a && y.b < x.b) return true;
  if (y.a < x.a && x.b < y.b) return true;
  return false;
}

bool is_noncrossing(const std::vector<Arc>& arcs) {
  for (std::size_t n = 0; n < arcs.size(); ++n) {
    for (std::size_t m = n + 1; m < arcs.size(); ++m) {
      if (!arcs_compatible(arcs[n], arcs[m])) return false;
    }
  }
  return true;
}

ArcSequence::ArcSequence(int D, std::vector<Arc> arcs) : D_(D), arcs_(std::move(arcs)) {
  check_even_D(D);
  for (const Arc& arc : arcs_) check_arc(D, arc);
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw std::invalid_argument("repeated arc in " + to_string(*this));
  }
  if (!is_noncrossing(arcs_)) {
    throw std::invalid_argument("crossing arcs in " + to_string(*this));
  }
}

std::string to_string(const ArcSequence& seq) {
  std::string out = "[";
  for (std::size_t k = 0; k < seq.arcs().size(); ++k) {
    if (k) out += ',';
    out += to_string(seq.arcs()[k]);
  }
  return out + "]";
}

std::vector<ArcSequence> enumerate_Z(int D) {
  check_even_D(D);
  std::vector<std::vector<Arc>> raw;
  generate(1, D - 1, raw);
  std::vector<ArcSequence> out;
  out.reserve(raw.size());
  for (auto& arcs : raw) out.emplace_back(D, std::move(arcs));
  std::sort(out.begin(), out.end());
  return out;
}

Arc sigma(int D, int i, const Arc& arc) {
  check_index(D, i, "sigma");
  check_arc(D - 2, arc);
  if (i <= arc.a) return {arc.a + 2, arc.b + 2};
  if (i <= arc.b + 1) return {arc.a, arc.b + 2};
  return arc;
}

ArcSequence big_sigma(int i, const ArcSequence& seq) {
  const int D = seq.D() + 2;
  check_index(D, i, "big_sigma");
  std::vector<Arc> arcs;
  arcs.reserve(seq.arcs().size() + 1);
  for (const Arc& arc : seq.arcs()) arcs.push_back(sigma(D, i, arc));
  if (i % 2 == 1) arcs.push_back({i, i});
  return ArcSequence(D, std::move(arcs));
}

Decomposition decompose(const ArcSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("decompose: empty sequence");
  const auto& arcs = seq.arcs();
  // arcs are sorted by a, so min_element keeps the smallest a on ties
  const Arc pivot = *std::min_element(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return x.length() < y.length();
  });
  const int i = pivot.length() == 0 ? pivot.a : pivot.a + 1;

  std::vector<Arc> previous;
  for (const Arc& arc : arcs) {
    if (i % 2 == 1 && arc == pivot) continue;
    if (arc.a == i || arc.b == i || (i % 2 == 0 && arc.a == i + 1)) {
      throw std::logic_error("decompose: index " + std::to_string(i) + " touches arc " +
                             to_string(arc) + " in " + to_string(seq));
    }
    if (i <= arc.a - 2) {
      previous.push_back({arc.a - 2, arc.b - 2});
    } else if (arc.a < i && i <= arc.b - 1) {
      previous.push_back({arc.a, arc.b - 2});
    } else {
      previous.push_back(arc);
    }
  }
  return {i, ArcSequence(seq.D() - 2, std::move(previous))};
}

Word odd_mask(int D) { return gf2::low_mask(D) & 0x5555555555555555ULL; }
Word even_mask(int D) { return gf2::low_mask(D) & 0xAAAAAAAAAAAAAAAAULL; }

Word embed_cT_bits(int D, int i, Word v) {
  Word out = 0;
  for (int k = 1; k <= D - 2; k += 2) {
    if (((v >> (k - 1)) & 1u) == 0) continue;
    if (k <= i - 2) {
      out ^= Word{1} << (k - 1);
    } else if (k >= i) {
      out ^= Word{1} << (k + 1);
    } else {
      // k == i - 1, so i is even
      out ^= Word{5} << (k - 1);
    }
  }
  return out;
}

BitVector embed_cT(int i, const BitVector& v) {
  const int D = v.dim() + 2;
  check_even_D(D);
  check_index(D, i, "embed_cT");
  if (v.bits() & ~odd_mask(v.dim())) {
    throw std::invalid_argument("embed_cT: " + v.to_string() + " is not in V^1");
  }
  return BitVector(D, embed_cT_bits(D, i, v.bits()));
}

Subspace embed_cT(int i, const Subspace& e) {
  const int D = e.ambient_dim() + 2;
  check_even_D(D);
  check_index(D, i, "embed_cT");
  Subspace out(D);
  for (Word r : e.rows()) {
    if (r & ~odd_mask(e.ambient_dim())) {
      throw std::invalid_argument("embed_cT: " + gf2::to_string(e) + " is not inside V^1");
    }
    out.insert(embed_cT_bits(D, i, r));
  }
  return out;
}

bool CollectionC::contains(const Subspace& e) const {
  return std::binary_search(members.begin(), members.end(), e, gf2::canonical_less);
}

std::vector<Subspace> CollectionC::grade(int s) const {
  std::vector<Subspace> out;
  for (const Subspace& e : members) {
    if (e.dim() == s) out.push_back(e);
  }
  return out;
}

std::vector<CollectionC> build_C_upto(int max_D) {
  check_even_D(max_D);
  std::vector<CollectionC> out;
  out.push_back({0, {Subspace::zero(0)}});
  for (int D = 2; D <= max_D; D += 2) {
    const auto& prev = out.back().members;
    std::unordered_set<Subspace, gf2::SubspaceHash> set{Subspace::zero(D)};
    for (int i = 1; i <= D; ++i) {
      for (const Subspace& p : prev) {
        Subspace e(D);
        for (Word r : p.rows()) e.insert(embed_cT_bits(D, i, r));
        if (i % 2 == 1) e.insert(Word{1} << (i - 1));
        set.insert(std::move(e));
      }
    }
    CollectionC c{D, {set.begin(), set.end()}};
    std::sort(c.members.begin(), c.members.end(), gf2::canonical_less);
    out.push_back(std::move(c));
  }
  return out;
}

CollectionC build_C(int D) { return std::move(build_C_upto(D).back()); }

Subspace theta(const ArcSequence& seq) {
  Subspace out(seq.D());
  for (const Arc& arc : seq.arcs()) out.insert(arc.bits());
  return out;
}

ThetaMap::ThetaMap(int D) : D_(D), domain_(enumerate_Z(D)) {
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    Subspace e = theta(domain_[k]);
    if (!inverse_.emplace(e, k).second) {
      throw std::logic_error("theta is not injective: " + to_string(domain_[k]) + " and " +
                             to_string(domain_[inverse_.at(e)]) + " both map to " +
                             gf2::to_string(e));
    }
  }
}

const ArcSequence& ThetaMap::preimage(const Subspace& e) const {
  auto it = inverse_.find(e);
  if (it == inverse_.end()) {
    throw std::invalid_argument("theta_inverse: " + gf2::to_string(e) + " is not in C(V^1_" +
                                std::to_string(D_) + ")");
  }
  return domain_[it->second];
}

ArcSequence theta_inverse(const ThetaMap& map, const Subspace& e) { return map.preimage(e); }

Subspace shriek(const Subspace& e) {
  const int D = e.ambient_dim();
  check_even_D(D);
  for (Word r : e.rows()) {
    if (r & ~odd_mask(D)) {
      throw std::invalid_argument("shriek: " + gf2::to_string(e) + " is not inside V^1");
    }
  }
  // column j holds the pairings of e_{2j} against the basis of E
  std::vector<Word> images;
  for (int j = 2; j <= D; j += 2) {
    Word img = 0;
    for (int k = 0; k < e.dim(); ++k) {
      if (gf2::form_bits(Word{1} << (j - 1), e.rows()[k])) img |= Word{1} << k;
    }
    images.push_back(img);
  }
  Subspace out(D);
  for (Word combo : gf2::kernel(images)) {
    Word x = 0;
    for (std::size_t j = 0; j < images.size(); ++j) {
      if ((combo >> j) & 1u) x |= Word{1} << (2 * j + 1);
    }
    out.insert(x);
  }
  return out;
}

Subspace lagrangian_sum(const Subspace& e) { return gf2::subspace_sum(e, shriek(e)); }

Subspace odd_part(const Subspace& e) {
  const int D = e.ambient_dim();
  Subspace odd(D);
  for (int k = 1; k <= D; k += 2) odd.insert(Word{1} << (k - 1));
  return gf2::intersect(e, odd);
}

Subspace to_lagrangian(const CollectionC& c, const Subspace& e) {
  if (e.ambient_dim() != c.D || !c.contains(e)) {
    throw std::invalid_argument("to_lagrangian: " + gf2::to_string(e) + " is not in C(V^1_" +
                                std::to_string(c.D) + ")");
  }
  return lagrangian_sum(e);
}

Subspace from_lagrangian(const families::FamilyTable& table, const Subspace& e) {
  if (e.ambient_dim() != table.D || !table.in_f0_lagrangian(e)) {
    throw std::invalid_argument("from_lagrangian: " + gf2::to_string(e) +
                                " is not a Lagrangian member of F0(V_" +
                                std::to_string(table.D) + ")");
  }
  return odd_part(e);
}

std::vector<int> to_partition(const ArcSequence& seq) {
  const int d = seq.D() / 2;
  std::vector<int> parent(static_cast<std::size_t>(d + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& arc : seq.arcs()) {
    int u = find((arc.a - 1) / 2);
    int v = find((arc.b + 1) / 2);
    if (u > v) std::swap(u, v);
    parent[v] = u;
  }
  std::vector<int> label(parent.size());
  for (std::size_t x = 0; x < parent.size(); ++x) label[x] = find(static_cast<int>(x));
  return label;
}

bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  if (fine.size() != coarse.size()) return false;
  for (std::size_t x = 0; x < fine.size(); ++x) {
    if (coarse[x] != coarse[fine[x]]) return false;
  }
  return true;
}

}  // namespace isofam::noncrossing
