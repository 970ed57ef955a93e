#include "isofam/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace isofam::families {

namespace {

void check_even_D(int D) {
  if (D < 0 || D % 2 != 0) {
    throw gf2::DimensionError("D must be even and nonnegative, got " + std::to_string(D));
  }
  if (D > gf2::kMaxDim) {
    throw gf2::DimensionError("D = " + std::to_string(D) + " exceeds 64");
  }
}

bool sorted_contains(const std::vector<Subspace>& v, const Subspace& e) {
  return std::binary_search(v.begin(), v.end(), e, gf2::canonical_less);
}

using SubspaceSet = std::unordered_set<Subspace, gf2::SubspaceHash>;

std::vector<Subspace> sorted(SubspaceSet&& set) {
  std::vector<Subspace> out;
  out.reserve(set.size());
  for (auto it = set.begin(); it != set.end();) {
    auto node = set.extract(it++);
    out.push_back(std::move(node.value()));
  }
  std::sort(out.begin(), out.end(), gf2::canonical_less);
  return out;
}

// One induction step: every T_i(E') + Fe_i for E' in `previous`.
void extend(int D, const std::vector<Subspace>& previous, SubspaceSet& into) {
  for (int i = 1; i <= D; ++i) {
    for (const Subspace& prev : previous) {
      Subspace e(D);
      for (Word r : prev.rows()) e.insert(embed_T_bits(D, i, r));
      e.insert(Word{1} << (i - 1));
      into.insert(std::move(e));
    }
  }
}

}  // namespace

std::string to_string(const Line& line) {
  return "(" + std::to_string(line.a) + "," + std::to_string(line.b) + ")";
}

LineClasses lines_G(int ambient_dim) {
  check_even_D(ambient_dim);
  LineClasses out;
  for (int a = 1; a <= ambient_dim; ++a) {
    for (int b = a; b <= ambient_dim; ++b) {
      Line l{a, b};
      (l.parity() == 0 ? out.g0 : out.g1).push_back(l);
    }
  }
  return out;
}

std::vector<Line> lines_in(const Subspace& e) {
  std::vector<Line> out;
  const int D = e.ambient_dim();
  for (int a = 1; a <= D; ++a) {
    for (int b = a; b <= D; ++b) {
      Line l{a, b};
      if (e.contains_bits(l.bits())) out.push_back(l);
    }
  }
  return out;
}

Classification classify_by_lines(const Subspace& e) {
  const auto lines = lines_in(e);
  if (static_cast<int>(lines.size()) != e.dim()) return {};
  Subspace sum(e.ambient_dim());
  for (const Line& l : lines) sum.insert(l.bits());
  if (sum != e) return {};

  std::optional<Line> g0;
  for (const Line& l : lines) {
    if (l.parity() != 0) continue;
    if (g0) return {};
    g0 = l;
  }
  if (!g0) return {Shape::kF0, std::nullopt};
  return {Shape::kF1, g0};
}

Word embed_T_bits(int ambient_dim, int i, Word v) {
  Word out = 0;
  const int source_dim = ambient_dim - 2;
  for (int a = 1; a <= source_dim; ++a) {
    if (((v >> (a - 1)) & 1u) == 0) continue;
    if (a < i - 1) {
      out ^= Word{1} << (a - 1);
    } else if (a == i - 1) {
      out ^= Word{7} << (a - 1);
    } else {
      out ^= Word{1} << (a + 1);
    }
  }
  return out;
}

BitVector embed_T(int i, const BitVector& v) {
  const int D = v.dim() + 2;
  if (D > gf2::kMaxDim) throw gf2::DimensionError("embed_T: target dimension exceeds 64");
  if (i < 1 || i > D) {
    throw std::out_of_range("embed_T: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(D) + "]");
  }
  return BitVector(D, embed_T_bits(D, i, v.bits()));
}

Subspace embed_T(int i, const Subspace& e) {
  const int D = e.ambient_dim() + 2;
  if (D > gf2::kMaxDim) throw gf2::DimensionError("embed_T: target dimension exceeds 64");
  if (i < 1 || i > D) {
    throw std::out_of_range("embed_T: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(D) + "]");
  }
  Subspace out(D);
  for (Word r : e.rows()) out.insert(embed_T_bits(D, i, r));
  return out;
}

bool FamilyTable::in_f0(const Subspace& e) const { return sorted_contains(f0, e); }
bool FamilyTable::in_f1(const Subspace& e) const { return sorted_contains(f1, e); }
bool FamilyTable::in_f0_lagrangian(const Subspace& e) const {
  return sorted_contains(f0_lagrangian, e);
}
bool FamilyTable::in_f0_sub(const Subspace& e) const { return sorted_contains(f0_sub, e); }

std::vector<FamilyTable> build_families_upto(int max_D) {
  check_even_D(max_D);
  std::vector<FamilyTable> tables;
  tables.reserve(static_cast<std::size_t>(max_D / 2 + 1));

  FamilyTable base;
  base.D = 0;
  base.f0 = {Subspace::zero(0)};
  base.f0_lagrangian = base.f0;
  tables.push_back(std::move(base));

  for (int D = 2; D <= max_D; D += 2) {
    const FamilyTable& prev = tables.back();
    SubspaceSet f0{Subspace::zero(D)};
    SubspaceSet f1{gf2::span_bits(D, std::vector<Word>{gf2::low_mask(D)})};
    extend(D, prev.f0, f0);
    extend(D, prev.f1, f1);

    FamilyTable t;
    t.D = D;
    t.f0 = sorted(std::move(f0));
    t.f1 = sorted(std::move(f1));
    for (const Subspace& e : t.f0) {
      (e.dim() == D / 2 ? t.f0_lagrangian : t.f0_sub).push_back(e);
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

FamilyTable build_families(int D) { return std::move(build_families_upto(D).back()); }

Subspace xi(const FamilyTable& table, const Subspace& e) {
  if (e.ambient_dim() != table.D || !table.in_f1(e)) {
    throw std::invalid_argument("xi: " + gf2::to_string(e) + " is not in F1(V_" +
                                std::to_string(table.D) + ")");
  }
  const Classification c = classify_by_lines(e);
  if (c.shape != Shape::kF1) {
    throw std::logic_error("xi: member of F1 without a unique G0 line: " + gf2::to_string(e));
  }
  Subspace e0(e.ambient_dim());
  for (const Line& l : lines_in(e)) {
    if (l != *c.distinguished) e0.insert(l.bits());
  }
  return e0;
}

XiMap::XiMap(const FamilyTable& table) : D_(table.D) {
  pairs_.reserve(table.f1.size());
  for (const Subspace& e : table.f1) {
    Subspace e0 = xi(table, e);
    const std::size_t k = pairs_.size();
    if (!inverse_.emplace(e0, k).second) {
      throw std::logic_error("xi is not injective: " + gf2::to_string(e) + " and " +
                             gf2::to_string(pairs_[inverse_.at(e0)].first) + " both map to " +
                             gf2::to_string(e0));
    }
    forward_.emplace(e, k);
    pairs_.emplace_back(e, std::move(e0));
  }
}

const Subspace& XiMap::image(const Subspace& e) const {
  auto it = forward_.find(e);
  if (it == forward_.end()) {
    throw std::invalid_argument("xi: " + gf2::to_string(e) + " is not in F1(V_" +
                                std::to_string(D_) + ")");
  }
  return pairs_[it->second].second;
}

const Subspace& XiMap::preimage(const Subspace& e0) const {
  auto it = inverse_.find(e0);
  if (it == inverse_.end()) {
    throw std::invalid_argument("xi_inverse: " + gf2::to_string(e0) +
                                " is not an image of F1(V_" + std::to_string(D_) + ")");
  }
  return pairs_[it->second].first;
}

Subspace xi_inverse(const XiMap& map, const Subspace& e0) { return map.preimage(e0); }

}  // namespace isofam::families
