#include "isofam/gf2.hpp"

#include <algorithm>
#include <functional>

namespace isofam::gf2 {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) {
    throw DimensionError("ambient dimension " + std::to_string(dim) + " outside [0, 64]");
  }
}

void check_same(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

void check_even(int dim, const char* what) {
  if (dim % 2 != 0) {
    throw DimensionError(std::string(what) + ": symplectic space needs even dimension, got " +
                         std::to_string(dim));
  }
}

}  // namespace

BitVector::BitVector(int dim, Word bits) : dim_(dim), bits_(bits) {
  check_dim(dim);
  if ((bits & ~low_mask(dim)) != 0) {
    throw DimensionError("bits set beyond ambient dimension " + std::to_string(dim));
  }
}

BitVector BitVector::unit(int dim, int i) {
  if (i < 1 || i > dim) {
    throw DimensionError("basis index " + std::to_string(i) + " outside [1, " +
                         std::to_string(dim) + "]");
  }
  return BitVector(dim, Word{1} << (i - 1));
}

BitVector BitVector::parse(std::string_view text) {
  const int dim = static_cast<int>(text.size());
  check_dim(dim);
  Word bits = 0;
  for (int i = 0; i < dim; ++i) {
    if (text[i] == '1') {
      bits |= Word{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bitstring contains '" + std::string(1, text[i]) + "'");
    }
  }
  return BitVector(dim, bits);
}

std::string BitVector::to_string() const {
  std::string out(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i) {
    if ((bits_ >> i) & 1u) out[i] = '1';
  }
  return out;
}

BitVector vec_add(const BitVector& x, const BitVector& y) {
  check_same(x.dim(), y.dim(), "vec_add");
  return BitVector(x.dim(), x.bits() ^ y.bits());
}

int symplectic_form(const BitVector& x, const BitVector& y) {
  check_same(x.dim(), y.dim(), "symplectic_form");
  check_even(x.dim(), "symplectic_form");
  return form_bits(x.bits(), y.bits());
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) { check_dim(ambient_dim); }

Subspace Subspace::whole(int ambient_dim) {
  Subspace s(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) s.rows_.push_back(Word{1} << i);
  return s;
}

std::vector<BitVector> Subspace::basis() const {
  std::vector<BitVector> out;
  out.reserve(rows_.size());
  for (Word r : rows_) out.emplace_back(ambient_, r);
  return out;
}

Word Subspace::reduce(Word v) const {
  for (Word r : rows_) {
    if (v & r & (~r + 1)) v ^= r;
  }
  return v;
}

bool Subspace::contains_bits(Word v) const { return reduce(v) == 0; }

bool Subspace::insert(Word v) {
  if ((v & ~low_mask(ambient_)) != 0) {
    throw DimensionError("vector outside ambient dimension " + std::to_string(ambient_));
  }
  v = reduce(v);
  if (v == 0) return false;
  const Word pivot = v & (~v + 1);
  for (Word& r : rows_) {
    if (r & pivot) r ^= v;
  }
  auto pos = std::find_if(rows_.begin(), rows_.end(),
                          [pivot](Word r) { return (r & (~r + 1)) > pivot; });
  rows_.insert(pos, v);
  return true;
}

Subspace span(std::span<const BitVector> vectors) {
  if (vectors.empty()) {
    throw DimensionError("span of an empty list needs an explicit ambient dimension");
  }
  Subspace s(vectors.front().dim());
  for (const auto& v : vectors) {
    check_same(s.ambient_dim(), v.dim(), "span");
    s.insert(v.bits());
  }
  return s;
}

Subspace span(int ambient_dim, std::span<const BitVector> vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) {
    check_same(ambient_dim, v.dim(), "span");
    s.insert(v.bits());
  }
  return s;
}

Subspace span_bits(int ambient_dim, std::span<const Word> vectors) {
  Subspace s(ambient_dim);
  for (Word v : vectors) s.insert(v);
  return s;
}

Subspace subspace_sum(const Subspace& e, const Subspace& l) {
  check_same(e.ambient_dim(), l.ambient_dim(), "subspace_sum");
  Subspace s = e.dim() >= l.dim() ? e : l;
  for (Word r : (e.dim() >= l.dim() ? l : e).rows()) s.insert(r);
  return s;
}

bool contains(const Subspace& e, const BitVector& x) {
  check_same(e.ambient_dim(), x.dim(), "contains");
  return e.contains_bits(x.bits());
}

bool equals(const Subspace& e, const Subspace& f) {
  check_same(e.ambient_dim(), f.ambient_dim(), "equals");
  return e == f;
}

bool is_subspace_of(const Subspace& e, const Subspace& f) {
  check_same(e.ambient_dim(), f.ambient_dim(), "is_subspace_of");
  return std::all_of(e.rows().begin(), e.rows().end(),
                     [&f](Word r) { return f.contains_bits(r); });
}

std::vector<Word> kernel(std::span<const Word> images) {
  if (images.size() > static_cast<std::size_t>(kMaxDim)) {
    throw DimensionError("kernel: more than 64 generators");
  }
  struct Row {
    Word image;
    Word combo;
  };
  std::vector<Row> echelon;
  std::vector<Word> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    Row row{images[k], Word{1} << k};
    for (const Row& e : echelon) {
      if (row.image & e.image & (~e.image + 1)) {
        row.image ^= e.image;
        row.combo ^= e.combo;
      }
    }
    if (row.image == 0) {
      out.push_back(row.combo);
      continue;
    }
    const Word pivot = row.image & (~row.image + 1);
    for (Row& e : echelon) {
      if (e.image & pivot) {
        e.image ^= row.image;
        e.combo ^= row.combo;
      }
    }
    echelon.push_back(row);
  }
  return out;
}

Subspace intersect(const Subspace& e, const Subspace& f) {
  check_same(e.ambient_dim(), f.ambient_dim(), "intersect");
  std::vector<Word> images(e.rows().begin(), e.rows().end());
  images.insert(images.end(), f.rows().begin(), f.rows().end());
  Subspace out(e.ambient_dim());
  for (Word combo : kernel(images)) {
    Word v = 0;
    for (int k = 0; k < e.dim(); ++k) {
      if ((combo >> k) & 1u) v ^= e.rows()[k];
    }
    out.insert(v);
  }
  return out;
}

bool is_isotropic(const Subspace& e) {
  check_even(e.ambient_dim(), "is_isotropic");
  const auto rows = e.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (form_bits(rows[i], rows[j])) return false;
    }
  }
  return true;
}

int compare_bitstrings(Word x, Word y) {
  const Word diff = x ^ y;
  if (diff == 0) return 0;
  return (x & diff & (~diff + 1)) ? 1 : -1;
}

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (int k = 0; k < a.dim(); ++k) {
    const int c = compare_bitstrings(a.rows()[k], b.rows()[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
  std::size_t h = std::hash<int>{}(s.ambient_dim());
  for (Word r : s.rows()) {
    h ^= std::hash<Word>{}(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Subspace& s) {
  std::string out = "{\"D\":" + std::to_string(s.ambient_dim()) + ",\"basis\":[";
  bool first = true;
  for (const auto& b : s.basis()) {
    if (!first) out += ',';
    first = false;
    out += '"' + b.to_string() + '"';
  }
  out += "]}";
  return out;
}

}  // namespace isofam::gf2
