#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isofam::gf2 {

using Word = std::uint64_t;

inline constexpr int kMaxDim = 64;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mask with the low `n` bits set; valid for 0 <= n <= 64.
constexpr Word low_mask(int n) {
  return n >= kMaxDim ? ~Word{0} : ((Word{1} << n) - 1);
}

// Index (1-based) of the first nonzero coordinate of a nonzero word.
inline int leading_index(Word w) { return __builtin_ctzll(w) + 1; }

// An element of F^D. Bit i-1 holds the coefficient of e_i.
class BitVector {
 public:
  BitVector() = default;
  BitVector(int dim, Word bits);

  // e_i in F^dim, 1-based.
  static BitVector unit(int dim, int i);
  // Parses a '0'/'1' string; leftmost character is the coefficient of e_1.
  static BitVector parse(std::string_view text);

  int dim() const { return dim_; }
  Word bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool coeff(int i) const { return (bits_ >> (i - 1)) & 1u; }
  int weight() const { return __builtin_popcountll(bits_); }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int dim_ = 0;
  Word bits_ = 0;
};

BitVector vec_add(const BitVector& x, const BitVector& y);
inline BitVector operator+(const BitVector& x, const BitVector& y) { return vec_add(x, y); }

// Tridiagonal alternating form: <e_i, e_j> = 1 iff |i - j| = 1.
int symplectic_form(const BitVector& x, const BitVector& y);

// Word-level form on the low `dim` bits; no validation.
inline int form_bits(Word x, Word y) {
  Word t = (x & (y >> 1)) ^ ((x >> 1) & y);
  return __builtin_popcountll(t) & 1;
}

// A subspace of F^D stored as its reduced row echelon basis. Rows are sorted
// by pivot (first nonzero coordinate) ascending and each pivot column is
// zero in every other row, so equal subspaces have identical storage.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dim);

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace whole(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  std::span<const Word> rows() const { return rows_; }
  std::vector<BitVector> basis() const;

  // Adds a vector to the span, keeping the basis reduced. Returns false if
  // the vector was already contained.
  bool insert(Word v);
  bool contains_bits(Word v) const;
  Word reduce(Word v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  std::vector<Word> rows_;
};

Subspace span(std::span<const BitVector> vectors);
Subspace span(int ambient_dim, std::span<const BitVector> vectors);
Subspace span_bits(int ambient_dim, std::span<const Word> vectors);
Subspace subspace_sum(const Subspace& e, const Subspace& l);
bool contains(const Subspace& e, const BitVector& x);
bool equals(const Subspace& e, const Subspace& f);
bool is_subspace_of(const Subspace& e, const Subspace& f);
Subspace intersect(const Subspace& e, const Subspace& f);
bool is_isotropic(const Subspace& e);

// Basis of {c in F^n : sum_k c_k images[k] = 0}, where n = images.size().
// Kernel vectors are returned as words with bit k-1 the coefficient c_k.
std::vector<Word> kernel(std::span<const Word> images);

// Lexicographic comparison of '0'/'1' strings (e_1 leftmost) without building
// the strings: the first differing coordinate decides.
int compare_bitstrings(Word x, Word y);

// Canonical total order: by dimension, then row by row on the bitstring form.
bool canonical_less(const Subspace& a, const Subspace& b);

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept;
};

std::string to_string(const Subspace& s);

}  // namespace isofam::gf2
