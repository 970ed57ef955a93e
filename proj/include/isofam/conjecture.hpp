#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "isofam/gf2.hpp"
#include "isofam/noncrossing.hpp"

namespace isofam::conjecture {

using gf2::Subspace;
using gf2::Word;

inline constexpr int kMaxRank = 5;

// A collection of subgroups of F^d, canonical and duplicate-free.
struct SuppliedFamily {
  int d = 0;
  std::vector<Subspace> subgroups;
};

SuppliedFamily make_family(int d, std::vector<Subspace> subgroups);
SuppliedFamily parse_family(const nlohmann::json& j);
SuppliedFamily load_family(const std::filesystem::path& path);
nlohmann::json to_json(const SuppliedFamily& fam);

// d x d matrix over F acting on column vectors; row r is a word whose bit
// j - 1 is the (r, j) entry.
struct Matrix {
  int d = 0;
  std::vector<Word> rows;

  static Matrix identity(int d);
  Word apply(Word x) const;
  bool invertible() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Subspace apply(const Matrix& m, const Subspace& s);
SuppliedFamily apply(const Matrix& m, const SuppliedFamily& fam);

// Invertible matrices in increasing order of their row tuples. The identity
// is the first one.
void for_each_invertible(int d, const std::function<bool(const Matrix&)>& visit);

// C(V^1_{2d}) in the coordinates e_{2k-1} -> k-th coordinate of F^d.
SuppliedFamily target_family(int d);
SuppliedFamily target_family(const noncrossing::CollectionC& c);

struct Fingerprint {
  std::map<int, int> dims;                   // dimension -> count
  std::vector<std::pair<int, int>> profile;  // sorted (dim, #other members containing it)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const SuppliedFamily& fam);

struct MatchResult {
  bool found = false;
  std::optional<Matrix> witness;
  std::uint64_t tried = 0;
  std::string reason;
};

// Searches GL(d, F) for g with g(fam) = C(V^1_{2d}); returns the first such g
// in row-tuple order.
MatchResult gl_match(const SuppliedFamily& fam);

nlohmann::json to_json(const MatchResult& result);

}  // namespace isofam::conjecture
