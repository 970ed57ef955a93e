#include "isofam/conjecture.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace isofam::conjecture {

namespace {

using SubspaceSet = std::unordered_set<Subspace, gf2::SubspaceHash>;

void check_rank(int d) {
  if (d < 1 || d > kMaxRank) {
    throw std::invalid_argument("rank d = " + std::to_string(d) + " outside [1, " +
                                std::to_string(kMaxRank) + "]");
  }
}

// Backtracking over rows: row r ranges over words outside the span of the
// rows before it, in increasing order. `spanned` has bit v set iff v lies in
// that span.
bool extend_rows(Matrix& m, std::uint64_t spanned, int r,
                 const std::function<bool(const Matrix&)>& visit) {
  if (r == m.d) return visit(m);
  const Word size = Word{1} << m.d;
  for (Word row = 1; row < size; ++row) {
    if ((spanned >> row) & 1u) continue;
    std::uint64_t next = spanned;
    for (Word v = 0; v < size; ++v) {
      if ((spanned >> v) & 1u) next |= std::uint64_t{1} << (v ^ row);
    }
    m.rows[r] = row;
    if (!extend_rows(m, next, r + 1, visit)) return false;
  }
  return true;
}

}  // namespace

SuppliedFamily make_family(int d, std::vector<Subspace> subgroups) {
  for (const auto& s : subgroups) {
    if (s.ambient_dim() != d) {
      throw gf2::DimensionError("subgroup " + gf2::to_string(s) + " is not inside F^" +
                                std::to_string(d));
    }
  }
  std::sort(subgroups.begin(), subgroups.end(), gf2::canonical_less);
  subgroups.erase(std::unique(subgroups.begin(), subgroups.end()), subgroups.end());
  return {d, std::move(subgroups)};
}

SuppliedFamily parse_family(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("subgroups") ||
      !j.at("subgroups").is_array()) {
    throw std::invalid_argument("family JSON needs {\"d\": int, \"subgroups\": [[...], ...]}");
  }
  const int d = j.at("d").get<int>();
  if (d < 1 || d > gf2::kMaxDim) {
    throw std::invalid_argument("family JSON: d = " + std::to_string(d) + " is not positive");
  }
  std::vector<Subspace> subgroups;
  for (const auto& gens : j.at("subgroups")) {
    if (!gens.is_array()) throw std::invalid_argument("each subgroup must be a list of bitstrings");
    Subspace s(d);
    for (const auto& g : gens) {
      const auto v = gf2::BitVector::parse(g.get<std::string>());
      if (v.dim() != d) {
        throw gf2::DimensionError("generator \"" + v.to_string() + "\" has length " +
                                  std::to_string(v.dim()) + ", expected d = " + std::to_string(d));
      }
      s.insert(v.bits());
    }
    subgroups.push_back(std::move(s));
  }
  return make_family(d, std::move(subgroups));
}

SuppliedFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": malformed JSON: " + e.what());
  }
  return parse_family(j);
}

nlohmann::json to_json(const SuppliedFamily& fam) {
  nlohmann::json subgroups = nlohmann::json::array();
  for (const auto& s : fam.subgroups) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& b : s.basis()) gens.push_back(b.to_string());
    subgroups.push_back(std::move(gens));
  }
  return {{"d", fam.d}, {"subgroups", std::move(subgroups)}};
}

Matrix Matrix::identity(int d) {
  Matrix m{d, std::vector<Word>(static_cast<std::size_t>(d))};
  for (int r = 0; r < d; ++r) m.rows[r] = Word{1} << r;
  return m;
}

Word Matrix::apply(Word x) const {
  Word y = 0;
  for (int r = 0; r < d; ++r) {
    if (__builtin_popcountll(rows[r] & x) & 1) y |= Word{1} << r;
  }
  return y;
}

bool Matrix::invertible() const {
  return gf2::span_bits(d, rows).dim() == d;
}

Subspace apply(const Matrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.d) throw gf2::DimensionError("apply: matrix and subspace disagree on d");
  Subspace out(m.d);
  for (Word r : s.rows()) out.insert(m.apply(r));
  return out;
}

SuppliedFamily apply(const Matrix& m, const SuppliedFamily& fam) {
  std::vector<Subspace> out;
  out.reserve(fam.subgroups.size());
  for (const auto& s : fam.subgroups) out.push_back(apply(m, s));
  return make_family(fam.d, std::move(out));
}

void for_each_invertible(int d, const std::function<bool(const Matrix&)>& visit) {
  if (d < 1 || d > 6) throw std::invalid_argument("for_each_invertible: d outside [1, 6]");
  Matrix m{d, std::vector<Word>(static_cast<std::size_t>(d))};
  extend_rows(m, std::uint64_t{1}, 0, visit);
}

SuppliedFamily target_family(const noncrossing::CollectionC& c) {
  const int d = c.D / 2;
  std::vector<Subspace> out;
  for (const auto& e : c.members) {
    Subspace s(d);
    for (Word r : e.rows()) {
      Word w = 0;
      for (int k = 0; k < d; ++k) {
        if ((r >> (2 * k)) & 1u) w |= Word{1} << k;
      }
      s.insert(w);
    }
    out.push_back(std::move(s));
  }
  return make_family(d, std::move(out));
}

SuppliedFamily target_family(int d) { return target_family(noncrossing::build_C(2 * d)); }

Fingerprint fingerprint(const SuppliedFamily& fam) {
  Fingerprint fp;
  const auto& g = fam.subgroups;
  for (std::size_t k = 0; k < g.size(); ++k) {
    ++fp.dims[g[k].dim()];
    int above = 0;
    for (std::size_t m = 0; m < g.size(); ++m) {
      if (m != k && gf2::is_subspace_of(g[k], g[m])) ++above;
    }
    fp.profile.emplace_back(g[k].dim(), above);
  }
  std::sort(fp.profile.begin(), fp.profile.end());
  return fp;
}

MatchResult gl_match(const SuppliedFamily& fam) {
  check_rank(fam.d);
  const SuppliedFamily target = target_family(fam.d);

  MatchResult result;
  if (fam.subgroups.size() != target.subgroups.size()) {
    result.reason = "family has " + std::to_string(fam.subgroups.size()) +
                    " subgroups, C(V^1_" + std::to_string(2 * fam.d) + ") has " +
                    std::to_string(target.subgroups.size());
    return result;
  }
  const Fingerprint fp = fingerprint(fam);
  const Fingerprint target_fp = fingerprint(target);
  if (fp.dims != target_fp.dims) {
    result.reason = "dimension grading differs from the Narayana grading of C(V^1_" +
                    std::to_string(2 * fam.d) + ")";
    return result;
  }
  if (fp.profile != target_fp.profile) {
    result.reason = "containment profile differs from C(V^1_" + std::to_string(2 * fam.d) + ")";
    return result;
  }

  const SubspaceSet target_set(target.subgroups.begin(), target.subgroups.end());
  // Nonzero vectors spanning a line of the target, as a bitmask over F^d.
  std::uint64_t target_lines = 0;
  std::vector<Word> supplied_lines;
  std::vector<const Subspace*> others;
  for (const auto& s : target.subgroups) {
    if (s.dim() == 1) target_lines |= std::uint64_t{1} << s.rows()[0];
  }
  for (const auto& s : fam.subgroups) {
    if (s.dim() == 1) {
      supplied_lines.push_back(s.rows()[0]);
    } else {
      others.push_back(&s);
    }
  }

  for_each_invertible(fam.d, [&](const Matrix& m) {
    ++result.tried;
    for (Word x : supplied_lines) {
      if (((target_lines >> m.apply(x)) & 1u) == 0) return true;
    }
    for (const Subspace* s : others) {
      if (!target_set.contains(apply(m, *s))) return true;
    }
    result.found = true;
    result.witness = m;
    return false;
  });
  if (!result.found) result.reason = "no element of GL(" + std::to_string(fam.d) + ", 2) matches";
  return result;
}

nlohmann::json to_json(const MatchResult& result) {
  nlohmann::json j;
  j["found"] = result.found;
  if (result.witness) {
    nlohmann::json rows = nlohmann::json::array();
    for (Word r : result.witness->rows) rows.push_back(gf2::BitVector(result.witness->d, r).to_string());
    j["witness"] = std::move(rows);
  } else {
    j["witness"] = nullptr;
  }
  j["tried"] = result.tried;
  return j;
}

}  // namespace isofam::conjecture
