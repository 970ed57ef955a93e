#include "isofam/oracle.hpp"

#include <algorithm>
#include <string>

namespace isofam::oracle {

using gf2::Word;

namespace {

void check_budget(int n, int cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative dimension");
  if (n > cap) {
    throw BudgetExceeded(std::string(what) + ": dimension " + std::to_string(n) +
                         " exceeds oracle budget " + std::to_string(cap));
  }
}

// Row r has a 1 at its pivot, zeros at the other pivots and before its pivot,
// and free bits at the non-pivot columns after it.
void visit_shape(int n, Word pivots, const std::function<void(const Subspace&)>& visit) {
  std::vector<int> pivot_cols;
  for (int c = 0; c < n; ++c) {
    if ((pivots >> c) & 1u) pivot_cols.push_back(c);
  }
  std::vector<std::vector<int>> free_cols(pivot_cols.size());
  int total_free = 0;
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    for (int c = pivot_cols[r] + 1; c < n; ++c) {
      if (((pivots >> c) & 1u) == 0) free_cols[r].push_back(c);
    }
    total_free += static_cast<int>(free_cols[r].size());
  }
  std::vector<Word> rows(pivot_cols.size());
  for (Word assignment = 0; assignment < (Word{1} << total_free); ++assignment) {
    int bit = 0;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      Word row = Word{1} << pivot_cols[r];
      for (int c : free_cols[r]) {
        if ((assignment >> bit++) & 1u) row |= Word{1} << c;
      }
      rows[r] = row;
    }
    visit(gf2::span_bits(n, rows));
  }
}

// Pairwise condition for two arcs, written out as the four alternatives.
bool compatible(const noncrossing::Arc& x, const noncrossing::Arc& y) {
  return (x.a <= x.b && x.b < y.a && y.a <= y.b) || (y.a <= y.b && y.b < x.a && x.a <= x.b) ||
         (x.a < y.a && y.a <= y.b && y.b < x.b) || (y.a < x.a && x.a <= x.b && x.b < y.b);
}

}  // namespace

void for_each_subspace(int n, std::optional<int> dim,
                       const std::function<void(const Subspace&)>& visit,
                       const OracleBudget& budget) {
  check_budget(n, budget.max_ambient_dim, "all_subspaces");
  for (Word pivots = 0; pivots < (Word{1} << n); ++pivots) {
    if (dim && __builtin_popcountll(pivots) != *dim) continue;
    visit_shape(n, pivots, visit);
  }
}

std::vector<Subspace> all_subspaces(int n, std::optional<int> dim, const OracleBudget& budget) {
  std::vector<Subspace> out;
  for_each_subspace(n, dim, [&out](const Subspace& s) { out.push_back(s); }, budget);
  std::sort(out.begin(), out.end(), gf2::canonical_less);
  return out;
}

std::vector<Subspace> all_isotropic(int D, std::optional<int> dim, const OracleBudget& budget) {
  if (D % 2 != 0) throw gf2::DimensionError("all_isotropic: D must be even");
  std::vector<Subspace> out;
  for_each_subspace(
      D, dim,
      [&out](const Subspace& s) {
        if (gf2::is_isotropic(s)) out.push_back(s);
      },
      budget);
  std::sort(out.begin(), out.end(), gf2::canonical_less);
  return out;
}

std::vector<noncrossing::ArcSequence> noncrossing_direct(int D, const OracleBudget& budget) {
  if (D < 0 || D % 2 != 0) throw gf2::DimensionError("noncrossing_direct: D must be even");
  check_budget(D, budget.max_odd_side_dim, "noncrossing_direct");
  std::vector<noncrossing::Arc> arcs;
  for (int a = 1; a < D; a += 2) {
    for (int b = a; b < D; b += 2) arcs.push_back({a, b});
  }
  check_budget(static_cast<int>(arcs.size()), budget.max_arcs, "noncrossing_direct arcs");

  std::vector<noncrossing::ArcSequence> out;
  std::vector<noncrossing::Arc> chosen;
  for (Word subset = 0; subset < (Word{1} << arcs.size()); ++subset) {
    chosen.clear();
    bool ok = true;
    for (std::size_t k = 0; k < arcs.size() && ok; ++k) {
      if (((subset >> k) & 1u) == 0) continue;
      for (const auto& prev : chosen) {
        if (!compatible(prev, arcs[k])) {
          ok = false;
          break;
        }
      }
      chosen.push_back(arcs[k]);
    }
    if (ok) out.emplace_back(D, chosen);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    num *= (1ULL << (n - j)) - 1;
    den *= (1ULL << (k - j)) - 1;
  }
  return num / den;
}

}  // namespace isofam::oracle
