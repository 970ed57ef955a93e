#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "isofam/gf2.hpp"
#include "isofam/noncrossing.hpp"

// Brute-force ground truth. Nothing here reuses the inductive constructions
// of `families` or `noncrossing`; enumeration is by RREF shape and by subset
// filtering.
namespace isofam::oracle {

using gf2::Subspace;

struct OracleBudget {
  int max_ambient_dim = 8;   // full subspace enumeration of F^n
  int max_odd_side_dim = 10;  // V^1 side: noncrossing_direct over D
  int max_arcs = 24;          // subsets of Z*_D enumerated explicitly
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Calls `visit` once per subspace of F^n (optionally of one dimension), in
// order of pivot set then free entries.
void for_each_subspace(int n, std::optional<int> dim, const std::function<void(const Subspace&)>& visit,
                       const OracleBudget& budget = {});

std::vector<Subspace> all_subspaces(int n, std::optional<int> dim = std::nullopt,
                                    const OracleBudget& budget = {});
std::vector<Subspace> all_isotropic(int D, std::optional<int> dim = std::nullopt,
                                    const OracleBudget& budget = {});

std::vector<noncrossing::ArcSequence> noncrossing_direct(int D, const OracleBudget& budget = {});

// Number of k-dimensional subspaces of F_2^n.
unsigned long long gaussian_binomial(int n, int k);

}  // namespace isofam::oracle
