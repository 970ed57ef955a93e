#include "isofam/verify.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "isofam/families.hpp"
#include "isofam/gf2.hpp"
#include "isofam/noncrossing.hpp"

namespace isofam::verify {

using gf2::Subspace;
using gf2::Word;
using noncrossing::Arc;
using noncrossing::ArcSequence;

namespace {

using SubspaceSet = std::unordered_set<Subspace, gf2::SubspaceHash>;

struct Recorder {
  CheckResult result;

  Recorder(std::string name, int D) { result = {std::move(name), D, 0, true, {}}; }

  void seen() { ++result.examined; }
  // Keeps the first counterexample only.
  void fail(const std::string& what) {
    if (result.pass) result.counterexample = what;
    result.pass = false;
  }
};

std::vector<Arc> all_arcs(int D) {
  std::vector<Arc> out;
  for (int a = 1; a < D; a += 2) {
    for (int b = a; b < D; b += 2) out.push_back({a, b});
  }
  return out;
}

std::string arc_pair(const Arc& x, const Arc& y, int i) {
  return "i=" + std::to_string(i) + " arcs " + noncrossing::to_string(x) + " " +
         noncrossing::to_string(y);
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(counts.begin(), counts.end(), [](const auto& c) { return c.pass(); }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

CheckResult check_family_structure(int D) {
  Recorder rec("family_structure", D);
  const auto t = families::build_families(D);
  for (const auto* fam : {&t.f0, &t.f1}) {
    const bool level0 = fam == &t.f0;
    for (const Subspace& e : *fam) {
      rec.seen();
      if (!gf2::is_isotropic(e) || e.dim() > D / 2) {
        rec.fail("not isotropic of dim <= D/2: " + gf2::to_string(e));
      }
      const auto c = families::classify_by_lines(e);
      const auto want = level0 ? families::Shape::kF0 : families::Shape::kF1;
      if (c.shape != want) {
        rec.fail(std::string(level0 ? "F0" : "F1") +
                 " member is not a direct sum of its lines of the expected parities: " +
                 gf2::to_string(e));
      }
      if (level0 && t.in_f1(e)) rec.fail("member of both F0 and F1: " + gf2::to_string(e));
    }
  }
  return rec.result;
}

CheckResult check_xi_bijection(int D) {
  Recorder rec("xi_bijection", D);
  const auto t = families::build_families(D);
  SubspaceSet images;
  for (const Subspace& e : t.f1) {
    rec.seen();
    const Subspace e0 = families::xi(t, e);
    const auto c = families::classify_by_lines(e);
    if (!t.in_f0_sub(e0)) rec.fail("Xi(E) not in F0_<D/2: E=" + gf2::to_string(e));
    if (!c.distinguished || c.distinguished->parity() != 0) {
      rec.fail("L_E missing or not in G0: E=" + gf2::to_string(e));
      continue;
    }
    const Subspace line = gf2::span_bits(D, std::vector<Word>{c.distinguished->bits()});
    if (gf2::subspace_sum(e0, line) != e || e0.dim() + 1 != e.dim()) {
      rec.fail("E != Xi(E) (+) L_E: E=" + gf2::to_string(e));
    }
    if (!images.insert(e0).second) rec.fail("Xi not injective at image " + gf2::to_string(e0));
  }
  for (const Subspace& e0 : t.f0_sub) {
    if (!images.contains(e0)) rec.fail("Xi misses " + gf2::to_string(e0));
  }
  return rec.result;
}

CheckResult check_theta_bijection(int D) {
  Recorder rec("theta_bijection", D);
  const auto c = noncrossing::build_C(D);
  SubspaceSet images;
  for (const ArcSequence& seq : noncrossing::enumerate_Z(D)) {
    rec.seen();
    const Subspace e = noncrossing::theta(seq);
    if (e.dim() != seq.size()) rec.fail("theta drops dimension on " + noncrossing::to_string(seq));
    if (!c.contains(e)) {
      rec.fail("theta(" + noncrossing::to_string(seq) + ") = " + gf2::to_string(e) +
               " is not in C(V^1_D)");
    }
    if (!images.insert(e).second) rec.fail("theta not injective at " + gf2::to_string(e));
  }
  for (const Subspace& e : c.members) {
    if (!images.contains(e)) rec.fail("theta misses " + gf2::to_string(e));
  }
  return rec.result;
}

CheckResult check_lagrangian(int D) {
  Recorder rec("lagrangian_correspondence", D);
  const auto t = families::build_families(D);
  const auto c = noncrossing::build_C(D);
  SubspaceSet images;
  for (const Subspace& e : c.members) {
    rec.seen();
    const Subspace l = noncrossing::to_lagrangian(c, e);
    if (!t.in_f0_lagrangian(l)) {
      rec.fail("E + E^! not in F0_{D/2}: E=" + gf2::to_string(e) + " image " + gf2::to_string(l));
      continue;
    }
    if (noncrossing::from_lagrangian(t, l) != e) {
      rec.fail("E + E^! cap V^1 != E for E=" + gf2::to_string(e));
    }
    images.insert(l);
  }
  for (const Subspace& l : t.f0_lagrangian) {
    if (!images.contains(l)) rec.fail("correspondence misses " + gf2::to_string(l));
    const Subspace back = noncrossing::from_lagrangian(t, l);
    if (!c.contains(back) || noncrossing::lagrangian_sum(back) != l) {
      rec.fail("E cap V^1 does not invert for " + gf2::to_string(l));
    }
  }
  return rec.result;
}

CheckResult check_sigma_lemmas(int D) {
  Recorder rec("sigma_lemmas", D);
  const auto arcs = all_arcs(D - 2);
  for (int i = 1; i <= D; ++i) {
    for (const Arc& x : arcs) {
      const Arc tx = noncrossing::sigma(D, i, x);
      if (i % 2 == 1 && tx.a <= i && i <= tx.b && !(tx.a < i && i < tx.b)) {
        rec.fail("(iii) " + arc_pair(x, tx, i));
      }
      for (const Arc& y : arcs) {
        rec.seen();
        const Arc ty = noncrossing::sigma(D, i, y);
        if (x.b < y.a && !(tx.b < ty.a)) rec.fail("(i) " + arc_pair(x, y, i));
        if (x.a < y.a && y.b < x.b && !(tx.a < ty.a && ty.b < tx.b)) {
          rec.fail("(ii) " + arc_pair(x, y, i));
        }
      }
    }
  }
  return rec.result;
}

CheckResult check_theta_compatibility(int D) {
  Recorder rec("theta_compatibility", D);
  for (const ArcSequence& prev : noncrossing::enumerate_Z(D - 2)) {
    const Subspace base = noncrossing::theta(prev);
    for (int i = 1; i <= D; ++i) {
      rec.seen();
      Subspace want = noncrossing::embed_cT(i, base);
      if (i % 2 == 1) want.insert(Word{1} << (i - 1));
      if (noncrossing::theta(noncrossing::big_sigma(i, prev)) != want) {
        rec.fail("i=" + std::to_string(i) + " seq " + noncrossing::to_string(prev));
      }
    }
  }
  return rec.result;
}

CheckResult check_decompose_round_trip(int D) {
  Recorder rec("decompose_round_trip", D);
  for (const ArcSequence& seq : noncrossing::enumerate_Z(D)) {
    if (seq.empty()) continue;
    rec.seen();
    try {
      const auto dec = noncrossing::decompose(seq);
      if (noncrossing::big_sigma(dec.i, dec.previous) != seq) {
        rec.fail("big_sigma(decompose(s)) != s for " + noncrossing::to_string(seq));
      }
      const auto again = noncrossing::decompose(noncrossing::big_sigma(dec.i, dec.previous));
      if (again.i != dec.i || again.previous != dec.previous) {
        rec.fail("decompose(big_sigma(i, s')) != (i, s') for " + noncrossing::to_string(seq));
      }
    } catch (const std::exception& e) {
      rec.fail(noncrossing::to_string(seq) + ": " + e.what());
    }
  }
  return rec.result;
}

CheckResult check_inductive_closure(int D) {
  Recorder rec("inductive_closure", D);
  std::set<ArcSequence> level{ArcSequence(0)};
  for (int k = 2; k <= D; k += 2) {
    std::set<ArcSequence> next{ArcSequence(k)};
    for (const ArcSequence& prev : level) {
      for (int i = 1; i <= k; ++i) next.insert(noncrossing::big_sigma(i, prev));
    }
    level = std::move(next);
  }
  const auto z = noncrossing::enumerate_Z(D);
  rec.result.examined = z.size();
  const std::set<ArcSequence> direct(z.begin(), z.end());
  if (direct != level) {
    for (const auto& s : direct) {
      if (!level.contains(s)) rec.fail("not reached by Sigma: " + noncrossing::to_string(s));
    }
    for (const auto& s : level) {
      if (!direct.contains(s)) rec.fail("Sigma produced extra " + noncrossing::to_string(s));
    }
  }
  return rec.result;
}

CheckResult check_order_preserving(int D) {
  Recorder rec("order_preserving", D);
  const auto z = noncrossing::enumerate_Z(D);
  std::vector<Subspace> images;
  std::vector<std::vector<int>> partitions;
  for (const auto& s : z) {
    images.push_back(noncrossing::theta(s));
    partitions.push_back(noncrossing::to_partition(s));
  }
  for (std::size_t x = 0; x < z.size(); ++x) {
    for (std::size_t y = 0; y < z.size(); ++y) {
      rec.seen();
      if (noncrossing::refines(partitions[x], partitions[y]) !=
          gf2::is_subspace_of(images[x], images[y])) {
        rec.fail(noncrossing::to_string(z[x]) + " vs " + noncrossing::to_string(z[y]));
      }
    }
  }
  return rec.result;
}

CheckResult check_L_parity(int D) {
  Recorder rec("L_E_parity", D);
  for (const Subspace& e : families::build_families(D).f1) {
    rec.seen();
    const auto c = families::classify_by_lines(e);
    if (!c.distinguished || c.distinguished->a % 2 != 1 || c.distinguished->b % 2 != 0) {
      rec.fail("L_E not of the form (odd, even) for " + gf2::to_string(e));
    }
  }
  return rec.result;
}

CheckResult check_oracle_noncrossing(int D, const oracle::OracleBudget& budget) {
  Recorder rec("oracle_noncrossing", D);
  const auto direct = oracle::noncrossing_direct(D, budget);
  const auto z = noncrossing::enumerate_Z(D);
  rec.result.examined = direct.size();
  if (direct != z) {
    rec.fail("noncrossing_direct has " + std::to_string(direct.size()) + " sequences, enumerate_Z " +
             std::to_string(z.size()));
  }
  return rec.result;
}

CheckResult check_oracle_isotropic_members(int D, const oracle::OracleBudget& budget) {
  Recorder rec("oracle_isotropic_members", D);
  const auto t = families::build_families(D);
  const auto iso = oracle::all_isotropic(D, std::nullopt, budget);
  const SubspaceSet iso_set(iso.begin(), iso.end());
  for (const auto* fam : {&t.f0, &t.f1}) {
    for (const Subspace& e : *fam) {
      rec.seen();
      if (!iso_set.contains(e)) rec.fail("family member not found by brute force: " + gf2::to_string(e));
    }
  }
  return rec.result;
}

CheckResult check_oracle_line_characterization(int D, const oracle::OracleBudget& budget) {
  Recorder rec("oracle_line_characterization", D);
  const auto t = families::build_families(D);
  for (const Subspace& e : oracle::all_isotropic(D, std::nullopt, budget)) {
    rec.seen();
    const auto shape = families::classify_by_lines(e).shape;
    const bool f0 = t.in_f0(e);
    const bool f1 = t.in_f1(e);
    if ((shape == families::Shape::kF0) != f0) {
      rec.fail(std::string(f0 ? "F0 member not" : "non-member") + " classified F0-shaped: " +
               gf2::to_string(e));
    }
    if ((shape == families::Shape::kF1) != f1) {
      rec.fail(std::string(f1 ? "F1 member not" : "non-member") + " classified F1-shaped: " +
               gf2::to_string(e));
    }
  }
  return rec.result;
}

VerifyReport run(const VerifyOptions& options) {
  VerifyReport report;
  for (int D = options.D_min; D <= options.D_max; D += 2) {
    report.counts.push_back(counting::verify_counts(D));
    auto& checks = report.checks;
    checks.push_back(check_family_structure(D));
    checks.push_back(check_xi_bijection(D));
    checks.push_back(check_L_parity(D));
    checks.push_back(check_theta_bijection(D));
    checks.push_back(check_lagrangian(D));
    checks.push_back(check_sigma_lemmas(D));
    checks.push_back(check_theta_compatibility(D));
    checks.push_back(check_decompose_round_trip(D));
    checks.push_back(check_inductive_closure(D));
    if (D <= 12) checks.push_back(check_order_preserving(D));
    if (options.oracle) {
      if (D <= options.budget.max_odd_side_dim && (D / 2) * (D / 2 + 1) / 2 <= options.budget.max_arcs) {
        checks.push_back(check_oracle_noncrossing(D, options.budget));
      }
      if (D <= options.budget.max_ambient_dim) {
        checks.push_back(check_oracle_isotropic_members(D, options.budget));
        checks.push_back(check_oracle_line_characterization(D, options.budget));
      }
    }
  }
  return report;
}

}  // namespace isofam::verify
