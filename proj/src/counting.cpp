#include "isofam/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "isofam/families.hpp"
#include "isofam/noncrossing.hpp"

namespace isofam::counting {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long j = 1; j <= k; ++j) {
    out *= n - k + j;
    out /= j;
  }
  return out;
}

BigInt catalan(long n) {
  if (n < 1) throw std::invalid_argument("catalan: n must be >= 1, got " + std::to_string(n));
  return binomial(2 * n, n) / (n + 1);
}

BigInt narayana(long n, long p) {
  if (n < 1 || p < 1 || p > n) {
    throw std::invalid_argument("narayana: need 1 <= p <= n, got n = " + std::to_string(n) +
                                ", p = " + std::to_string(p));
  }
  return binomial(n, p) * binomial(n, p - 1) / n;
}

bool CountReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.pass(); });
}

CountReport verify_counts(int D) {
  if (D < 2 || D % 2 != 0) {
    throw std::invalid_argument("verify_counts: D must be even and >= 2, got " +
                                std::to_string(D));
  }
  const long d = D / 2;
  const auto table = families::build_families(D);
  const auto c = noncrossing::build_C(D);
  const auto z = noncrossing::enumerate_Z(D);

  CountReport report;
  report.D = D;
  auto add = [&report](std::string label, std::size_t observed, BigInt expected) {
    report.rows.push_back({std::move(label), BigInt(observed), std::move(expected)});
  };
  add("f0", table.f0.size(), binomial(D + 1, d));
  add("f1", table.f1.size(), binomial(D + 1, d - 1));
  add("f0_lagrangian", table.f0_lagrangian.size(), catalan(d + 1));
  add("f0_sub", table.f0_sub.size(), binomial(D + 1, d - 1));
  add("C", c.members.size(), catalan(d + 1));
  for (long s = 0; s <= d; ++s) {
    add("C^" + std::to_string(s), c.grade(static_cast<int>(s)).size(), narayana(d + 1, s + 1));
  }
  add("Z", z.size(), catalan(d + 1));
  for (long s = 0; s <= d; ++s) {
    const auto n = std::count_if(z.begin(), z.end(),
                                 [s](const noncrossing::ArcSequence& e) { return e.size() == s; });
    add("Z^" + std::to_string(s), static_cast<std::size_t>(n), narayana(d + 1, s + 1));
  }
  return report;
}

void write_csv_header(std::ostream& out) { out << "D,label,observed,expected,pass\n"; }

void write_csv(std::ostream& out, const CountReport& report) {
  for (const auto& row : report.rows) {
    out << report.D << ',' << row.label << ',' << row.observed << ',' << row.expected << ','
        << (row.pass() ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace isofam::counting
