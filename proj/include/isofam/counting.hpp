#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace isofam::counting {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  // zero outside 0 <= k <= n

// Cat_n = (2n)! / (n! (n+1)!), n >= 1.
BigInt catalan(long n);
// N(n, p) = C(n, p) C(n, p-1) / n, 1 <= p <= n.
BigInt narayana(long n, long p);

struct CountRow {
  std::string label;
  BigInt observed;
  BigInt expected;
  bool pass() const { return observed == expected; }
};

// Observed cardinalities of the enumerated families against the closed forms.
struct CountReport {
  int D = 0;
  std::vector<CountRow> rows;

  bool pass() const;
};

CountReport verify_counts(int D);

// CSV header plus one line per row: D,label,observed,expected,pass
void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const CountReport& report);

}  // namespace isofam::counting
