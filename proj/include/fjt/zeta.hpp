#ifndef FJT_ZETA_HPP_
#define FJT_ZETA_HPP_

// Formal quotients of zeta factors zeta(k*s + c) and their pole/zero ledgers.
//
// A ZetaProduct is a pair of multisets of affine arguments. Nothing is
// cancelled unless normalize() (or multiply()) is called, so a product built
// factor by factor keeps its intermediate terms. Multiplicative constants are
// never tracked: two products "agree up to a constant" when their ledgers do.

#include <string>
#include <vector>

#include "fjt/rational.hpp"

namespace fjt {

struct AffineArg {
  int k = 1;       // coefficient of s, positive
  Rational c = 0;  // shift

  Rational at(const Rational& s) const { return Rational(k) * s + c; }
  double at(double s) const { return k * s + to_double(c); }
  AffineArg shifted(const Rational& dc) const { return {k, c + dc}; }
  std::string to_string() const;  // "s", "s-4", "2s+1/2"

  friend bool operator==(const AffineArg& a, const AffineArg& b) {
    return a.k == b.k && a.c == b.c;
  }
  friend bool operator<(const AffineArg& a, const AffineArg& b) {
    return a.k != b.k ? a.k < b.k : a.c < b.c;
  }
};

class ZetaProduct {
 public:
  ZetaProduct() = default;  // the constant 1

  // Sorts both sides, cancels nothing.
  static ZetaProduct raw(std::vector<AffineArg> numerator, std::vector<AffineArg> denominator);
  // zeta(num) / zeta(den), uncancelled.
  static ZetaProduct quotient(const AffineArg& num, const AffineArg& den);

  const std::vector<AffineArg>& numerator() const { return num_; }
  const std::vector<AffineArg>& denominator() const { return den_; }
  bool is_one() const { return num_.empty() && den_.empty(); }
  std::size_t factor_count() const { return num_.size() + den_.size(); }

  // Canonical form, factors ordered by (k, c):
  //   "Z(s-4)*Z(s)/(Z(s+1)*Z(s+5))", "Z(s)/Z(s+1)", "1/Z(s+1)", "1".
  std::string to_string() const;

  friend bool operator==(const ZetaProduct&, const ZetaProduct&) = default;

 private:
  std::vector<AffineArg> num_;
  std::vector<AffineArg> den_;
};

// Maximal multiset cancellation between numerator and denominator.
ZetaProduct normalize(const ZetaProduct& zp);
// Multiset union, then normalize.
ZetaProduct multiply(const ZetaProduct& a, const ZetaProduct& b);
// Multiset union without cancellation.
ZetaProduct multiply_raw(const ZetaProduct& a, const ZetaProduct& b);
ZetaProduct inverse(const ZetaProduct& zp);

// Parses the canonical string form back. Accepts '*' or juxtaposition.
ZetaProduct parse_zeta_product(const std::string& text);

// Pole model of a single zeta function on real rational arguments.
//  padic(q):  (1-q^{-s})^{-1}; simple pole at 0, no zeros.
//  real:      pi^{-s/2} Gamma(s/2); simple poles at 0,-2,-4,..., no zeros.
//  global:    completed Dedekind zeta; simple poles at 0 and 1, declared
//             nonvanishing elsewhere outside (0,1). Inside (0,1) the profile
//             refuses to answer.
class ZetaProfile {
 public:
  enum class Kind { padic, real_archimedean, global_completed };

  static ZetaProfile padic(int q);
  static ZetaProfile real();
  static ZetaProfile global();
  // "padic:q", "real", "global"
  static ZetaProfile parse(const std::string& text);

  Kind kind() const { return kind_; }
  int q() const { return q_; }
  std::string name() const;

  // +1 at a simple pole, 0 elsewhere. Throws UnsupportedRegion for the global
  // profile on the open interval (0, 1).
  int pole_order(const Rational& x) const;
  // Pole locations of the profile lying in [lo, hi].
  std::vector<Rational> poles_between(const Rational& lo, const Rational& hi) const;

 private:
  ZetaProfile(Kind kind, int q) : kind_(kind), q_(q) {}
  Kind kind_;
  int q_;
};

struct LedgerEntry {
  Rational location;
  int order = 0;  // > 0 pole, < 0 zero

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct PoleLedger {
  std::vector<LedgerEntry> entries;  // strictly increasing locations

  std::vector<Rational> poles() const;
  std::vector<Rational> zeros() const;
  int order_at(const Rational& x) const;
  friend bool operator==(const PoleLedger&, const PoleLedger&) = default;
};

// Pointwise sum of orders; entries that cancel to 0 are dropped.
PoleLedger operator+(const PoleLedger& a, const PoleLedger& b);

struct Window {
  Rational lo;
  Rational hi;
};

Window parse_window(const std::string& text);  // "a,b"

int pole_order_at(const ZetaProduct& zp, const ZetaProfile& profile, const Rational& s0);
PoleLedger full_ledger(const ZetaProduct& zp, const ZetaProfile& profile, const Window& window);

// Real evaluation with the p-adic local factor. Throws Singularity when some
// factor argument is exactly 0.
double eval_numeric(const ZetaProduct& zp, int q, double s);

}  // namespace fjt

#endif  // FJT_ZETA_HPP_
