#include "fjt/zeta.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "fjt/errors.hpp"
#include "fjt/kernels.hpp"

namespace fjt {

std::string AffineArg::to_string() const {
  std::string out = k == 1 ? "s" : std::to_string(k) + "s";
  if (c > 0) out += "+" + fjt::to_string(c);
  if (c < 0) out += "-" + fjt::to_string(-c);
  return out;
}

// ZetaProduct

ZetaProduct ZetaProduct::raw(std::vector<AffineArg> numerator,
                             std::vector<AffineArg> denominator) {
  for (const auto* side : {&numerator, &denominator})
    for (const AffineArg& a : *side)
      if (a.k <= 0) throw InvalidInput("zeta argument needs a positive coefficient of s");
  ZetaProduct zp;
  zp.num_ = std::move(numerator);
  zp.den_ = std::move(denominator);
  std::sort(zp.num_.begin(), zp.num_.end());
  std::sort(zp.den_.begin(), zp.den_.end());
  return zp;
}

ZetaProduct ZetaProduct::quotient(const AffineArg& num, const AffineArg& den) {
  return raw({num}, {den});
}

namespace {

std::string join_factors(const std::vector<AffineArg>& side) {
  std::string out;
  for (const AffineArg& a : side) {
    if (!out.empty()) out += "*";
    out += "Z(" + a.to_string() + ")";
  }
  return out;
}

}  // namespace

std::string ZetaProduct::to_string() const {
  if (is_one()) return "1";
  std::string out = num_.empty() ? "1" : join_factors(num_);
  if (den_.empty()) return out;
  if (den_.size() == 1) return out + "/" + join_factors(den_);
  return out + "/(" + join_factors(den_) + ")";
}

ZetaProduct normalize(const ZetaProduct& zp) {
  const auto& num = zp.numerator();
  const auto& den = zp.denominator();
  std::vector<AffineArg> n, d;
  std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(n));
  std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(d));
  return ZetaProduct::raw(std::move(n), std::move(d));
}

ZetaProduct multiply_raw(const ZetaProduct& a, const ZetaProduct& b) {
  std::vector<AffineArg> n = a.numerator(), d = a.denominator();
  n.insert(n.end(), b.numerator().begin(), b.numerator().end());
  d.insert(d.end(), b.denominator().begin(), b.denominator().end());
  return ZetaProduct::raw(std::move(n), std::move(d));
}

ZetaProduct multiply(const ZetaProduct& a, const ZetaProduct& b) {
  return normalize(multiply_raw(a, b));
}

ZetaProduct inverse(const ZetaProduct& zp) {
  return ZetaProduct::raw(zp.denominator(), zp.numerator());
}

namespace {

AffineArg parse_affine(const std::string& text) {
  // "s", "2s", "s+1/2", "s-4"
  auto spos = text.find('s');
  if (spos == std::string::npos) throw InvalidInput("zeta argument without s: '" + text + "'");
  int k = 1;
  if (spos > 0) {
    Rational kr = parse_rational(text.substr(0, spos));
    if (!is_integer(kr) || kr <= 0) throw InvalidInput("bad coefficient in '" + text + "'");
    k = static_cast<int>(kr.numerator());
  }
  std::string rest = text.substr(spos + 1);
  Rational c = rest.empty() ? Rational(0) : parse_rational(rest);
  return {k, c};
}

std::vector<AffineArg> parse_side(std::string text) {
  std::vector<AffineArg> out;
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  if (text == "1") return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '*') {
      ++pos;
      continue;
    }
    if (text.compare(pos, 2, "Z(") != 0) throw InvalidInput("bad zeta product near '" + text + "'");
    auto close = text.find(')', pos);
    if (close == std::string::npos) throw InvalidInput("unbalanced zeta factor in '" + text + "'");
    out.push_back(parse_affine(text.substr(pos + 2, close - pos - 2)));
    pos = close + 1;
  }
  return out;
}

}  // namespace

ZetaProduct parse_zeta_product(const std::string& input) {
  std::string text;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  // Split at the top-level '/', the one not inside Z(...).
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) split = i;
  }
  if (split == std::string::npos) return ZetaProduct::raw(parse_side(text), {});
  return ZetaProduct::raw(parse_side(text.substr(0, split)), parse_side(text.substr(split + 1)));
}

// ZetaProfile

namespace {

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself prime
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

ZetaProfile ZetaProfile::padic(int q) {
  if (!is_prime_power(q)) throw InvalidInput("residue field order must be a prime power, got " +
                                             std::to_string(q));
  return ZetaProfile(Kind::padic, q);
}

ZetaProfile ZetaProfile::real() { return ZetaProfile(Kind::real_archimedean, 0); }
ZetaProfile ZetaProfile::global() { return ZetaProfile(Kind::global_completed, 0); }

ZetaProfile ZetaProfile::parse(const std::string& text) {
  if (text == "real") return real();
  if (text == "global") return global();
  if (text.rfind("padic:", 0) == 0) {
    Rational q = parse_rational(text.substr(6));
    if (!is_integer(q)) throw InvalidInput("bad residue field order in '" + text + "'");
    return padic(static_cast<int>(q.numerator()));
  }
  throw InvalidInput("unknown zeta profile '" + text + "' (padic:q|real|global)");
}

std::string ZetaProfile::name() const {
  switch (kind_) {
    case Kind::padic: return "padic:" + std::to_string(q_);
    case Kind::real_archimedean: return "real";
    case Kind::global_completed: return "global";
  }
  return "?";
}

int ZetaProfile::pole_order(const Rational& x) const {
  switch (kind_) {
    case Kind::padic:
      return x == 0 ? 1 : 0;
    case Kind::real_archimedean:
      return (x <= 0 && is_integer(x) && x.numerator() % 2 == 0) ? 1 : 0;
    case Kind::global_completed:
      if (x > 0 && x < 1)
        throw UnsupportedRegion("completed zeta is not modelled on (0,1); argument " +
                                to_string(x));
      return (x == 0 || x == 1) ? 1 : 0;
  }
  return 0;
}

std::vector<Rational> ZetaProfile::poles_between(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> out;
  switch (kind_) {
    case Kind::padic:
      if (lo <= 0 && 0 <= hi) out.push_back(0);
      break;
    case Kind::real_archimedean: {
      // even integers e <= 0 with lo <= e <= hi
      std::int64_t top = std::min<std::int64_t>(0, boost::rational_cast<std::int64_t>(hi) + 1);
      for (std::int64_t e = top; Rational(e) >= lo; --e)
        if (e % 2 == 0 && Rational(e) <= hi) out.push_back(e);
      std::reverse(out.begin(), out.end());
      break;
    }
    case Kind::global_completed:
      for (int p : {0, 1})
        if (lo <= p && p <= hi) out.push_back(p);
      break;
  }
  return out;
}

// Ledgers

std::vector<Rational> PoleLedger::poles() const {
  std::vector<Rational> out;
  for (const auto& e : entries)
    if (e.order > 0) out.push_back(e.location);
  return out;
}

std::vector<Rational> PoleLedger::zeros() const {
  std::vector<Rational> out;
  for (const auto& e : entries)
    if (e.order < 0) out.push_back(e.location);
  return out;
}

int PoleLedger::order_at(const Rational& x) const {
  for (const auto& e : entries)
    if (e.location == x) return e.order;
  return 0;
}

PoleLedger operator+(const PoleLedger& a, const PoleLedger& b) {
  std::map<Rational, int> acc;
  for (const auto& e : a.entries) acc[e.location] += e.order;
  for (const auto& e : b.entries) acc[e.location] += e.order;
  PoleLedger out;
  for (const auto& [x, o] : acc)
    if (o != 0) out.entries.push_back({x, o});
  return out;
}

Window parse_window(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidInput("window must be 'a,b', got '" + text + "'");
  Window w{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  if (w.hi < w.lo) throw InvalidInput("empty window '" + text + "'");
  return w;
}

int pole_order_at(const ZetaProduct& zp, const ZetaProfile& profile, const Rational& s0) {
  int order = 0;
  for (const AffineArg& a : zp.numerator()) order += profile.pole_order(a.at(s0));
  for (const AffineArg& a : zp.denominator()) order -= profile.pole_order(a.at(s0));
  return order;
}

PoleLedger full_ledger(const ZetaProduct& zp, const ZetaProfile& profile, const Window& window) {
  if (window.hi < window.lo) throw InvalidInput("empty ledger window");
  // Candidates: solutions of k*s + c = p for every profile pole p.
  std::vector<Rational> candidates;
  auto scan = [&](const std::vector<AffineArg>& side) {
    for (const AffineArg& a : side) {
      const Rational lo = a.at(window.lo), hi = a.at(window.hi);
      for (const Rational& p : profile.poles_between(lo, hi))
        candidates.push_back((p - a.c) / Rational(a.k));
    }
  };
  scan(zp.numerator());
  scan(zp.denominator());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const auto orders = kernels::ledger_orders(zp, profile, candidates);
  PoleLedger ledger;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (orders[i] != 0) ledger.entries.push_back({candidates[i], orders[i]});
  return ledger;
}

double eval_numeric(const ZetaProduct& zp, int q, double s) {
  const double log_q = std::log(static_cast<double>(ZetaProfile::padic(q).q()));
  // (1 - q^{-x})^{-1} with 1 - q^{-x} = -expm1(-x log q)
  auto factor = [&](const AffineArg& a) {
    const double x = a.at(s);
    if (x == 0.0)
      throw Singularity("zeta factor Z(" + a.to_string() + ") is singular at s = " +
                        std::to_string(s));
    return -1.0 / std::expm1(-x * log_q);
  };
  double value = 1.0;
  for (const AffineArg& a : zp.numerator()) value *= factor(a);
  for (const AffineArg& a : zp.denominator()) value /= factor(a);
  return value;
}

}  // namespace fjt
