#ifndef FJT_REPORT_HPP_
#define FJT_REPORT_HPP_

// JSON forms of the module reports. Exact rationals are strings ("9",
// "-1/2"); insertion order of keys is preserved so output is byte-stable.

#include <json.hpp>

#include "fjt/cfunction.hpp"
#include "fjt/eisenstein.hpp"
#include "fjt/jordan_data.hpp"
#include "fjt/reducibility.hpp"
#include "fjt/zeta.hpp"

namespace fjt::report {

using Json = nlohmann::ordered_json;

Json rational(const Rational& x);
Json rationals(const std::vector<Rational>& xs);
// Rounded to 12 significant digits.
Json real(double x);

Json zeta_product(const ZetaProduct& zp);
Json ledger(const PoleLedger& l);
Json classify_row(const ParabolicDatum& pd, const JordanDatum& jd);
Json tower(const TowerReport& t);
Json reducibility(const ReducibilityReport& rep);
Json fj_consistency(const FjConsistency& c);
Json walls(const WallReport& w);
Json global_poles(const GlobalPoleReport& rep);
Json pyramid(const PyramidReport& rep);
Json ktype(const KTypeCheck& k);

Json envelope(const std::string& command, Json inputs, Json result);

}  // namespace fjt::report

#endif  // FJT_REPORT_HPP_
