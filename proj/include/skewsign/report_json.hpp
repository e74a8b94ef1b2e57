#pragma once

#include <json.hpp>

#include "skewsign/cauchy.hpp"
#include "skewsign/dominoes.hpp"
#include "skewsign/identities.hpp"
#include "skewsign/polynomial.hpp"
#include "skewsign/tableaux.hpp"

namespace skewsign {

// JSON renderings used by the CLI. Key order is alphabetical (nlohmann keeps
// objects sorted) and term/item order follows the library's canonical
// enumeration orders, so documents are byte-stable for a fixed input.

nlohmann::json coeff_json(const Coeff& c);  // number when it fits, decimal string otherwise

nlohmann::json to_json(const GaussianInt& g);
nlohmann::json to_json(const StandardYoungTableau& t);
nlohmann::json to_json(const Domino& d);
nlohmann::json to_json(const DominoTiling& t);
nlohmann::json to_json(const StandardDominoTableau& t);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const TruncatedPolynomial& p);
nlohmann::json to_json(const PropositionReport& r);
nlohmann::json to_json(const Theorem1Report& r);
nlohmann::json to_json(const CauchyReport& r);
nlohmann::json to_json(const SweepReport& r);

}  // namespace skewsign
