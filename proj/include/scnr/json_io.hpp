#pragma once

#include <json.hpp>
#include <string_view>

#include "scnr/circulant.hpp"
#include "scnr/digraph.hpp"
#include "scnr/optimality.hpp"
#include "scnr/polynomial.hpp"
#include "scnr/reliability.hpp"
#include "scnr/verify.hpp"

namespace scnr {

using Json = nlohmann::ordered_json;

/// {"n": 3, "arcs": [[0,1], ...]}, arcs in lexicographic order.
Json to_json(const Digraph& g);
/// Throws InputError with a position or arc-index diagnostic.
Digraph parse_digraph(std::string_view text);
Digraph digraph_from_json(const Json& j);

/// {"n": 3, "F": ["1", "0", "3", "0"]}.
Json to_json(const ReliabilityPolynomial& rp);
ReliabilityPolynomial polynomial_from_json(const Json& j);

/// {"n": 8, "S": [1, 5]}.
Json to_json(const CirculantSpec& spec);
CirculantSpec circulant_from_json(const Json& j);

/// {"lo": "a/b", "hi": "c/d", "sign_change": true}.
Json to_json(const RootInterval& r);
Json to_json(const SignProfile& profile);
Json to_json(const ComparisonVerdict& v);
Json to_json(const SearchReport& report);
Json to_json(const VerificationReport& report);
Json to_json(const McEstimate& estimate);

/// Decimal strings for each coefficient.
Json coefficient_strings(const std::vector<mpz_class>& values);

}  // namespace scnr
