#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsw/groupring/fraction.hpp"
#include "tsw/linkdata/conway.hpp"
#include "tsw/sw/sw.hpp"

namespace tsw {

using Json = nlohmann::json;

struct LinkInput {
  FramedLink link;
  ConwayTable table;
  std::optional<std::vector<long>> charge;
  std::optional<std::string> pd;
};

// {"components", "linking_matrix", "conway" | "pd", "charge"}; exponents
// on the original lattice. Throws InvalidInput, MalformedPD and the
// diagram errors.
LinkInput input_from_json(const Json& j);
LinkInput load_input(const std::string& path);
// Always writes the table; "pd" is kept as a note when present.
Json input_to_json(const LinkInput& in);

// Integers as numbers when they fit, everything else as "p/q" strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json laurent_to_json(const RatLaurent& p);
RatLaurent laurent_from_json(const Json& j);

Json group_to_json(const FgAbelianGroup& g);
GroupPtr group_from_json(const Json& j);
Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);
Json algebra_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement algebra_from_json(const Json& j, const GroupPtr& h);
Json fraction_to_json(const QHFraction& x);
QHFraction fraction_from_json(const Json& j, const GroupPtr& h);

Json sw_table_to_json(const SwTable& t);
SwTable sw_table_from_json(const Json& j);

}  // namespace tsw
