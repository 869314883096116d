#pragma once

#include "json.hpp"

#include "immaculate/poset.hpp"
#include "immaculate/qsym.hpp"
#include "immaculate/verify.hpp"

namespace imm {

using Json = nlohmann::ordered_json;

Json coeff_json(const Int& c);

Json to_json(const Composition& c);
Composition composition_from_json(const Json& j);

Json to_json(const SkewShape& s);
SkewShape skew_shape_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

/// Serialized in application order: the first listed index is applied first.
Json to_json(const GeneratorWord& w);
GeneratorWord generator_word_from_json(const Json& j);

Json to_json(const QSymF& f);
Json to_json(const TruncatedPoly& p);
Json to_json(const HeckePoset& p);
Json to_json(const BranchReport& r);
Json to_json(const ClosureReport& r);
Json to_json(const SitCountReport& r);

}  // namespace imm
