#pragma once

#include <json.hpp>

#include "theta/conservation.hpp"
#include "theta/dual_pairs.hpp"
#include "theta/growth.hpp"
#include "theta/moment_descent.hpp"
#include "theta/orbits.hpp"

namespace theta {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const FormedSpace& v);
FormedSpace formed_space_from_json(const Json& j);

Json to_json(const WittTower& t);

Json to_json(const ClassicalSignature& s);
ClassicalSignature signature_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const ComplexOrbit& orbit);
ComplexOrbit complex_orbit_from_json(const Json& j);

Json to_json(const AdmissibleTableau& t);
AdmissibleTableau tableau_from_json(const Json& j);

Json to_json(const DescentResult& result);
Json to_json(const DescentClass& cls);

Json to_json(const Fact& fact, Field field);

// Builds a ledger from its JSON document (side, parameters, seeds, facts).
OccurrenceLedger ledger_from_json(const Json& j);
Json ledger_report_json(const OccurrenceLedger& ledger,
                        const InferReport& report);

Json to_json(const ChainPlan& plan);
Json to_json(const PsiValue& value);
Json to_json(const DoublingSignatures& d);

// Parses text as inline JSON when it starts with '{' or '[', otherwise
// reads and parses the file at that path. Parse errors carry the byte
// position and map to the usage exit code.
Json load_json_argument(const std::string& text);

}  // namespace theta
