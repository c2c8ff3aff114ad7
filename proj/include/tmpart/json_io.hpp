// json_io.hpp
// JSON forms of every result type. Keys are emitted in a fixed order
// (ordered_json) and integers in decimal, so equal values serialize to
// identical bytes.

#pragma once

#include <string>

#include "json.hpp"

#include "tmpart/genfun.hpp"
#include "tmpart/lemmas.hpp"
#include "tmpart/repfn.hpp"
#include "tmpart/search.hpp"
#include "tmpart/solver.hpp"

namespace tmpart {

using Json = nlohmann::ordered_json;

Json to_json(const NatSet& s);  // sorted ascending array
Json to_json(const RepProfile& p);
// {"m", "C", "D"}; the pair file format.
Json to_json(const PartitionPair& p);
Json to_json(const PairIdentityReport& r);
Json to_json(const SolveOutcome& o);
Json to_json(const SearchCertificate& c);
Json to_json(const LemmaReport& r);

NatSet nat_set_from_json(const Json& j);
// Accepts {"m", "C", "D"} plus an optional "intersection", which must match C ∩ D.
// Throws std::invalid_argument on schema or invariant errors.
PartitionPair pair_from_json(const Json& j);

PartitionPair read_pair_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tmpart
