#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "nilrank/search.hpp"
#include "nilrank/theorems.hpp"

/// JSON encoding of the library's values. Integers that fit in 64 bits are
/// written as JSON numbers and larger ones as decimal strings; readers accept
/// both.
namespace nilrank::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json integer(const Integer& value);
Json integers(const IntVec& values);
Integer read_integer(const Json& value);
IntVec read_integers(const Json& value);

Json element(const GroupElement& g);
GroupElement read_element(const Json& value);

Json kernel(const KernelReport& kernel);
Json kernel(const CentralityKernel& kernel);
Json condition(const ConditionReport& report);

/// The witness payload written by `construct` and `search` and read back by
/// `verify`.
Json witness(const WitnessPair& witness);
Json witness(const WitnessTriple& triple);

Json sweep(const SweepReport& report);

/// One outcome of re-deriving a recorded witness field.
struct FieldCheck {
  std::string field;
  bool ok = false;
  Json recorded;
  Json recomputed;
};

/// Re-derives minors, certificates and the kernel of a witness payload from
/// its group elements and subgroup. Throws InvalidInput on a malformed
/// payload. Accepts either a bare payload or a report carrying one in
/// result.witness.
std::vector<FieldCheck> verify_witness(const Json& document);

}  // namespace nilrank::report
