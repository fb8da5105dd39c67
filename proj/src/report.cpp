#include "nilrank/report.hpp"

#include <array>

namespace nilrank::report {
namespace {

Json basis_json(const std::vector<IntVec>& basis) {
  Json out = Json::array();
  for (const auto& v : basis) out.push_back(integers(v));
  return out;
}

std::vector<IntVec> read_basis(const Json& value) {
  if (!value.is_array()) throw InvalidInput("kernel basis must be an array");
  std::vector<IntVec> basis;
  for (const auto& v : value) basis.push_back(read_integers(v));
  return basis;
}

CentralityKernel as_general(const KernelReport& kernel) {
  CentralityKernel general;
  general.kernel_rank = static_cast<std::size_t>(kernel.kernel_rank);
  for (const auto& v : kernel.basis) general.basis.push_back({v[0], v[1]});
  return general;
}

CyclicCentralSubgroup read_subgroup(const Json& payload) {
  const auto n = payload.at("n").get<std::size_t>();
  return CyclicCentralSubgroup(n, read_integers(payload.at("a")));
}

GroupElement read_element_of_rank(const Json& value, std::size_t n) {
  GroupElement g = read_element(value);
  if (g.rank() != n) throw InvalidInput("element rank does not match n");
  return g;
}

Json optional_integer(const std::optional<Integer>& value) {
  return value ? integer(*value) : Json(nullptr);
}

FieldCheck compare(std::string field, const Json& recorded, Json recomputed) {
  const bool ok = recorded == recomputed;
  return FieldCheck{std::move(field), ok, recorded, std::move(recomputed)};
}

// Canonicalises a recorded value by decoding and re-encoding, so that
// 7 and "7" compare equal.
Json normalized_integers(const Json& value) { return integers(read_integers(value)); }

Json normalized_basis(const Json& value) { return basis_json(read_basis(value)); }

Json normalized_integer_or_null(const Json& value) {
  return value.is_null() ? Json(nullptr) : integer(read_integer(value));
}

std::vector<FieldCheck> verify_pair(const Json& payload) {
  const CyclicCentralSubgroup subgroup = read_subgroup(payload);
  const std::size_t n = subgroup.rank();
  const GroupElement alpha1 = read_element_of_rank(payload.at("alpha1"), n);
  const GroupElement alpha2 = read_element_of_rank(payload.at("alpha2"), n);

  const IntVec minors = commutator_exponents(alpha1, alpha2);
  const auto l = membership_in_C(GroupElement::central(n, minors), subgroup);
  const KernelReport recomputed_kernel = kernel_rank(alpha1, alpha2, subgroup);
  const Json& recorded_kernel = payload.at("kernel");

  std::vector<FieldCheck> checks;
  checks.push_back(compare("minors", normalized_integers(payload.at("minors")),
                           integers(minors)));
  checks.push_back(compare("l", normalized_integer_or_null(payload.at("l")),
                           optional_integer(l)));
  checks.push_back(compare("kernel.kernel_rank",
                           recorded_kernel.at("kernel_rank").get<int>(),
                           recomputed_kernel.kernel_rank));
  checks.push_back(compare("kernel.basis",
                           normalized_basis(recorded_kernel.at("basis")),
                           kernel(recomputed_kernel).at("basis")));
  return checks;
}

std::vector<FieldCheck> verify_triple(const Json& payload) {
  const CyclicCentralSubgroup subgroup = read_subgroup(payload);
  const std::size_t n = subgroup.rank();
  const Json& recorded_alphas = payload.at("alphas");
  if (!recorded_alphas.is_array() || recorded_alphas.size() != 3) {
    throw InvalidInput("a triple witness needs exactly three elements");
  }
  const std::array<GroupElement, 3> alphas{
      read_element_of_rank(recorded_alphas[0], n),
      read_element_of_rank(recorded_alphas[1], n),
      read_element_of_rank(recorded_alphas[2], n)};

  Json minors = Json::array();
  Json certificates = Json::array();
  for (const auto& [x, y] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const IntVec d = commutator_exponents(alphas[x], alphas[y]);
    minors.push_back(integers(d));
    certificates.push_back(
        optional_integer(membership_in_C(GroupElement::central(n, d), subgroup)));
  }
  Json recorded_minors = Json::array();
  for (const auto& m : payload.at("minors")) recorded_minors.push_back(normalized_integers(m));
  Json recorded_l = Json::array();
  for (const auto& l : payload.at("l")) recorded_l.push_back(normalized_integer_or_null(l));

  const CentralityKernel recomputed_kernel = centrality_kernel(alphas, subgroup);
  const Json& recorded_kernel = payload.at("kernel");

  std::vector<FieldCheck> checks;
  checks.push_back(compare("minors", recorded_minors, std::move(minors)));
  checks.push_back(compare("l", recorded_l, std::move(certificates)));
  checks.push_back(compare("kernel.kernel_rank",
                           recorded_kernel.at("kernel_rank").get<std::size_t>(),
                           recomputed_kernel.kernel_rank));
  checks.push_back(compare("kernel.basis",
                           normalized_basis(recorded_kernel.at("basis")),
                           basis_json(recomputed_kernel.basis)));
  return checks;
}

}  // namespace

Json integer(const Integer& value) {
  if (mpz_fits_slong_p(value.get_mpz_t()) != 0) {
    return Json(static_cast<std::int64_t>(value.get_si()));
  }
  return Json(value.get_str());
}

Json integers(const IntVec& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(integer(v));
  return out;
}

Integer read_integer(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Integer(std::to_string(value.get<std::uint64_t>()));
    }
    return Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) return parse_integer(value.get<std::string>());
  throw InvalidInput("expected an integer, got " + value.dump());
}

IntVec read_integers(const Json& value) {
  if (!value.is_array()) throw InvalidInput("expected an integer array, got " + value.dump());
  IntVec out;
  out.reserve(value.size());
  for (const auto& v : value) out.push_back(read_integer(v));
  return out;
}

Json element(const GroupElement& g) {
  Json out = Json::object();
  out["gen_exps"] = integers(g.gen_exps());
  out["comm_exps"] = integers(g.comm_exps());
  return out;
}

GroupElement read_element(const Json& value) {
  if (!value.is_object()) throw InvalidInput("expected a group element object");
  return GroupElement(read_integers(value.at("gen_exps")),
                      read_integers(value.at("comm_exps")));
}

Json kernel(const CentralityKernel& kernel) {
  Json out = Json::object();
  out["kernel_rank"] = kernel.kernel_rank;
  out["basis"] = basis_json(kernel.basis);
  return out;
}

Json kernel(const KernelReport& kernel_report) { return kernel(as_general(kernel_report)); }

Json condition(const ConditionReport& report) {
  Json out = Json::object();
  out["quadruple"] = report.quadruple;
  out["lhs_term"] = integer(report.lhs_term);
  out["rhs_term"] = integer(report.rhs_term);
  out["epsilon"] = report.epsilon;
  out["holds"] = report.holds;
  out["pfaffian"] = integer(report.pfaffian);
  return out;
}

Json witness(const WitnessPair& witness) {
  Json out = Json::object();
  out["kind"] = "pair";
  out["n"] = witness.subgroup.rank();
  out["a"] = integers(witness.subgroup.exponents());
  out["alpha1"] = element(witness.alpha1);
  out["alpha2"] = element(witness.alpha2);
  out["minors"] = integers(commutator_exponents(witness.alpha1, witness.alpha2));
  out["l"] = integer(witness.l);
  out["kernel"] = kernel(witness.kernel);
  return out;
}

Json witness(const WitnessTriple& triple) {
  Json out = Json::object();
  out["kind"] = "triple";
  out["n"] = triple.subgroup.rank();
  out["a"] = integers(triple.subgroup.exponents());
  Json alphas = Json::array();
  for (const auto& alpha : triple.alphas) alphas.push_back(element(alpha));
  out["alphas"] = std::move(alphas);
  out["minors"] = Json::array(
      {integers(commutator_exponents(triple.alphas[0], triple.alphas[1])),
       integers(commutator_exponents(triple.alphas[0], triple.alphas[2])),
       integers(commutator_exponents(triple.alphas[1], triple.alphas[2]))});
  out["l"] = Json::array({integer(triple.l[0]), integer(triple.l[1]), integer(triple.l[2])});
  out["kernel"] = kernel(triple.kernel);
  return out;
}

Json sweep(const SweepReport& report) {
  Json out = Json::object();
  out["witness_found"] = report.witness_found;
  out["witness_not_found"] = report.witness_not_found;
  out["condition_holds"] = report.condition_holds;
  out["condition_violated"] = report.condition_violated;
  out["soundness_violations"] = report.soundness_violations;
  Json trials = Json::array();
  for (const auto& trial : report.trials) {
    Json t = Json::object();
    t["a"] = integers(trial.exponents);
    t["witness_found"] = trial.witness_found;
    t["condition_holds"] = trial.condition_holds;
    trials.push_back(std::move(t));
  }
  out["trials"] = std::move(trials);
  return out;
}

std::vector<FieldCheck> verify_witness(const Json& document) {
  try {
    const Json* payload = &document;
    if (document.contains("result") && document.at("result").contains("witness")) {
      payload = &document.at("result").at("witness");
    }
    if (!payload->is_object()) throw InvalidInput("witness payload must be an object");
    const std::string kind = payload->value("kind", std::string("pair"));
    if (kind == "pair") return verify_pair(*payload);
    if (kind == "triple") return verify_triple(*payload);
    throw InvalidInput("unknown witness kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed witness: ") + e.what());
  }
}

}  // namespace nilrank::report
