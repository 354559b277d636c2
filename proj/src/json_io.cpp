#include "theta/json_io.hpp"

#include <fstream>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

namespace {

int get_int(const Json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer())
    throw UsageError("field '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

std::string get_str(const Json& j, const std::string& key,
                    const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string())
    throw UsageError("field '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

Field field_from(const std::string& text) {
  if (text == "R") return Field::Real;
  if (text == "C") return Field::Complex;
  if (text == "NA") return Field::NonArch;
  throw UsageError("unknown field: " + text);
}

ChiFlag chi_from(const std::string& text) {
  if (text == "triv") return ChiFlag::Trivial;
  if (text == "nontriv") return ChiFlag::Nontrivial;
  throw UsageError("unknown chi flag: " + text);
}

TowerSign sign_from(const std::string& text) {
  if (text == "+") return TowerSign::Plus;
  if (text == "-") return TowerSign::Minus;
  throw UsageError("unknown tower sign: " + text);
}

}  // namespace

Json to_json(const FormedSpace& v) {
  Json j;
  j["field"] = to_string(v.field());
  j["kind"] = v.kind() == FormKind::Quadratic ? "quad" : "symp";
  if (v.kind() == FormKind::Symplectic) {
    j["dim"] = v.dim();
    return j;
  }
  switch (v.field()) {
    case Field::Real:
      j["p"] = v.p();
      j["q"] = v.q();
      break;
    case Field::Complex:
      j["dim"] = v.dim();
      break;
    case Field::NonArch:
      j["eps"] = v.eps();
      j["chi"] = to_string(v.chi());
      j["sign"] = to_string(v.sign());
      j["r"] = v.witt_rank();
      break;
  }
  return j;
}

FormedSpace formed_space_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("formed space must be a JSON object");
  Field field = field_from(get_str(j, "field", "R"));
  std::string kind = get_str(j, "kind", "quad");
  if (kind == "symp") return FormedSpace::symplectic(get_int(j, "dim", 0), field);
  if (kind != "quad") throw UsageError("unknown kind: " + kind);
  switch (field) {
    case Field::Real:
      return FormedSpace::real_quadratic(get_int(j, "p", 0), get_int(j, "q", 0));
    case Field::Complex:
      return FormedSpace::complex_quadratic(get_int(j, "dim", 0));
    case Field::NonArch:
      return FormedSpace::nonarch_quadratic(
          get_int(j, "eps", 0), chi_from(get_str(j, "chi", "triv")),
          sign_from(get_str(j, "sign", "+")), get_int(j, "r", 0));
  }
  throw UsageError("unreachable");
}

Json to_json(const WittTower& t) {
  Json j;
  j["field"] = to_string(t.field());
  j["kernel_dim"] = t.kernel_dim();
  switch (t.field()) {
    case Field::Real: j["k"] = t.k(); break;
    case Field::Complex: j["eps"] = t.eps(); break;
    case Field::NonArch:
      j["eps"] = t.eps();
      j["chi"] = to_string(t.chi());
      j["sign"] = to_string(t.sign());
      break;
  }
  return j;
}

Json to_json(const ClassicalSignature& s) {
  return Json{{"star", to_string(s.star)}, {"p", s.p}, {"q", s.q}};
}

ClassicalSignature signature_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("signature must be a JSON object");
  return {star_from_string(get_str(j, "star", "")), get_int(j, "p", 0),
          get_int(j, "q", 0)};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw UsageError("partition entries: integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const ComplexOrbit& orbit) {
  return Json{{"lie", to_string(orbit.type)},
              {"partition", to_json(orbit.partition)}};
}

ComplexOrbit complex_orbit_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("orbit must be a JSON object");
  std::string lie = get_str(j, "lie", "");
  if (lie != "o" && lie != "sp")
    throw UsageError("orbit 'lie' must be \"o\" or \"sp\"");
  if (!j.contains("partition")) throw UsageError("orbit needs a partition");
  return {lie == "o" ? LieType::Orthogonal : LieType::Symplectic,
          partition_from_json(j.at("partition"))};
}

Json to_json(const AdmissibleTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json form;
    if (const auto* orth = std::get_if<OrthForm>(&row.form))
      form["orth"] = Json::array({orth->a, orth->b});
    else
      form["symp"] = std::get<SympForm>(row.form).dim;
    rows.push_back(Json{{"t", row.length}, {"form", form}});
  }
  return Json{{"eps", t.eps()}, {"rows", rows}};
}

AdmissibleTableau tableau_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("tableau must be a JSON object");
  int eps = get_int(j, "eps", 1);
  std::vector<TableauRow> rows;
  for (const auto& row : j.value("rows", Json::array())) {
    int length = get_int(row, "t", 0);
    if (!row.contains("form")) throw UsageError("tableau row needs a form");
    const Json& form = row.at("form");
    if (form.contains("orth")) {
      const auto& ab = form.at("orth");
      if (!ab.is_array() || ab.size() != 2)
        throw UsageError("orth form must be [a, b]");
      rows.push_back({length, OrthForm{ab[0].get<int>(), ab[1].get<int>()}});
    } else if (form.contains("symp")) {
      rows.push_back({length, SympForm{form.at("symp").get<int>()}});
    } else {
      throw UsageError("row form must be {\"orth\":[a,b]} or {\"symp\":d}");
    }
  }
  return AdmissibleTableau(eps, std::move(rows));
}

Json to_json(const DescentClass& cls) {
  return Json{{"pure", cls.pure},
              {"regular", cls.regular},
              {"good", cls.good}};
}

Json to_json(const DescentResult& result) {
  Json factors = Json::array();
  for (const auto& factor : result.m_xxp_factors) factors.push_back(factor.str());
  return Json{{"schema_version", kSchemaVersion},
              {"orbit", to_json(result.orbit)},
              {"b", result.b},
              {"kernel", to_json(result.kernel_form)},
              {"L", result.L.str()},
              {"Lprime", result.L_prime.str()},
              {"M_XXprime", factors}};
}

Json to_json(const Fact& fact, Field field) {
  Json j;
  j["index"] = fact.index;
  if (fact.tower) {
    switch (field) {
      case Field::Real: j["tower"] = Json{{"k", *fact.tower}}; break;
      case Field::NonArch:
        j["tower"] = Json{{"sign", *fact.tower > 0 ? "+" : "-"}};
        break;
      case Field::Complex: j["tower"] = Json::object(); break;
    }
  }
  j["dim"] = fact.dim;
  j["occurred"] = fact.occurred;
  if (fact.exact) j["exact"] = true;
  if (!fact.source.empty()) j["source"] = fact.source;
  return j;
}

OccurrenceLedger ledger_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("ledger must be a JSON object");
  std::string side = get_str(j, "side", "");
  OccurrenceLedger ledger = [&] {
    if (side == "orth") return OccurrenceLedger::orthogonal(get_int(j, "dimV", 0));
    if (side != "symp") throw UsageError("side must be \"orth\" or \"symp\"");
    Field field = field_from(get_str(j, "field", "R"));
    int dim_vp = get_int(j, "dimVp", 0);
    switch (field) {
      case Field::Real:
        return OccurrenceLedger::symplectic_real(dim_vp, get_int(j, "alpha", 0));
      case Field::NonArch:
        return OccurrenceLedger::symplectic_nonarch(
            dim_vp, get_int(j, "eps", 0), chi_from(get_str(j, "chi", "triv")));
      case Field::Complex:
        return OccurrenceLedger::symplectic_complex(dim_vp,
                                                    get_int(j, "eps", 0));
    }
    throw UsageError("unreachable");
  }();

  for (const auto& index : j.value("indices", Json::array()))
    ledger.track(index.get<std::string>());

  for (const auto& seed : j.value("seeds", Json::array())) {
    std::string which = seed.get<std::string>();
    if (which == "sign")
      ledger.seed_sign_character();
    else if (which == "trivial")
      ledger.seed_trivial_rep();
    else
      throw UsageError("unknown seed: " + which);
  }

  for (const auto& fj : j.value("facts", Json::array())) {
    std::string index = get_str(fj, "index", "pi");
    int dim = get_int(fj, "dim", 0);
    bool occurred = fj.value("occurred", true);
    bool exact = fj.value("exact", false);
    std::string source = get_str(fj, "source", "");
    if (ledger.side() == OccurrenceLedger::Side::Orthogonal) {
      if (exact)
        ledger.assert_exact(index, dim, source);
      else
        ledger.assert_fact(index, dim, occurred, source);
      continue;
    }
    int key = 0;
    if (fj.contains("tower")) {
      const Json& tower = fj.at("tower");
      if (ledger.field() == Field::Real)
        key = get_int(tower, "k", 0);
      else if (ledger.field() == Field::NonArch)
        key = sign_from(get_str(tower, "sign", "+")) == TowerSign::Plus ? 1 : -1;
    } else if (ledger.field() != Field::Complex) {
      throw UsageError("symplectic-side facts need a tower");
    }
    if (exact) {
      if (!occurred) throw UsageError("exact facts must have occurred = true");
      ledger.assert_exact(index, key, dim, source);
    } else {
      ledger.assert_fact(index, key, dim, occurred, source);
    }
  }
  return ledger;
}

Json ledger_report_json(const OccurrenceLedger& ledger,
                        const InferReport& report) {
  Json intervals = Json::object();
  auto interval_json = [](const IndexInterval& iv) {
    Json j;
    j["lo"] = iv.lo;
    if (iv.hi) j["hi"] = *iv.hi;
    j["exact"] = iv.exact();
    return j;
  };
  if (ledger.side() == OccurrenceLedger::Side::Orthogonal) {
    for (const auto& index : ledger.tracked_indices())
      intervals[index] = interval_json(ledger.orth_interval(index));
  } else {
    for (const auto& index : ledger.tracked_indices()) {
      Json towers = Json::object();
      for (int key : ledger.tracked_towers())
        towers[ledger.tower(key).str()] =
            interval_json(ledger.symp_interval(index, key));
      intervals[index] = towers;
    }
  }
  Json conflict = Json::array();
  for (const auto& fact : report.conflict)
    conflict.push_back(to_json(fact, ledger.field()));
  return Json{{"schema_version", kSchemaVersion},
              {"status", report.contradiction ? "contradiction" : "ok"},
              {"intervals", intervals},
              {"pending", report.pending},
              {"conflict", conflict},
              {"trace", report.trace}};
}

Json to_json(const ChainPlan& plan) {
  Json steps = Json::array();
  for (const auto& step : plan.steps) {
    Json j;
    j["s_prime"] = to_json(step.s_prime);
    j["kappa"] = step.kappa_nu.kappa;
    j["nu_pair"] = step.kappa_nu.nu_pair;
    j["convergent"] = step.flags.convergent;
    j["overconvergent"] = step.flags.overconvergent;
    j["weakly_tempered"] = step.flags.weakly_tempered;
    j["unitarity_preserving"] = step.flags.unitarity_preserving;
    j["ac_equality_growth_ok"] = step.ac_equality_growth_ok;
    j["nu_out"] = step.nu_out ? rational_to_string(*step.nu_out) : "-inf";
    steps.push_back(j);
  }
  return Json{{"schema_version", kSchemaVersion},
              {"steps", steps},
              {"first_nonconvergent", plan.first_nonconvergent},
              {"first_nonunitary", plan.first_nonunitary},
              {"note", plan.note}};
}

Json to_json(const PsiValue& value) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["squared"] = rational_to_string(value.squared);
  if (value.exact) j["exact"] = rational_to_string(*value.exact);
  j["approx"] = value.approx;
  return j;
}

Json to_json(const DoublingSignatures& d) {
  return Json{{"schema_version", kSchemaVersion},
              {"kappa", d.kappa},
              {"s0", to_json(d.s0)},
              {"s_double_prime", to_json(d.s2)},
              {"s_dot", to_json(d.s_dot)},
              {"split_rank", d.split_rank},
              {"split_rank_consistent", d.split_rank_consistent}};
}

Json load_json_argument(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return Json::parse(text);
  }
  std::ifstream in(text);
  if (!in) throw UsageError("cannot open file: " + text);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Json::parse(buffer.str());
}

}  // namespace theta
