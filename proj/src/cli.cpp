#include "theta/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>

#include "theta/errors.hpp"
#include "theta/json_io.hpp"

namespace theta {

namespace {

enum class Format { JsonFmt, Csv, Text };

Format parse_format(const std::string& text) {
  if (text == "json") return Format::JsonFmt;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw UsageError("unknown format: " + text);
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

std::vector<Rational> parse_eig_list(const std::string& text) {
  std::vector<Rational> out;
  std::string token;
  std::stringstream stream(text);
  while (std::getline(stream, token, ','))
    if (!token.empty()) out.push_back(parse_rational(token));
  return out;
}

struct Options {
  Format format = Format::JsonFmt;
  int cap = kDefaultEnumerationCap;
  std::string out_path;

  // towers
  std::string field = "R";
  int eps = 0;
  int alpha = 0;
  std::string chi = "triv";
  int kmin = -10, kmax = 10;

  // pairs
  std::string star;
  int p = 0, q = -1;

  // orbits
  std::string lie = "sp";
  int size = 0;
  int tab_eps = 0;
  int dim = -1;
  int sig_p = -1, sig_q = -1;

  // descend / lift / support
  std::string orbit_arg;
  std::string target_arg;
  std::string to_arg;
  int to_dim = 0;
  std::string sig_arg;

  // ledger
  std::string facts_path;

  // doubling / plan
  std::string s_arg, sp_arg;
  std::string nu_arg = "none";
  std::vector<std::string> via;

  // psi
  std::string eigs;
};

void write_out(const Options& opts, std::ostream& out, const Json& doc) {
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) throw UsageError("cannot open output file: " + opts.out_path);
    file << doc.dump(2) << "\n";
    return;
  }
  emit(out, doc);
}

int cmd_towers(const Options& opts, std::ostream& out) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Field field = opts.field == "R"    ? Field::Real
                : opts.field == "C"  ? Field::Complex
                : opts.field == "NA" ? Field::NonArch
                                     : throw UsageError("unknown field: " +
                                                        opts.field);
  if (field == Field::Real) {
    TowerFamily family = enumerate_towers_real(opts.eps, opts.alpha);
    doc["count"] = "infinite";
    doc["alpha"] = family.alpha;
    Json sample = Json::array();
    for (int k = opts.kmin; k <= opts.kmax; ++k)
      if (((k - family.alpha) % 4 + 4) % 4 == 0)
        sample.push_back(to_json(WittTower::real(k)));
    doc["towers"] = sample;
  } else {
    TowerFamily family =
        field == Field::Complex
            ? enumerate_towers_complex(opts.eps)
            : enumerate_towers_nonarch(opts.eps, opts.chi == "triv"
                                                     ? ChiFlag::Trivial
                                                     : ChiFlag::Nontrivial);
    doc["count"] = family.count == TowerFamily::Count::Two ? 2 : 1;
    Json towers = Json::array();
    for (const auto& tower : family.towers) towers.push_back(to_json(tower));
    doc["towers"] = towers;
  }
  write_out(opts, out, doc);
  return 0;
}

int cmd_pairs(const Options& opts, std::ostream& out) {
  Star star = star_from_string(opts.star);
  int q = opts.q;
  if (q < 0) {
    if (star == Star::C || star == Star::Ct || star == Star::Ds)
      q = opts.p;
    else
      throw UsageError("--q is required for stars B, D, C*");
  }
  ClassicalSignature s{star, opts.p, q};
  auto check = validate_signature(s);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["signature"] = to_json(s);
  doc["valid"] = check.ok;
  if (!check.ok) doc["violation"] = check.violation;
  doc["dual_star"] = to_string(howe_dual(star));
  if (check.ok) {
    doc["real_group"] = real_group_label(s);
    NuProfile profile = nu_profile(s);
    doc["nu"] = profile.nu;
    doc["nu_plus"] = profile.nu_plus;
  }
  write_out(opts, out, doc);
  return 0;
}

int cmd_orbits(const Options& opts, std::ostream& out) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  if (opts.tab_eps != 0) {
    Json items = Json::array();
    if (opts.tab_eps == 1) {
      if (opts.sig_p < 0 || opts.sig_q < 0)
        throw UsageError("eps=+1 enumeration needs --p and --q");
      for (const auto& t :
           enumerate_tableaux(1, {opts.sig_p, opts.sig_q}, opts.cap))
        items.push_back(to_json(t));
    } else {
      if (opts.dim < 0) throw UsageError("eps=-1 enumeration needs --dim");
      for (const auto& t : enumerate_tableaux_symplectic(opts.dim, opts.cap))
        items.push_back(to_json(t));
    }
    doc["tableaux"] = items;
  } else {
    LieType type = opts.lie == "sp"  ? LieType::Symplectic
                   : opts.lie == "o" ? LieType::Orthogonal
                                     : throw UsageError("--type must be o|sp");
    Json items = Json::array();
    for (const auto& orbit :
         enumerate_complex_orbits(type, opts.size, opts.cap)) {
      Json j = to_json(orbit);
      ColumnData cols = column_data(orbit);
      j["c1"] = cols.c1;
      j["c2"] = cols.c2;
      j["pure"] = cols.pure;
      items.push_back(j);
    }
    doc["orbits"] = items;
  }
  write_out(opts, out, doc);
  return 0;
}

int cmd_descend(const Options& opts, std::ostream& out) {
  AdmissibleTableau orbit = tableau_from_json(load_json_argument(opts.orbit_arg));
  FormedSpace target =
      formed_space_from_json(load_json_argument(opts.target_arg));
  DescentResult result = descend(orbit, target);
  Json doc = to_json(result);
  doc["class"] = to_json(classify_descent(orbit, target));
  write_out(opts, out, doc);
  return 0;
}

int cmd_lift(const Options& opts, std::ostream& out) {
  ComplexOrbit orbit = complex_orbit_from_json(load_json_argument(opts.orbit_arg));
  ComplexOrbit lift = check_theta_lift(orbit, opts.to_dim, opts.cap);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["orbit"] = to_json(orbit);
  doc["lift"] = to_json(lift);
  write_out(opts, out, doc);
  return 0;
}

int cmd_support(const Options& opts, std::ostream& out) {
  AdmissibleTableau k_orbit =
      tableau_from_json(load_json_argument(opts.orbit_arg));
  ComplexOrbit o_prime = complex_orbit_from_json(load_json_argument(opts.to_arg));
  std::optional<Signature> sig;
  if (!opts.sig_arg.empty()) {
    auto comma = opts.sig_arg.find(',');
    if (comma == std::string::npos)
      throw UsageError("--sig expects \"p,q\"");
    sig = Signature{std::stoi(opts.sig_arg.substr(0, comma)),
                    std::stoi(opts.sig_arg.substr(comma + 1))};
  }
  Json items = Json::array();
  for (const auto& t : lift_orbit_support(k_orbit, o_prime, sig))
    items.push_back(to_json(t));
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["support"] = items;
  write_out(opts, out, doc);
  return 0;
}

int cmd_ledger(const Options& opts, std::ostream& out) {
  OccurrenceLedger ledger = ledger_from_json(load_json_argument(opts.facts_path));
  InferReport report = ledger.infer();
  write_out(opts, out, ledger_report_json(ledger, report));
  return report.contradiction ? 2 : 0;
}

int cmd_doubling(const Options& opts, std::ostream& out) {
  ClassicalSignature s = signature_from_json(load_json_argument(opts.s_arg));
  ClassicalSignature sp = signature_from_json(load_json_argument(opts.sp_arg));
  write_out(opts, out, to_json(doubling_signatures(s, sp)));
  return 0;
}

int cmd_plan(const Options& opts, std::ostream& out) {
  ClassicalSignature start = signature_from_json(load_json_argument(opts.s_arg));
  NuBound nu;
  if (opts.nu_arg != "none" && opts.nu_arg != "-inf")
    nu = parse_rational(opts.nu_arg);
  std::vector<ClassicalSignature> targets;
  for (const auto& via : opts.via)
    targets.push_back(signature_from_json(load_json_argument(via)));
  ChainPlan plan = plan_chain(start, nu, targets);
  if (opts.format == Format::Csv || opts.format == Format::Text) {
    char sep = opts.format == Format::Csv ? ',' : '\t';
    out << "step" << sep << "s_prime" << sep << "kappa" << sep << "nu_pair"
        << sep << "convergent" << sep << "overconvergent" << sep
        << "weakly_tempered" << sep << "unitarity_preserving" << sep
        << "nu_out" << "\n";
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
      const auto& step = plan.steps[i];
      out << i << sep << step.s_prime.str() << sep << step.kappa_nu.kappa
          << sep << step.kappa_nu.nu_pair << sep << step.flags.convergent
          << sep << step.flags.overconvergent << sep
          << step.flags.weakly_tempered << sep
          << step.flags.unitarity_preserving << sep
          << (step.nu_out ? rational_to_string(*step.nu_out) : "-inf")
          << "\n";
    }
    return 0;
  }
  write_out(opts, out, to_json(plan));
  return 0;
}

int cmd_psi(const Options& opts, std::ostream& out) {
  write_out(opts, out, to_json(psi_eval(parse_eig_list(opts.eigs))));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact combinatorics of the local theta correspondence"};
  app.name("theta");
  Options opts;
  std::string format = "json";
  app.add_option("--format", format, "json|csv|text");

  auto* towers = app.add_subcommand("towers", "Witt tower families");
  towers->add_option("--field", opts.field, "R|C|NA");
  towers->add_option("--eps", opts.eps, "dimension parity");
  towers->add_option("--alpha", opts.alpha, "discriminant class mod 4 (R)");
  towers->add_option("--chi", opts.chi, "triv|nontriv (NA)");
  towers->add_option("--kmin", opts.kmin);
  towers->add_option("--kmax", opts.kmax);
  towers->add_option("--out", opts.out_path);

  auto* pairs = app.add_subcommand("pairs", "classical signatures");
  pairs->add_option("--star", opts.star)->required();
  pairs->add_option("--p", opts.p)->required();
  pairs->add_option("--q", opts.q);
  pairs->add_option("--out", opts.out_path);

  auto* orbits = app.add_subcommand("orbits", "nilpotent orbits");
  auto* enumerate = orbits->add_subcommand("enumerate", "list orbits");
  enumerate->add_option("--type", opts.lie, "o|sp (complex orbits)");
  enumerate->add_option("--size", opts.size);
  enumerate->add_option("--eps", opts.tab_eps, "+1|-1 (tableaux)");
  enumerate->add_option("--p", opts.sig_p);
  enumerate->add_option("--q", opts.sig_q);
  enumerate->add_option("--dim", opts.dim);
  enumerate->add_option("--cap", opts.cap);
  enumerate->add_option("--out", opts.out_path);

  auto* descend_cmd = app.add_subcommand("descend", "moment-map descent");
  descend_cmd->add_option("--orbit", opts.orbit_arg, "tableau JSON or file")
      ->required();
  descend_cmd->add_option("--target", opts.target_arg, "space JSON or file")
      ->required();
  descend_cmd->add_option("--out", opts.out_path);

  auto* lift = app.add_subcommand("lift", "check theta lift of an orbit");
  lift->add_option("--orbit", opts.orbit_arg, "complex orbit JSON or file")
      ->required();
  lift->add_option("--to-dim", opts.to_dim)->required();
  lift->add_option("--cap", opts.cap);
  lift->add_option("--out", opts.out_path);

  auto* support = app.add_subcommand("support", "geometric lift support");
  support->add_option("--orbit", opts.orbit_arg, "K-orbit tableau")->required();
  support->add_option("--to", opts.to_arg, "complex orbit on the dual side")
      ->required();
  support->add_option("--sig", opts.sig_arg, "signature p,q of V' (orth side)");
  support->add_option("--out", opts.out_path);

  auto* ledger = app.add_subcommand("ledger", "first-occurrence inference");
  auto* infer = ledger->add_subcommand("infer", "run rules to a fixed point");
  infer->add_option("facts", opts.facts_path, "ledger JSON or file")->required();
  infer->add_option("--out", opts.out_path);

  auto* doubling = app.add_subcommand("doubling", "doubling signatures");
  doubling->add_option("--s", opts.s_arg)->required();
  doubling->add_option("--sp", opts.sp_arg)->required();
  doubling->add_option("--out", opts.out_path);

  auto* plan = app.add_subcommand("plan", "lifting-chain planner");
  plan->add_option("--start", opts.s_arg)->required();
  plan->add_option("--nu", opts.nu_arg, "rational bound or 'none'");
  plan->add_option("--via", opts.via, "next signature (repeatable)");
  plan->add_option("--out", opts.out_path);

  auto* psi = app.add_subcommand("psi", "evaluate Psi on eigenvalues");
  psi->add_option("--eigs", opts.eigs, "comma-separated positive rationals")
      ->required();
  psi->add_option("--out", opts.out_path);

  app.require_subcommand(1);
  // --format / --cap may appear after the subcommand name
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (auto* sub : node->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    opts.format = parse_format(format);
    if (towers->parsed()) return cmd_towers(opts, out);
    if (pairs->parsed()) return cmd_pairs(opts, out);
    if (orbits->parsed()) {
      if (!enumerate->parsed()) throw UsageError("orbits: missing subcommand");
      return cmd_orbits(opts, out);
    }
    if (descend_cmd->parsed()) return cmd_descend(opts, out);
    if (lift->parsed()) return cmd_lift(opts, out);
    if (support->parsed()) return cmd_support(opts, out);
    if (ledger->parsed()) {
      if (!infer->parsed()) throw UsageError("ledger: missing subcommand");
      return cmd_ledger(opts, out);
    }
    if (doubling->parsed()) return cmd_doubling(opts, out);
    if (plan->parsed()) return cmd_plan(opts, out);
    if (psi->parsed()) return cmd_psi(opts, out);
    throw UsageError("no subcommand given");
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Json::parse_error& e) {
    err << "malformed JSON at byte " << e.byte << ": " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const MathError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace theta
