#include "theta/moment_descent.hpp"

#include <algorithm>

#include "theta/errors.hpp"

namespace theta {

namespace {

// The target side must carry the opposite form type: a tableau over a
// symplectic g' descends into a quadratic V and vice versa.
void check_pair(const AdmissibleTableau& o_prime, const FormedSpace& v) {
  auto report = validate_tableau(o_prime);
  if (!report.ok) throw UsageError("invalid tableau: " + report.violation);
  if (v.field() != Field::Real)
    throw UsageError("descent is implemented over R");
  bool target_quadratic = v.kind() == FormKind::Quadratic;
  bool source_symplectic = o_prime.eps() == -1;
  if (target_quadratic != source_symplectic)
    throw UsageError("pair mismatch: tableau side and target space must be "
                     "Howe dual");
}

Star source_star(const AdmissibleTableau& o_prime) {
  if (o_prime.eps() == -1)
    return Star::C;  // C vs C~ makes no difference to the descent classes
  return o_prime.total_dim() % 2 == 1 ? Star::B : Star::D;
}

}  // namespace

Signature embedded_signature(const AdmissibleTableau& o_prime) {
  Signature sig;
  for (const auto& row : o_prime.rows())
    if (row.length >= 2) sig = sig + tensor_signature(row.form, row.length - 1);
  return sig;
}

int embedded_dim(const AdmissibleTableau& o_prime) {
  int dim = 0;
  for (const auto& row : o_prime.rows())
    if (row.length >= 2) dim += (row.length - 1) * form_dim(row.form);
  return dim;
}

bool in_moment_image(const AdmissibleTableau& o_prime, const FormedSpace& v) {
  check_pair(o_prime, v);
  if (v.kind() == FormKind::Quadratic) {
    Signature sig = embedded_signature(o_prime);
    return sig.p <= v.p() && sig.q <= v.q();
  }
  return embedded_dim(o_prime) <= v.dim();
}

DescentResult descend(const AdmissibleTableau& o_prime, const FormedSpace& v) {
  if (!in_moment_image(o_prime, v))
    throw MathError("orbit is not in the moment-map image for " + v.str());

  bool quadratic_target = v.kind() == FormKind::Quadratic;
  int b = v.dim() - embedded_dim(o_prime);

  FormedSpace kernel;
  if (quadratic_target) {
    Signature emb = embedded_signature(o_prime);
    kernel = FormedSpace::real_quadratic(v.p() - emb.p, v.q() - emb.q);
  } else {
    kernel = FormedSpace::symplectic(b);
  }

  std::vector<TableauRow> rows;
  std::vector<GroupLabel> m_xxp;
  MultForm row1 = quadratic_target ? MultForm(OrthForm{0, 0})
                                   : MultForm(SympForm{0});
  for (const auto& row : o_prime.rows()) {
    if (row.length == 1) continue;
    m_xxp.push_back(GroupLabel::of_form(row.form));
    if (row.length >= 3)
      rows.push_back({row.length - 1, row.form});
    else
      row1 = row.form;  // the length-2 group strips into the length-1 row
  }
  if (quadratic_target) {
    auto& orth = std::get<OrthForm>(row1);
    orth.a += kernel.p();
    orth.b += kernel.q();
  } else {
    std::get<SympForm>(row1).dim += b;
  }
  if (form_dim(row1) > 0) rows.push_back({1, row1});

  GroupLabel l = quadratic_target
                     ? GroupLabel::orthogonal(kernel.p(), kernel.q())
                     : GroupLabel::symplectic(b);
  GroupLabel l_prime = GroupLabel::orthogonal(0, 0);
  if (auto form = o_prime.row_form(1)) l_prime = GroupLabel::of_form(*form);

  AdmissibleTableau orbit(quadratic_target ? 1 : -1, std::move(rows));
  return DescentResult{std::move(orbit), b, kernel, l, l_prime,
                       std::move(m_xxp)};
}

DescentResult descend_K_orbit(const AdmissibleTableau& o_prime,
                              const FormedSpace& v) {
  return descend(o_prime, v);
}

int stripped_size(const Partition& partition) {
  return partition.size() - partition.length();
}

DescentClass classify_descent_complex(const ComplexOrbit& source,
                                      Star src_star, int target_dim) {
  int stripped = stripped_size(source.partition);
  if (stripped > target_dim)
    throw MathError("orbit is not in the moment-map image (size)");
  int b = target_dim - stripped;
  ColumnData cols = column_data(source);
  DescentClass cls;
  cls.pure = b == 0;
  cls.regular = cls.pure || cols.pure;
  bool extra = false;
  switch (src_star) {
    case Star::B:
    case Star::D:
      extra = cols.c1 > cols.c2;
      break;
    case Star::C:
    case Star::Ct:
      extra = b == 0 || b == 1;
      break;
    case Star::Cs:
    case Star::Ds:
      extra = b == 0;
      break;
  }
  cls.good = cls.regular && extra;
  return cls;
}

DescentClass classify_descent(const AdmissibleTableau& o_prime,
                              const FormedSpace& v) {
  if (!in_moment_image(o_prime, v))
    throw MathError("orbit is not in the moment-map image for " + v.str());
  return classify_descent_complex(complexify(o_prime), source_star(o_prime),
                                  v.dim());
}

DescentStabilizers descent_stabilizers(const AdmissibleTableau& o_prime,
                                       const FormedSpace& v) {
  DescentResult result = descend(o_prime, v);
  return {std::move(result.m_xxp_factors), result.L, result.L_prime};
}

bool in_moment_image_complex(const ComplexOrbit& o_prime, int dim_v) {
  auto report = validate_complex(o_prime);
  if (!report.ok) throw UsageError("invalid orbit: " + report.violation);
  return stripped_size(o_prime.partition) <= dim_v;
}

ComplexOrbit descend_complex(const ComplexOrbit& o_prime, int dim_v) {
  if (!in_moment_image_complex(o_prime, dim_v))
    throw MathError("orbit is not in the moment-map image (size)");
  std::vector<int> parts;
  for (int part : o_prime.partition.parts())
    if (part >= 2) parts.push_back(part - 1);
  int b = dim_v - stripped_size(o_prime.partition);
  parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
  return {o_prime.type == LieType::Orthogonal ? LieType::Symplectic
                                              : LieType::Orthogonal,
          Partition(std::move(parts))};
}

namespace {

ComplexOrbit unique_dominance_maximum(std::vector<ComplexOrbit> candidates,
                                      const std::string& what) {
  if (candidates.empty()) throw MathError(what + ": no candidate");
  std::vector<ComplexOrbit> maximal;
  for (const auto& c : candidates) {
    bool below = false;
    for (const auto& d : candidates)
      if (!(d == c) && dominance_leq(c.partition, d.partition)) {
        below = true;
        break;
      }
    if (!below) maximal.push_back(c);
  }
  if (maximal.size() != 1) {
    std::string msg = what + ": maximum not unique among {";
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (i) msg += ", ";
      msg += maximal[i].partition.str();
    }
    throw MathError(msg + "}");
  }
  return maximal.front();
}

}  // namespace

ComplexOrbit check_theta_lift(const ComplexOrbit& orbit, int dim_v_prime,
                              int cap) {
  auto report = validate_complex(orbit);
  if (!report.ok) throw UsageError("invalid orbit: " + report.violation);
  LieType dual = orbit.type == LieType::Orthogonal ? LieType::Symplectic
                                                   : LieType::Orthogonal;
  if (dual == LieType::Symplectic && dim_v_prime % 2 != 0)
    throw UsageError("symplectic target dimension must be even");
  int dim_v = orbit.size();
  std::vector<ComplexOrbit> candidates;
  for (auto& cand : enumerate_complex_orbits(dual, dim_v_prime, cap)) {
    if (!in_moment_image_complex(cand, dim_v)) continue;
    if (dominance_leq(descend_complex(cand, dim_v).partition, orbit.partition))
      candidates.push_back(std::move(cand));
  }
  return unique_dominance_maximum(std::move(candidates), "check_theta_lift");
}

std::vector<AdmissibleTableau> lift_orbit_support(
    const AdmissibleTableau& k_orbit, const ComplexOrbit& o_prime,
    std::optional<Signature> v_prime_signature) {
  auto report = validate_tableau(k_orbit);
  if (!report.ok) throw UsageError("invalid tableau: " + report.violation);
  bool orth_side = k_orbit.eps() == 1;
  if ((o_prime.type == LieType::Symplectic) != orth_side)
    throw UsageError("lift target must live on the Howe-dual side");

  FormedSpace v = orth_side
                      ? FormedSpace::real_quadratic(total_signature(k_orbit).p,
                                                    total_signature(k_orbit).q)
                      : FormedSpace::symplectic(k_orbit.total_dim());

  std::optional<Signature> constraint;
  if (o_prime.type == LieType::Orthogonal) {
    if (!v_prime_signature)
      throw UsageError("orthogonal dual side needs the signature of V'");
    if (v_prime_signature->dim() != o_prime.size())
      throw UsageError("signature of V' does not match the orbit size");
    constraint = v_prime_signature;
  }

  std::vector<AdmissibleTableau> support;
  for (auto& cand : enumerate_tableaux_of_shape(o_prime, constraint)) {
    if (!in_moment_image(cand, v)) continue;
    if (descend(cand, v).orbit == k_orbit) support.push_back(std::move(cand));
  }
  return support;
}

ComplexOrbit induce_orbit(const ComplexOrbit& o_prime,
                          const ClassicalSignature& s_double_prime,
                          int cap) {
  auto sig_report = validate_signature(s_double_prime);
  if (!sig_report.ok)
    throw UsageError("invalid signature: " + sig_report.violation);
  auto report = validate_complex(o_prime);
  if (!report.ok) throw UsageError("invalid orbit: " + report.violation);
  if (o_prime.type != lie_type_of_star(howe_dual(s_double_prime.star)))
    throw UsageError("orbit type does not match the dual of s''");

  LieType src_type = lie_type_of_star(s_double_prime.star);
  int target_dim = o_prime.size();  // |s'|
  std::vector<ComplexOrbit> candidates;
  for (auto& cand :
       enumerate_complex_orbits(src_type, s_double_prime.size(), cap)) {
    if (!in_moment_image_complex(cand, target_dim)) continue;
    if (!(descend_complex(cand, target_dim) == o_prime)) continue;
    if (!classify_descent_complex(cand, s_double_prime.star, target_dim).good)
      continue;
    candidates.push_back(std::move(cand));
  }
  if (candidates.empty()) throw MathError("induce_orbit: no good preimage");
  return unique_dominance_maximum(std::move(candidates), "induce_orbit");
}

}  // namespace theta
