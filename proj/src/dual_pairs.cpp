#include "theta/dual_pairs.hpp"

#include "theta/errors.hpp"

namespace theta {

std::string to_string(Star star) {
  switch (star) {
    case Star::B: return "B";
    case Star::C: return "C";
    case Star::D: return "D";
    case Star::Ct: return "C~";
    case Star::Cs: return "C*";
    case Star::Ds: return "D*";
  }
  return "?";
}

Star star_from_string(const std::string& text) {
  if (text == "B") return Star::B;
  if (text == "C") return Star::C;
  if (text == "D") return Star::D;
  if (text == "C~" || text == "Ct") return Star::Ct;
  if (text == "C*" || text == "Cs") return Star::Cs;
  if (text == "D*" || text == "Ds") return Star::Ds;
  throw UsageError("unknown star label: " + text);
}

std::string ClassicalSignature::str() const {
  return "(" + to_string(star) + "," + std::to_string(p) + "," +
         std::to_string(q) + ")";
}

ValidationReport validate_signature(const ClassicalSignature& s) {
  if (s.p < 0 || s.q < 0) return {false, "p, q must be >= 0"};
  switch (s.star) {
    case Star::B:
      if ((s.p + s.q) % 2 == 0) return {false, "p+q odd required for B"};
      break;
    case Star::D:
      if ((s.p + s.q) % 2 != 0) return {false, "p+q even required for D"};
      break;
    case Star::C:
    case Star::Ct:
    case Star::Ds:
      if (s.p != s.q) return {false, "p=q required"};
      break;
    case Star::Cs:
      if (s.p % 2 != 0 || s.q % 2 != 0)
        return {false, "both p and q must be even for C*"};
      break;
  }
  return {true, ""};
}

Star howe_dual(Star star) {
  switch (star) {
    case Star::B: return Star::Ct;
    case Star::C: return Star::D;
    case Star::D: return Star::C;
    case Star::Ct: return Star::B;
    case Star::Cs: return Star::Ds;
    case Star::Ds: return Star::Cs;
  }
  throw UsageError("unknown star label");
}

std::string real_group_label(const ClassicalSignature& s) {
  auto check = validate_signature(s);
  if (!check.ok) throw UsageError("invalid signature: " + check.violation);
  switch (s.star) {
    case Star::B:
    case Star::D:
      return "O(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
    case Star::C:
      return "Sp_" + std::to_string(2 * s.p) + "(R)";
    case Star::Ct:
      return "Mp_" + std::to_string(2 * s.p) + "(R)";
    case Star::Ds:
      return "O*(" + std::to_string(2 * s.p) + ")";
    case Star::Cs:
      return "Sp(" + std::to_string(s.p / 2) + "," + std::to_string(s.q / 2) +
             ")";
  }
  throw UsageError("unknown star label");
}

bool is_orthogonal_star(Star star) {
  return star == Star::B || star == Star::D || star == Star::Ds;
}

bool is_symplectic_star(Star star) { return !is_orthogonal_star(star); }

long long ambient_symplectic_dim(const PairDescriptor& pair) {
  using Shape = PairDescriptor::Shape;
  auto ll = [](int x) { return static_cast<long long>(x); };
  switch (pair.shape) {
    case Shape::OrthSymp_R: return 2 * ll(pair.p + pair.q) * pair.n;
    case Shape::OrthSymp_C: return 4 * ll(pair.p) * pair.n;
    case Shape::Unitary: return 2 * ll(pair.p + pair.q) * (pair.r + pair.s);
    case Shape::SpOStar: return 4 * ll(pair.p + pair.q) * pair.n;
    case Shape::GL_R: return 2 * ll(pair.p) * pair.n;
    case Shape::GL_C: return 4 * ll(pair.p) * pair.n;
    case Shape::GL_H: return 8 * ll(pair.p) * pair.n;
  }
  throw UsageError("unknown pair shape");
}

StableRange stable_range(const FormedSpace& v, const FormedSpace& v_prime) {
  if (v.kind() != FormKind::Quadratic ||
      v_prime.kind() != FormKind::Symplectic)
    throw UsageError("stable_range needs (quadratic V, symplectic V')");
  if (2 * v.dim() <= v_prime.dim()) return StableRange::OrthogonalSmaller;
  if (witt_index(v) >= v_prime.dim()) return StableRange::SymplecticSmaller;
  return StableRange::NotStable;
}

std::string to_string(StableRange s) {
  switch (s) {
    case StableRange::OrthogonalSmaller: return "orthogonal-smaller";
    case StableRange::SymplecticSmaller: return "symplectic-smaller";
    case StableRange::NotStable: return "not-stable";
  }
  return "?";
}

}  // namespace theta
