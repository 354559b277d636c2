#include "theta/formed_spaces.hpp"

#include <algorithm>
#include <cstdlib>

#include "theta/errors.hpp"

namespace theta {

std::string to_string(Field f) {
  switch (f) {
    case Field::Real: return "R";
    case Field::Complex: return "C";
    case Field::NonArch: return "NA";
  }
  return "?";
}

std::string to_string(ChiFlag c) {
  return c == ChiFlag::Trivial ? "triv" : "nontriv";
}

std::string to_string(TowerSign s) { return s == TowerSign::Plus ? "+" : "-"; }

FormedSpace FormedSpace::real_quadratic(int p, int q) {
  if (p < 0 || q < 0) throw UsageError("signature entries must be >= 0");
  FormedSpace v;
  v.field_ = Field::Real;
  v.kind_ = FormKind::Quadratic;
  v.p_ = p;
  v.q_ = q;
  return v;
}

FormedSpace FormedSpace::complex_quadratic(int dim) {
  if (dim < 0) throw UsageError("dimension must be >= 0");
  FormedSpace v;
  v.field_ = Field::Complex;
  v.kind_ = FormKind::Quadratic;
  v.dim_ = dim;
  return v;
}

FormedSpace FormedSpace::nonarch_quadratic(int eps, ChiFlag chi, TowerSign sign,
                                           int witt_rank) {
  if (eps != 0 && eps != 1) throw UsageError("eps must be 0 or 1");
  if (witt_rank < 0) throw UsageError("Witt rank must be >= 0");
  FormedSpace v;
  v.field_ = Field::NonArch;
  v.kind_ = FormKind::Quadratic;
  v.eps_ = eps;
  v.chi_ = chi;
  v.sign_ = sign;
  v.rank_ = witt_rank;
  return v;
}

FormedSpace FormedSpace::symplectic(int dim, Field field) {
  if (dim < 0 || dim % 2 != 0) throw UsageError("symplectic dim must be even");
  FormedSpace v;
  v.field_ = field;
  v.kind_ = FormKind::Symplectic;
  v.dim_ = dim;
  return v;
}

int FormedSpace::dim() const {
  if (kind_ == FormKind::Symplectic) return dim_;
  switch (field_) {
    case Field::Real: return p_ + q_;
    case Field::Complex: return dim_;
    case Field::NonArch: return nonarch_kernel_dim(eps_, chi_, sign_) + 2 * rank_;
  }
  return 0;
}

int FormedSpace::p() const {
  if (field_ != Field::Real || kind_ != FormKind::Quadratic)
    throw UsageError("p defined for real quadratic spaces only");
  return p_;
}

int FormedSpace::q() const {
  if (field_ != Field::Real || kind_ != FormKind::Quadratic)
    throw UsageError("q defined for real quadratic spaces only");
  return q_;
}

int FormedSpace::eps() const {
  if (kind_ == FormKind::Symplectic)
    throw UsageError("eps defined for quadratic spaces only");
  return field_ == Field::NonArch ? eps_ : dim() % 2;
}

ChiFlag FormedSpace::chi() const {
  if (field_ != Field::NonArch)
    throw UsageError("chi flag defined for non-archimedean spaces only");
  return chi_;
}

TowerSign FormedSpace::sign() const {
  if (field_ != Field::NonArch)
    throw UsageError("tower sign defined for non-archimedean spaces only");
  return sign_;
}

int FormedSpace::witt_rank() const {
  if (field_ != Field::NonArch)
    throw UsageError("witt_rank defined for non-archimedean spaces only");
  return rank_;
}

std::string FormedSpace::str() const {
  if (kind_ == FormKind::Symplectic)
    return "Symp(" + std::to_string(dim_) + ", " + to_string(field_) + ")";
  switch (field_) {
    case Field::Real:
      return "R^{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
    case Field::Complex:
      return "C^" + std::to_string(dim_);
    case Field::NonArch:
      return "NA(eps=" + std::to_string(eps_) + ",chi=" + to_string(chi_) +
             "," + to_string(sign_) + ",r=" + std::to_string(rank_) + ")";
  }
  return "?";
}

int nonarch_kernel_dim(int eps, ChiFlag chi, TowerSign sign) {
  if (eps == 0) {
    if (chi == ChiFlag::Trivial) return sign == TowerSign::Plus ? 0 : 4;
    return 2;
  }
  return sign == TowerSign::Plus ? 1 : 3;
}

int witt_index(const FormedSpace& v) {
  if (v.kind() == FormKind::Symplectic) return v.dim() / 2;
  switch (v.field()) {
    case Field::Real: return std::min(v.p(), v.q());
    case Field::Complex: return v.dim() / 2;
    case Field::NonArch: return v.witt_rank();
  }
  return 0;
}

DiscriminantAlpha discriminant_alpha(const FormedSpace& v) {
  if (v.field() != Field::Real || v.kind() != FormKind::Quadratic)
    throw UsageError("discriminant_alpha needs a real quadratic space");
  int alpha = ((v.p() - v.q()) % 4 + 4) % 4;
  // chi_alpha(x) = (x, (-1)^{alpha(alpha-1)/2})_2 with the real Hilbert
  // symbol (x,y)_2 = -1 iff x<0 and y<0; trivial iff alpha(alpha-1)/2 even.
  bool trivial = (alpha * (alpha - 1) / 2) % 2 == 0;
  return {alpha, trivial};
}

WittTower WittTower::real(int k) {
  WittTower t;
  t.field_ = Field::Real;
  t.k_ = k;
  t.eps_ = ((k % 2) + 2) % 2;
  return t;
}

WittTower WittTower::complex(int eps) {
  if (eps != 0 && eps != 1) throw UsageError("eps must be 0 or 1");
  WittTower t;
  t.field_ = Field::Complex;
  t.eps_ = eps;
  return t;
}

WittTower WittTower::nonarch(int eps, ChiFlag chi, TowerSign sign) {
  if (eps != 0 && eps != 1) throw UsageError("eps must be 0 or 1");
  WittTower t;
  t.field_ = Field::NonArch;
  t.eps_ = eps;
  t.chi_ = chi;
  t.sign_ = sign;
  return t;
}

int WittTower::k() const {
  if (field_ != Field::Real) throw UsageError("k defined for real towers only");
  return k_;
}

ChiFlag WittTower::chi() const {
  if (field_ != Field::NonArch)
    throw UsageError("chi defined for non-archimedean towers only");
  return chi_;
}

TowerSign WittTower::sign() const {
  if (field_ != Field::NonArch)
    throw UsageError("sign defined for non-archimedean towers only");
  return sign_;
}

int WittTower::kernel_dim() const {
  switch (field_) {
    case Field::Real: return std::abs(k_);
    case Field::Complex: return eps_;
    case Field::NonArch: return nonarch_kernel_dim(eps_, chi_, sign_);
  }
  return 0;
}

std::string WittTower::str() const {
  switch (field_) {
    case Field::Real: return "t^(" + std::to_string(k_) + ")";
    case Field::Complex: return "t_C(eps=" + std::to_string(eps_) + ")";
    case Field::NonArch:
      return "t" + to_string(sign_) + "(eps=" + std::to_string(eps_) +
             ",chi=" + to_string(chi_) + ")";
  }
  return "?";
}

WittTower tower_of(const FormedSpace& v) {
  if (v.kind() != FormKind::Quadratic)
    throw UsageError("tower_of needs a quadratic space");
  switch (v.field()) {
    case Field::Real: return WittTower::real(v.p() - v.q());
    case Field::Complex: return WittTower::complex(v.dim() % 2);
    case Field::NonArch: return WittTower::nonarch(v.eps(), v.chi(), v.sign());
  }
  throw UsageError("unreachable");
}

FormedSpace space_at(const WittTower& t, int r) {
  if (r < 0) throw UsageError("tower position r must be >= 0");
  switch (t.field()) {
    case Field::Real:
      return t.k() >= 0 ? FormedSpace::real_quadratic(t.k() + r, r)
                        : FormedSpace::real_quadratic(r, -t.k() + r);
    case Field::Complex:
      return FormedSpace::complex_quadratic(t.eps() + 2 * r);
    case Field::NonArch:
      return FormedSpace::nonarch_quadratic(t.eps(), t.chi(), t.sign(), r);
  }
  throw UsageError("unreachable");
}

bool same_family(const WittTower& t1, const WittTower& t2) {
  if (t1.field() != t2.field()) return false;
  switch (t1.field()) {
    case Field::Real:
      return ((t1.k() - t2.k()) % 4 + 4) % 4 == 0;
    case Field::Complex:
      return t1.eps() == t2.eps();
    case Field::NonArch:
      return t1.eps() == t2.eps() && t1.chi() == t2.chi();
  }
  return false;
}

bool adjacent(const WittTower& t1, const WittTower& t2) {
  if (!same_family(t1, t2))
    throw UsageError("adjacent: towers from different families");
  if (t1 == t2) return false;
  if (t1.field() == Field::Real) return std::abs(t1.k() - t2.k()) == 4;
  // Non-archimedean: the two towers of T_{eps,chi} are adjacent.
  return true;
}

WittTower TowerFamily::at(int index) const {
  if (count != Count::Infinite)
    return towers.at(static_cast<std::size_t>(index));
  return WittTower::real(alpha + 4 * index);
}

TowerFamily enumerate_towers_nonarch(int eps, ChiFlag chi) {
  TowerFamily f;
  f.count = TowerFamily::Count::Two;
  f.towers = {WittTower::nonarch(eps, chi, TowerSign::Plus),
              WittTower::nonarch(eps, chi, TowerSign::Minus)};
  return f;
}

TowerFamily enumerate_towers_complex(int eps) {
  TowerFamily f;
  f.count = TowerFamily::Count::One;
  f.towers = {WittTower::complex(eps)};
  return f;
}

TowerFamily enumerate_towers_real(int eps, int alpha) {
  alpha = ((alpha % 4) + 4) % 4;
  if (alpha % 2 != eps % 2)
    throw UsageError("alpha must be congruent to eps mod 2");
  TowerFamily f;
  f.count = TowerFamily::Count::Infinite;
  f.alpha = alpha;
  return f;
}

bool quasi_split(const FormedSpace& v) {
  if (v.kind() != FormKind::Quadratic)
    throw UsageError("quasi_split needs a quadratic space");
  return 2 * witt_index(v) >= v.dim() - 2;
}

DifferenceWitt difference_witt_index(const FormedSpace& v1,
                                     const FormedSpace& v2) {
  if (v1.field() != Field::Real || v2.field() != Field::Real ||
      v1.kind() != FormKind::Quadratic || v2.kind() != FormKind::Quadratic)
    throw UsageError("difference_witt_index needs real quadratic spaces");
  DifferenceWitt d;
  // V1 + V2^- = R^{p1+q2, q1+p2}
  d.witt_index = std::min(v1.p() + v2.q(), v1.q() + v2.p());
  d.bound = (v1.dim() + v2.dim() - 4) / 2;
  int k1 = v1.p() - v1.q(), k2 = v2.p() - v2.q();
  d.same_tower = k1 == k2;
  d.same_family = ((k1 - k2) % 4 + 4) % 4 == 0;
  d.attains_bound =
      d.same_family && !d.same_tower && d.witt_index == d.bound;
  return d;
}

}  // namespace theta
