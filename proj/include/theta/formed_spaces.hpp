#pragma once

#include <string>
#include <variant>
#include <vector>

namespace theta {

enum class Field { Real, Complex, NonArch };
enum class FormKind { Quadratic, Symplectic };
enum class ChiFlag { Trivial, Nontrivial };
enum class TowerSign { Plus, Minus };

std::string to_string(Field f);
std::string to_string(ChiFlag c);
std::string to_string(TowerSign s);

// A formed space over a local field, carried at the level of its
// classifying invariants:
//   - real quadratic: signature (p, q)
//   - complex quadratic: dimension
//   - non-archimedean quadratic: (parity eps, chi flag, tower sign, Witt rank)
//   - symplectic: even dimension
// Dimension-0 spaces are legal everywhere.
class FormedSpace {
 public:
  FormedSpace() = default;  // R^{0,0}

  static FormedSpace real_quadratic(int p, int q);
  static FormedSpace complex_quadratic(int dim);
  static FormedSpace nonarch_quadratic(int eps, ChiFlag chi, TowerSign sign,
                                       int witt_rank);
  static FormedSpace symplectic(int dim, Field field = Field::Real);

  Field field() const { return field_; }
  FormKind kind() const { return kind_; }
  int dim() const;

  // Real quadratic accessors.
  int p() const;
  int q() const;

  // Non-archimedean accessors.
  int eps() const;
  ChiFlag chi() const;
  TowerSign sign() const;
  int witt_rank() const;

  bool operator==(const FormedSpace& other) const = default;

  std::string str() const;

 private:
  Field field_ = Field::Real;
  FormKind kind_ = FormKind::Quadratic;
  int p_ = 0, q_ = 0;   // real quadratic
  int dim_ = 0;         // complex quadratic / symplectic
  int eps_ = 0;         // non-arch
  ChiFlag chi_ = ChiFlag::Trivial;
  TowerSign sign_ = TowerSign::Plus;
  int rank_ = 0;
};

// Dimension of the anisotropic kernel of a non-archimedean tower:
//   (eps=0, chi trivial):    {+: 0, -: 4}   (split / quaternionic)
//   (eps=0, chi nontrivial): {+: 2, -: 2}
//   (eps=1):                 {+: 1, -: 3}
int nonarch_kernel_dim(int eps, ChiFlag chi, TowerSign sign);

int witt_index(const FormedSpace& v);

struct DiscriminantAlpha {
  int alpha;               // p - q mod 4, in {0,1,2,3}
  bool trivial_character;  // chi_alpha trivial iff alpha in {0,1}
};
DiscriminantAlpha discriminant_alpha(const FormedSpace& v);

// An orthogonal Witt tower: the spaces sharing an anisotropic kernel.
class WittTower {
 public:
  static WittTower real(int k);  // t^(k) = { R^{p,q} : p-q = k }
  static WittTower complex(int eps);
  static WittTower nonarch(int eps, ChiFlag chi, TowerSign sign);

  Field field() const { return field_; }
  int k() const;  // real only
  int eps() const { return eps_; }
  ChiFlag chi() const;
  TowerSign sign() const;

  int kernel_dim() const;

  bool operator==(const WittTower& other) const = default;

  std::string str() const;

 private:
  WittTower() = default;
  Field field_ = Field::Real;
  int k_ = 0;
  int eps_ = 0;
  ChiFlag chi_ = ChiFlag::Trivial;
  TowerSign sign_ = TowerSign::Plus;
};

WittTower tower_of(const FormedSpace& v);
FormedSpace space_at(const WittTower& t, int r);

// True when the two towers lie in the same family T_{eps,chi}
// (real: same alpha mod 4; non-arch: same (eps, chi)).
bool same_family(const WittTower& t1, const WittTower& t2);

// Adjacency within one family: |k - l| = 4 over R; the two
// non-archimedean towers are always adjacent. Irreflexive.
bool adjacent(const WittTower& t1, const WittTower& t2);

struct TowerFamily {
  enum class Count { Two, One, Infinite };
  Count count;
  std::vector<WittTower> towers;  // full list for finite counts
  int alpha = 0;                  // real generator: k = alpha (mod 4)
  WittTower at(int index) const;  // real: k = alpha + 4*index
};
TowerFamily enumerate_towers_nonarch(int eps, ChiFlag chi);
TowerFamily enumerate_towers_complex(int eps);
TowerFamily enumerate_towers_real(int eps, int alpha);

bool quasi_split(const FormedSpace& v);

struct DifferenceWitt {
  int witt_index;      // Witt index of V1 + V2^-
  int bound;           // (dim V1 + dim V2 - 4) / 2, rounded down
  bool same_family;    // p1-q1 = p2-q2 (mod 4)
  bool same_tower;     // p1-q1 = p2-q2
  bool attains_bound;  // distinct towers of one family, index = bound
};
DifferenceWitt difference_witt_index(const FormedSpace& v1,
                                     const FormedSpace& v2);

}  // namespace theta
