#pragma once

#include <optional>
#include <string>

#include "theta/formed_spaces.hpp"

namespace theta {

// The six classical-space labels of a signature (star, p, q).
enum class Star { B, C, D, Ct, Cs, Ds };  // Ct = C~, Cs = C*, Ds = D*

std::string to_string(Star star);
Star star_from_string(const std::string& text);

struct ClassicalSignature {
  Star star;
  int p = 0;
  int q = 0;

  int size() const { return p + q; }  // |s|
  bool operator==(const ClassicalSignature& other) const = default;
  std::string str() const;
};

struct ValidationReport {
  bool ok;
  std::string violation;  // empty when ok
};

// Validity table:
//   B: p+q odd; D: p+q even; C, C~, D*: p = q; C*: p and q both even.
ValidationReport validate_signature(const ClassicalSignature& s);

// B -> C~, C -> D, D -> C, C~ -> B, C* -> D*, D* -> C*.
Star howe_dual(Star star);

// O(p,q) / Sp_2p(R) / Mp_2p(R) / O*(2p) / Sp(p/2,q/2).
std::string real_group_label(const ClassicalSignature& s);

// Whether the complexified Lie algebra is orthogonal or symplectic.
bool is_orthogonal_star(Star star);   // B, D, D*
bool is_symplectic_star(Star star);   // C, C~, C*

// A dual pair from the type I / type II tables, at parameter level.
struct PairDescriptor {
  enum class Shape {
    OrthSymp_R,   // (O_{p,q}, Sp_{2n}(R))
    OrthSymp_C,   // (O_p(C), Sp_{2n}(C))
    Unitary,      // (U_{p,q}, U_{r,s})
    SpOStar,      // (Sp_{p,q}, O*_{2n})
    GL_R,         // (GL_m(R), GL_n(R))
    GL_C,         // (GL_m(C), GL_n(C))
    GL_H          // (GL_m(H), GL_n(H))
  };
  Shape shape;
  int p = 0, q = 0;  // first member parameters (or m for type II)
  int r = 0, s = 0;  // second member parameters (U_{r,s})
  int n = 0;         // second member parameter (or n for type II)
};

// Dimension of the ambient real symplectic space W.
long long ambient_symplectic_dim(const PairDescriptor& pair);

enum class StableRange { OrthogonalSmaller, SymplecticSmaller, NotStable };

// Stable-range test for an orthogonal-symplectic pair (V quadratic,
// V' symplectic): orthogonal smaller iff dim V <= (dim V')/2,
// symplectic smaller iff the Witt index of V is >= dim V'.
StableRange stable_range(const FormedSpace& v, const FormedSpace& v_prime);

std::string to_string(StableRange s);

}  // namespace theta
