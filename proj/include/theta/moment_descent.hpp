#pragma once

#include <optional>
#include <vector>

#include "theta/orbits.hpp"

namespace theta {

// Moment-map descent of nilpotent orbits for a type I pair (G, G') with
// standard modules (V, V'): an orbit of g' in the image of the moment map
// descends to the orbit of g obtained by erasing the first column of its
// diagram and padding the first column back to size dim V.

struct DescentResult {
  AdmissibleTableau orbit;      // descended tableau, ambient space V
  int b = 0;                    // dim Ker(T)
  FormedSpace kernel_form;      // form on Ker(T)
  GroupLabel L;                 // isometry group of Ker(T)
  GroupLabel L_prime;           // isometry group of the length-1 rows of O'
  std::vector<GroupLabel> m_xxp_factors;  // M_{X,X'}, row order
};

// Embedding criterion: the multiplicity spaces of the length >= 2 rows of
// o_prime, tensored with S_{length-1}, must embed into V. Over R this is
// a componentwise signature comparison.
bool in_moment_image(const AdmissibleTableau& o_prime, const FormedSpace& v);

// Signature (eps = +1 target) or split dimension (eps = -1 target) of the
// embedded space T*(V').
Signature embedded_signature(const AdmissibleTableau& o_prime);
int embedded_dim(const AdmissibleTableau& o_prime);

DescentResult descend(const AdmissibleTableau& o_prime, const FormedSpace& v);

// K-orbit reading of the same recipe (Kostant-Sekiguchi identification).
DescentResult descend_K_orbit(const AdmissibleTableau& o_prime,
                              const FormedSpace& v);

struct DescentClass {
  bool pure = false;     // b = 0
  bool regular = false;  // pure, or O' is a pure nilpotent
  bool good = false;     // regular + the star'-case condition
};

DescentClass classify_descent(const AdmissibleTableau& o_prime,
                              const FormedSpace& v);

// (M_{X,X'} factors, L, L') for the descent of o_prime into V; (L, L')
// is a dual pair of the same type as (G, G').
struct DescentStabilizers {
  std::vector<GroupLabel> m_xxp_factors;
  GroupLabel L;
  GroupLabel L_prime;
};
DescentStabilizers descent_stabilizers(const AdmissibleTableau& o_prime,
                                       const FormedSpace& v);

// Complex-level descent: partitions only; embedding is a dimension count.
bool in_moment_image_complex(const ComplexOrbit& o_prime, int dim_v);
ComplexOrbit descend_complex(const ComplexOrbit& o_prime, int dim_v);

// Stripped size = |O'| minus its first column.
int stripped_size(const Partition& partition);

// Classification of the complex descent from an orbit of g_{s''} (label
// src_star) onto the space of dimension target_dim on the dual side.
DescentClass classify_descent_complex(const ComplexOrbit& source,
                                      Star src_star, int target_dim);

// Check theta lift at orbit-support level: the dominance-maximal orbit O'
// of the dual algebra (size dim_v_prime) whose descent lies below the
// given orbit. Errors when no candidate exists or the maximum is not
// unique.
ComplexOrbit check_theta_lift(const ComplexOrbit& orbit, int dim_v_prime,
                              int cap = kDefaultEnumerationCap);

// Support of the geometric lift over a K-orbit: all K'-orbit tableaux of
// complex type o_prime descending exactly to k_orbit. For an orthogonal
// dual side the signature of V' must be supplied.
std::vector<AdmissibleTableau> lift_orbit_support(
    const AdmissibleTableau& k_orbit, const ComplexOrbit& o_prime,
    std::optional<Signature> v_prime_signature = std::nullopt);

// Induced orbit: the dominance-maximal orbit of g_{s''} that is good for
// the descent toward the space of o_prime and descends exactly to it.
ComplexOrbit induce_orbit(const ComplexOrbit& o_prime,
                          const ClassicalSignature& s_double_prime,
                          int cap = kDefaultEnumerationCap);

}  // namespace theta
