#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/dual_pairs.hpp"
#include "theta/rational.hpp"

namespace theta {

// Matrix-coefficient growth bound: an exact rational, or "no bound known"
// (treated as -infinity in every comparison).
using NuBound = std::optional<Rational>;

struct NuProfile {
  int nu;       // |s| / |s|-1 / |s|-2 / |s|-3 per star
  int nu_plus;  // smallest even integer >= nu
};
NuProfile nu_profile(const ClassicalSignature& s);

struct KappaNu {
  int kappa;    // may be negative, outside the good-descent regime
  int nu_pair;  // -(kappa + 1)
};
KappaNu kappa_and_nu_pair(const ClassicalSignature& s,
                          const ClassicalSignature& s_prime);

struct ConvergenceFlags {
  bool convergent = false;            // nu > nu_s - |s'|
  bool overconvergent = false;        // nu > nu_s^+ - |s'|
  bool weakly_tempered = false;       // |s'| >= nu_s
  bool unitarity_preserving = false;  // |s'| >= nu_s^+ and overconvergent
};
ConvergenceFlags convergence_report(const NuBound& nu,
                                    const ClassicalSignature& s,
                                    const ClassicalSignature& s_prime);

// Bound carried by the lift: |s| - nu_{s'}.
Rational lift_bound(const ClassicalSignature& s,
                    const ClassicalSignature& s_prime);

struct ChainStep {
  ClassicalSignature s_prime;
  KappaNu kappa_nu;
  ConvergenceFlags flags;
  // Growth half of the associated-cycle equality criterion: nu > nu_{s,s'}.
  // Orbit goodness is not modelled here.
  bool ac_equality_growth_ok = false;
  NuBound nu_out;
};

struct ChainPlan {
  std::vector<ChainStep> steps;
  // 0-based index of the first step that is not convergent / not
  // unitarity-preserving; -1 when none.
  int first_nonconvergent = -1;
  int first_nonunitary = -1;
  std::string note;
};

// Folds convergence_report and lift_bound along a lifting chain,
// carrying the representation bound forward. Propagates the sufficient
// conditions only; it does not model representation contents.
ChainPlan plan_chain(const ClassicalSignature& start, const NuBound& nu0,
                     const std::vector<ClassicalSignature>& targets);

struct PsiValue {
  Rational squared;               // Psi^2, always exact
  std::optional<Rational> exact;  // Psi itself when Psi^2 is a square
  double approx = 0.0;
};

// Psi = prod_a ((1+a)/2)^(-1/2) over a multiset of positive rationals
// closed under a -> 1/a.
PsiValue psi_eval(const std::vector<Rational>& eigenvalues);

struct DoublingSignatures {
  int kappa = 0;
  ClassicalSignature s0;       // (star., kappa, kappa)
  ClassicalSignature s2;       // s'' = (star, p+kappa, q+kappa)
  ClassicalSignature s_dot;    // (star., |s|+kappa, |s|+kappa)
  int split_rank = 0;          // |s| + kappa
  bool split_rank_consistent;  // against |s'|-1 / |s'|+1 / |s'| by star'
};
DoublingSignatures doubling_signatures(const ClassicalSignature& s,
                                       const ClassicalSignature& s_prime);

}  // namespace theta
