#include "theta/growth.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <map>

#include "theta/errors.hpp"

namespace theta {

NuProfile nu_profile(const ClassicalSignature& s) {
  auto check = validate_signature(s);
  if (!check.ok) throw UsageError("invalid signature: " + check.violation);
  int size = s.size();
  int nu = 0;
  switch (s.star) {
    case Star::C:
    case Star::Ct: nu = size; break;
    case Star::Cs: nu = size - 1; break;
    case Star::B:
    case Star::D: nu = size - 2; break;
    case Star::Ds: nu = size - 3; break;
  }
  int nu_plus;
  switch (s.star) {
    case Star::C:
    case Star::D:
    case Star::Ct: nu_plus = nu; break;
    default: nu_plus = nu + 1; break;
  }
  return {nu, nu_plus};
}

namespace {

void check_dual_labels(const ClassicalSignature& s,
                       const ClassicalSignature& s_prime) {
  auto cs = validate_signature(s);
  if (!cs.ok) throw UsageError("invalid signature: " + cs.violation);
  auto cp = validate_signature(s_prime);
  if (!cp.ok) throw UsageError("invalid signature: " + cp.violation);
  if (s_prime.star != howe_dual(s.star))
    throw UsageError("labels are not Howe dual: " + to_string(s.star) +
                     " vs " + to_string(s_prime.star));
}

}  // namespace

KappaNu kappa_and_nu_pair(const ClassicalSignature& s,
                          const ClassicalSignature& s_prime) {
  check_dual_labels(s, s_prime);
  int kappa = 0;
  switch (s_prime.star) {
    case Star::B:
    case Star::D: kappa = s_prime.size() - s.size() - 1; break;
    case Star::C:
    case Star::Ct: kappa = s_prime.size() - s.size() + 1; break;
    case Star::Cs:
    case Star::Ds: kappa = s_prime.size() - s.size(); break;
  }
  return {kappa, -(kappa + 1)};
}

ConvergenceFlags convergence_report(const NuBound& nu,
                                    const ClassicalSignature& s,
                                    const ClassicalSignature& s_prime) {
  check_dual_labels(s, s_prime);
  NuProfile profile = nu_profile(s);
  ConvergenceFlags flags;
  flags.weakly_tempered = s_prime.size() >= profile.nu;
  if (nu) {
    flags.convergent = *nu > Rational(profile.nu - s_prime.size());
    flags.overconvergent = *nu > Rational(profile.nu_plus - s_prime.size());
  }
  flags.unitarity_preserving =
      flags.overconvergent && s_prime.size() >= profile.nu_plus;
  return flags;
}

Rational lift_bound(const ClassicalSignature& s,
                    const ClassicalSignature& s_prime) {
  check_dual_labels(s, s_prime);
  return Rational(s.size() - nu_profile(s_prime).nu);
}

ChainPlan plan_chain(const ClassicalSignature& start, const NuBound& nu0,
                     const std::vector<ClassicalSignature>& targets) {
  ChainPlan plan;
  ClassicalSignature s = start;
  NuBound nu = nu0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const ClassicalSignature& s_prime = targets[i];
    ChainStep step;
    step.s_prime = s_prime;
    step.kappa_nu = kappa_and_nu_pair(s, s_prime);
    step.flags = convergence_report(nu, s, s_prime);
    step.ac_equality_growth_ok =
        nu && *nu > Rational(step.kappa_nu.nu_pair);
    step.nu_out = lift_bound(s, s_prime);
    if (!step.flags.convergent && plan.first_nonconvergent < 0)
      plan.first_nonconvergent = static_cast<int>(i);
    if (!step.flags.unitarity_preserving && plan.first_nonunitary < 0)
      plan.first_nonunitary = static_cast<int>(i);
    plan.steps.push_back(step);
    s = s_prime;
    nu = step.nu_out;
  }
  plan.note =
      "sufficient growth conditions only; representation contents and "
      "orbit goodness are not modelled";
  return plan;
}

PsiValue psi_eval(const std::vector<Rational>& eigenvalues) {
  std::map<Rational, int> mult;
  for (const auto& a : eigenvalues) {
    if (a <= 0) throw UsageError("eigenvalues must be positive");
    ++mult[a];
  }
  for (const auto& [a, count] : mult) {
    Rational inv = 1 / a;
    auto it = mult.find(inv);
    if (it == mult.end() || it->second != count)
      throw UsageError("eigenvalue multiset is not closed under inversion");
  }
  PsiValue value;
  value.squared = 1;
  for (const auto& a : eigenvalues) value.squared *= 2 / (1 + a);
  value.exact = exact_sqrt(value.squared);
  value.approx = sqrt(boost::multiprecision::cpp_bin_float_50(value.squared))
                     .convert_to<double>();
  return value;
}

DoublingSignatures doubling_signatures(const ClassicalSignature& s,
                                       const ClassicalSignature& s_prime) {
  KappaNu kn = kappa_and_nu_pair(s, s_prime);
  if (kn.kappa < 0)
    throw MathError("kappa = " + std::to_string(kn.kappa) +
                    " < 0: outside the good-descent regime");
  DoublingSignatures out;
  out.kappa = kn.kappa;
  Star dotted = s.star == Star::B ? Star::D : s.star;
  out.s0 = {dotted, kn.kappa, kn.kappa};
  out.s2 = {s.star, s.p + kn.kappa, s.q + kn.kappa};
  out.s_dot = {dotted, s.size() + kn.kappa, s.size() + kn.kappa};
  out.split_rank = s.size() + kn.kappa;
  int expected = 0;
  switch (s_prime.star) {
    case Star::B:
    case Star::D: expected = s_prime.size() - 1; break;
    case Star::C:
    case Star::Ct: expected = s_prime.size() + 1; break;
    case Star::Cs:
    case Star::Ds: expected = s_prime.size(); break;
  }
  out.split_rank_consistent = out.split_rank == expected;
  return out;
}

}  // namespace theta
