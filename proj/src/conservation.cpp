#include "theta/conservation.hpp"

#include <algorithm>
#include <cstdlib>

#include "theta/errors.hpp"

namespace theta {

namespace {

std::vector<int> merge_support(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::string tower_name(Field field, int key) {
  switch (field) {
    case Field::Real: return "t^(" + std::to_string(key) + ")";
    case Field::NonArch: return key > 0 ? "t+" : "t-";
    case Field::Complex: return "t_C";
  }
  return "?";
}

}  // namespace

std::string Fact::str() const {
  std::string out = "fact#" + std::to_string(id) + ": " + index;
  if (tower) out += " in " + std::to_string(*tower);
  out += exact ? " exactly at " : (occurred ? " occurred at " : " absent at ");
  out += std::to_string(dim);
  if (!source.empty()) out += " [" + source + "]";
  return out;
}

OccurrenceLedger OccurrenceLedger::orthogonal(int dim_v) {
  if (dim_v < 0) throw UsageError("dim V must be >= 0");
  OccurrenceLedger ledger;
  ledger.side_ = Side::Orthogonal;
  ledger.field_ = Field::Real;
  ledger.dim_v_ = dim_v;
  return ledger;
}

OccurrenceLedger OccurrenceLedger::symplectic_real(int dim_v_prime,
                                                   int alpha) {
  if (dim_v_prime < 0 || dim_v_prime % 2 != 0)
    throw UsageError("dim V' must be even and >= 0");
  OccurrenceLedger ledger;
  ledger.side_ = Side::Symplectic;
  ledger.field_ = Field::Real;
  ledger.dim_v_prime_ = dim_v_prime;
  ledger.alpha_ = ((alpha % 4) + 4) % 4;
  ledger.eps_ = ledger.alpha_ % 2;
  ledger.cap_ = 4 * (dim_v_prime + 4);
  // Towers with kernel above 4n+4 can never take part in an attaining
  // pair; tracking |k| <= 4n+4 keeps the lattice finite.
  for (int k = -(2 * dim_v_prime + 4); k <= 2 * dim_v_prime + 4; ++k)
    if (((k - ledger.alpha_) % 4 + 4) % 4 == 0) ledger.tower_keys_.push_back(k);
  return ledger;
}

OccurrenceLedger OccurrenceLedger::symplectic_nonarch(int dim_v_prime, int eps,
                                                      ChiFlag chi) {
  if (dim_v_prime < 0 || dim_v_prime % 2 != 0)
    throw UsageError("dim V' must be even and >= 0");
  if (eps != 0 && eps != 1) throw UsageError("eps must be 0 or 1");
  OccurrenceLedger ledger;
  ledger.side_ = Side::Symplectic;
  ledger.field_ = Field::NonArch;
  ledger.dim_v_prime_ = dim_v_prime;
  ledger.eps_ = eps;
  ledger.chi_ = chi;
  ledger.tower_keys_ = {+1, -1};
  return ledger;
}

OccurrenceLedger OccurrenceLedger::symplectic_complex(int dim_v_prime,
                                                      int eps) {
  if (dim_v_prime < 0 || dim_v_prime % 2 != 0)
    throw UsageError("dim V' must be even and >= 0");
  if (eps != 0 && eps != 1) throw UsageError("eps must be 0 or 1");
  OccurrenceLedger ledger;
  ledger.side_ = Side::Symplectic;
  ledger.field_ = Field::Complex;
  ledger.dim_v_prime_ = dim_v_prime;
  ledger.eps_ = eps;
  ledger.tower_keys_ = {0};
  return ledger;
}

std::string OccurrenceLedger::twist_partner(const std::string& index) {
  const std::string suffix = "*sgn";
  if (index.size() > suffix.size() &&
      index.compare(index.size() - suffix.size(), suffix.size(), suffix) == 0)
    return index.substr(0, index.size() - suffix.size());
  return index + suffix;
}

int OccurrenceLedger::tower_kernel_dim(int tower_key) const {
  switch (field_) {
    case Field::Real: return std::abs(tower_key);
    case Field::NonArch:
      return nonarch_kernel_dim(
          eps_, chi_, tower_key > 0 ? TowerSign::Plus : TowerSign::Minus);
    case Field::Complex: return eps_;
  }
  return 0;
}

WittTower OccurrenceLedger::tower(int tower_key) const {
  switch (field_) {
    case Field::Real: return WittTower::real(tower_key);
    case Field::NonArch:
      return WittTower::nonarch(
          eps_, chi_, tower_key > 0 ? TowerSign::Plus : TowerSign::Minus);
    case Field::Complex: return WittTower::complex(eps_);
  }
  throw UsageError("unreachable");
}

void OccurrenceLedger::ensure_orth_index(const std::string& index) {
  if (orth_.count(index)) return;
  orth_[index] = IndexInterval{};
  orth_[twist_partner(index)];  // partner tracked alongside
}

void OccurrenceLedger::ensure_tower(int key) {
  if (std::find(tower_keys_.begin(), tower_keys_.end(), key) !=
      tower_keys_.end())
    return;
  tower_keys_.push_back(key);
  std::sort(tower_keys_.begin(), tower_keys_.end());
  for (auto& [index, towers] : symp_) {
    IndexInterval iv;
    iv.lo = tower_kernel_dim(key);
    if (field_ == Field::Real) iv.hi = tower_kernel_dim(key) + cap_;
    towers.emplace(key, iv);
  }
}

void OccurrenceLedger::ensure_symp_index(const std::string& index) {
  if (symp_.count(index)) return;
  auto& towers = symp_[index];
  for (int key : tower_keys_) {
    IndexInterval iv;
    iv.lo = tower_kernel_dim(key);
    if (field_ == Field::Real) iv.hi = tower_kernel_dim(key) + cap_;
    towers.emplace(key, iv);
  }
}

void OccurrenceLedger::track(const std::string& index) {
  if (side_ == Side::Orthogonal)
    ensure_orth_index(index);
  else
    ensure_symp_index(index);
}

void OccurrenceLedger::report_contradiction(const IndexInterval& iv) {
  if (contradiction_) return;
  contradiction_ = true;
  conflict_ids_ = merge_support(iv.lo_facts, iv.hi_facts);
}

void OccurrenceLedger::set_lo(IndexInterval& iv, const std::string& name,
                              int value, std::vector<int> support,
                              const std::string& rule) {
  if (contradiction_ || value <= iv.lo) return;
  iv.lo = value;
  iv.lo_facts = std::move(support);
  ++changes_;
  trace_.push_back(name + ": lo := " + std::to_string(value) + " (" + rule +
                   ")");
  if (iv.hi && iv.lo > *iv.hi) {
    trace_.push_back(name + ": contradiction, lo > hi");
    report_contradiction(iv);
  }
}

void OccurrenceLedger::set_hi(IndexInterval& iv, const std::string& name,
                              int value, std::vector<int> support,
                              const std::string& rule) {
  if (contradiction_ || (iv.hi && value >= *iv.hi)) return;
  iv.hi = value;
  iv.hi_facts = std::move(support);
  ++changes_;
  trace_.push_back(name + ": hi := " + std::to_string(value) + " (" + rule +
                   ")");
  if (iv.lo > *iv.hi) {
    trace_.push_back(name + ": contradiction, lo > hi");
    report_contradiction(iv);
  }
}

const Fact& OccurrenceLedger::push_orth_fact(const std::string& index, int dim,
                                             bool occurred, bool exact,
                                             const std::string& source) {
  if (side_ != Side::Orthogonal)
    throw UsageError("towerless facts belong to orthogonal-side ledgers");
  if (dim < 0) throw UsageError("n-values must be >= 0");
  ensure_orth_index(index);
  int id = static_cast<int>(facts_.size());
  facts_.push_back({id, index, std::nullopt, dim, occurred, exact, source});
  return facts_.back();
}

const Fact& OccurrenceLedger::push_symp_fact(const std::string& index,
                                             int tower_key, int dim,
                                             bool occurred, bool exact,
                                             const std::string& source) {
  if (side_ != Side::Symplectic)
    throw UsageError("tower facts belong to symplectic-side ledgers");
  if (field_ == Field::Real && ((tower_key - alpha_) % 4 + 4) % 4 != 0)
    throw UsageError("tower t^(" + std::to_string(tower_key) +
                     ") lies outside the alpha = " + std::to_string(alpha_) +
                     " family");
  if (field_ == Field::NonArch && tower_key != 1 && tower_key != -1)
    throw UsageError("non-archimedean tower key must be +1 or -1");
  if (field_ == Field::Complex && tower_key != 0)
    throw UsageError("complex tower key must be 0");
  int kernel = tower_kernel_dim(tower_key);
  if (dim < kernel || (dim - kernel) % 2 != 0)
    throw UsageError("dim " + std::to_string(dim) +
                     " is not on the progression of " +
                     tower_name(field_, tower_key));
  if (field_ == Field::Real) ensure_tower(tower_key);
  ensure_symp_index(index);
  int id = static_cast<int>(facts_.size());
  facts_.push_back({id, index, tower_key, dim, occurred, exact, source});
  return facts_.back();
}

void OccurrenceLedger::assert_fact(const std::string& index, int dim,
                                   bool occurred, const std::string& source) {
  const Fact& fact = push_orth_fact(index, dim, occurred, false, source);
  auto& iv = orth_[index];
  if (occurred)
    set_hi(iv, "n[" + index + "]", dim, {fact.id}, fact.str());
  else
    set_lo(iv, "n[" + index + "]", dim + 1, {fact.id}, fact.str());
}

void OccurrenceLedger::assert_fact(const std::string& index, int tower_key,
                                   int dim, bool occurred,
                                   const std::string& source) {
  const Fact& fact = push_symp_fact(index, tower_key, dim, occurred, false,
                                    source);
  auto& iv = symp_[index].at(tower_key);
  std::string name = "m[" + index + "][" + tower_name(field_, tower_key) + "]";
  if (occurred)
    set_hi(iv, name, dim, {fact.id}, fact.str());
  else
    set_lo(iv, name, dim + 2, {fact.id}, fact.str());
}

void OccurrenceLedger::assert_exact(const std::string& index, int dim,
                                    const std::string& source) {
  const Fact& fact = push_orth_fact(index, dim, true, true, source);
  auto& iv = orth_[index];
  set_hi(iv, "n[" + index + "]", dim, {fact.id}, fact.str());
  set_lo(iv, "n[" + index + "]", dim, {fact.id}, fact.str());
}

void OccurrenceLedger::assert_exact(const std::string& index, int tower_key,
                                    int dim, const std::string& source) {
  const Fact& fact = push_symp_fact(index, tower_key, dim, true, true, source);
  auto& iv = symp_[index].at(tower_key);
  std::string name = "m[" + index + "][" + tower_name(field_, tower_key) + "]";
  set_hi(iv, name, dim, {fact.id}, fact.str());
  set_lo(iv, name, dim, {fact.id}, fact.str());
}

void OccurrenceLedger::seed_sign_character(const std::string& label) {
  if (side_ != Side::Orthogonal)
    throw UsageError("the sign-character anchor lives on the orthogonal side");
  assert_exact(twist_partner(label), dim_v_, "n(sgn) = dim V");
}

void OccurrenceLedger::seed_trivial_rep(const std::string& label) {
  if (side_ != Side::Symplectic || field_ != Field::Real)
    throw UsageError("the trivial-rep anchor lives on the real symplectic side");
  if (alpha_ != 2)
    throw UsageError("the trivial-rep anchor lives in the alpha = 2 family");
  int first = dim_v_prime_ + 2;  // 2n+2
  assert_exact(label, 2, first, "first occurrence of 1 in t^(2) is 2n+2");
  assert_exact(label, -2, first, "first occurrence of 1 in t^(-2) is 2n+2");
}

void OccurrenceLedger::apply_stable_range() {
  if (contradiction_) return;
  if (side_ == Side::Orthogonal) {
    for (auto& [index, iv] : orth_)
      set_hi(iv, "n[" + index + "]", dim_v_, {}, "stable range: n <= dim V");
    return;
  }
  for (auto& [index, towers] : symp_)
    for (auto& [key, iv] : towers) {
      int bound = field_ == Field::Complex
                      ? dim_v_prime_ + eps_
                      : tower_kernel_dim(key) + 2 * dim_v_prime_;
      std::string rule = field_ == Field::Complex
                             ? "early occurrence over C"
                             : "stable range: Witt index >= dim V'";
      set_hi(iv, "m[" + index + "][" + tower_name(field_, key) + "]", bound,
             {}, rule);
    }
}

void OccurrenceLedger::conservation_real_symp() {
  int sum = 2 * dim_v_prime_ + 4;  // 4n+4
  for (auto& [index, towers] : symp_) {
    auto name = [&](int key) {
      return "m[" + index + "][" + tower_name(field_, key) + "]";
    };
    // Pairwise sums over distinct towers are >= 4n+4, and >= 4n+6 when the
    // towers are not adjacent.
    for (int k1 : tower_keys_) {
      std::optional<int> best, best_nonadj;
      std::vector<int> support, support_nonadj;
      for (int k2 : tower_keys_) {
        if (k2 == k1) continue;
        const auto& iv2 = towers.at(k2);
        if (!iv2.hi) continue;
        if (!best || *iv2.hi < *best) {
          best = *iv2.hi;
          support = iv2.hi_facts;
        }
        if (std::abs(k1 - k2) != 4 && (!best_nonadj || *iv2.hi < *best_nonadj)) {
          best_nonadj = *iv2.hi;
          support_nonadj = iv2.hi_facts;
        }
      }
      auto& iv1 = towers.at(k1);
      if (best)
        set_lo(iv1, name(k1), sum - *best, support,
               "pair sums >= 4n+4");
      if (best_nonadj)
        set_lo(iv1, name(k1), sum + 2 - *best_nonadj, support_nonadj,
               "non-adjacent pair sums >= 4n+6");
      if (contradiction_) return;
    }
    // Some adjacent pair attains 4n+4. A pair can still attain when
    // lo1+lo2 <= 4n+4 <= hi1+hi2.
    std::vector<std::pair<int, int>> attainable;
    std::vector<int> exclusion_support;
    for (std::size_t i = 0; i < tower_keys_.size(); ++i)
      for (std::size_t j = i + 1; j < tower_keys_.size(); ++j) {
        int k1 = tower_keys_[i], k2 = tower_keys_[j];
        if (std::abs(k1 - k2) != 4) continue;
        const auto& iv1 = towers.at(k1);
        const auto& iv2 = towers.at(k2);
        if (iv1.lo + iv2.lo > sum) {
          exclusion_support = merge_support(
              exclusion_support, merge_support(iv1.lo_facts, iv2.lo_facts));
          continue;
        }
        if (iv1.hi && iv2.hi && *iv1.hi + *iv2.hi < sum) {
          exclusion_support = merge_support(
              exclusion_support, merge_support(iv1.hi_facts, iv2.hi_facts));
          continue;
        }
        attainable.emplace_back(k1, k2);
      }
    if (attainable.empty()) {
      if (!contradiction_) {
        contradiction_ = true;
        conflict_ids_ = exclusion_support;
        trace_.push_back("m[" + index +
                         "]: no adjacent pair can attain 4n+4 = " +
                         std::to_string(sum));
      }
      return;
    }
    if (attainable.size() == 1) {
      auto [k1, k2] = attainable.front();
      auto& iv1 = towers.at(k1);
      auto& iv2 = towers.at(k2);
      set_hi(iv1, name(k1), sum - iv2.lo, iv2.lo_facts,
             "unique attaining pair forces sum = 4n+4");
      set_hi(iv2, name(k2), sum - iv1.lo, iv1.lo_facts,
             "unique attaining pair forces sum = 4n+4");
      if (iv2.hi)
        set_lo(iv1, name(k1), sum - *iv2.hi, iv2.hi_facts,
               "unique attaining pair forces sum = 4n+4");
      if (iv1.hi)
        set_lo(iv2, name(k2), sum - *iv1.hi, iv1.hi_facts,
               "unique attaining pair forces sum = 4n+4");
    } else {
      std::string note = "m[" + index + "]: min attaining pair open among {";
      for (std::size_t i = 0; i < attainable.size(); ++i) {
        if (i) note += ", ";
        note += "(" + tower_name(field_, attainable[i].first) + "," +
                tower_name(field_, attainable[i].second) + ")";
      }
      note += "}";
      if (std::find(pending_.begin(), pending_.end(), note) == pending_.end())
        pending_.push_back(note);
    }
    if (contradiction_) return;
  }
}

void OccurrenceLedger::apply_conservation() {
  if (contradiction_) return;
  if (side_ == Side::Orthogonal) {
    std::vector<std::string> names;
    for (auto& [index, iv] : orth_) names.push_back(index);
    for (const auto& index : names) ensure_orth_index(index);
    names.clear();
    for (auto& [index, iv] : orth_) names.push_back(index);
    for (const auto& index : names) {
      auto& iv = orth_.at(index);
      auto& partner = orth_.at(twist_partner(index));
      // n(pi) + n(pi (x) sgn) = dim V
      if (partner.hi)
        set_lo(iv, "n[" + index + "]", dim_v_ - *partner.hi, partner.hi_facts,
               "conservation: n + n*sgn = dim V");
      set_hi(iv, "n[" + index + "]", dim_v_ - partner.lo, partner.lo_facts,
             "conservation: n + n*sgn = dim V");
      if (contradiction_) return;
    }
    return;
  }
  if (field_ == Field::NonArch) {
    int sum = 2 * dim_v_prime_ + 4;  // 4n+4
    for (auto& [index, towers] : symp_) {
      auto& plus = towers.at(+1);
      auto& minus = towers.at(-1);
      auto name = [&](int key) {
        return "m[" + index + "][" + tower_name(field_, key) + "]";
      };
      // m_{t+} + m_{t-} = 4n+4
      if (minus.hi)
        set_lo(plus, name(+1), sum - *minus.hi, minus.hi_facts,
               "conservation: m+ + m- = 4n+4");
      set_hi(plus, name(+1), sum - minus.lo, minus.lo_facts,
             "conservation: m+ + m- = 4n+4");
      if (plus.hi)
        set_lo(minus, name(-1), sum - *plus.hi, plus.hi_facts,
               "conservation: m+ + m- = 4n+4");
      set_hi(minus, name(-1), sum - plus.lo, plus.lo_facts,
             "conservation: m+ + m- = 4n+4");
      if (contradiction_) return;
    }
    return;
  }
  if (field_ == Field::Real) {
    pending_.clear();
    conservation_real_symp();
  }
  // Complex: the single tower carries no pair relation.
}

InferReport OccurrenceLedger::infer() {
  long last = -1;
  while (!contradiction_ && changes_ != last) {
    last = changes_;
    apply_stable_range();
    apply_conservation();
  }
  InferReport report;
  report.contradiction = contradiction_;
  for (int id : conflict_ids_)
    report.conflict.push_back(facts_.at(static_cast<std::size_t>(id)));
  report.pending = pending_;
  report.trace = trace_;
  return report;
}

const IndexInterval& OccurrenceLedger::orth_interval(
    const std::string& index) const {
  auto it = orth_.find(index);
  if (it == orth_.end()) throw UsageError("unknown index: " + index);
  return it->second;
}

const IndexInterval& OccurrenceLedger::symp_interval(const std::string& index,
                                                     int tower_key) const {
  auto it = symp_.find(index);
  if (it == symp_.end()) throw UsageError("unknown index: " + index);
  auto jt = it->second.find(tower_key);
  if (jt == it->second.end())
    throw UsageError("untracked tower: " + std::to_string(tower_key));
  return jt->second;
}

std::vector<std::string> OccurrenceLedger::tracked_indices() const {
  std::vector<std::string> names;
  if (side_ == Side::Orthogonal)
    for (const auto& [index, iv] : orth_) names.push_back(index);
  else
    for (const auto& [index, towers] : symp_) names.push_back(index);
  return names;
}

RallisParameters rallis_parameters(int p, int q, int n) {
  if (p < 0 || q < 0 || n < 0) throw UsageError("p, q, n must be >= 0");
  return {Rational(p + q - n - 1, 2), ((p - q) % 4 + 4) % 4};
}

std::vector<std::pair<int, int>> enumerate_Q(int m, int alpha) {
  if (m < 0) throw UsageError("m must be >= 0");
  alpha = ((alpha % 4) + 4) % 4;
  std::vector<std::pair<int, int>> out;
  for (int p = m; p >= 0; --p) {
    int q = m - p;
    if (((p - q - alpha) % 4 + 4) % 4 == 0) out.emplace_back(p, q);
  }
  return out;
}

std::optional<std::pair<int, int>> companion_quotient(int p1, int q1, int n,
                                                      int m) {
  if (p1 < 0 || q1 < 0 || n < 0) throw UsageError("p1, q1, n must be >= 0");
  if (p1 + q1 != m) throw UsageError("(p1, q1) must satisfy p1 + q1 = m");
  if (p1 > n + 1 || q1 > n + 1) return std::nullopt;
  return std::make_pair(n + 1 - q1, n + 1 - p1);
}

}  // namespace theta
