#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta/formed_spaces.hpp"
#include "theta/rational.hpp"

namespace theta {

// One recorded occurrence fact. On the orthogonal side `dim` is the value
// of n (half the symplectic dimension); on the symplectic side it is the
// dimension of the quadratic space, which must lie on the tower's
// progression. `exact` pins both endpoints with a single fact.
struct Fact {
  int id = 0;
  std::string index;
  std::optional<int> tower;  // real: k; non-arch: +1/-1; complex: 0
  int dim = 0;
  bool occurred = true;
  bool exact = false;
  std::string source;

  std::string str() const;
};

struct IndexInterval {
  int lo = 0;
  std::optional<int> hi;  // nullopt: no upper bound recorded yet
  std::vector<int> lo_facts;  // ids of facts supporting the bound
  std::vector<int> hi_facts;

  bool exact() const { return hi.has_value() && *hi == lo; }
};

struct InferReport {
  bool contradiction = false;
  std::vector<Fact> conflict;        // minimal conflicting fact set
  std::vector<std::string> pending;  // unresolved disjunctive obligations
  std::vector<std::string> trace;    // bound updates, in order
};

// First-occurrence index ledger for one member of an orthogonal-symplectic
// dual pair. Orthogonal side: V is fixed and the ledger tracks n(pi) and
// n(pi (x) sgn), paired as "<label>" and "<label>*sgn". Symplectic side:
// V' is fixed and the ledger tracks m_t(pi') for the towers t of one
// family T_{eps,chi}.
class OccurrenceLedger {
 public:
  enum class Side { Orthogonal, Symplectic };

  static OccurrenceLedger orthogonal(int dim_v);
  static OccurrenceLedger symplectic_real(int dim_v_prime, int alpha);
  static OccurrenceLedger symplectic_nonarch(int dim_v_prime, int eps,
                                             ChiFlag chi);
  static OccurrenceLedger symplectic_complex(int dim_v_prime, int eps);

  Side side() const { return side_; }
  Field field() const { return field_; }
  int dim_v() const { return dim_v_; }
  int dim_v_prime() const { return dim_v_prime_; }
  int alpha() const { return alpha_; }
  int eps() const { return eps_; }
  ChiFlag chi() const { return chi_; }

  // Registers an index with no facts yet (rules still apply to it).
  void track(const std::string& index);

  // Orthogonal-side fact.
  void assert_fact(const std::string& index, int dim, bool occurred,
                   const std::string& source = "");
  // Symplectic-side fact.
  void assert_fact(const std::string& index, int tower_key, int dim,
                   bool occurred, const std::string& source = "");
  void assert_exact(const std::string& index, int dim,
                    const std::string& source = "");
  void assert_exact(const std::string& index, int tower_key, int dim,
                    const std::string& source = "");

  // n(sgn) = dim V (orthogonal side).
  void seed_sign_character(const std::string& label = "1");
  // m_{t^(2)}(1) = m_{t^(-2)}(1) = 2n+2 (real symplectic side).
  void seed_trivial_rep(const std::string& label = "1");

  void apply_stable_range();
  void apply_conservation();

  // Runs all rules to a fixed point; bounds only ever tighten.
  InferReport infer();

  bool contradiction() const { return contradiction_; }
  const std::vector<Fact>& facts() const { return facts_; }

  const IndexInterval& orth_interval(const std::string& index) const;
  const IndexInterval& symp_interval(const std::string& index,
                                     int tower_key) const;
  std::vector<std::string> tracked_indices() const;
  const std::vector<int>& tracked_towers() const { return tower_keys_; }
  int tower_kernel_dim(int tower_key) const;
  WittTower tower(int tower_key) const;

  // "pi" <-> "pi*sgn".
  static std::string twist_partner(const std::string& index);

 private:
  OccurrenceLedger() = default;

  const Fact& push_orth_fact(const std::string& index, int dim, bool occurred,
                             bool exact, const std::string& source);
  const Fact& push_symp_fact(const std::string& index, int tower_key, int dim,
                             bool occurred, bool exact,
                             const std::string& source);
  void ensure_orth_index(const std::string& index);
  void ensure_symp_index(const std::string& index);
  void ensure_tower(int key);
  void set_lo(IndexInterval& iv, const std::string& name, int value,
              std::vector<int> support, const std::string& rule);
  void set_hi(IndexInterval& iv, const std::string& name, int value,
              std::vector<int> support, const std::string& rule);
  void report_contradiction(const IndexInterval& iv);
  void conservation_real_symp();

  Side side_ = Side::Orthogonal;
  Field field_ = Field::Real;
  int dim_v_ = 0;        // orthogonal side
  int dim_v_prime_ = 0;  // symplectic side, = 2n
  int alpha_ = 0;        // real symplectic family
  int eps_ = 0;          // non-arch / complex parity
  ChiFlag chi_ = ChiFlag::Trivial;
  int cap_ = 0;  // default upper bound on real-side dims, keeps things finite

  std::vector<Fact> facts_;
  std::map<std::string, IndexInterval> orth_;
  std::vector<int> tower_keys_;
  std::map<std::string, std::map<int, IndexInterval>> symp_;

  bool contradiction_ = false;
  std::vector<int> conflict_ids_;
  std::vector<std::string> pending_;
  std::vector<std::string> trace_;
  long changes_ = 0;
};

// Doubling-method parameter arithmetic.
struct RallisParameters {
  Rational s0;  // (p+q)/2 - (n+1)/2
  int alpha;    // p - q mod 4
};
RallisParameters rallis_parameters(int p, int q, int n);

// Q_{m,alpha} = all (p,q) with p+q = m, p-q = alpha (mod 4).
std::vector<std::pair<int, int>> enumerate_Q(int m, int alpha);

// (p', q') = (n+1-q1, n+1-p1) when p1, q1 <= n+1; nothing otherwise.
std::optional<std::pair<int, int>> companion_quotient(int p1, int q1, int n,
                                                      int m);

}  // namespace theta
