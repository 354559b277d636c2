#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "theta/dual_pairs.hpp"
#include "theta/formed_spaces.hpp"

namespace theta {

inline constexpr int kDefaultEnumerationCap = 12;

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;    // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  Partition transpose() const;

  bool operator==(const Partition& other) const = default;
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

  std::string str() const;  // "[3,1,1]"

 private:
  std::vector<int> parts_;  // weakly decreasing, strictly positive
};

// Dominance order; requires |lhs| = |rhs|.
bool dominance_leq(const Partition& lhs, const Partition& rhs);

enum class LieType { Orthogonal, Symplectic };

std::string to_string(LieType t);
LieType lie_type_of_star(Star star);  // B,D,D* orthogonal; C,C~,C* symplectic

// A nilpotent orbit of a complex classical Lie algebra, as a partition.
struct ComplexOrbit {
  LieType type;
  Partition partition;

  int size() const { return partition.size(); }
  bool operator==(const ComplexOrbit& other) const = default;
  std::string str() const;
};

// Orthogonal: even parts have even multiplicity.
// Symplectic: odd parts have even multiplicity.
ValidationReport validate_complex(const ComplexOrbit& orbit);

// Multiplicity-space forms of a tableau row.
struct OrthForm {
  int a = 0, b = 0;  // real signature (a, b)
  bool operator==(const OrthForm&) const = default;
};
struct SympForm {
  int dim = 0;  // even
  bool operator==(const SympForm&) const = default;
};
using MultForm = std::variant<OrthForm, SympForm>;

int form_dim(const MultForm& form);

struct GroupLabel {
  enum class Kind { Orthogonal, Symplectic };
  Kind kind = Kind::Orthogonal;
  int a = 0, b = 0;  // O(a,b); Sp stores 2m in a

  static GroupLabel orthogonal(int a, int b) {
    return {Kind::Orthogonal, a, b};
  }
  static GroupLabel symplectic(int dim) { return {Kind::Symplectic, dim, 0}; }
  static GroupLabel of_form(const MultForm& form);

  bool trivial() const { return a == 0 && b == 0; }
  bool operator==(const GroupLabel&) const = default;
  std::string str() const;  // "O(1,0)", "Sp_2(R)", "1" when trivial
};

struct TableauRow {
  int length = 0;  // t_j >= 1
  MultForm form;
  bool operator==(const TableauRow&) const = default;
};

// An admissible eps-Hermitian Young tableau over R: one row group per
// distinct length, lengths strictly decreasing, and the form kind of the
// length-t group fixed by eps_j = (-1)^{t-1} eps.
class AdmissibleTableau {
 public:
  AdmissibleTableau(int eps, std::vector<TableauRow> rows);

  int eps() const { return eps_; }
  const std::vector<TableauRow>& rows() const { return rows_; }
  bool zero_orbit() const;  // at most a length-1 row

  // Form on the full length-1 row group, if present.
  std::optional<MultForm> row_form(int length) const;

  int total_dim() const;

  bool operator==(const AdmissibleTableau& other) const = default;
  std::string str() const;

 private:
  int eps_;                        // +1 orthogonal ambient, -1 symplectic
  std::vector<TableauRow> rows_;  // sorted by decreasing length
};

// Expected form parity for a row of the given length: +1 means an
// orthogonal multiplicity space, -1 symplectic.
int row_form_parity(int eps, int length);

ValidationReport validate_tableau(const AdmissibleTableau& t);

struct Signature {
  int p = 0, q = 0;
  int dim() const { return p + q; }
  bool operator==(const Signature&) const = default;
  std::string str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

Signature operator+(Signature lhs, Signature rhs);

// Signature of F (x) S_t under the fixed convention: the form (.,.)_m on
// S_m has signature (k+1, k) for odd m = 2k+1, and is the standard skew
// form for even m. Skew (x) skew contributes a split signature.
Signature tensor_signature(const MultForm& form, int length);

// Total signature of the recomposed space, eps = +1 only.
Signature total_signature(const AdmissibleTableau& t);

std::vector<GroupLabel> stabilizer_factors(const AdmissibleTableau& t);

ComplexOrbit complexify(const AdmissibleTableau& t);

struct ColumnData {
  int c1 = 0;         // number of parts
  int c2 = 0;         // number of parts >= 2
  bool pure = false;  // c1 == c2, i.e. no parts equal to 1
};
ColumnData column_data(const Partition& partition);
ColumnData column_data(const ComplexOrbit& orbit);

std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

std::vector<ComplexOrbit> enumerate_complex_orbits(LieType type, int size,
                                                   int cap = kDefaultEnumerationCap);

// All admissible tableaux with the given total space: a real signature
// for eps = +1, a symplectic dimension for eps = -1.
std::vector<AdmissibleTableau> enumerate_tableaux(int eps, Signature total,
                                                  int cap = kDefaultEnumerationCap);
std::vector<AdmissibleTableau> enumerate_tableaux_symplectic(
    int dim, int cap = kDefaultEnumerationCap);

// Form assignments on a fixed partition; for the orthogonal side the
// result is filtered by total signature.
std::vector<AdmissibleTableau> enumerate_tableaux_of_shape(
    const ComplexOrbit& shape, std::optional<Signature> total_signature);

}  // namespace theta
