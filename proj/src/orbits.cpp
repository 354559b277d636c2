#include "theta/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "theta/errors.hpp"

namespace theta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x < 0) throw UsageError("partition parts must be >= 0");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int part : parts_)
      for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

bool dominance_leq(const Partition& lhs, const Partition& rhs) {
  if (lhs.size() != rhs.size())
    throw UsageError("dominance order needs partitions of equal size");
  int acc_l = 0, acc_r = 0;
  int n = std::max(lhs.length(), rhs.length());
  for (int i = 0; i < n; ++i) {
    acc_l += i < lhs.length() ? lhs.part(i) : 0;
    acc_r += i < rhs.length() ? rhs.part(i) : 0;
    if (acc_l > acc_r) return false;
  }
  return true;
}

std::string to_string(LieType t) {
  return t == LieType::Orthogonal ? "o" : "sp";
}

LieType lie_type_of_star(Star star) {
  return is_orthogonal_star(star) ? LieType::Orthogonal : LieType::Symplectic;
}

std::string ComplexOrbit::str() const {
  return to_string(type) + partition.str();
}

ValidationReport validate_complex(const ComplexOrbit& orbit) {
  std::map<int, int> mult;
  for (int part : orbit.partition.parts()) ++mult[part];
  for (auto [part, count] : mult) {
    bool needs_even = orbit.type == LieType::Orthogonal ? part % 2 == 0
                                                        : part % 2 == 1;
    if (needs_even && count % 2 != 0)
      return {false, (orbit.type == LieType::Orthogonal
                          ? std::string("even part ")
                          : std::string("odd part ")) +
                         std::to_string(part) + " has odd multiplicity"};
  }
  return {true, ""};
}

int form_dim(const MultForm& form) {
  if (const auto* orth = std::get_if<OrthForm>(&form))
    return orth->a + orth->b;
  return std::get<SympForm>(form).dim;
}

GroupLabel GroupLabel::of_form(const MultForm& form) {
  if (const auto* orth = std::get_if<OrthForm>(&form))
    return orthogonal(orth->a, orth->b);
  return symplectic(std::get<SympForm>(form).dim);
}

std::string GroupLabel::str() const {
  if (trivial()) return "1";
  if (kind == Kind::Orthogonal)
    return "O(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return "Sp_" + std::to_string(a) + "(R)";
}

AdmissibleTableau::AdmissibleTableau(int eps, std::vector<TableauRow> rows)
    : eps_(eps) {
  if (eps != 1 && eps != -1) throw UsageError("tableau eps must be +1 or -1");
  // Merge row groups of equal length; drop zero-dimensional groups.
  std::map<int, MultForm, std::greater<int>> groups;
  for (auto& row : rows) {
    if (row.length < 1) throw UsageError("row lengths must be >= 1");
    if (form_dim(row.form) == 0) continue;
    auto it = groups.find(row.length);
    if (it == groups.end()) {
      groups.emplace(row.length, row.form);
      continue;
    }
    if (it->second.index() != row.form.index())
      throw UsageError("conflicting form kinds on rows of equal length");
    if (auto* orth = std::get_if<OrthForm>(&it->second)) {
      const auto& add = std::get<OrthForm>(row.form);
      orth->a += add.a;
      orth->b += add.b;
    } else {
      std::get<SympForm>(it->second).dim += std::get<SympForm>(row.form).dim;
    }
  }
  for (auto& [length, form] : groups) rows_.push_back({length, form});
}

bool AdmissibleTableau::zero_orbit() const {
  return rows_.empty() || (rows_.size() == 1 && rows_[0].length == 1);
}

std::optional<MultForm> AdmissibleTableau::row_form(int length) const {
  for (const auto& row : rows_)
    if (row.length == length) return row.form;
  return std::nullopt;
}

int AdmissibleTableau::total_dim() const {
  int dim = 0;
  for (const auto& row : rows_) dim += row.length * form_dim(row.form);
  return dim;
}

std::string AdmissibleTableau::str() const {
  std::string out = eps_ == 1 ? "o-tableau{" : "sp-tableau{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ", ";
    const auto& row = rows_[i];
    out += std::to_string(row.length) + ":";
    if (const auto* orth = std::get_if<OrthForm>(&row.form))
      out += "Orth(" + std::to_string(orth->a) + "," +
             std::to_string(orth->b) + ")";
    else
      out += "Symp(" + std::to_string(std::get<SympForm>(row.form).dim) + ")";
  }
  return out + "}";
}

int row_form_parity(int eps, int length) {
  return length % 2 == 1 ? eps : -eps;
}

ValidationReport validate_tableau(const AdmissibleTableau& t) {
  for (const auto& row : t.rows()) {
    int parity = row_form_parity(t.eps(), row.length);
    if (const auto* orth = std::get_if<OrthForm>(&row.form)) {
      if (parity != 1)
        return {false, "length-" + std::to_string(row.length) +
                           " row needs a symplectic multiplicity form"};
      if (orth->a < 0 || orth->b < 0)
        return {false, "negative multiplicity"};
    } else {
      const auto& symp = std::get<SympForm>(row.form);
      if (parity != -1)
        return {false, "length-" + std::to_string(row.length) +
                           " row needs an orthogonal multiplicity form"};
      if (symp.dim < 0) return {false, "negative multiplicity"};
      if (symp.dim % 2 != 0)
        return {false, "symplectic multiplicity space must have even dim"};
    }
  }
  return {true, ""};
}

Signature operator+(Signature lhs, Signature rhs) {
  return {lhs.p + rhs.p, lhs.q + rhs.q};
}

Signature tensor_signature(const MultForm& form, int length) {
  if (length % 2 == 1) {
    const auto* orth = std::get_if<OrthForm>(&form);
    if (!orth)
      throw UsageError("odd tensor factor needs an orthogonal form");
    int k = (length - 1) / 2;
    // (a,b) (x) (k+1,k)
    return {orth->a * (k + 1) + orth->b * k, orth->a * k + orth->b * (k + 1)};
  }
  const auto* symp = std::get_if<SympForm>(&form);
  if (!symp) throw UsageError("even tensor factor needs a symplectic form");
  int half = symp->dim / 2 * length;  // skew (x) skew splits evenly
  return {half, half};
}

Signature total_signature(const AdmissibleTableau& t) {
  if (t.eps() != 1)
    throw UsageError("total_signature defined for eps = +1 tableaux");
  auto check = validate_tableau(t);
  if (!check.ok) throw UsageError("invalid tableau: " + check.violation);
  Signature total;
  for (const auto& row : t.rows())
    total = total + tensor_signature(row.form, row.length);
  return total;
}

std::vector<GroupLabel> stabilizer_factors(const AdmissibleTableau& t) {
  auto check = validate_tableau(t);
  if (!check.ok) throw UsageError("invalid tableau: " + check.violation);
  std::vector<GroupLabel> factors;
  factors.reserve(t.rows().size());
  for (const auto& row : t.rows())
    factors.push_back(GroupLabel::of_form(row.form));
  return factors;
}

ComplexOrbit complexify(const AdmissibleTableau& t) {
  std::vector<int> parts;
  for (const auto& row : t.rows())
    parts.insert(parts.end(), static_cast<std::size_t>(form_dim(row.form)),
                 row.length);
  return {t.eps() == 1 ? LieType::Orthogonal : LieType::Symplectic,
          Partition(std::move(parts))};
}

ColumnData column_data(const Partition& partition) {
  ColumnData data;
  data.c1 = partition.length();
  for (int part : partition.parts())
    if (part >= 2) ++data.c2;
  data.pure = data.c1 == data.c2;
  return data;
}

ColumnData column_data(const ComplexOrbit& orbit) {
  return column_data(orbit.partition);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    partitions_rec(remaining - part, part, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw UsageError("partition size must be >= 0");
  if (n > cap)
    throw CapExceeded("enumeration size " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> stack;
  partitions_rec(n, n, stack, out);
  return out;
}

std::vector<ComplexOrbit> enumerate_complex_orbits(LieType type, int size,
                                                   int cap) {
  std::vector<ComplexOrbit> out;
  for (auto& partition : enumerate_partitions(size, cap)) {
    ComplexOrbit orbit{type, partition};
    if (validate_complex(orbit).ok) out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

// All form assignments for the grouped row lengths of one partition.
void assign_forms(int eps,
                  const std::vector<std::pair<int, int>>& groups,  // (t, mult)
                  std::size_t index, std::vector<TableauRow>& rows,
                  std::vector<AdmissibleTableau>& out) {
  if (index == groups.size()) {
    out.emplace_back(eps, rows);
    return;
  }
  auto [length, mult] = groups[index];
  if (row_form_parity(eps, length) == 1) {
    for (int a = 0; a <= mult; ++a) {
      rows.push_back({length, OrthForm{a, mult - a}});
      assign_forms(eps, groups, index + 1, rows, out);
      rows.pop_back();
    }
  } else {
    if (mult % 2 != 0) return;  // no admissible form
    rows.push_back({length, SympForm{mult}});
    assign_forms(eps, groups, index + 1, rows, out);
    rows.pop_back();
  }
}

std::vector<AdmissibleTableau> tableaux_on_partition(int eps,
                                                     const Partition& shape) {
  std::vector<std::pair<int, int>> groups;
  for (int part : shape.parts()) {
    if (!groups.empty() && groups.back().first == part)
      ++groups.back().second;
    else
      groups.emplace_back(part, 1);
  }
  std::vector<AdmissibleTableau> out;
  std::vector<TableauRow> rows;
  assign_forms(eps, groups, 0, rows, out);
  return out;
}

}  // namespace

std::vector<AdmissibleTableau> enumerate_tableaux(int eps, Signature total,
                                                  int cap) {
  if (eps != 1) throw UsageError("signature-constrained enumeration is eps=+1");
  std::vector<AdmissibleTableau> out;
  for (auto& shape : enumerate_partitions(total.dim(), cap))
    for (auto& t : tableaux_on_partition(1, shape))
      if (total_signature(t) == total) out.push_back(std::move(t));
  return out;
}

std::vector<AdmissibleTableau> enumerate_tableaux_symplectic(int dim, int cap) {
  if (dim % 2 != 0) throw UsageError("symplectic total dim must be even");
  std::vector<AdmissibleTableau> out;
  for (auto& shape : enumerate_partitions(dim, cap))
    for (auto& t : tableaux_on_partition(-1, shape)) out.push_back(std::move(t));
  return out;
}

std::vector<AdmissibleTableau> enumerate_tableaux_of_shape(
    const ComplexOrbit& shape, std::optional<Signature> total) {
  int eps = shape.type == LieType::Orthogonal ? 1 : -1;
  std::vector<AdmissibleTableau> out;
  for (auto& t : tableaux_on_partition(eps, shape.partition)) {
    if (eps == 1 && total && !(total_signature(t) == *total)) continue;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace theta
