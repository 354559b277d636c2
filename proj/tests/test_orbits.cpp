#include <doctest.h>

#include <algorithm>
#include <map>

#include "support/gram_oracle.hpp"
#include "theta/errors.hpp"
#include "theta/orbits.hpp"

using namespace theta;

namespace {

AdmissibleTableau tab(int eps, std::vector<TableauRow> rows) {
  return AdmissibleTableau(eps, std::move(rows));
}

}  // namespace

TEST_CASE("tableau validation") {
  CHECK(validate_tableau(
            tab(1, {{3, OrthForm{1, 0}}, {1, OrthForm{1, 1}}}))
            .ok);
  CHECK(validate_tableau(tab(-1, {{2, OrthForm{1, 0}}})).ok);
  auto bad = validate_tableau(tab(1, {{2, OrthForm{1, 0}}}));
  CHECK_FALSE(bad.ok);  // a length-2 row of an orthogonal algebra is symplectic
  CHECK_FALSE(validate_tableau(tab(-1, {{1, OrthForm{1, 0}}})).ok);
  CHECK_FALSE(validate_tableau(tab(-1, {{1, SympForm{3}}})).ok);
}

TEST_CASE("rows of equal length merge into one group") {
  auto t = tab(1, {{3, OrthForm{1, 0}}, {3, OrthForm{0, 2}}});
  REQUIRE(t.rows().size() == 1);
  CHECK(std::get<OrthForm>(t.rows()[0].form) == OrthForm{1, 2});
}

TEST_CASE("total signature via the tensor rule") {
  CHECK(total_signature(tab(1, {{3, OrthForm{1, 0}}})) == Signature{2, 1});
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      if (p + q == 0) continue;
      CHECK(total_signature(tab(1, {{1, OrthForm{p, q}}})) == Signature{p, q});
    }
  CHECK(total_signature(tab(1, {{2, SympForm{2}}})) == Signature{2, 2});
  CHECK_THROWS_AS(total_signature(tab(-1, {{2, OrthForm{1, 0}}})), UsageError);
}

TEST_CASE("total signature agrees with the Gram oracle, dim <= 4") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q)
      for (const auto& t : enumerate_tableaux(1, {p, q})) {
        auto [op, oq] = test::oracle_total_signature(t);
        CHECK(Signature{op, oq} == Signature{p, q});
      }
}

TEST_CASE("stabilizer factors per row") {
  auto factors =
      stabilizer_factors(tab(1, {{3, OrthForm{1, 0}}, {1, OrthForm{1, 1}}}));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].str() == "O(1,0)");
  CHECK(factors[1].str() == "O(1,1)");

  factors = stabilizer_factors(tab(1, {{1, OrthForm{2, 3}}}));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].str() == "O(2,3)");  // M_X = G on the zero orbit

  factors = stabilizer_factors(tab(-1, {{4, OrthForm{1, 0}}}));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].str() == "O(1,0)");

  factors = stabilizer_factors(tab(-1, {{1, SympForm{4}}}));
  CHECK(factors[0].str() == "Sp_4(R)");
}

TEST_CASE("complexify and complex validity") {
  auto orbit = complexify(tab(1, {{3, OrthForm{1, 0}}, {1, OrthForm{1, 1}}}));
  CHECK(orbit.type == LieType::Orthogonal);
  CHECK(orbit.partition == Partition({3, 1, 1}));
  CHECK(validate_complex(orbit).ok);

  CHECK_FALSE(
      validate_complex({LieType::Symplectic, Partition({3, 1})}).ok);
  CHECK(validate_complex({LieType::Symplectic, Partition({2, 2})}).ok);
  CHECK_FALSE(validate_complex({LieType::Orthogonal, Partition({2, 1})}).ok);
}

TEST_CASE("complexify always lands on a valid complex orbit") {
  for (const auto& t : enumerate_tableaux_symplectic(6))
    CHECK(validate_complex(complexify(t)).ok);
  for (int p = 0; p <= 5; ++p)
    for (const auto& t : enumerate_tableaux(1, {p, 5 - p}))
      CHECK(validate_complex(complexify(t)).ok);
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({2, 2}), Partition({4})));
  CHECK_FALSE(dominance_leq(Partition({4}), Partition({2, 2})));
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), UsageError);
}

TEST_CASE("dominance is a partial order") {
  auto parts = enumerate_partitions(7);
  for (const auto& a : parts) {
    CHECK(dominance_leq(a, a));
    for (const auto& b : parts) {
      if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
      for (const auto& c : parts)
        if (dominance_leq(a, b) && dominance_leq(b, c))
          CHECK(dominance_leq(a, c));
    }
  }
}

TEST_CASE("orbit enumeration") {
  auto sp2 = enumerate_complex_orbits(LieType::Symplectic, 2);
  REQUIRE(sp2.size() == 2);
  CHECK(sp2[0].partition == Partition({2}));
  CHECK(sp2[1].partition == Partition({1, 1}));

  auto o3 = enumerate_complex_orbits(LieType::Orthogonal, 3);
  REQUIRE(o3.size() == 2);
  CHECK(o3[0].partition == Partition({3}));
  CHECK(o3[1].partition == Partition({1, 1, 1}));

  auto tabs = enumerate_tableaux(1, {1, 1});
  REQUIRE(tabs.size() == 1);
  CHECK(tabs[0] == AdmissibleTableau(1, {{1, OrthForm{1, 1}}}));

  CHECK_THROWS_AS(enumerate_complex_orbits(LieType::Symplectic, 99),
                  CapExceeded);
}

TEST_CASE("enumeration counts match a brute-force parity filter") {
  // Independent predicate: count multiplicities directly.
  auto brute_valid = [](const Partition& p, bool orthogonal) {
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    for (auto [part, count] : mult) {
      bool constrained = orthogonal ? part % 2 == 0 : part % 2 == 1;
      if (constrained && count % 2 == 1) return false;
    }
    return true;
  };
  for (int n = 0; n <= 10; ++n) {
    std::size_t orth = 0, symp = 0;
    for (const auto& p : enumerate_partitions(n)) {
      if (brute_valid(p, true)) ++orth;
      if (n % 2 == 0 && brute_valid(p, false)) ++symp;
    }
    CHECK(enumerate_complex_orbits(LieType::Orthogonal, n).size() == orth);
    if (n % 2 == 0)
      CHECK(enumerate_complex_orbits(LieType::Symplectic, n).size() == symp);
  }
}

TEST_CASE("column data") {
  auto c = column_data(Partition({4}));
  CHECK(c.c1 == 1);
  CHECK(c.c2 == 1);
  CHECK(c.pure);

  c = column_data(Partition({3, 1, 1}));
  CHECK(c.c1 == 3);
  CHECK(c.c2 == 1);
  CHECK_FALSE(c.pure);

  c = column_data(Partition({2, 2}));
  CHECK(c.c1 == 2);
  CHECK(c.c2 == 2);
  CHECK(c.pure);
}

TEST_CASE("transpose and column data agree") {
  for (const auto& p : enumerate_partitions(9)) {
    auto cols = p.transpose();
    auto data = column_data(p);
    CHECK(data.c1 == (cols.length() > 0 ? cols.part(0) : 0));
    CHECK(data.c2 == (cols.length() > 1 ? cols.part(1) : 0));
  }
}
