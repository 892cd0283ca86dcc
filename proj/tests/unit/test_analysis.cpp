#include <doctest.h>

#include "fixtures.hpp"
#include "lrc/analysis.hpp"
#include "lrc/error.hpp"
#include "lrc/oracle.hpp"

using lrc::Matroid;
using lrc::Subset;

TEST_CASE("distance from the rank function and from the lattice") {
  const auto p = lrc::params_from_matroid(Matroid::uniform(4, 2));
  CHECK(p.n == 4);
  CHECK(p.k == 2);
  CHECK(p.d == 3);
  CHECK(lrc::params_from_matroid(fixtures::two_atom().matroid).d == 2);
  CHECK(lrc::params_from_matroid(Matroid::uniform(3, 2)).d == 2);
  CHECK_THROWS_AS(lrc::params_from_matroid(Matroid::uniform(3, 0)), lrc::Error);

  CHECK(lrc::d_from_cyclic_flats(cyclic_flats(Matroid::uniform(4, 2))) == 3);
  CHECK(lrc::d_from_cyclic_flats(fixtures::two_atom_lattice()) == 2);
  CHECK(lrc::d_from_cyclic_flats(lrc::theorem11_construction(10, 5, 3, 2).matroid.cyclic_flat_lattice()) == 5);
}

TEST_CASE("locality") {
  const Matroid u42 = Matroid::uniform(4, 2);
  const auto cover = lrc::has_locality(u42, 2, 2);
  REQUIRE(cover.has_value());
  for (int x = 0; x < 4; ++x) {
    CHECK(cover->sets[x].contains(x));
    CHECK(cover->sets[x].size() == 3);
  }
  CHECK_FALSE(lrc::has_locality(u42, 1, 2).has_value());
  CHECK_FALSE(lrc::has_locality(Matroid::free_matroid(4), 2, 2).has_value());
  CHECK_THROWS_AS(lrc::has_locality(u42, 2, 1), lrc::Error);

  CHECK(lrc::is_locality_set(u42, Subset::of({0, 1, 2}), 2, 2));
  CHECK_FALSE(lrc::is_locality_set(u42, Subset::of({0, 1}), 2, 2));
  CHECK(lrc::restricted_distance(u42, Subset::of({0, 1, 2})) == 2);
}

TEST_CASE("parameter validity and the generalized Singleton bound") {
  CHECK(lrc::singleton_bound(10, 5, 3, 2) == 5);
  CHECK(lrc::singleton_bound(6, 4, 2, 2) == 2);
  CHECK(lrc::singleton_bound(7, 3, 3, 4) == 5);
  CHECK_THROWS_AS(lrc::singleton_bound(4, 5, 1, 2), lrc::Error);
  CHECK(lrc::validate_params(10, 5, 3, 2));
  CHECK_FALSE(lrc::validate_params(4, 3, 1, 3));
  CHECK_FALSE(lrc::validate_params(5, 2, 1, 1));
  CHECK(lrc::param_violation({4, 3, 1, 3}).has_value());

  const lrc::ParamTuple t{10, 5, 3, 2};
  CHECK(t.a() == 1);
  CHECK(t.b() == 2);
}

TEST_CASE("achieves_bound") {
  CHECK(lrc::achieves_bound(Matroid::uniform(4, 2), 2, 2));
  CHECK(lrc::achieves_bound(fixtures::two_atom().matroid, 2, 2));
  CHECK_FALSE(lrc::achieves_bound(fixtures::seven_four().matroid, 2, 2));
  CHECK_THROWS_AS(lrc::achieves_bound(Matroid::free_matroid(3), 2, 2), lrc::Error);
}

TEST_CASE("structure theorem conditions") {
  const Matroid two = fixtures::two_atom().matroid;
  const auto report = lrc::check_structure_theorem(two, *lrc::has_locality(two, 2, 2));
  CHECK(report.ok());
  CHECK(report.collections_checked > 0);

  const Matroid seven = fixtures::seven_four().matroid;
  const auto bad = lrc::check_structure_theorem(seven, *lrc::has_locality(seven, 2, 2));
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.first_failure() != nullptr);
  CHECK_FALSE(bad.first_failure()->witnesses.empty());

  const Matroid u = Matroid::uniform(4, 2);
  CHECK_THROWS_AS(lrc::check_structure_theorem(u, *lrc::has_locality(u, 2, 2)), lrc::Error);
}

TEST_CASE("locality chains") {
  const Matroid two = fixtures::two_atom().matroid;
  const auto cover = *lrc::has_locality(two, 2, 2);
  const auto chain = lrc::find_locality_chain(two, cover);
  CHECK(chain.length() == 2);
  CHECK(chain.flats.front() == Subset{});
  CHECK(chain.flats[1] == Subset::of({0, 1, 2}));
  CHECK(chain.flats.back() == two.ground());
  const auto ineq = lrc::check_chain_inequalities(two, chain);
  CHECK(ineq.ok());
  CHECK(ineq.distance_bound == 2);

  const Matroid u = Matroid::uniform(4, 2);
  const auto uchain = lrc::find_locality_chain(u, *lrc::has_locality(u, 2, 2));
  CHECK(uchain.length() == 1);
  CHECK(lrc::check_chain_inequalities(u, uchain).distance_bound == 3);

  const Matroid t11 = lrc::theorem11_construction(10, 5, 3, 2).matroid;
  CHECK(lrc::find_locality_chain(t11, *lrc::has_locality(t11, 3, 2)).length() == 2);

  const Matroid seven = fixtures::seven_four().matroid;
  const auto s_chain = lrc::find_locality_chain(seven, *lrc::has_locality(seven, 2, 2));
  CHECK(lrc::check_chain_inequalities(seven, s_chain).ok());
}

TEST_CASE("property: coatom nullity formula matches the oracle on the sweep tuples") {
  for (const auto& t : fixtures::valid_tuples(4, 9)) {
    if (t.r >= t.k) continue;
    const lrc::ParamTuple p{t.n, t.k, t.r, t.delta};
    if (p.b() > p.a()) continue;
    const Matroid m = lrc::broad_witness(t.n, t.k, t.r, t.delta).matroid;
    CHECK(lrc::d_from_cyclic_flats(m.cyclic_flat_lattice()) == lrc::oracle::oracle_d(m));
  }
}
