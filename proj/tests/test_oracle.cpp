#include <doctest.h>

#include <algorithm>
#include <set>

#include "centlab/catalog.hpp"
#include "centlab/centralizers.hpp"
#include "centlab/structure.hpp"
#include "naive.hpp"

using namespace centlab;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("library matches the subset-enumeration oracle up to order 16") {
  CatalogOptions opts;
  opts.max_order = 16;
  const auto catalog = build_catalog(opts);
  REQUIRE(catalog.size() >= 20);

  for (const auto& e : catalog) {
    const FiniteGroup& g = e.group;
    CAPTURE(e.label);

    // Centralizers, element by element.
    for (elem_t x = 0; x < g.order(); ++x)
      CHECK(centralizer(g, x).elems == naive::commuting_set(g, x));

    // Center and derived subgroup.
    CHECK(center(g).elems == naive::center_of(g));
    CHECK(derived_subgroup(g).elems == naive::derived_of(g));
    CHECK(cent_set(g).cent_count == naive::cent_count_of(g));

    // The whole subgroup lattice.
    const auto lattice = all_subgroups(g);
    const auto brute = naive::all_subgroups_by_subsets(g);
    REQUIRE(lattice.size() == brute.size());
    for (std::size_t i = 0; i < lattice.size(); ++i)
      CHECK(lattice[i].elems == brute[i]);

    // Sylow data for every prime.
    for (int p : prime_divisors(g)) {
      const SylowInfo info = sylow(g, p);
      const auto expected = naive::sylow_by_subsets(g, p);
      REQUIRE(info.count == static_cast<int>(expected.size()));
      std::set<std::vector<elem_t>> got;
      for (const auto& s : info.all) got.insert(s.elems);
      std::set<std::vector<elem_t>> want(expected.begin(), expected.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("A5 cent count pinned by the oracle") {
  const FiniteGroup a5 = alternating(5);
  const int brute = naive::cent_count_of(a5);
  CHECK(brute == 22);
  CHECK(cent_set(a5).cent_count == brute);
}

TEST_CASE("direct product with an abelian factor preserves the cent count") {
  const FiniteGroup a5 = alternating(5);
  const FiniteGroup g = direct_product(a5, cyclic(2));
  CHECK(naive::cent_count_of(g) == naive::cent_count_of(a5));
  CHECK(cent_set(g).cent_count == 22);
}

TEST_SUITE_END();
