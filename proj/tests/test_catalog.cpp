#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "centlab/catalog.hpp"
#include "centlab/isoclinism.hpp"
#include "centlab/json_io.hpp"
#include "centlab/structure.hpp"

using namespace centlab;

namespace {

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& label) {
  for (const auto& e : catalog)
    if (e.label == label) return &e;
  return nullptr;
}

}  // namespace

TEST_SUITE_BEGIN("conjecture-lab");

TEST_CASE("catalog contents at small orders") {
  CatalogOptions opts;
  opts.max_order = 6;
  const auto catalog = build_catalog(opts);

  for (int n = 1; n <= 6; ++n)
    CHECK(find_entry(catalog, "Z" + std::to_string(n)) != nullptr);
  CHECK(find_entry(catalog, "S3") != nullptr);
  // D6 is isomorphic to S3 and deduplicated away; D4 = Z2xZ2 survives.
  CHECK(find_entry(catalog, "D6") == nullptr);
  CHECK(find_entry(catalog, "D4") != nullptr);
  CHECK(find_entry(catalog, "D2") == nullptr);  // isomorphic to Z2
  for (const auto& e : catalog) CHECK(e.group.order() <= 6);
  for (const auto& e : catalog) CHECK(e.label == e.spec.render());
}

TEST_CASE("catalog dedup keeps one representative per isomorphism class") {
  CatalogOptions opts;
  opts.max_order = 60;
  const auto catalog = build_catalog(opts);

  // The order-10 nonabelian class appears exactly once (as D10; Z5:Z2 is a
  // duplicate).
  int nonabelian10 = 0;
  for (const auto& e : catalog)
    if (e.group.order() == 10 && !e.group.is_abelian()) ++nonabelian10;
  CHECK(nonabelian10 == 1);
  CHECK(find_entry(catalog, "D10") != nullptr);
  CHECK(find_entry(catalog, "Z5:Z2") == nullptr);

  // Without dedup both survive.
  opts.dedup_isomorphic = false;
  const auto full = build_catalog(opts);
  CHECK(find_entry(full, "D10") != nullptr);
  CHECK(find_entry(full, "Z5:Z2") != nullptr);
}

TEST_CASE("catalog at 55 contains both order-55 groups") {
  CatalogOptions opts;
  opts.max_order = 55;
  const auto catalog = build_catalog(opts);
  const CatalogEntry* cyclic55 = find_entry(catalog, "Z55");
  const CatalogEntry* twisted55 = find_entry(catalog, "Z11:Z5");
  REQUIRE(cyclic55 != nullptr);
  REQUIRE(twisted55 != nullptr);
  CHECK(cyclic55->stats.cent_count == 1);
  CHECK(twisted55->stats.cent_count == 13);
  CHECK(twisted55->cpo.is_cpo);
}

TEST_CASE("search finds the order-55 vs order-22 counterexample") {
  CatalogOptions opts;
  opts.max_order = 55;
  const auto catalog = build_catalog(opts);
  const SearchResult result = search_counterexamples(catalog);

  const auto hit = std::find_if(
      result.reports.begin(), result.reports.end(), [](const CounterexampleReport& r) {
        return r.shared_cent_count == 13 && r.shared_derived_order == 11;
      });
  REQUIRE(hit != result.reports.end());
  CHECK(hit->left.label == "D22");
  CHECK(hit->right.label == "Z11:Z5");
  CHECK(hit->left.group.order() == 22);
  CHECK(hit->right.group.order() == 55);
}

TEST_CASE("search at 57 also finds the (21, 19) bucket pair") {
  CatalogOptions opts;
  opts.max_order = 57;
  const auto catalog = build_catalog(opts);
  const SearchResult result = search_counterexamples(catalog);

  bool found = false;
  for (const auto& r : result.reports) {
    if (r.shared_cent_count != 21 || r.shared_derived_order != 19) continue;
    const std::set<int> orders{r.left.group.order(), r.right.group.order()};
    if (orders == std::set<int>{38, 57}) found = true;
  }
  CHECK(found);

  // Inconclusive pairs are never reported as counterexamples.
  for (const auto& r : result.reports) {
    CAPTURE(r.left.label);
    CAPTURE(r.right.label);
    CHECK(find_isoclinism(r.left.group, r.right.group).verdict == IsoVerdict::Refuted);
  }
}

TEST_CASE("abelian-only catalogs yield no counterexamples") {
  CatalogOptions opts;
  opts.max_order = 10;
  auto catalog = build_catalog(opts);
  catalog.erase(std::remove_if(catalog.begin(), catalog.end(),
                               [](const CatalogEntry& e) { return !e.group.is_abelian(); }),
                catalog.end());
  REQUIRE(!catalog.empty());
  const SearchResult result = search_counterexamples(catalog);
  CHECK(result.reports.empty());
  CHECK(result.inconclusive.empty());
  for (const auto& [a, b] : result.isoclinic_pairs) {
    CHECK(find_entry(catalog, a) != nullptr);
    CHECK(find_entry(catalog, b) != nullptr);
  }
}

TEST_CASE("search output is independent of catalog ordering") {
  CatalogOptions opts;
  opts.max_order = 57;
  auto catalog = build_catalog(opts);
  const SearchResult base = search_counterexamples(catalog);

  std::mt19937_64 rng(99);
  std::shuffle(catalog.begin(), catalog.end(), rng);
  const SearchResult shuffled = search_counterexamples(catalog);

  REQUIRE(base.reports.size() == shuffled.reports.size());
  for (std::size_t i = 0; i < base.reports.size(); ++i) {
    const std::set<std::string> a{base.reports[i].left.label, base.reports[i].right.label};
    const std::set<std::string> b{shuffled.reports[i].left.label,
                                  shuffled.reports[i].right.label};
    CHECK(a == b);
    CHECK(base.reports[i].shared_cent_count == shuffled.reports[i].shared_cent_count);
  }
}

TEST_CASE("family pairs for primes") {
  const FamilyResult f11 = cpo_pair_family(11);
  REQUIRE(f11.applicable);
  CHECK(f11.complements == std::vector<int>{5, 2});
  REQUIRE(f11.members.size() == 2);
  CHECK(f11.members[0].group.order() == 55);
  CHECK(f11.members[1].group.order() == 22);
  CHECK(f11.members[0].stats.cent_count == 13);
  CHECK(f11.members[1].stats.cent_count == 13);
  CHECK(f11.members[0].stats.derived_order == 11);
  CHECK(f11.members[1].stats.derived_order == 11);
  CHECK(is_isomorphic(f11.members[1].group, dihedral(22)).has_value());

  const FamilyResult f7 = cpo_pair_family(7);
  REQUIRE(f7.applicable);
  REQUIRE(f7.members.size() == 2);
  CHECK(f7.members[0].group.order() == 21);
  CHECK(f7.members[1].group.order() == 14);
  CHECK(f7.members[0].stats.cent_count == 9);
  CHECK(f7.members[1].stats.cent_count == 9);

  CHECK_FALSE(cpo_pair_family(5).applicable);   // 4 = 2*2
  CHECK_FALSE(cpo_pair_family(2).applicable);   // p-1 = 1
  CHECK_FALSE(cpo_pair_family(13).applicable);  // 12 = 2^2*3
  CHECK_THROWS_AS(cpo_pair_family(9), InvalidParameter);

  const FamilyResult relaxed13 = cpo_pair_family(13, true);
  REQUIRE(relaxed13.applicable);
  CHECK(relaxed13.complements == std::vector<int>{3, 2});
  for (const auto& e : relaxed13.members) CHECK(e.stats.cent_count == 15);
}

TEST_CASE("verification sweeps pass on the default catalog") {
  CatalogOptions opts;
  opts.max_order = 60;
  const auto catalog = build_catalog(opts);
  const VerificationReport report = verify_catalog(catalog);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    for (const auto& f : c.failures) CAPTURE(f);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());
}

TEST_CASE("a fake associativity-violating table never reaches the catalog") {
  // The only road into the catalog for raw tables is the validated
  // from_cayley_table path.
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1, 2, 3, 4},
                                                  {1, 0, 3, 4, 2},
                                                  {2, 4, 0, 1, 3},
                                                  {3, 2, 4, 0, 1},
                                                  {4, 3, 1, 2, 0}}),
                  NotAGroup);
}

TEST_CASE("counterexample reports serialize with the schema version") {
  CatalogOptions opts;
  opts.max_order = 55;
  const auto catalog = build_catalog(opts);
  const SearchResult result = search_counterexamples(catalog);
  REQUIRE(!result.reports.empty());
  const nlohmann::json j = to_json(result.reports.front());
  CHECK(j.at("schema") == 1);
  CHECK(j.at("left").contains("label"));
  CHECK(j.at("cent_count") == result.reports.front().shared_cent_count);
}

TEST_SUITE_END();
