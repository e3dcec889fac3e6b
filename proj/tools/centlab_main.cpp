#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "centlab/catalog.hpp"
#include "centlab/isoclinism.hpp"
#include "centlab/json_io.hpp"
#include "centlab/numeric.hpp"
#include "centlab/structure.hpp"

namespace {

using namespace centlab;
using nlohmann::json;

struct GlobalOpts {
  Limits limits;
  bool json_output = false;
  bool strict_cpo = false;
  bool no_dedup = false;
  std::string products_file;
};

std::vector<std::string> read_products_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open products file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string word;
    while (ss >> word) out.push_back(word);
  }
  return out;
}

CatalogOptions catalog_options(const GlobalOpts& g, int max_order) {
  CatalogOptions opts;
  opts.max_order = max_order;
  opts.dedup_isomorphic = !g.no_dedup;
  opts.limits = g.limits;
  if (!g.products_file.empty()) opts.product_specs = read_products_file(g.products_file);
  return opts;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string cpo_text(const CpoVerdict& v) {
  switch (v.kind) {
    case CpoCase::PrimeOrder:
      return "yes (prime order " + std::to_string(v.p) + ")";
    case CpoCase::PQCase:
      return "yes (order " + std::to_string(v.p) + "*" + std::to_string(v.q) +
             ", p=" + std::to_string(v.p) + ", q=" + std::to_string(v.q) + ")";
    case CpoCase::Vacuous:
      return "yes (vacuous: no elements to test)";
    case CpoCase::NotCpo:
      return v.witness ? "no (element " + std::to_string(*v.witness) +
                             " has a composite-order centralizer)"
                       : "no (trivial group)";
  }
  return "?";
}

int cmd_info(const GlobalOpts& g, const std::string& spec_text) {
  const FiniteGroup group = realize(parse_spec(spec_text), g.limits);
  const CentStats stats = cent_set(group);
  const CpoVerdict cpo =
      is_cpo(group, g.strict_cpo ? CpoMode::NonCentral : CpoMode::NonTrivial);
  const auto primes = prime_divisors(group);
  const bool nilpotent = is_nilpotent(group);
  const bool solvable = is_solvable(group);

  std::optional<FrobeniusDecomposition> frob;
  std::string frob_note;
  try {
    frob = frobenius_decomposition(group, g.limits);
    if (!frob) frob_note = "none";
  } catch (const CapExceeded&) {
    frob_note = "skipped (order exceeds lattice cap)";
  }

  if (g.json_output) {
    json j{{"schema", kJsonSchemaVersion},
           {"label", group.label()},
           {"order", group.order()},
           {"center_order", stats.center_order},
           {"derived_order", stats.derived_order},
           {"cent_count", stats.cent_count},
           {"prime_divisors", primes},
           {"cpo", to_json(cpo)},
           {"nilpotent", nilpotent},
           {"solvable", solvable}};
    if (frob)
      j["frobenius"] = json{{"kernel", to_json(frob->kernel)},
                            {"complement", to_json(frob->complement)},
                            {"kernel_order", frob->kernel.order()},
                            {"complement_order", frob->complement.order()}};
    else
      j["frobenius"] = frob_note;
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "group:      " << group.label() << "\n"
            << "order:      " << group.order() << "\n"
            << "|Z(G)|:     " << stats.center_order << "\n"
            << "|G'|:       " << stats.derived_order << "\n"
            << "|Cent(G)|:  " << stats.cent_count << "\n"
            << "primes:     {" << join_ints(primes) << "}\n"
            << "cpo:        " << cpo_text(cpo) << "\n"
            << "nilpotent:  " << (nilpotent ? "yes" : "no") << "\n"
            << "solvable:   " << (solvable ? "yes" : "no") << "\n";
  if (frob)
    std::cout << "frobenius:  kernel order " << frob->kernel.order()
              << ", complement order " << frob->complement.order() << "\n";
  else
    std::cout << "frobenius:  " << frob_note << "\n";
  return 0;
}

int cmd_cent(const GlobalOpts& g, const std::string& spec_text) {
  const FiniteGroup group = realize(parse_spec(spec_text), g.limits);
  const CentStats stats = cent_set(group);
  if (g.json_output) {
    std::cout << cent_stats_json(group.label(), group.order(), stats).dump() << "\n";
    return 0;
  }
  std::cout << "group:      " << group.label() << "\n"
            << "order:      " << group.order() << "\n"
            << "|Cent(G)|:  " << stats.cent_count << "\n"
            << "|Z(G)|:     " << stats.center_order << "\n"
            << "|G'|:       " << stats.derived_order << "\n"
            << "centralizer orders:\n";
  for (auto [order, count] : stats.order_multiset)
    std::cout << "  order " << order << ": " << count
              << (count == 1 ? " subgroup\n" : " subgroups\n");
  return 0;
}

int cmd_isoclinic(const GlobalOpts& g, const std::string& a_text,
                  const std::string& b_text) {
  const FiniteGroup a = realize(parse_spec(a_text), g.limits);
  const FiniteGroup b = realize(parse_spec(b_text), g.limits);
  const IsoclinismResult r = find_isoclinism(a, b, g.limits);
  if (g.json_output) {
    json j = to_json(r);
    j["schema"] = kJsonSchemaVersion;
    j["left"] = a.label();
    j["right"] = b.label();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << a.label() << " ~ " << b.label() << "?  " << verdict_name(r.verdict)
              << " (" << r.reason << ")\n";
    if (r.witness) {
      std::cout << "phi: " << json(r.witness->phi.mapping).dump() << "\n"
                << "psi: " << json(r.witness->psi.mapping).dump() << "\n";
    }
  }
  return 0;
}

int cmd_cpo_classify(const GlobalOpts& g, int max_order) {
  const auto catalog = build_catalog(catalog_options(g, max_order));
  json entries = json::array();
  for (const auto& e : catalog) {
    const CpoVerdict v = g.strict_cpo ? is_cpo(e.group, CpoMode::NonCentral) : e.cpo;
    if (g.json_output) {
      json j{{"label", e.label}, {"order", e.group.order()}, {"cpo", to_json(v)}};
      entries.push_back(j);
    } else {
      std::cout << e.label << " (order " << e.group.order() << "): " << cpo_text(v)
                << "\n";
    }
  }
  if (g.json_output)
    std::cout << json{{"schema", kJsonSchemaVersion},
                      {"max_order", max_order},
                      {"strict", g.strict_cpo},
                      {"entries", entries}}
                     .dump()
              << "\n";
  return 0;
}

int cmd_search(const GlobalOpts& g, int max_order) {
  const auto catalog = build_catalog(catalog_options(g, max_order));
  const SearchResult result = search_counterexamples(catalog, g.limits);
  if (g.json_output) {
    for (const auto& r : result.reports) std::cout << to_json(r).dump() << "\n";
    for (const auto& p : result.inconclusive)
      std::cout << json{{"schema", kJsonSchemaVersion},
                        {"inconclusive", {{"left", p.left_label},
                                          {"right", p.right_label},
                                          {"reason", p.reason}}}}
                       .dump()
                << "\n";
    return 0;
  }
  std::cout << "catalog entries: " << catalog.size() << ", buckets: " << result.buckets
            << ", pairs examined: " << result.pairs_examined << "\n";
  for (const auto& r : result.reports)
    std::cout << "counterexample: " << r.left.label << " (order "
              << r.left.group.order() << ") vs " << r.right.label << " (order "
              << r.right.group.order() << ")  |Cent|=" << r.shared_cent_count
              << " |G'|=" << r.shared_derived_order << "  [" << r.refutation << "]\n";
  if (result.reports.empty()) std::cout << "no counterexamples found\n";
  for (const auto& p : result.inconclusive)
    std::cout << "inconclusive: " << p.left_label << " vs " << p.right_label << " ("
              << p.reason << ")\n";
  return 0;
}

int cmd_family(const GlobalOpts& g, int p, bool relaxed) {
  const FamilyResult r = cpo_pair_family(p, relaxed, g.limits);
  if (g.json_output) {
    std::cout << to_json(r).dump() << "\n";
    return 0;
  }
  if (!r.applicable) {
    std::cout << "not applicable for p=" << p << ": " << r.reason << "\n";
    return 0;
  }
  for (const auto& e : r.members)
    std::cout << e.label << ": order " << e.group.order()
              << ", |Cent|=" << e.stats.cent_count
              << ", |G'|=" << e.stats.derived_order << "\n";
  return 0;
}

int cmd_verify(const GlobalOpts& g, int max_order) {
  const auto catalog = build_catalog(catalog_options(g, max_order));
  const VerificationReport report = verify_catalog(catalog, g.limits);
  if (g.json_output) {
    std::cout << to_json(report).dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.checked
                << " instances)\n";
      for (const auto& f : c.failures) std::cout << "     " << f << "\n";
    }
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group centralizer laboratory"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--table-cap", g.limits.table_cap, "max group order for dense tables");
  app.add_option("--lattice-cap", g.limits.lattice_cap,
                 "max order for exhaustive subgroup enumeration");
  app.add_option("--iso-cap", g.limits.iso_cap, "max order for isomorphism search");
  app.add_option("--seed", g.limits.seed, "seed for sampled associativity checks");
  app.add_flag("--exhaustive-validation", g.limits.exhaustive_validation,
               "always check associativity on all triples");
  app.add_flag("--json", g.json_output, "emit versioned JSON instead of text");
  app.add_flag("--strict-cpo", g.strict_cpo,
               "classify with the non-central-element definition variant");
  app.add_flag("--no-dedup", g.no_dedup, "keep isomorphic duplicates in the catalog");
  app.add_option("--products-file", g.products_file,
                 "file of direct-product specs for the catalog (one per line)");

  std::string spec_a, spec_b;
  int max_order = 120;
  int family_p = 0;
  bool relaxed_family = false;

  auto* info = app.add_subcommand("info", "order, center, derived, centralizer and structure summary");
  info->add_option("spec", spec_a, "group spec, e.g. Z11:Z5 or \"PGL(2,7)\"")->required();

  auto* cent = app.add_subcommand("cent", "centralizer statistics");
  cent->add_option("spec", spec_a)->required();

  auto* iso = app.add_subcommand("isoclinic", "decide isoclinism of two groups");
  iso->add_option("spec1", spec_a)->required();
  iso->add_option("spec2", spec_b)->required();

  auto* classify = app.add_subcommand("cpo-classify", "classify the catalog by centralizer orders");
  classify->add_option("--max-order", max_order, "catalog order bound");

  auto* search = app.add_subcommand("search", "search the catalog for conjecture counterexamples");
  search->add_option("--max-order", max_order, "catalog order bound");

  auto* family = app.add_subcommand("family", "the pair of groups sharing |Cent| and |G'| for a prime p");
  family->add_option("p", family_p, "prime with p-1 a product of two distinct primes")->required();
  family->add_flag("--relaxed", relaxed_family, "use every prime divisor of p-1");

  auto* verify = app.add_subcommand("verify", "run the structural-law sweeps over the catalog");
  verify->add_option("--max-order", max_order, "catalog order bound");

  for (auto* sc : {info, cent, iso, classify, search, family, verify}) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(g, spec_a);
    if (cent->parsed()) return cmd_cent(g, spec_a);
    if (iso->parsed()) return cmd_isoclinic(g, spec_a, spec_b);
    if (classify->parsed()) return cmd_cpo_classify(g, max_order);
    if (search->parsed()) return cmd_search(g, max_order);
    if (family->parsed()) return cmd_family(g, family_p, relaxed_family);
    if (verify->parsed()) return cmd_verify(g, max_order);
  } catch (const centlab::GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
