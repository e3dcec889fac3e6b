#include "naive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace naive {

using centlab::FiniteGroup;

std::vector<int> commuting_set(const FiniteGroup& g, int x) {
  std::vector<int> out;
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  return out;
}

std::vector<int> center_of(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<int> derived_of(const FiniteGroup& g) {
  // Commutators, then full-set product passes until nothing new appears.
  std::set<int> s{g.identity()};
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      s.insert(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  for (;;) {
    std::set<int> next = s;
    for (int a : s)
      for (int b : s) next.insert(g.mul(a, b));
    if (next == s) break;
    s = std::move(next);
  }
  return {s.begin(), s.end()};
}

int cent_count_of(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  for (int x = 0; x < g.order(); ++x) seen.insert(commuting_set(g, x));
  return static_cast<int>(seen.size());
}

std::vector<std::vector<int>> all_subgroups_by_subsets(const FiniteGroup& g) {
  const int n = g.order();
  if (n > 16) throw std::runtime_error("subset enumeration limited to order 16");
  std::vector<std::vector<int>> out;
  const unsigned idbit = 1u << g.identity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & idbit)) continue;
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) elems.push_back(i);
    bool closed = true;
    for (std::size_t i = 0; i < elems.size() && closed; ++i)
      for (std::size_t j = 0; j < elems.size() && closed; ++j)
        if (!(mask & (1u << g.mul(elems[i], elems[j])))) closed = false;
    if (closed) out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> sylow_by_subsets(const FiniteGroup& g, int p) {
  int part = 1, n = g.order();
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  std::vector<std::vector<int>> out;
  for (auto& h : all_subgroups_by_subsets(g))
    if (static_cast<int>(h.size()) == part) out.push_back(std::move(h));
  return out;
}

}  // namespace naive
