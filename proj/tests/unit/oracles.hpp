#pragma once

// Brute-force reference computations used as independent oracles. Nothing
// here calls the library beyond reading group tables and scalar coefficients.

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "mono/cyclotomic.hpp"
#include "mono/group.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline Complex numeric(const mono::CycloScalar& x) {
  const double pi = std::acos(-1.0);
  Complex total = 0;
  const auto& coeffs = x.coefficients();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    total += coeffs[i].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(i) / x.conductor());
  }
  return total;
}

inline Complex root(int n, long long j) {
  const double pi = std::acos(-1.0);
  return std::polar(1.0, 2 * pi * static_cast<double>(((j % n) + n) % n) / n);
}

inline bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-9; }

inline std::vector<int> center(const mono::FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

inline bool is_subgroup(const mono::FiniteGroup& g, const std::vector<int>& set) {
  std::vector<char> in(g.order(), 0);
  for (int x : set) in[x] = 1;
  if (!in[0]) return false;
  for (int a : set) {
    for (int b : set) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

// Every subset closed under the product; only for small groups.
inline std::set<std::vector<int>> subgroups_by_subsets(const mono::FiniteGroup& g) {
  std::set<std::vector<int>> found;
  const int n = g.order();
  for (unsigned long mask = 1; mask < (1ul << n); mask += 2) {
    std::vector<int> set;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) set.push_back(i);
    }
    if (is_subgroup(g, set)) found.insert(set);
  }
  return found;
}

inline std::vector<int> closure(const mono::FiniteGroup& g, std::vector<int> gens) {
  std::set<int> elements{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (int s : gens) {
        const int b = g.mul(a, s);
        if (elements.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

// Subgroups generated by at most two elements.
inline std::set<std::vector<int>> two_generated_subgroups(const mono::FiniteGroup& g) {
  std::set<std::vector<int>> found;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a; b < g.order(); ++b) found.insert(closure(g, {a, b}));
  }
  return found;
}

inline std::vector<int> commutator(const mono::FiniteGroup& g, const std::vector<int>& h) {
  std::vector<int> gens;
  for (int a : h) {
    for (int b : h) gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  return closure(g, gens);
}

// All homomorphisms H -> mu_N by brute force over assignments on a
// generating set, as power vectors indexed by the elements of H.
inline std::set<std::vector<int>> character_powers(const mono::FiniteGroup& g, const std::vector<int>& h) {
  const int n = g.exponent();
  std::vector<int> gens;
  std::vector<int> generated{0};
  for (int x : h) {
    if (std::find(generated.begin(), generated.end(), x) == generated.end()) {
      gens.push_back(x);
      generated = closure(g, gens);
    }
  }
  std::set<std::vector<int>> found;
  std::vector<int> assignment(gens.size(), 0);
  while (true) {
    // Extend along words; reject on conflict.
    std::vector<int> value(g.order(), -1);
    value[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (size_t i = 0; i < queue.size() && ok; ++i) {
      for (size_t s = 0; s < gens.size() && ok; ++s) {
        const int next = g.mul(queue[i], gens[s]);
        const int v = (value[queue[i]] + assignment[s]) % n;
        if (value[next] < 0) {
          value[next] = v;
          queue.push_back(next);
        } else {
          ok = value[next] == v;
        }
      }
    }
    if (ok) {
      for (int a : h) {
        for (int b : h) ok = ok && value[g.mul(a, b)] == (value[a] + value[b]) % n;
      }
    }
    if (ok) {
      std::vector<int> powers;
      for (int x : h) powers.push_back(value[x]);
      found.insert(powers);
    }
    size_t i = 0;
    for (; i < assignment.size(); ++i) {
      if (++assignment[i] < n) break;
      assignment[i] = 0;
    }
    if (i == assignment.size()) break;
  }
  return found;
}

}  // namespace oracle
