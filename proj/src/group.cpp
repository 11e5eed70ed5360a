#include "mono/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mono/error.hpp"

namespace mono {

namespace {

constexpr int kSubgroupEnumerationLimit = 512;

std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> elements{0};
  seen[0] = 1;
  for (size_t i = 0; i < elements.size(); ++i) {
    for (int s : generators) {
      int next = g.mul(elements[i], s);
      if (!seen[next]) {
        seen[next] = 1;
        elements.push_back(next);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

struct PermHash {
  size_t operator()(const std::vector<int>& p) const {
    size_t h = 1469598103934665603ULL;
    for (int v : p) h = (h ^ static_cast<size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

FiniteGroup FiniteGroup::finish(Data data) {
  const int n = data.order;
  require(n >= 1, ErrorCode::NotAGroup, "empty group");
  require(data.table.size() == static_cast<size_t>(n) * n, ErrorCode::NotAGroup, "table has wrong size");
  for (int v : data.table) require(v >= 0 && v < n, ErrorCode::NotAGroup, "table entry out of range");
  for (int a = 0; a < n; ++a) {
    require(data.table[a] == a && data.table[static_cast<size_t>(a) * n] == a, ErrorCode::NotAGroup,
            "element 0 is not the identity");
  }
  // Latin square: every row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      int r = data.table[static_cast<size_t>(a) * n + b];
      int c = data.table[static_cast<size_t>(b) * n + a];
      require(!row[r] && !col[c], ErrorCode::NotAGroup, "table is not a Latin square");
      row[r] = col[c] = 1;
    }
  }
  auto mul = [&](int a, int b) { return data.table[static_cast<size_t>(a) * n + b]; };

  // Greedy generating set: every element is a left-normed product of these.
  std::vector<char> reached(n, 0);
  std::vector<int> reach_list;
  reached[0] = 1;
  reach_list.push_back(0);
  for (int g = 0; g < n; ++g) {
    if (reached[g]) continue;
    data.generators.push_back(g);
    if (!reached[g]) {
      reached[g] = 1;
      reach_list.push_back(g);
    }
    for (size_t i = 0; i < reach_list.size(); ++i) {
      for (int s : data.generators) {
        int next = mul(reach_list[i], s);
        if (!reached[next]) {
          reached[next] = 1;
          reach_list.push_back(next);
        }
      }
    }
  }
  // Light's test: the elements b with (xb)y = x(by) for all x, y are closed
  // under products, so checking the generators covers the whole table.
  for (int b : data.generators) {
    for (int x = 0; x < n; ++x) {
      const int xb = mul(x, b);
      for (int y = 0; y < n; ++y) {
        require(mul(xb, y) == mul(x, mul(b, y)), ErrorCode::NotAGroup, "table is not associative");
      }
    }
  }

  data.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        data.inverse[a] = b;
        break;
      }
    }
  }
  data.element_order.assign(n, 1);
  data.exponent = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int p = a; p != 0; p = mul(p, a)) ++k;
    data.element_order[a] = k;
    data.exponent = std::lcm(data.exponent, data.element_order[a]);
  }
  return FiniteGroup(std::make_shared<const Data>(std::move(data)));
}

int FiniteGroup::pow(int a, long long exponent) const {
  const int k = element_order(a);
  long long e = exponent % k;
  if (e < 0) e += k;
  int result = 0;
  for (long long i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::from_cayley_table(std::string name, const std::vector<std::vector<int>>& table) {
  Data data;
  data.name = std::move(name);
  data.order = static_cast<int>(table.size());
  for (const auto& row : table) {
    require(row.size() == table.size(), ErrorCode::NotAGroup, "table is not square");
    data.table.insert(data.table.end(), row.begin(), row.end());
  }
  return finish(std::move(data));
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<std::vector<int>>& generators,
                                           int max_order) {
  require(!generators.empty(), ErrorCode::NotAGroup, "no generators");
  const size_t degree = generators.front().size();
  for (const auto& p : generators) {
    require(p.size() == degree, ErrorCode::NotAGroup, "generators have different degrees");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < degree; ++i) {
      require(sorted[i] == static_cast<int>(i), ErrorCode::NotAGroup, "generator is not a permutation");
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  // (p q)(i) = p(q(i))
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(degree);
    for (size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> queue{identity};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : generators) {
      auto next = compose(queue[i], s);
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
        require(static_cast<int>(queue.size()) <= max_order, ErrorCode::TooLarge,
                "permutation group exceeds order " + std::to_string(max_order));
      }
    }
  }
  std::vector<std::vector<int>> elements(seen.begin(), seen.end());
  std::unordered_map<std::vector<int>, int, PermHash> index;
  for (size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
  Data data;
  data.name = std::move(name);
  data.order = static_cast<int>(elements.size());
  data.table.resize(elements.size() * elements.size());
  for (size_t a = 0; a < elements.size(); ++a) {
    for (size_t b = 0; b < elements.size(); ++b) {
      data.table[a * elements.size() + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  data.kind = Kind::Permutation;
  data.family_parameter = static_cast<int>(degree);
  data.permutations = std::move(elements);
  return finish(std::move(data));
}

FiniteGroup builtin_group(const std::string& name) {
  auto parse_number = [&](size_t from) {
    int value = 0;
    if (from >= name.size()) return -1;
    for (size_t i = from; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return -1;
      value = value * 10 + (name[i] - '0');
    }
    return value;
  };
  if (name == "s3" || name == "s4") {
    const int degree = name == "s3" ? 3 : 4;
    std::vector<int> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    return FiniteGroup::from_permutations(name, {swap, cycle});
  }
  if (name == "a4") return FiniteGroup::from_permutations(name, {{1, 2, 0, 3}, {1, 0, 3, 2}});

  FiniteGroup::Data data;
  data.name = name;
  if (!name.empty() && name[0] == 'c') {
    const int n = parse_number(1);
    require(n >= 1 && n <= 12, ErrorCode::UnknownGroup, "unknown group '" + name + "'");
    data.order = n;
    data.table.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) data.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    data.kind = FiniteGroup::Kind::Cyclic;
    data.family_parameter = n;
    return FiniteGroup::finish(std::move(data));
  }
  const bool dihedral = !name.empty() && name[0] == 'd';
  if (dihedral || name == "q8") {
    const int order = dihedral ? parse_number(1) : 8;
    require(order >= 4 && order <= 16 && order % 2 == 0, ErrorCode::UnknownGroup,
            "unknown group '" + name + "'");
    const int n = order / 2;
    data.order = order;
    data.table.resize(static_cast<size_t>(order) * order);
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        const int i = a % n, s = a / n, j = b % n, t = b / n;
        int rotation = s ? i - j : i + j;
        if (!dihedral && s && t) rotation += 2;
        rotation = ((rotation % n) + n) % n;
        data.table[static_cast<size_t>(a) * order + b] = rotation + n * (s ^ t);
      }
    }
    data.kind = dihedral ? FiniteGroup::Kind::Dihedral : FiniteGroup::Kind::Quaternion;
    data.family_parameter = n;
    return FiniteGroup::finish(std::move(data));
  }
  fail(ErrorCode::UnknownGroup, "unknown group '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("c" + std::to_string(n));
  for (int n = 4; n <= 16; n += 2) names.push_back("d" + std::to_string(n));
  for (const char* extra : {"q8", "s3", "s4", "a4"}) names.emplace_back(extra);
  return names;
}

FiniteGroup group_from_json(const nlohmann::json& doc) {
  try {
    const std::string name = doc.value("name", std::string("custom"));
    if (doc.contains("table")) {
      auto table = doc.at("table").get<std::vector<std::vector<int>>>();
      if (doc.contains("order")) {
        require(doc.at("order").get<size_t>() == table.size(), ErrorCode::NotAGroup,
                "order does not match table size");
      }
      return FiniteGroup::from_cayley_table(name, table);
    }
    if (doc.contains("generators")) {
      auto generators = doc.at("generators").get<std::vector<std::vector<int>>>();
      if (doc.contains("degree")) {
        const size_t degree = doc.at("degree").get<size_t>();
        for (const auto& g : generators) {
          require(g.size() == degree, ErrorCode::NotAGroup, "generator length differs from degree");
        }
      }
      return FiniteGroup::from_permutations(name, generators);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed group JSON: ") + e.what());
  }
  fail(ErrorCode::Parse, "group JSON needs \"table\" or \"generators\"");
}

FiniteGroup resolve_group(const std::string& name_or_path) {
  const auto names = builtin_group_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin_group(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) fail(ErrorCode::UnknownGroup, "unknown group '" + name_or_path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("cannot parse ") + name_or_path + ": " + e.what());
  }
  return group_from_json(doc);
}

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(FiniteGroup group, std::vector<int> elements, bool trusted) : group_(std::move(group)) {
  auto data = std::make_shared<Data>();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = group_.order();
  data->mask.assign(n, 0);
  data->position.assign(n, -1);
  for (size_t i = 0; i < elements.size(); ++i) {
    require(elements[i] >= 0 && elements[i] < n, ErrorCode::NotASubgroup, "element out of range");
    data->mask[elements[i]] = 1;
    data->position[elements[i]] = static_cast<int>(i);
  }
  if (!trusted) {
    require(!elements.empty() && elements.front() == 0, ErrorCode::NotASubgroup, "subset misses the identity");
    for (int a : elements) {
      for (int b : elements) {
        require(data->mask[group_.mul(a, b)], ErrorCode::NotASubgroup, "subset is not closed");
      }
    }
  }
  data->elements = std::move(elements);
  data_ = std::move(data);
}

Subgroup::Subgroup(FiniteGroup group, std::vector<int> elements)
    : Subgroup(std::move(group), std::move(elements), false) {}

Subgroup Subgroup::generated_by(const FiniteGroup& group, const std::vector<int>& generators) {
  for (int g : generators) {
    require(g >= 0 && g < group.order(), ErrorCode::NotASubgroup, "generator out of range");
  }
  return Subgroup(group, closure_of(group, generators), true);
}

Subgroup Subgroup::whole(const FiniteGroup& group) {
  std::vector<int> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all), true);
}

Subgroup Subgroup::trivial(const FiniteGroup& group) { return Subgroup(group, {0}, true); }

bool Subgroup::contains(const Subgroup& other) const {
  for (int g : other.elements()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

Subgroup center(const FiniteGroup& group) {
  std::vector<int> z;
  for (int a = 0; a < group.order(); ++a) {
    bool central = true;
    for (int g : group.generators()) central = central && group.mul(a, g) == group.mul(g, a);
    if (central) z.push_back(a);
  }
  return Subgroup(group, z);
}

Subgroup conjugate_subgroup(int g, const Subgroup& h) {
  const auto& group = h.group();
  std::vector<int> elements;
  elements.reserve(h.order());
  for (int x : h.elements()) elements.push_back(group.conj(g, x));
  return Subgroup(group, std::move(elements));
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const auto& group = h.group();
  std::set<int> commutators;
  for (int a : h.elements()) {
    for (int b : h.elements()) {
      commutators.insert(group.mul(group.mul(a, b), group.mul(group.inv(a), group.inv(b))));
    }
  }
  return Subgroup::generated_by(group, std::vector<int>(commutators.begin(), commutators.end()));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> common;
  for (int g : a.elements()) {
    if (b.contains(g)) common.push_back(g);
  }
  return Subgroup(a.group(), std::move(common));
}

Subgroup normalizer(const Subgroup& h) {
  const auto& group = h.group();
  std::vector<int> elements;
  for (int g = 0; g < group.order(); ++g) {
    bool normalizes = true;
    for (int x : h.elements()) normalizes = normalizes && h.contains(group.conj(g, x));
    if (normalizes) elements.push_back(g);
  }
  return Subgroup(group, std::move(elements));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
  require(group.order() <= kSubgroupEnumerationLimit, ErrorCode::TooLarge,
          "subgroup enumeration is limited to order " + std::to_string(kSubgroupEnumerationLimit));
  // Every subgroup is the join of its cyclic subgroups, so closing the set of
  // cyclic subgroups under joins with cyclic subgroups reaches all of them.
  std::map<std::vector<int>, std::vector<int>> found;  // elements -> generators
  std::vector<int> cyclic_generators;
  std::set<std::vector<int>> cyclic_seen;
  for (int g = 0; g < group.order(); ++g) {
    auto elements = closure_of(group, {g});
    if (cyclic_seen.insert(elements).second) {
      cyclic_generators.push_back(g);
      found.emplace(elements, std::vector<int>{g});
    }
  }
  std::vector<std::vector<int>> queue;
  for (const auto& [elements, gens] : found) queue.push_back(elements);
  for (size_t i = 0; i < queue.size(); ++i) {
    const std::vector<int> current = queue[i];
    const std::vector<int> gens = found.at(current);
    std::vector<char> mask(group.order(), 0);
    for (int x : current) mask[x] = 1;
    for (int c : cyclic_generators) {
      if (mask[c]) continue;
      auto extended = gens;
      extended.push_back(c);
      auto elements = closure_of(group, extended);
      if (found.emplace(elements, extended).second) queue.push_back(elements);
    }
  }
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (const auto& [elements, gens] : found) result.push_back(Subgroup(group, elements, true));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Subgroup> subgroups_containing(const FiniteGroup& group, const Subgroup& z) {
  std::vector<Subgroup> result;
  for (auto& h : all_subgroups(group)) {
    if (h.contains(z)) result.push_back(std::move(h));
  }
  return result;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& h, const Subgroup& k) {
  const auto& group = h.group();
  std::vector<char> assigned(group.order(), 0);
  std::vector<DoubleCoset> result;
  for (int g = 0; g < group.order(); ++g) {
    if (assigned[g]) continue;
    DoubleCoset coset{g, {}};
    for (int x : h.elements()) {
      const int xg = group.mul(x, g);
      for (int y : k.elements()) {
        const int e = group.mul(xg, y);
        if (!assigned[e]) {
          assigned[e] = 1;
          coset.elements.push_back(e);
        }
      }
    }
    std::sort(coset.elements.begin(), coset.elements.end());
    result.push_back(std::move(coset));
  }
  return result;
}

int left_coset_min(int g, const Subgroup& h) {
  int best = g;
  for (int x : h.elements()) best = std::min(best, h.group().mul(g, x));
  return best;
}

std::vector<int> left_coset_representatives(const Subgroup& h) {
  std::vector<int> reps;
  for (int g = 0; g < h.group().order(); ++g) {
    if (left_coset_min(g, h) == g) reps.push_back(g);
  }
  return reps;
}

std::vector<int> right_coset_representatives(const Subgroup& h) {
  std::vector<int> reps;
  const auto& group = h.group();
  for (int g = 0; g < group.order(); ++g) {
    bool minimal = true;
    for (int x : h.elements()) minimal = minimal && group.mul(x, g) >= g;
    if (minimal) reps.push_back(g);
  }
  return reps;
}

}  // namespace mono
