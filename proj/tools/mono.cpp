#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "mono/convolution.hpp"
#include "mono/error.hpp"
#include "mono/resolution.hpp"

using nlohmann::json;
using namespace mono;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

struct RunConfig {
  std::string command;
  std::string group = "c2";
  std::string central = "all";
  std::string s_mode;
  int degree = 1;
  std::string rep;
  std::string out;
  bool text = false;
  bool exhaustive = false;
  bool chain_maps = false;
};

// Roots of unity as {conductor, power}; other scalars by power-basis coefficients.
json scalar_json(const CycloScalar& x) {
  if (auto j = x.root_of_unity_power()) return {{"conductor", x.conductor()}, {"power", *j}};
  if (x.is_rational()) return x.coefficients()[0].get_str();
  json coeffs = json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(c.get_str());
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

json character_json(const Character& phi) {
  return {{"subgroup", phi.domain().elements()},
          {"order", phi.domain().order()},
          {"conductor", phi.conductor()},
          {"powers", phi.value_powers()}};
}

std::vector<Character> selected_centrals(const FiniteGroup& group, const std::string& selector) {
  if (selector == "all") return central_characters(group);
  return {central_character_by_tag(group, selector)};
}

int central_index(const FiniteGroup& group, const Character& central) {
  const auto all = central_characters(group);
  return static_cast<int>(std::find(all.begin(), all.end(), central) - all.begin());
}

json group_json(const FiniteGroup& group) {
  return {{"name", group.name()}, {"order", group.order()}, {"exponent", group.exponent()}};
}

json poset_report(const FiniteGroup& group, const Character& central) {
  const PairPoset poset(group, central);
  json pairs = json::array();
  for (int p = 0; p < poset.size(); ++p) {
    json entry = character_json(poset.pair(p));
    entry["id"] = p;
    entry["kernel"] = poset.kernel(p).elements();
    entry["stabilizer"] = poset.stabilizer(p).elements();
    entry["orbit"] = poset.orbit_representative(p);
    pairs.push_back(entry);
  }
  json covers = json::array();
  for (int a = 0; a < poset.size(); ++a) {
    for (int b = 0; b < poset.size(); ++b) {
      if (a == b || !poset.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < poset.size() && cover; ++c) cover = c == a || c == b || !(poset.leq(a, c) && poset.leq(c, b));
      if (cover) covers.push_back({a, b});
    }
  }
  return {{"central_index", central_index(group, central)},
          {"central", character_json(central)},
          {"pair_count", poset.size()},
          {"pairs", pairs},
          {"orbit_representatives", poset.orbit_representatives()},
          {"covers", covers}};
}

json triple_json(const TripleKey& t) { return {{"source", t.source}, {"g", t.g}, {"target", t.target}}; }

json hyperhecke_report(const FiniteGroup& group, const Character& central) {
  const HyperHeckeAlgebra algebra(group, central);
  const auto basis = algebra.basis();
  std::map<TripleKey, int> index;
  json triples = json::array();
  for (size_t k = 0; k < basis.size(); ++k) {
    index.emplace(basis[k], static_cast<int>(k));
    triples.push_back(triple_json(basis[k]));
  }
  bool closed = true;
  json table = json::array();
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      const auto product = algebra.multiply_basis(basis[i], basis[j]);
      if (!product) continue;
      auto it = index.find(product->first);
      if (it == index.end()) {
        closed = false;
        continue;
      }
      table.push_back({{"left", i},
                       {"right", j},
                       {"result", it->second},
                       {"scalar", scalar_json(CycloScalar::root_of_unity(algebra.conductor(), product->second))}});
    }
  }
  // Each e_p is idempotent and the full sum is a two-sided unit.
  std::vector<int> all(algebra.poset().size());
  std::iota(all.begin(), all.end(), 0);
  const auto unit = algebra.idempotent_sum(all);
  bool idempotents = algebra.multiply(unit, unit) == unit;
  for (int p : all) {
    const auto e = algebra.idempotent_sum({p});
    idempotents = idempotents && algebra.multiply(e, e) == e;
  }
  for (const auto& b : basis) {
    const auto x = algebra.element(b);
    idempotents = idempotents && algebra.multiply(unit, x) == x && algebra.multiply(x, unit) == x;
  }
  return {{"central_index", central_index(group, central)},
          {"pair_count", algebra.poset().size()},
          {"dimension", basis.size()},
          {"basis", triples},
          {"products", table},
          {"closed", closed},
          {"idempotent_laws", idempotents}};
}

json monocentre_report(const FiniteGroup& group, const Character& central, bool exhaustive) {
  const HyperHeckeAlgebra algebra(group, central);
  const auto& poset = algebra.poset();
  const auto report = monocentre(poset);
  json families = json::array();
  bool commutes = true;
  for (const auto& family : report.families) {
    families.push_back(family.representatives);
    for (const auto& t : algebra.basis()) commutes = commutes && family_commutes_with_triple(algebra, family, t);
  }
  json out = {{"central_index", central_index(group, central)},
              {"order", report.order()},
              {"invariants", report.invariants},
              {"closed", report.closed},
              {"abelian", report.abelian},
              {"families", families},
              {"element_family", report.element_family},
              {"commutes_with_all_triples", commutes}};
  if (exhaustive) {
    auto sorted = report.families;
    std::sort(sorted.begin(), sorted.end());
    out["exhaustive_agrees"] = monocentre_exhaustive(poset) == sorted;
  }
  return out;
}

json exactness_json(const ExactnessReport& report) {
  json degrees = json::array();
  for (const auto& d : report.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"dim", d.dim},
                       {"rank_out", d.rank_out},
                       {"rank_in", d.rank_in},
                       {"kernel_dim", d.kernel_dim},
                       {"exact", d.exact}});
  }
  return {{"augmentation_surjective", report.augmentation_surjective},
          {"degrees", degrees},
          {"exact", report.exact},
          {"method", report.method}};
}

json resolve_report(const FiniteGroup& group, const RunConfig& config) {
  const auto candidates = central_characters(group);
  // The representation fixes the central character unless one is named.
  std::optional<Character> central;
  if (config.central != "all") central = central_character_by_tag(group, config.central);
  const std::string tag = config.rep.empty() ? "regular" : config.rep;
  const MatrixRep v = resolve_rep(group, central ? *central : candidates.front(), tag);
  if (!central) {
    const auto acting = v.central_character();
    require(acting.has_value(), ErrorCode::CentralCharacterMismatch, "the centre does not act on V by scalars");
    central = *acting;
  }
  require(config.degree >= 1, ErrorCode::Parse, "--degree must be at least 1");
  ResolutionRequest request{group, *central, v};
  request.mode = config.s_mode.empty() ? default_s_mode(group) : (config.s_mode == "full" ? SMode::Full : SMode::Orbit);
  request.max_degree = config.degree;
  const auto r = build_resolution(request);
  ExactnessOptions options;
  options.max_dim = request.max_dim;
  const auto check = check_monomial_resolution(r, config.degree, options);
  json pairs = json::array();
  for (const auto& p : check.pairs) {
    json entry = exactness_json(p.report);
    entry["pair"] = p.pair;
    entry["fixed_target_dim"] = p.fixed_target_dim;
    pairs.push_back(entry);
  }
  json out = {{"central_index", central_index(group, *central)},
              {"rep", tag},
              {"rep_dim", v.dim()},
              {"s_mode", request.mode == SMode::Full ? "full" : "orbit"},
              {"summand_pairs", r.summand_pairs},
              {"h", r.h},
              {"a", r.a},
              {"s", r.s},
              {"dims", r.complex.dims},
              {"through_degree", check.through_degree},
              {"is_complex", check.is_complex},
              {"morphisms", check.morphisms},
              {"augmentation_fixed", check.augmentation_fixed},
              {"pairs", pairs},
              {"exact", check.exact}};
  if (config.chain_maps) {
    json maps = json::array();
    for (const auto& family : monocentre(*r.poset).families) {
      const auto report = monocentre_chain_map(r, family, 1);
      maps.push_back({{"family", family.representatives},
                      {"commutes", report.all_commute},
                      {"equivariant_on_v", report.equivariant_on_v},
                      {"scalar", report.scalar ? scalar_json(*report.scalar) : json(nullptr)}});
    }
    out["chain_maps"] = maps;
  }
  return out;
}

json convolve_report(const FiniteGroup& group, const Character& central, bool exhaustive) {
  const HyperHeckeAlgebra algebra(group, central);
  size_t checks = 0, passed = 0, as_written_passed = 0;
  json failures = json::array();
  for (const auto& key : algebra.basis()) {
    const auto t = algebra.triple(key);
    const auto choice = minimal_coset_choice(t);
    std::vector<int> shifts;
    if (exhaustive) {
      shifts.resize(group.order());
      std::iota(shifts.begin(), shifts.end(), 0);
    } else {
      shifts = {0, key.g};
    }
    for (int g1 : shifts) {
      ++checks;
      const auto check = translation_formula_check(t, g1, choice);
      if (check.holds && check.expansion_matches) {
        ++passed;
      } else {
        failures.push_back({{"triple", triple_json(key)}, {"g1", g1}});
      }
      if (translation_formula_check(t, g1, choice, PhiWeights::AsWritten).holds) ++as_written_passed;
    }
  }
  return {{"central_index", central_index(group, central)},
          {"triples", algebra.basis().size()},
          {"checks", checks},
          {"passed", passed},
          {"as_written_weights_passed", as_written_passed},
          {"failures", failures},
          {"pass", passed == checks}};
}

json doublecoset_report(const FiniteGroup& group) {
  const auto subgroups = all_subgroups(group);
  size_t cases = 0, passed = 0;
  json failures = json::array();
  for (const auto& j : subgroups) {
    for (const auto& h : subgroups) {
      for (const auto& phi : characters(h)) {
        ++cases;
        const auto d = double_coset_formula(j, phi);
        int total = 0;
        for (const auto& chi : d.summand_characters) total += j.order() / chi.domain().order();
        if (verify_double_coset_formula(d) && total * h.order() == group.order()) {
          ++passed;
        } else {
          failures.push_back({{"J", j.elements()}, {"character", character_json(phi)}});
        }
      }
    }
  }
  return {{"subgroups", subgroups.size()}, {"cases", cases}, {"passed", passed}, {"failures", failures},
          {"pass", passed == cases}};
}

json run(const RunConfig& config) {
  const FiniteGroup group = resolve_group(config.group);
  json out = {{"command", config.command}, {"group", group_json(group)}};
  if (config.command == "resolve") {
    out["result"] = resolve_report(group, config);
    return out;
  }
  if (config.command == "doublecoset-check") {
    out["result"] = doublecoset_report(group);
    return out;
  }
  json results = json::array();
  for (const auto& central : selected_centrals(group, config.central)) {
    if (config.command == "poset") results.push_back(poset_report(group, central));
    if (config.command == "hyperhecke") results.push_back(hyperhecke_report(group, central));
    if (config.command == "monocentre") results.push_back(monocentre_report(group, central, config.exhaustive));
    if (config.command == "convolve-check") results.push_back(convolve_report(group, central, config.exhaustive));
  }
  out["results"] = results;
  return out;
}

bool is_scalar_array(const json& value) {
  if (!value.is_array()) return false;
  for (const auto& v : value) {
    if (v.is_structured()) return false;
  }
  return true;
}

void render_text(std::ostream& out, const json& value, int indent) {
  const std::string pad(indent, ' ');
  if (value.is_object()) {
    if (value.contains("conductor") && (value.contains("power") || value.contains("coeffs")) && value.size() == 2) {
      out << pad << value.dump() << "\n";
      return;
    }
    for (const auto& [key, item] : value.items()) {
      if (item.is_primitive() || is_scalar_array(item)) {
        out << pad << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      } else {
        out << pad << key << ":\n";
        render_text(out, item, indent + 2);
      }
    }
    return;
  }
  if (value.is_array()) {
    for (size_t i = 0; i < value.size(); ++i) {
      const auto& item = value[i];
      if (item.is_primitive() || is_scalar_array(item)) {
        out << pad << "- " << item.dump() << "\n";
      } else {
        out << pad << "[" << i << "]\n";
        render_text(out, item, indent + 2);
      }
    }
    return;
  }
  out << pad << value.dump() << "\n";
}

std::string render(const json& value, bool text) {
  if (!text) return value.dump(2) + "\n";
  std::ostringstream out;
  render_text(out, value, 0);
  return out.str();
}

int emit(const RunConfig& config, const std::string& body) {
  if (config.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream file(config.out);
  if (!file) {
    std::cout << json{{"error", {{"code", "Io"}, {"message", "cannot write " + config.out}}}}.dump(2) << "\n";
    return kExitFailure;
  }
  file << body;
  return 0;
}

int report_error(const RunConfig& config, const std::string& code, const std::string& message, int exit_code) {
  const json error = {{"error", {{"code", code}, {"message", message}, {"command", config.command}}}};
  emit(config, render(error, config.text));
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial resolutions of finite group representations"};
  app.require_subcommand(1);
  RunConfig config;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"poset", "pairs poset for each central character"},
      {"hyperhecke", "double-coset basis and structure constants"},
      {"monocentre", "monocentre order and abelian invariants"},
      {"resolve", "bar-style monomial resolution with exactness report"},
      {"convolve-check", "translation formula on each convolution basis element"},
      {"doublecoset-check", "double coset formula on pairs of subgroups"}};
  for (const auto& [name, about] : commands) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("--group", config.group, "builtin name or JSON file");
    sub->add_option("--central-char", config.central, "index, trivial or all");
    sub->add_option("--out", config.out, "write the report here");
    sub->add_flag("--text", config.text, "human-readable output");
    const std::string command = name;
    if (command == "resolve") {
      sub->add_option("--s-mode", config.s_mode, "pairs per term: every pair or one per orbit")->check(CLI::IsMember({"full", "orbit"}));
      sub->add_option("--degree", config.degree, "highest degree checked")->check(CLI::Range(1, 16));
      sub->add_option("--rep", config.rep, "trivial, regular, irrep:k, char:k or a JSON file");
      sub->add_flag("--chain-maps", config.chain_maps, "report monocentre chain maps");
    }
    if (command == "monocentre" || command == "convolve-check") {
      sub->add_flag("--exhaustive", config.exhaustive, "also run the brute-force cross-check");
    }
    sub->callback([&config, command] { config.command = command; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(config, to_string(ErrorCode::Parse), e.what(), kExitParse);
  }
  try {
    return emit(config, render(run(config), config.text));
  } catch (const Error& e) {
    int code = kExitFailure;
    if (e.code() == ErrorCode::Parse || e.code() == ErrorCode::UnknownGroup) code = kExitParse;
    if (e.code() == ErrorCode::TooLarge) code = kExitGuard;
    return report_error(config, to_string(e.code()), e.what(), code);
  } catch (const json::exception& e) {
    return report_error(config, to_string(ErrorCode::Parse), e.what(), kExitParse);
  }
}
