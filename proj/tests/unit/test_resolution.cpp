#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mono/error.hpp"
#include "mono/resolution.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

constexpr int Y = 4;

struct Sizes {
  size_t h = 0, a = 0, s = 0;
};

// Oracle sizes: summands are all pairs or one pair per conjugation orbit, a
// counts double cosets H g K carrying a valid triple between summands, s the
// lines of S.
Sizes expected_sizes(const FiniteGroup& g, const Character& central, const MatrixRep& v, SMode mode) {
  const auto pairs = pairs_poset(g, central);
  std::vector<CharPair> summands;
  std::set<CharPair> seen;
  for (const auto& p : pairs) {
    if (mode == SMode::Orbit && seen.count(p)) continue;
    summands.push_back(p);
    for (int x = 0; x < g.order(); ++x) seen.insert(act(x, p));
  }
  Sizes sizes;
  for (const auto& p : summands) {
    sizes.s += g.order() / p.domain().order();
    // dim V^(p) by the multiplicity of p in Res V.
    oracle::Complex total = 0;
    for (int x : p.domain().elements()) {
      oracle::Complex trace = 0;
      for (size_t i = 0; i < v.dim(); ++i) trace += oracle::numeric(v(x)(i, i));
      total += std::conj(oracle::root(g.exponent(), p.power(x))) * trace;
    }
    sizes.h += std::lround((total / static_cast<double>(p.domain().order())).real());
    for (const auto& q : summands) {
      for (const auto& dc : double_cosets(q.domain(), p.domain())) {
        if (triple_valid(Triple{p, dc.representative, q})) ++sizes.a;
      }
    }
  }
  return sizes;
}

BarResolution build(const FiniteGroup& g, const Character& central, const MatrixRep& v, int degree,
                    SMode mode = SMode::Orbit, bool reverse = false) {
  ResolutionRequest request{g, central, v};
  request.mode = mode;
  request.max_degree = degree;
  request.max_dim = 200000;
  request.reverse_order = reverse;
  return build_resolution(request);
}

// Oracle: dense exact ranks on the fixed-point subcomplex of one pair.
std::vector<size_t> dense_homology(const BarResolution& r, int pair, int through) {
  const int n = r.complex.conductor;
  const auto& eps = *r.complex.augmentation;
  std::vector<size_t> out;
  std::vector<size_t> all_rows(eps.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  const auto target = fixed_points(r.v, r.poset->pair(pair));
  auto rank_of = [&](int degree) -> size_t {
    const auto cols = r.fixed_columns(degree, pair);
    if (degree == 0) return rank(eps.submatrix(all_rows, cols).to_dense(n));
    return rank(r.complex.differentials[degree - 1].submatrix(r.fixed_columns(degree - 1, pair), cols).to_dense(n));
  };
  // Homology at V^(p): dim V^(p) - rank eps.
  out.push_back(target.dim() - rank_of(0));
  for (int i = 0; i < through; ++i) out.push_back(r.fixed_columns(i, pair).size() - rank_of(i) - rank_of(i + 1));
  return out;
}

Character linear(const FiniteGroup& g, int index) { return characters(Subgroup::whole(g))[index]; }

}  // namespace

TEST_SUITE("resolution") {
  TEST_CASE("small groups") {
    const auto c2 = builtin_group("c2");
    const auto trivial_c2 = central_characters(c2)[0];
    const auto r = build(c2, trivial_c2, trivial_rep(c2), 2, SMode::Full);
    CHECK(r.complex.dims == std::vector<size_t>{1, 1, 1});
    const auto check = check_monomial_resolution(r, 2);
    CHECK(check.is_complex);
    CHECK(check.morphisms);
    CHECK(check.augmentation_fixed);
    CHECK(check.exact);

    const auto c3 = builtin_group("c3");
    for (const auto& c : central_characters(c3)) {
      const auto v = isotypic_regular_rep(c3, c);
      const auto rc = build(c3, c, v, 2, SMode::Full);
      CHECK(rc.complex.dims == std::vector<size_t>{1, 1, 1});
      CHECK(check_monomial_resolution(rc, 2).exact);
    }
  }

  TEST_CASE("sizes against an independent count") {
    struct Case {
      const char* group;
      int central;
      std::string rep;
    };
    for (const auto& [name, central_index, tag] : std::vector<Case>{
             {"c2", 0, "trivial"}, {"c4", 1, "regular"}, {"d8", 0, "char:1"}, {"d8", 1, "irrep:4"},
             {"s3", 0, "irrep:2"}, {"q8", 1, "irrep:4"}, {"c6", 0, "regular"}}) {
      const auto g = builtin_group(name);
      const auto central = central_characters(g)[central_index];
      const auto v = resolve_rep(g, central, tag);
      for (auto mode : {SMode::Full, SMode::Orbit}) {
        CAPTURE(name);
        const auto r = build(g, central, v, 1, mode);
        const auto expected = expected_sizes(g, central, v, mode);
        CHECK(r.h == expected.h);
        CHECK(r.a == expected.a);
        CHECK(r.s == expected.s);
        CHECK(r.complex.dims == std::vector<size_t>{r.h * r.s, r.h * r.a * r.s});
      }
    }
    const auto d8 = builtin_group("d8");
    const auto r = build(d8, central_characters(d8)[0], trivial_rep(d8), 1);
    CHECK(r.h == 5);
    CHECK(r.a == 48);
    CHECK(r.s == 20);
    CHECK(default_s_mode(d8) == SMode::Orbit);
    CHECK(default_s_mode(builtin_group("c4")) == SMode::Full);
  }

  TEST_CASE("D8 resolutions are exact") {
    const auto d8 = builtin_group("d8");
    const auto central = central_characters(d8);
    for (const auto& chi : characters(Subgroup::whole(d8))) {
      const auto r = build(d8, central[0], character_rep(chi), 1);
      CHECK(r.complex.dims == std::vector<size_t>{100, 4800});
      const auto check = check_monomial_resolution(r, 1);
      CHECK(check.is_complex);
      CHECK(check.morphisms);
      CHECK(check.exact);
      for (const auto& p : check.pairs) {
        CHECK(p.fixed_target_dim == fixed_points(r.v, r.poset->pair(p.pair)).dim());
        CHECK(p.report.exact);
      }
    }
    const auto v = irreducible_catalog(d8).back();
    REQUIRE(v.dim() == 2);
    const auto r = build(d8, central[1], v, 2);
    CHECK(r.complex.dims == std::vector<size_t>{50, 650, 8450});
    const auto check = check_monomial_resolution(r, 2);
    CHECK(check.exact);
    // Dense ranks on a few pairs agree with the report.
    for (int p = 0; p < r.poset->size(); p += 3) {
      const auto homology = dense_homology(r, p, 1);
      for (size_t k : homology) CHECK(k == 0);
    }
  }

  TEST_CASE("S3 with the standard representation") {
    const auto s3 = builtin_group("s3");
    const auto central = central_characters(s3)[0];
    const auto r = build(s3, central, irreducible_catalog(s3).back(), 1);
    CHECK(r.complex.dims == std::vector<size_t>{90, 2610});
    const auto check = check_monomial_resolution(r, 1);
    CHECK(check.exact);
    const auto invariants = homology_invariants(check);
    for (int p = 0; p < r.poset->size(); ++p) {
      const auto homology = dense_homology(r, p, 1);
      REQUIRE(invariants.homology[p].size() >= homology.size() - 1);
      for (size_t k : homology) CHECK(k == 0);
    }
  }

  TEST_CASE("a damaged differential is caught") {
    const auto d8 = builtin_group("d8");
    auto r = build(d8, central_characters(d8)[0], trivial_rep(d8), 1);
    for (size_t c = 0; c < r.complex.differentials[0].cols(); ++c) {
      auto& column = r.complex.differentials[0].column(c);
      if (column.empty()) continue;
      column.front().value = CycloScalar(0, 4);
      break;
    }
    const auto check = check_monomial_resolution(r, 1);
    CHECK_FALSE((check.is_complex && check.exact));

    auto broken_eps = build(d8, central_characters(d8)[0], trivial_rep(d8), 1);
    broken_eps.complex.augmentation = SparseMatrix(broken_eps.complex.augmentation->rows(), broken_eps.complex.dims[0]);
    CHECK_FALSE(check_monomial_resolution(broken_eps, 1).exact);
  }

  TEST_CASE("basis order does not change invariants") {
    for (const char* name : {"d8", "s3", "c4"}) {
      const auto g = builtin_group(name);
      for (const auto& c : central_characters(g)) {
        const auto v = isotypic_regular_rep(g, c);
        if (v.dim() * g.order() > 40) continue;
        const auto forward = build(g, c, v, 1);
        const auto backward = build(g, c, v, 1, SMode::Orbit, true);
        if (forward.as_basis.size() > 1) CHECK_FALSE(forward.as_basis == backward.as_basis);
        const auto a = check_monomial_resolution(forward, 1);
        const auto b = check_monomial_resolution(backward, 1);
        CHECK(a.exact);
        CHECK(b.exact);
        CHECK(homology_invariants(a) == homology_invariants(b));
      }
    }
    const auto d8 = builtin_group("d8");
    const auto v = character_rep(linear(d8, 2));
    const auto a = check_monomial_resolution(build(d8, central_characters(d8)[0], v, 1), 1);
    const auto b = check_monomial_resolution(build(d8, central_characters(d8)[0], v, 1, SMode::Orbit, true), 1);
    CHECK(homology_invariants(a) == homology_invariants(b));
  }

  TEST_CASE("monocentre acts by chain maps") {
    const auto d8 = builtin_group("d8");
    const auto central = central_characters(d8);
    for (const auto& chi : characters(Subgroup::whole(d8))) {
      const auto r = build(d8, central[0], character_rep(chi), 1);
      const auto report = monocentre(*r.poset);
      for (int x = 0; x < d8.order(); ++x) {
        const int index = report.element_family[x];
        if (index < 0) continue;
        const auto maps = monocentre_chain_map(r, report.families[index], 1);
        CHECK(maps.all_commute);
        CHECK(maps.augmentation_commutes);
        CHECK(maps.equivariant_on_v);
        REQUIRE(maps.scalar.has_value());
        // On a one-dimensional V the family of x acts through chi(x).
        CHECK(*maps.scalar == CycloScalar::root_of_unity(4, chi.power(x)));
      }
    }
    const auto chi2 = linear(d8, 2);
    if (chi2.power(Y) == 2) {
      const auto r = build(d8, central[0], character_rep(chi2), 1);
      const auto report = monocentre(*r.poset);
      const auto maps = monocentre_chain_map(r, report.families[report.element_family[Y]], 1);
      CHECK(*maps.scalar == CycloScalar(-1));
    }
    const auto v = irreducible_catalog(d8).back();
    const auto r = build(d8, central[1], v, 1);
    const auto report = monocentre(*r.poset);
    CHECK(report.order() == 2);
    for (const auto& family : report.families) {
      const auto maps = monocentre_chain_map(r, family, 1);
      CHECK(maps.all_commute);
      REQUIRE(maps.scalar.has_value());
      CHECK((*maps.scalar == CycloScalar(1) || *maps.scalar == CycloScalar(-1)));
    }
    bool thrown = false;
    try {
      auto bogus = report.families.front();
      bogus.representatives.back() = 1;
      monocentre_chain_map(r, bogus, 1);
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::FamilyNotInMonocentre;
    }
    CHECK(thrown);
  }

  TEST_CASE("guards") {
    const auto d8 = builtin_group("d8");
    const auto central = central_characters(d8);
    ResolutionRequest request{d8, central[0], trivial_rep(d8)};
    request.max_degree = 2;
    request.max_dim = 4000;
    bool too_large = false;
    try {
      build_resolution(request);
    } catch (const Error& e) {
      too_large = e.code() == ErrorCode::TooLarge;
      CHECK(std::string(e.what()).find("4800") != std::string::npos);
    }
    CHECK(too_large);
    bool mismatch = false;
    try {
      build_resolution(ResolutionRequest{d8, central[1], trivial_rep(d8)});
    } catch (const Error& e) {
      mismatch = e.code() == ErrorCode::CentralCharacterMismatch;
    }
    CHECK(mismatch);
    bool bad_degree = false;
    try {
      check_monomial_resolution(build(d8, central[0], trivial_rep(d8), 1), 0);
    } catch (const Error&) {
      bad_degree = true;
    }
    CHECK(bad_degree);
  }
}
