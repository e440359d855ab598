#include <doctest.h>

#include <cmath>

#include "verlinde/errors.hpp"
#include "verlinde/fusion.hpp"

using namespace verlinde;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Setup {
  RootDatum rd;
  WeylGroup W;
  explicit Setup(const char* t)
      : rd(build_root_datum(LieType::parse(t))), W(enumerate_weyl(rd)) {}
};

}  // namespace

TEST_CASE("level weight enumeration") {
  Setup a1("A1");
  LevelWeightTable t = level_weights(a1.rd, 2);
  CHECK(t.size() == 3);
  CHECK(t.weights[0].labels == std::vector<long long>{0});
  CHECK(t.weights[2].labels == std::vector<long long>{2});

  Setup a2("A2");
  CHECK(level_weights(a2.rd, 3).size() == 10);  // n1 + n2 <= 3

  CHECK(level_weights(a1.rd, 0).size() == 1);
  Setup b2("B2");
  // comarks (1,1): binomial count
  CHECK(level_weights(b2.rd, 3).size() == 10);
  CHECK_THROWS_AS(level_weights(a1.rd, -1), precondition_error);
}

TEST_CASE("weyl denominator: closed form, product form, and walls") {
  Setup a1("A1");
  long long k = 3;
  LevelWeightTable t = level_weights(a1.rd, k);
  for (int n = 0; n <= k; ++n) {
    Complex j = weyl_denominator(a1.rd, a1.W, t.zetas[n]);
    double expect = 2.0 * std::sin(kPi * (n + 1) / (k + 2));
    CHECK(std::abs(j - Complex(0, expect)) < 1e-12);
    // product over positive roots gives the same value
    CHECK(std::abs(j - weyl_denominator_product(a1.rd, t.zetas[n])) < 1e-12);
  }
  // vanishing on a wall: the origin is fixed by every reflection
  RatVec zero(a1.rd.ambient, Rat(0));
  CHECK(std::abs(weyl_denominator(a1.rd, a1.W, zero)) < 1e-12);
  CHECK(!is_regular(a1.rd, zero));

  Setup b2("B2");
  LevelWeightTable tb = level_weights(b2.rd, 2);
  for (int i = 0; i < tb.size(); ++i) {
    CHECK(is_regular(b2.rd, tb.zetas[i]));
    CHECK(std::abs(weyl_denominator(b2.rd, b2.W, tb.zetas[i]) -
                   weyl_denominator_product(b2.rd, tb.zetas[i])) < 1e-12);
  }
}

TEST_CASE("characters: unit at zero weight, vanishing, S-matrix compatibility") {
  Setup a2("A2");
  LevelWeightTable t = level_weights(a2.rd, 4);
  RatVec zero_w(a2.rd.ambient, Rat(0));
  for (int i = 0; i < t.size(); ++i)
    CHECK(std::abs(character(a2.rd, a2.W, zero_w, t.zetas[i]) - 1.0) < 1e-12);

  // A1: chi at the principal point is q + 1/q with q = e^{i pi/2}, so 0.
  Setup a1("A1");
  Complex c = character(a1.rd, a1.W, a1.rd.fund_weights[0],
                        a1.rd.principal_point());
  CHECK(std::abs(c) < 1e-12);

  CHECK_THROWS_AS(
      character(a1.rd, a1.W, a1.rd.fund_weights[0], RatVec(2, Rat(0))),
      precondition_error);

  // S entries recover characters: S_{mu,lam} / S_{0,lam} = conj(chi_mu(t_lam))
  SMatrix S = s_matrix(a2.rd, a2.W, t);
  for (int m = 0; m < t.size(); ++m)
    for (int l = 0; l < t.size(); ++l) {
      Complex lhs = S(m, l) / S(0, l);
      Complex rhs =
          std::conj(character(a2.rd, a2.W, t.weight_vectors[m], t.zetas[l]));
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("principal-point denominator norm matches the center-order formula") {
  struct Row {
    const char* t;
    double expect;  // #Z(G) h^l, simply laced
  };
  const Row rows[] = {{"A1", 2 * 2},       {"A2", 3 * 9},
                      {"A3", 4. * 4 * 4 * 4}, {"D4", 4. * 6 * 6 * 6 * 6}};
  for (const auto& r : rows) {
    Setup s(r.t);
    Complex j = weyl_denominator(s.rd, s.W, s.rd.principal_point());
    CHECK_MESSAGE(std::abs(std::norm(j) - r.expect) < 1e-6, r.t);
  }
}

TEST_CASE("s-matrix is symmetric unitary with sine entries in rank one") {
  Setup a1("A1");
  for (long long k = 1; k <= 8; ++k) {
    LevelWeightTable t = level_weights(a1.rd, k);
    SMatrix S = s_matrix(a1.rd, a1.W, t);
    CHECK(S.max_unitarity_defect < 1e-9);
    CHECK(S.max_symmetry_defect < 1e-9);
    // entries: common unimodular prefactor times sin((a+1)(b+1)pi/(k+2))
    double norm = std::sqrt(2.0 / (k + 2));
    Complex pref = S(0, 0) / (norm * std::sin(kPi / (k + 2)));
    CHECK(std::abs(std::abs(pref) - 1.0) < 1e-9);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        CHECK(std::abs(S(a, b) - pref * norm * std::sin(kPi * (a + 1) * (b + 1) /
                                                        (k + 2))) < 1e-9);
  }
  Setup a2("A2");
  for (long long k = 1; k <= 5; ++k) {
    SMatrix S = s_matrix(a2.rd, a2.W, level_weights(a2.rd, k));
    CHECK(S.max_unitarity_defect < 1e-9);
    CHECK(S.max_symmetry_defect < 1e-9);
  }
  Setup b2("B2");
  SMatrix Sb = s_matrix(b2.rd, b2.W, level_weights(b2.rd, 3));
  CHECK(Sb.max_unitarity_defect < 1e-9);
  CHECK(Sb.max_symmetry_defect < 1e-9);
}

TEST_CASE("center action on level weights") {
  Setup a1("A1");
  CenterSubgroup Z = center_group(a1.rd);
  long long k = 4;
  LevelWeightTable t = level_weights(a1.rd, k);
  auto act4 = CenterActionOnWeights::build(a1.rd, a1.W, Z, t);
  // nontrivial element: label n -> k - n
  for (int i = 0; i <= k; ++i)
    CHECK(t.weights[act4.apply(1, i)].labels[0] == k - t.weights[i].labels[0]);
  // identity acts trivially
  for (int i = 0; i <= k; ++i) CHECK(act4.apply(0, i) == i);

  // group action property and equivariance of the alcove points
  for (const auto& name : {"A2", "A3", "D4"}) {
    Setup s(name);
    CenterSubgroup ZG = center_group(s.rd);
    LevelWeightTable tt = level_weights(s.rd, 3);
    auto action = CenterActionOnWeights::build(s.rd, s.W, ZG, tt);
    for (int a = 0; a < ZG.size(); ++a)
      for (int b = 0; b < ZG.size(); ++b)
        for (int i = 0; i < tt.size(); ++i)
          CHECK(action.apply(ZG.mul(a, b), i) ==
                action.apply(a, action.apply(b, i)));
    for (int a = 0; a < ZG.size(); ++a) {
      auto cw = center_weyl_map(s.rd, s.W, ZG, ZG.elements[a]);
      const CenterElement& cinv = ZG.elements[ZG.inv(a)];
      for (int i = 0; i < tt.size(); ++i) {
        RatVec lhs = tt.zetas[action.apply(a, i)];
        RatVec rhs = act(cw.w, vec_sub(tt.zetas[i], cinv.rep));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("rho is fixed by the dual-Coxeter level action") {
  for (const auto& name : {"A2", "A3", "B2", "D4"}) {
    Setup s(name);
    CenterSubgroup ZG = center_group(s.rd);
    for (int a = 0; a < ZG.size(); ++a) {
      auto cw = center_weyl_map(s.rd, s.W, ZG, ZG.elements[a]);
      const CenterElement& cinv = ZG.elements[ZG.inv(a)];
      LevelWeight rho_w{std::vector<long long>(s.rd.rank, 1)};
      LevelWeight im = center_act_on_Pk(s.rd, cw.w, cinv.rep,
                                        s.rd.dual_coxeter_number, rho_w);
      CHECK(im == rho_w);
    }
  }
}

TEST_CASE("common fixed weights") {
  Setup a1("A1");
  CenterSubgroup Z = center_group(a1.rd);
  LevelWeightTable t2 = level_weights(a1.rd, 2);
  auto a2 = CenterActionOnWeights::build(a1.rd, a1.W, Z, t2);
  auto fixed = a2.common_fixed({1});
  REQUIRE(fixed.size() == 1);
  CHECK(t2.weights[fixed[0]].labels == std::vector<long long>{1});

  LevelWeightTable t3 = level_weights(a1.rd, 3);
  auto a3 = CenterActionOnWeights::build(a1.rd, a1.W, Z, t3);
  CHECK(a3.common_fixed({1}).empty());
  CHECK(!a3.has_fixed_point(1));

  // empty element list fixes everything
  CHECK(a3.common_fixed({}).size() == t3.size());
}

TEST_CASE("fusion product in small cases") {
  Setup a1("A1");
  LevelWeightTable t = level_weights(a1.rd, 2);
  SMatrix S = s_matrix(a1.rd, a1.W, t);
  auto dual = dual_index_map(a1.rd, t);

  FusionVector unit;
  unit.coefficients = {1, 0, 0};
  FusionVector f;
  f.coefficients = {0, 1, 0};
  // tau_0 is the unit
  CHECK(fusion_product(S, dual, unit, f).coefficients == f.coefficients);
  // f * f = tau_0 + tau_{2w}
  CHECK(fusion_product(S, dual, f, f).coefficients ==
        std::vector<long long>{1, 0, 1});

  // Verlinde sum oracle: N_{xy}^z = sum_l S_xl S_yl conj(S_zl) / S_0l gives
  // the same structure constants.
  Setup a2s("A2");
  LevelWeightTable t2 = level_weights(a2s.rd, 3);
  SMatrix S2 = s_matrix(a2s.rd, a2s.W, t2);
  auto dual2 = dual_index_map(a2s.rd, t2);
  for (int x = 0; x < t2.size(); ++x)
    for (int y = 0; y < t2.size(); ++y) {
      FusionVector vx, vy;
      vx.coefficients.assign(t2.size(), 0);
      vy.coefficients.assign(t2.size(), 0);
      vx.coefficients[x] = 1;
      vy.coefficients[y] = 1;
      FusionVector prod = fusion_product(S2, dual2, vx, vy);
      for (int z = 0; z < t2.size(); ++z) {
        Complex n = 0;
        for (int l = 0; l < t2.size(); ++l)
          n += S2(x, l) * S2(y, l) * std::conj(S2(z, l)) / S2(0, l);
        long long expect = std::llround(n.real());
        CHECK(std::abs(n.real() - expect) < 1e-6);
        CHECK(prod.coefficients[z] == expect);
        CHECK(prod.coefficients[z] >= 0);
      }
    }
}

TEST_CASE("fusion ring is commutative and associative with the vacuum unit") {
  Setup a2("A2");
  LevelWeightTable t = level_weights(a2.rd, 3);
  SMatrix S = s_matrix(a2.rd, a2.W, t);
  auto dual = dual_index_map(a2.rd, t);
  auto basis = [&](int i) {
    FusionVector v;
    v.coefficients.assign(t.size(), 0);
    v.coefficients[i] = 1;
    return v;
  };
  const int probes[] = {1, 4, 7, 9, 3};
  for (int x : probes)
    for (int y : probes) {
      CHECK(fusion_product(S, dual, basis(x), basis(y)).coefficients ==
            fusion_product(S, dual, basis(y), basis(x)).coefficients);
      for (int z : {1, 4, 9}) {
        auto xy_z = fusion_product(S, dual,
                                   fusion_product(S, dual, basis(x), basis(y)),
                                   basis(z));
        auto x_yz = fusion_product(S, dual, basis(x),
                                   fusion_product(S, dual, basis(y), basis(z)));
        CHECK(xy_z.coefficients == x_yz.coefficients);
      }
    }
}

TEST_CASE("epsilon by both routes, and the natural fusion element") {
  Setup a1("A1");
  RatVec zero_w(a1.rd.ambient, Rat(0));
  CHECK(epsilon(a1.rd, a1.W, zero_w) == 1);
  CHECK(epsilon(a1.rd, a1.W, a1.rd.fund_weights[0]) == 0);

  Setup a2("A2");
  for (long long k = 1; k <= 6; ++k) {
    LevelWeightTable t = level_weights(a2.rd, k);
    // both routes agree inside epsilon(); values stay in {-1, 0, 1}
    for (int i = 0; i < t.size(); ++i) {
      int e = epsilon(a2.rd, a2.W, t.weight_vectors[i]);
      CHECK(e >= -1);
      CHECK(e <= 1);
    }
  }
  FusionVector tn = tau_natural(a2.rd, a2.W, level_weights(a2.rd, 3));
  CHECK(tn.coefficients[0] == 1);  // eps(0) = 1

  Setup b2("B2");
  CHECK_THROWS_AS(epsilon(b2.rd, b2.W, RatVec(b2.rd.ambient, Rat(0))),
                  precondition_error);
}
