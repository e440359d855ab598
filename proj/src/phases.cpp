#include "verlinde/phases.hpp"

#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

void require_admissible(const RootDatum& rd, const CenterSubgroup& Z,
                        long long k, const char* who) {
  auto [k0, k1] = levels(rd, Z);
  if (k <= 0 || k % k0 != 0)
    throw precondition_error(std::string(who) + ": level " + std::to_string(k) +
                             " is not a positive multiple of the basic level " +
                             std::to_string(k0));
}

// Discrete log of c over a fixed generator class inside the full center.
long long power_of(const RootDatum& rd, const CenterSubgroup& ZG,
                   const RatVec& gen, const CenterElement& c) {
  Lattice Q = rd.coroot_lattice();
  RatVec acc(rd.ambient, Rat(0));
  for (long long a = 0; a < ZG.size(); ++a) {
    if (Q.frac_coords(acc) == c.canon) return a;
    acc = vec_add(acc, gen);
  }
  throw precondition_error("delta_closed_form: element not a power of the generator");
}

}  // namespace

PhaseValue kappa(const RootDatum& rd, const WeylElement& coxeter,
                 const CenterSubgroup& Z, long long k, const RatVec& u,
                 const RatVec& v) {
  require_admissible(rd, Z, k, "kappa");
  if (!Z.lambda.contains(u) || !Z.lambda.contains(v))
    throw precondition_error("kappa: representative not in Lambda_Z");
  return PhaseValue(Rat(k) * rd.basic(solve_one_minus_w(rd, coxeter, u), v));
}

PhaseValue delta(const RootDatum& rd, const CenterSubgroup& Z, long long k,
                 const CenterElement& c1, const CenterElement& c2,
                 const WeylElement* coxeter_like) {
  require_admissible(rd, Z, k, "delta");
  if (Z.index_of(c1) < 0 || Z.index_of(c2) < 0)
    throw precondition_error("delta: element not in the subgroup");
  WeylElement w = coxeter_like ? *coxeter_like : coxeter_element(rd);

  const RatVec& u = c1.rep;
  const RatVec& v = c2.rep;
  RatVec su = solve_one_minus_w(rd, w, u);
  Rat e = Rat(k) * rd.basic(su, v);

  // Representative independence: shifting u or v by any coroot basis vector
  // must not move the exponent mod 1.
  for (const auto& q : rd.simple_coroots) {
    Rat du = Rat(k) * rd.basic(solve_one_minus_w(rd, w, q), v);
    if (!is_integer(du))
      throw precondition_error(
          "delta: value depends on the representative of the first argument "
          "(fixed-point hypothesis violated)");
    Rat dv = Rat(k) * rd.basic(su, q);
    if (!is_integer(dv))
      throw precondition_error(
          "delta: value depends on the representative of the second argument "
          "(fixed-point hypothesis violated)");
  }
  return PhaseValue(e);
}

PhaseValue delta_closed_form(const RootDatum& rd, const CenterSubgroup& Z,
                             long long k, const CenterElement& c1,
                             const CenterElement& c2) {
  require_admissible(rd, Z, k, "delta_closed_form");
  const long long l = rd.rank;
  CenterSubgroup ZG = center_group(rd);
  switch (rd.type.family) {
    case Family::A: {
      // generator exp(varpi_1_check); pairing exponent l / (2(l+1))
      long long a = power_of(rd, ZG, rd.fund_coweights[0], c1);
      long long b = power_of(rd, ZG, rd.fund_coweights[0], c2);
      return PhaseValue(Rat(k) * Rat(a * b) * Rat(l, 2 * (l + 1)));
    }
    case Family::B: {
      long long a = power_of(rd, ZG, rd.fund_coweights[0], c1);
      long long b = power_of(rd, ZG, rd.fund_coweights[0], c2);
      return PhaseValue(Rat(k) * Rat(a * b) * Rat(1, 2));
    }
    case Family::C:
      // tabulated as 1 for every admissible level
      return PhaseValue(Rat(0));
    case Family::D: {
      const RatVec& spin = rd.fund_coweights[l - 1];
      if (l % 2 == 1) {
        // cyclic of order 4 generated by exp(varpi_l_check);
        // pairing exponent (-l^2 + 3l + 1)/8
        long long a = power_of(rd, ZG, spin, c1);
        long long b = power_of(rd, ZG, spin, c2);
        return PhaseValue(Rat(k) * Rat(a * b) * Rat(-l * l + 3 * l + 1, 8));
      }
      // Z2 x Z2 generated by exp(varpi_l_check), exp(varpi_1_check);
      // pairing exponents (-l^2+3l+1)/8, (3-l)/4, 1/2.
      Lattice Q = rd.coroot_lattice();
      auto decompose = [&](const CenterElement& c) {
        for (long long a = 0; a <= 1; ++a)
          for (long long b = 0; b <= 1; ++b) {
            RatVec v = vec_add(vec_scale(Rat(a), spin),
                               vec_scale(Rat(b), rd.fund_coweights[0]));
            if (Q.frac_coords(v) == c.canon) return std::make_pair(a, b);
          }
        throw std::logic_error("delta_closed_form: center decomposition failed");
      };
      auto [a1, b1] = decompose(c1);
      auto [a2, b2] = decompose(c2);
      Rat e = Rat(k) * (Rat(a1 * a2) * Rat(-l * l + 3 * l + 1, 8) +
                        Rat(a1 * b2 + b1 * a2) * Rat(3 - l, 4) +
                        Rat(b1 * b2) * Rat(1, 2));
      return PhaseValue(e);
    }
    default:
      throw precondition_error(
          "delta_closed_form: no tabulated closed form for type " +
          rd.type.name());
  }
}

PhaseValue prequant_commutator(const RootDatum& rd, const CenterSubgroup& Z,
                               long long k, const std::pair<RatVec, RatVec>& u,
                               const std::pair<RatVec, RatVec>& v) {
  for (const RatVec* x : {&u.first, &u.second, &v.first, &v.second})
    if (!Z.lambda.contains(*x))
      throw precondition_error("prequant_commutator: component not in Lambda_Z");
  Rat e = Rat(k) * (rd.basic(u.first, v.second) - rd.basic(u.second, v.first));
  return PhaseValue(e);
}

bool is_prequantizable(const RootDatum& rd, const CenterSubgroup& Z,
                       long long k) {
  // Route 1: commutator trivial on generator pairs of Lambda_Z^2.
  bool trivial = true;
  const int r = Z.lambda.rank();
  RatVec zero(rd.ambient, Rat(0));
  for (int i = 0; i < r && trivial; ++i)
    for (int j = 0; j < r && trivial; ++j) {
      auto q = prequant_commutator(rd, Z, k,
                                   {Z.lambda.basis_vector(i), zero},
                                   {zero, Z.lambda.basis_vector(j)});
      if (!q.is_one()) trivial = false;
    }
  // Route 2: divisibility by the basic level.
  auto [k0, k1] = levels(rd, Z);
  bool divisible = (k % k0 == 0);
  if (trivial != divisible)
    throw std::logic_error(
        "is_prequantizable: commutator and basic-level criteria disagree");
  return trivial;
}

}  // namespace verlinde
