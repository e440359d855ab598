#include "verlinde/center.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

RatVec canon_key(const Lattice& mod, const RatVec& v) {
  return mod.frac_coords(v);
}

Int lcm_int(const Int& a, const Int& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Denominator lcm of pairings basic(x_i, y_j) over two vector families.
long long pairing_denominator(const RootDatum& rd,
                              const std::vector<RatVec>& xs,
                              const std::vector<RatVec>& ys) {
  Int l = 1;
  for (const auto& x : xs)
    for (const auto& y : ys) l = lcm_int(l, rat_den(rd.basic(x, y)));
  return to_ll(l);
}

std::vector<RatVec> lattice_columns(const Lattice& L) {
  std::vector<RatVec> cols;
  for (int j = 0; j < L.rank(); ++j) cols.push_back(L.basis_vector(j));
  return cols;
}

// Attach invariant-factor structure (generators and exponents) of
// lambda / Q_check to a subgroup whose element list is already closed.
void attach_structure(const RootDatum& rd, CenterSubgroup& Z) {
  Lattice Q = rd.coroot_lattice();
  FiniteQuotient q = lattice_quotient(Z.lambda, Q);
  Z.invariant_factors.clear();
  Z.generator_indices.clear();
  for (const auto& f : q.factors) Z.invariant_factors.push_back(to_ll(f));

  // Locate the quotient generators among the elements.
  std::map<RatVec, int> by_canon;
  for (size_t i = 0; i < Z.elements.size(); ++i)
    by_canon.emplace(Z.elements[i].canon, static_cast<int>(i));
  for (const auto& g : q.generators) {
    auto it = by_canon.find(canon_key(Q, g));
    if (it == by_canon.end())
      throw std::logic_error("center subgroup: generator not in element list");
    Z.generator_indices.push_back(it->second);
  }

  // Exponents of each element over the generators, by exhaustive matching of
  // generator-power products (groups here have at most a few dozen elements).
  const size_t ng = Z.generator_indices.size();
  std::vector<long long> idx(ng, 0);
  Z.exponents.assign(Z.elements.size(), {});
  while (true) {
    int e = Z.identity();
    for (size_t t = 0; t < ng; ++t)
      for (long long p = 0; p < idx[t]; ++p) e = Z.mul(e, Z.generator_indices[t]);
    if (Z.exponents[e].empty() || ng == 0) Z.exponents[e] = idx;
    // odometer
    size_t t = 0;
    for (; t < ng; ++t) {
      if (++idx[t] < Z.invariant_factors[t]) break;
      idx[t] = 0;
    }
    if (t == ng) break;
  }
  for (const auto& e : Z.exponents)
    if (e.size() != ng && !(ng == 0 && e.empty()))
      throw std::logic_error("center subgroup: exponent table incomplete");
}

void build_mul_table(const RootDatum& rd, CenterSubgroup& Z) {
  Lattice Q = rd.coroot_lattice();
  std::map<RatVec, int> by_canon;
  for (size_t i = 0; i < Z.elements.size(); ++i)
    by_canon.emplace(Z.elements[i].canon, static_cast<int>(i));
  const int n = static_cast<int>(Z.elements.size());
  Z.mul_table.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      RatVec s = vec_add(Z.elements[a].rep, Z.elements[b].rep);
      auto it = by_canon.find(canon_key(Q, s));
      if (it == by_canon.end())
        throw std::logic_error("center subgroup not closed under the group law");
      Z.mul_table[a][b] = it->second;
    }
}

}  // namespace

int CenterSubgroup::mul(int a, int b) const { return mul_table[a][b]; }

int CenterSubgroup::inv(int a) const {
  for (int b = 0; b < static_cast<int>(elements.size()); ++b)
    if (mul_table[a][b] == 0) return b;
  throw std::logic_error("center subgroup: missing inverse");
}

int CenterSubgroup::index_of(const CenterElement& c) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].canon == c.canon) return static_cast<int>(i);
  return -1;
}

std::string CenterSubgroup::element_name(int a) const {
  if (a == 0) return "e";
  const auto& e = exponents[a];
  std::string s;
  for (size_t t = 0; t < e.size(); ++t) {
    if (e[t] == 0) continue;
    if (!s.empty()) s += "*";
    s += "g" + std::to_string(t + 1);
    if (e[t] > 1) s += "^" + std::to_string(e[t]);
  }
  return s.empty() ? "e" : s;
}

CenterElement element_from_coweight(const RootDatum& rd, const RatVec& v) {
  Lattice P = rd.coweight_lattice();
  if (!P.contains(v))
    throw precondition_error("element_from_coweight: vector not in the coweight lattice");
  Lattice Q = rd.coroot_lattice();
  RatVec key = canon_key(Q, v);
  auto verts = rd.alcove_vertices();
  for (int i : rd.center_vertex_indices()) {
    if (canon_key(Q, verts[i]) == key)
      return CenterElement{verts[i], key, i};
  }
  throw std::logic_error("element_from_coweight: no vertex representative found");
}

CenterSubgroup center_group(const RootDatum& rd) {
  CenterSubgroup Z;
  Lattice Q = rd.coroot_lattice();
  auto verts = rd.alcove_vertices();
  std::vector<CenterElement> elems;
  for (int i : rd.center_vertex_indices())
    elems.push_back(CenterElement{verts[i], canon_key(Q, verts[i]), i});
  // identity (vertex 0) is first by construction of center_vertex_indices
  Z.elements = std::move(elems);
  Z.lambda = rd.coweight_lattice();

  // The vertex classes must exhaust P_check/Q_check.
  Int order = lattice_index(Z.lambda, Q);
  if (order != Int(Z.elements.size()))
    throw std::logic_error("center_group: vertex classes do not exhaust the center");

  build_mul_table(rd, Z);
  attach_structure(rd, Z);
  return Z;
}

CenterSubgroup subgroup_from_generators(const RootDatum& rd,
                                        const std::vector<CenterElement>& gens) {
  CenterSubgroup ZG = center_group(rd);
  std::set<int> members = {0};
  std::vector<int> queue = {0};
  for (const auto& g : gens) {
    int idx = ZG.index_of(g);
    if (idx < 0) throw precondition_error("subgroup generator not in the center");
    if (members.insert(idx).second) queue.push_back(idx);
  }
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (int b : std::set<int>(members))
      for (int c : {ZG.mul(a, b), ZG.inv(a)})
        if (members.insert(c).second) queue.push_back(c);
  }

  CenterSubgroup Z;
  for (int i : members) Z.elements.push_back(ZG.elements[i]);
  std::sort(Z.elements.begin(), Z.elements.end(),
            [](const CenterElement& x, const CenterElement& y) {
              if ((x.vertex_index == 0) != (y.vertex_index == 0))
                return x.vertex_index == 0;
              return x.canon < y.canon;
            });
  std::vector<RatVec> gen_vecs;
  for (int j = 0; j < rd.rank; ++j) gen_vecs.push_back(rd.simple_coroots[j]);
  for (const auto& e : Z.elements) gen_vecs.push_back(e.rep);
  Z.lambda = Lattice::from_generators(rd.ambient, gen_vecs);
  build_mul_table(rd, Z);
  attach_structure(rd, Z);
  return Z;
}

std::vector<CenterSubgroup> all_subgroups(const RootDatum& rd) {
  CenterSubgroup ZG = center_group(rd);
  const int n = static_cast<int>(ZG.elements.size());
  std::set<std::set<int>> seen;
  std::vector<CenterSubgroup> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<CenterElement> gens;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) gens.push_back(ZG.elements[i]);
    CenterSubgroup Z = subgroup_from_generators(rd, gens);
    std::set<int> key;
    for (const auto& e : Z.elements) key.insert(ZG.index_of(e));
    if (seen.insert(key).second) out.push_back(std::move(Z));
  }
  std::sort(out.begin(), out.end(),
            [](const CenterSubgroup& a, const CenterSubgroup& b) {
              return a.size() < b.size();
            });
  return out;
}

std::pair<long long, long long> levels(const RootDatum& rd,
                                       const CenterSubgroup& Z) {
  auto lam = lattice_columns(Z.lambda);
  long long k0 = pairing_denominator(rd, lam, lam);
  long long k1 = pairing_denominator(rd, lam, rd.fund_coweights);
  if (k1 % k0 != 0) throw std::logic_error("levels: k0 does not divide k1");
  return {k0, k1};
}

CenterWeylPair center_weyl_map(const RootDatum& rd, const WeylGroup& W,
                               const CenterSubgroup& ZG,
                               const CenterElement& c) {
  RatVec zstar = rd.principal_point();
  int ci = ZG.index_of(c);
  if (ci < 0) throw precondition_error("center_weyl_map: element not in group");
  const CenterElement& cinv = ZG.elements[ZG.inv(ci)];
  RatVec shifted = vec_sub(zstar, cinv.rep);
  for (const auto& w : W.elements) {
    if (act(w, shifted) == zstar) return CenterWeylPair{w, c.rep};
  }
  throw std::logic_error("center_weyl_map: no Weyl element found");
}

CoxeterFixedGroup coxeter_fixed_subgroup(const RootDatum& rd,
                                         const WeylElement& coxeter,
                                         const CenterSubgroup& Z) {
  // F = (1 - w)^{-1} Lambda_Z.
  std::vector<RatVec> fgens;
  for (int j = 0; j < Z.lambda.rank(); ++j)
    fgens.push_back(solve_one_minus_w(rd, coxeter, Z.lambda.basis_vector(j)));
  Lattice F = Lattice::from_generators(rd.ambient, fgens);
  FiniteQuotient q = lattice_quotient(F, Z.lambda);

  CoxeterFixedGroup out;
  out.order = q.order;
  out.invariant_factors = q.factors;

  // Enumerate F / Lambda_Z.
  std::vector<RatVec> reps;
  {
    std::vector<long long> idx(q.factors.size(), 0);
    while (true) {
      RatVec v(rd.ambient, Rat(0));
      for (size_t t = 0; t < q.factors.size(); ++t)
        v = vec_add(v, vec_scale(Rat(idx[t]), q.generators[t]));
      reps.push_back(v);
      size_t t = 0;
      for (; t < q.factors.size(); ++t) {
        if (Int(++idx[t]) < q.factors[t]) break;
        idx[t] = 0;
      }
      if (t == q.factors.size()) break;
    }
  }
  out.element_reps = reps;

  // Projection to Z: x -> class of (1 - w) x in Lambda_Z / Q_check.
  Lattice Q = rd.coroot_lattice();
  const int n = rd.ambient;
  RatMat one_minus(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      one_minus(i, j) = Rat(i == j ? 1 : 0) - coxeter.matrix(i, j);
  std::set<int> proj_image;
  std::vector<int> kernel;
  for (size_t i = 0; i < reps.size(); ++i) {
    RatVec y = one_minus * reps[i];
    RatVec key = Q.frac_coords(y);
    int zi = -1;
    for (size_t a = 0; a < Z.elements.size(); ++a)
      if (Z.elements[a].canon == key) {
        zi = static_cast<int>(a);
        break;
      }
    if (zi < 0)
      throw std::logic_error("coxeter_fixed_subgroup: projection leaves Z");
    out.projection_to_Z.push_back(zi);
    proj_image.insert(zi);
    if (zi == 0) kernel.push_back(static_cast<int>(i));
  }
  out.projection_surjective = proj_image.size() == Z.elements.size();

  // Inclusion of Z(G)/Z: classes of coweight-lattice vectors mod Lambda_Z.
  CenterSubgroup ZG = center_group(rd);
  std::set<RatVec> incl_keys;
  for (const auto& e : ZG.elements)
    incl_keys.insert(Z.lambda.frac_coords(e.rep));
  out.inclusion_image_size = static_cast<long long>(incl_keys.size());

  // Exactness: kernel of the projection equals the image of the inclusion.
  std::set<RatVec> kernel_keys;
  for (int i : kernel) kernel_keys.insert(Z.lambda.frac_coords(reps[i]));
  out.projection_kernel = kernel;
  out.exact = kernel_keys == incl_keys;
  return out;
}

Int lattice_quotient_order(const Lattice& sup, const Lattice& sub) {
  return lattice_index(sup, sub);
}

PhaseValue CenterCharacter::eval(const CenterSubgroup& Z, int elem_idx) const {
  if (exponents.size() != Z.invariant_factors.size())
    throw precondition_error("character/group shape mismatch");
  Rat e = 0;
  const auto& a = Z.exponents[elem_idx];
  for (size_t t = 0; t < exponents.size(); ++t)
    e += Rat(exponents[t] * a[t], Z.invariant_factors[t]);
  return PhaseValue(e);
}

bool CenterCharacter::is_trivial(const CenterSubgroup& Z) const {
  for (size_t t = 0; t < exponents.size(); ++t)
    if (exponents[t] % Z.invariant_factors[t] != 0) return false;
  return true;
}

std::vector<CenterCharacter> all_characters(const CenterSubgroup& Z) {
  std::vector<CenterCharacter> out;
  std::vector<long long> idx(Z.invariant_factors.size(), 0);
  while (true) {
    out.push_back(CenterCharacter{idx});
    size_t t = idx.size();
    for (size_t u = 0; u < idx.size(); ++u) {
      size_t j = idx.size() - 1 - u;  // lexicographic: last coordinate fastest
      if (++idx[j] < Z.invariant_factors[j]) {
        t = j;
        break;
      }
      idx[j] = 0;
    }
    if (t == idx.size()) break;
  }
  return out;
}

}  // namespace verlinde
