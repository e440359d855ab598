#include "verlinde/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "verlinde/errors.hpp"

namespace verlinde {

std::string LieType::name() const {
  static const char* fam = "ABCDEFG";
  return std::string(1, fam[static_cast<int>(family)]) + std::to_string(rank);
}

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw precondition_error("cannot parse Lie type '" + s + "'");
  char f = s[0];
  Family fam;
  switch (f) {
    case 'A': case 'a': fam = Family::A; break;
    case 'B': case 'b': fam = Family::B; break;
    case 'C': case 'c': fam = Family::C; break;
    case 'D': case 'd': fam = Family::D; break;
    case 'E': case 'e': fam = Family::E; break;
    case 'F': case 'f': fam = Family::F; break;
    case 'G': case 'g': fam = Family::G; break;
    default: throw precondition_error("cannot parse Lie type '" + s + "'");
  }
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw precondition_error("cannot parse Lie type '" + s + "'");
  }
  return LieType{fam, rank};
}

namespace {

void validate(LieType t) {
  const int l = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = l >= 1; break;
    case Family::B: ok = l >= 2; break;
    case Family::C: ok = l >= 2; break;
    case Family::D: ok = l >= 3; break;
    case Family::E: ok = l == 6 || l == 7 || l == 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
  }
  if (!ok)
    throw precondition_error("invalid family/rank combination " +
                             LieType{t.family, t.rank}.name());
}

RatVec unit(int n, int i) {
  RatVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

// Simple roots in the standard orthonormal realizations (Bourbaki tables),
// plus the highest root.
void standard_roots(LieType t, int& ambient, std::vector<RatVec>& alpha,
                    RatVec& theta) {
  const int l = t.rank;
  alpha.clear();
  switch (t.family) {
    case Family::A: {
      ambient = l + 1;
      for (int i = 0; i < l; ++i) {
        RatVec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        alpha.push_back(v);
      }
      theta = RatVec(ambient, Rat(0));
      theta[0] = 1;
      theta[l] = -1;
      break;
    }
    case Family::B: {
      ambient = l;
      for (int i = 0; i + 1 < l; ++i) {
        RatVec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        alpha.push_back(v);
      }
      alpha.push_back(unit(ambient, l - 1));
      theta = RatVec(ambient, Rat(0));
      theta[0] = 1;
      theta[1] = 1;
      break;
    }
    case Family::C: {
      ambient = l;
      for (int i = 0; i + 1 < l; ++i) {
        RatVec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        alpha.push_back(v);
      }
      alpha.push_back(vec_scale(2, unit(ambient, l - 1)));
      theta = vec_scale(2, unit(ambient, 0));
      break;
    }
    case Family::D: {
      ambient = l;
      for (int i = 0; i + 1 < l; ++i) {
        RatVec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        alpha.push_back(v);
      }
      RatVec v(ambient, Rat(0));
      v[l - 2] = 1;
      v[l - 1] = 1;
      alpha.push_back(v);
      theta = RatVec(ambient, Rat(0));
      theta[0] = 1;
      theta[1] = 1;
      break;
    }
    case Family::E: {
      ambient = 8;
      RatVec a1(8, Rat(0));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (int i = 1; i <= 6; ++i) a1[i] = Rat(-1, 2);
      RatVec a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      std::vector<RatVec> all = {a1, a2};
      for (int i = 0; i + 1 < 7; ++i) {
        RatVec v(8, Rat(0));
        v[i] = -1;
        v[i + 1] = 1;
        all.push_back(v);  // alpha_{i+3} = e_{i+2} - e_{i+1}
      }
      for (int i = 0; i < l; ++i) alpha.push_back(all[i]);
      theta = RatVec(8, Rat(0));
      if (l == 8) {
        theta[6] = 1;
        theta[7] = 1;
      } else if (l == 7) {
        theta[7] = 1;
        theta[6] = -1;
      } else {
        for (int i = 0; i < 5; ++i) theta[i] = Rat(1, 2);
        theta[5] = Rat(-1, 2);
        theta[6] = Rat(-1, 2);
        theta[7] = Rat(1, 2);
      }
      break;
    }
    case Family::F: {
      ambient = 4;
      RatVec a1(4, Rat(0)), a2(4, Rat(0)), a3(4, Rat(0)), a4(4, Rat(0));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      a3[3] = 1;
      a4[0] = Rat(1, 2);
      a4[1] = Rat(-1, 2);
      a4[2] = Rat(-1, 2);
      a4[3] = Rat(-1, 2);
      alpha = {a1, a2, a3, a4};
      theta = RatVec(4, Rat(0));
      theta[0] = 1;
      theta[1] = 1;
      break;
    }
    case Family::G: {
      ambient = 3;
      RatVec a1(3, Rat(0)), a2(3, Rat(0));
      a1[0] = 1;
      a1[1] = -1;
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      alpha = {a1, a2};
      theta = RatVec(3, Rat(0));
      theta[0] = -1;
      theta[1] = -1;
      theta[2] = 2;
      break;
    }
  }
}

RatVec coroot_of(const RatVec& root) {
  Rat n = vec_dot(root, root);
  return vec_scale(Rat(2) / n, root);
}

}  // namespace

Rat RootDatum::pairing(const RatVec& w, const RatVec& c) const {
  return vec_dot(w, c);
}

Rat RootDatum::basic(const RatVec& x, const RatVec& y) const {
  return metric_scale * vec_dot(x, y);
}

Rat RootDatum::basic_dual(const RatVec& x, const RatVec& y) const {
  return vec_dot(x, y) / metric_scale;
}

RatVec RootDatum::weight_to_coweight(const RatVec& lam) const {
  return vec_scale(Rat(1) / metric_scale, lam);
}

RatVec RootDatum::coweight_to_weight(const RatVec& xi) const {
  return vec_scale(metric_scale, xi);
}

bool RootDatum::is_simply_laced() const {
  switch (type.family) {
    case Family::A:
    case Family::D:
    case Family::E:
      return true;
    default:
      return false;
  }
}

std::vector<RatVec> RootDatum::alcove_vertices() const {
  std::vector<RatVec> v;
  v.push_back(RatVec(ambient, Rat(0)));
  for (int i = 0; i < rank; ++i)
    v.push_back(vec_scale(Rat(1) / Rat(marks[i]), fund_coweights[i]));
  return v;
}

std::vector<int> RootDatum::center_vertex_indices() const {
  std::vector<int> idx = {0};
  Lattice P = coweight_lattice();
  auto verts = alcove_vertices();
  for (int i = 1; i <= rank; ++i)
    if (P.contains(verts[i])) idx.push_back(i);
  return idx;
}

Lattice RootDatum::coroot_lattice() const {
  return Lattice::from_generators(ambient, simple_coroots);
}
Lattice RootDatum::coweight_lattice() const {
  return Lattice::from_generators(ambient, fund_coweights);
}
Lattice RootDatum::root_lattice() const {
  return Lattice::from_generators(ambient, simple_roots);
}
Lattice RootDatum::weight_lattice() const {
  return Lattice::from_generators(ambient, fund_weights);
}

RatVec RootDatum::weight_from_labels(const std::vector<long long>& labels) const {
  if (static_cast<int>(labels.size()) != rank)
    throw precondition_error("weight_from_labels: wrong label count");
  RatVec v(ambient, Rat(0));
  for (int i = 0; i < rank; ++i)
    v = vec_add(v, vec_scale(Rat(labels[i]), fund_weights[i]));
  return v;
}

std::vector<long long> RootDatum::labels_from_weight(const RatVec& mu) const {
  std::vector<long long> labels(rank);
  for (int i = 0; i < rank; ++i) {
    Rat v = pairing(mu, simple_coroots[i]);
    if (!is_integer(v))
      throw precondition_error("labels_from_weight: not an integral weight");
    labels[i] = to_ll(rat_num(v));
  }
  return labels;
}

RatVec RootDatum::principal_point() const {
  return vec_scale(Rat(1) / Rat(coxeter_number), rho_check);
}

Rat pairing_basic(const RootDatum& rd, const RatVec& x, const RatVec& y) {
  if (x.size() != y.size() || static_cast<int>(x.size()) != rd.ambient)
    throw precondition_error("pairing_basic: dimension mismatch");
  RatVec gy = rd.gram * y;
  return vec_dot(x, gy);
}

RootDatum build_root_datum(LieType type) {
  validate(type);
  RootDatum rd;
  rd.type = type;
  rd.rank = type.rank;

  standard_roots(type, rd.ambient, rd.simple_roots, rd.theta);
  const int l = rd.rank, n = rd.ambient;

  for (const auto& a : rd.simple_roots)
    rd.simple_coroots.push_back(coroot_of(a));
  rd.theta_check = coroot_of(rd.theta);

  // Fundamental (co)weights: dual bases inside the root span.
  // varpi_j_check = sum_m c_mj alpha_m_check with A c = id, A the Cartan
  // pairing <alpha_i, alpha_m_check>.
  RatMat cart(l, l), cart_t(l, l);
  for (int i = 0; i < l; ++i)
    for (int m = 0; m < l; ++m) {
      cart(i, m) = vec_dot(rd.simple_roots[i], rd.simple_coroots[m]);
      cart_t(i, m) = vec_dot(rd.simple_roots[m], rd.simple_coroots[i]);
    }
  RatMat cart_inv = inverse(cart), cart_t_inv = inverse(cart_t);
  for (int j = 0; j < l; ++j) {
    RatVec wj(n, Rat(0)), wjc(n, Rat(0));
    for (int m = 0; m < l; ++m) {
      wjc = vec_add(wjc, vec_scale(cart_inv(m, j), rd.simple_coroots[m]));
      wj = vec_add(wj, vec_scale(cart_t_inv(m, j), rd.simple_roots[m]));
    }
    rd.fund_coweights.push_back(wjc);
    rd.fund_weights.push_back(wj);
  }

  rd.rho = RatVec(n, Rat(0));
  rd.rho_check = RatVec(n, Rat(0));
  for (int i = 0; i < l; ++i) {
    rd.rho = vec_add(rd.rho, rd.fund_weights[i]);
    rd.rho_check = vec_add(rd.rho_check, rd.fund_coweights[i]);
  }

  // marks: theta in the simple-root basis.
  {
    RatMat A(n, l);
    for (int j = 0; j < l; ++j)
      for (int i = 0; i < n; ++i) A(i, j) = rd.simple_roots[j][i];
    auto k = solve_exact(A, rd.theta);
    if (!k) throw std::logic_error("marks: theta not in root span");
    for (int i = 0; i < l; ++i) {
      assert(is_integer((*k)[i]) && (*k)[i] > 0);
      rd.marks.push_back(to_ll(rat_num((*k)[i])));
    }
  }

  {
    Rat h = 1 + vec_dot(rd.theta, rd.rho_check);
    Rat hv = 1 + vec_dot(rd.rho, rd.theta_check);
    assert(is_integer(h) && is_integer(hv));
    rd.coxeter_number = to_ll(rat_num(h));
    rd.dual_coxeter_number = to_ll(rat_num(hv));
  }

  for (int i = 0; i < l; ++i) {
    Rat cm = vec_dot(rd.fund_weights[i], rd.theta_check);
    assert(is_integer(cm));
    rd.comarks.push_back(to_ll(rat_num(cm)));
  }

  // Basic normalization: one global rescale of the metric, leaving the
  // tabulated coordinates untouched.
  rd.metric_scale = Rat(2) / vec_dot(rd.theta_check, rd.theta_check);
  rd.gram = RatMat(n, n);
  for (int i = 0; i < n; ++i) rd.gram(i, i) = rd.metric_scale;

  // Root set: closure of the simple roots under simple reflections.
  {
    std::set<std::vector<Rat>> seen;
    std::vector<RatVec> queue = rd.simple_roots;
    for (const auto& a : rd.simple_roots) seen.insert(a);
    while (!queue.empty()) {
      RatVec b = queue.back();
      queue.pop_back();
      for (int i = 0; i < l; ++i) {
        Rat c = vec_dot(b, rd.simple_coroots[i]);
        RatVec im_root = vec_sub(b, vec_scale(c, rd.simple_roots[i]));
        if (seen.insert(im_root).second) queue.push_back(im_root);
        RatVec neg = vec_scale(-1, b);
        if (seen.insert(neg).second) queue.push_back(neg);
      }
    }
    std::vector<std::pair<Rat, RatVec>> pos;
    for (const auto& r : seen) {
      Rat ht = vec_dot(r, rd.rho_check);
      if (ht > 0) pos.emplace_back(ht, r);
    }
    std::sort(pos.begin(), pos.end());
    for (auto& p : pos) rd.positive_roots.push_back(p.second);
  }
  assert(rd.num_positive_roots() == rd.rank * rd.coxeter_number / 2);

  return rd;
}

}  // namespace verlinde
