#include "verlinde/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex unit_phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

Complex i_power(long long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::vector<double> to_doubles(const RatVec& v) {
  std::vector<double> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = to_double(v[i]);
  return r;
}

double ddot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long round_guarded(double x, double tol, const char* what) {
  double r = std::nearbyint(x);
  if (std::abs(x - r) > tol)
    throw residual_error(std::string(what) + ": residual " +
                         std::to_string(std::abs(x - r)) + " exceeds tolerance");
  return static_cast<long long>(r);
}

}  // namespace

int LevelWeightTable::index_of(const LevelWeight& w) const {
  auto it = index_.find(w.labels);
  return it == index_.end() ? -1 : it->second;
}

LevelWeightTable level_weights(const RootDatum& rd, long long k) {
  if (k < 0) throw precondition_error("level_weights: negative level");
  LevelWeightTable t;
  t.k = k;
  // Bounded search over Dynkin labels: level(mu) = sum n_i comark_i <= k.
  std::vector<long long> labels(rd.rank, 0);
  std::vector<LevelWeight> out;
  std::function<void(int, long long)> rec = [&](int pos, long long budget) {
    if (pos == rd.rank) {
      out.push_back(LevelWeight{labels});
      return;
    }
    long long cm = rd.comarks[pos];
    for (long long v = 0; v * cm <= budget; ++v) {
      labels[pos] = v;
      rec(pos + 1, budget - v * cm);
    }
    labels[pos] = 0;
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  t.weights = std::move(out);

  const Rat denom = Rat(k + rd.dual_coxeter_number);
  for (size_t i = 0; i < t.weights.size(); ++i) {
    RatVec mu = rd.weight_from_labels(t.weights[i].labels);
    t.weight_vectors.push_back(mu);
    RatVec zeta = vec_scale(Rat(1) / denom,
                            rd.weight_to_coweight(vec_add(mu, rd.rho)));
    // zeta must lie in the open alcove.
    for (int j = 0; j < rd.rank; ++j)
      if (vec_dot(rd.simple_roots[j], zeta) <= 0)
        throw std::logic_error("level_weights: alcove point on a chamber wall");
    if (vec_dot(rd.theta, zeta) >= 1)
      throw std::logic_error("level_weights: alcove point outside the alcove");
    t.zetas.push_back(zeta);
    t.index_.emplace(t.weights[i].labels, static_cast<int>(i));
  }
  return t;
}

Complex weyl_denominator(const RootDatum& rd, const WeylGroup& W,
                         const RatVec& zeta) {
  std::vector<double> z = to_doubles(zeta);
  Complex s = 0;
  for (const auto& w : W.elements) {
    RatVec wr = act(w, rd.rho);
    s += static_cast<double>(w.sign) * unit_phase(ddot(to_doubles(wr), z));
  }
  return s;
}

Complex weyl_denominator_product(const RootDatum& rd, const RatVec& zeta) {
  Complex p = 1;
  for (const auto& a : rd.positive_roots) {
    // sin(pi x) has period 2: reduce the exact pairing first.
    Rat x = vec_dot(a, zeta);
    double m = to_double(Rat(2) * frac_mod1(x / 2));
    p *= Complex(0, 2.0 * std::sin(m * kTwoPi / 2.0));
  }
  return p;
}

bool is_regular(const RootDatum& rd, const RatVec& zeta) {
  for (const auto& a : rd.positive_roots)
    if (is_integer(vec_dot(a, zeta))) return false;
  return true;
}

Complex character(const RootDatum& rd, const WeylGroup& W, const RatVec& mu,
                  const RatVec& zeta) {
  if (!is_regular(rd, zeta))
    throw precondition_error("character: singular evaluation point");
  std::vector<double> z = to_doubles(zeta);
  RatVec shifted = vec_add(mu, rd.rho);
  Complex num = 0;
  for (const auto& w : W.elements) {
    RatVec ws = act(w, shifted);
    num += static_cast<double>(w.sign) * unit_phase(ddot(to_doubles(ws), z));
  }
  return num / weyl_denominator(rd, W, zeta);
}

SMatrix s_matrix(const RootDatum& rd, const WeylGroup& W,
                 const LevelWeightTable& table) {
  SMatrix S;
  S.k = table.k;
  S.n = static_cast<int>(table.size());
  S.entries.assign(static_cast<size_t>(S.n) * S.n, Complex(0));

  // #T_{k+h_check} = [(1/(k+h_check)) B^{-1}(P) : Q_check].
  const Rat scale = Rat(1) / Rat(table.k + rd.dual_coxeter_number);
  std::vector<RatVec> tg;
  for (const auto& w : rd.fund_weights)
    tg.push_back(vec_scale(scale, rd.weight_to_coweight(w)));
  Lattice Tk = Lattice::from_generators(rd.ambient, tg);
  S.torus_order = lattice_quotient_order(Tk, rd.coroot_lattice());
  const double inv_sqrt_t = 1.0 / std::sqrt(to_double(Rat(S.torus_order)));
  const Complex pref = i_power(rd.num_positive_roots());

  // Precompute w-orbit data in doubles: signs and transposed matrices.
  const int n_amb = rd.ambient;
  std::vector<std::vector<double>> wmats;
  std::vector<double> signs;
  for (const auto& w : W.elements) {
    std::vector<double> m(static_cast<size_t>(n_amb) * n_amb);
    for (int i = 0; i < n_amb; ++i)
      for (int j = 0; j < n_amb; ++j) m[static_cast<size_t>(i) * n_amb + j] =
          to_double(w.matrix(i, j));
    wmats.push_back(std::move(m));
    signs.push_back(static_cast<double>(w.sign));
  }
  std::vector<std::vector<double>> shifted;  // mu + rho as doubles
  for (int m = 0; m < S.n; ++m)
    shifted.push_back(to_doubles(vec_add(table.weight_vectors[m], rd.rho)));

  for (int lam = 0; lam < S.n; ++lam) {
    std::vector<double> z = to_doubles(table.zetas[lam]);
    // u_w = w^T zeta, so <w(mu+rho), zeta> = <mu+rho, u_w>.
    std::vector<std::vector<double>> u(W.elements.size(),
                                       std::vector<double>(n_amb));
    for (size_t wi = 0; wi < W.elements.size(); ++wi) {
      const auto& m = wmats[wi];
      for (int j = 0; j < n_amb; ++j) {
        double s = 0;
        for (int i = 0; i < n_amb; ++i) s += m[static_cast<size_t>(i) * n_amb + j] * z[i];
        u[wi][j] = s;
      }
    }
    // The product form over positive roots avoids the cancellation error of
    // the alternating sum; the two routes are cross-checked in the tests.
    Complex jval = weyl_denominator_product(rd, table.zetas[lam]);
    const Complex row_factor = pref * jval * inv_sqrt_t;
    for (int m = 0; m < S.n; ++m) {
      Complex num = 0;
      for (size_t wi = 0; wi < W.elements.size(); ++wi)
        num += signs[wi] * unit_phase(ddot(shifted[m], u[wi]));
      Complex chi = num / jval;
      S.entries[static_cast<size_t>(m) * S.n + lam] = row_factor * std::conj(chi);
    }
  }

  // Deviation metadata.
  double udef = 0, sdef = 0;
  for (int i = 0; i < S.n; ++i)
    for (int j = 0; j < S.n; ++j) {
      Complex dot = 0;
      for (int l = 0; l < S.n; ++l) dot += S(i, l) * std::conj(S(j, l));
      udef = std::max(udef, std::abs(dot - Complex(i == j ? 1.0 : 0.0)));
      sdef = std::max(sdef, std::abs(S(i, j) - S(j, i)));
    }
  S.max_unitarity_defect = udef;
  S.max_symmetry_defect = sdef;
  return S;
}

SMatrix SMatrix::sign_normalized() const {
  SMatrix out = *this;
  if (n > 0 && out(0, 0).real() < 0)
    for (auto& e : out.entries) e = -e;
  return out;
}

std::vector<int> dual_index_map(const RootDatum& rd,
                                const LevelWeightTable& table) {
  std::vector<int> out(table.size());
  for (int i = 0; i < table.size(); ++i) {
    RatVec d = dual_weight(rd, table.weight_vectors[i]);
    int j = table.index_of(LevelWeight{rd.labels_from_weight(d)});
    if (j < 0) throw std::logic_error("dual weight left the level-k table");
    out[i] = j;
  }
  return out;
}

FusionVector fusion_product(const SMatrix& S, const std::vector<int>& dual_index,
                            const FusionVector& x, const FusionVector& y,
                            double tol) {
  const int n = S.n;
  // Evaluations x(t_lam) = sum_mu x_mu S_{mu,*lam} / S_{0,*lam}.
  auto evaluate = [&](const FusionVector& v) {
    std::vector<Complex> e(n);
    for (int lam = 0; lam < n; ++lam) {
      int dl = dual_index[lam];
      Complex s = 0;
      for (int mu = 0; mu < n; ++mu)
        if (v.coefficients[mu] != 0)
          s += static_cast<double>(v.coefficients[mu]) * S(mu, dl);
      e[lam] = s / S(0, dl);
    }
    return e;
  };
  std::vector<Complex> ex = evaluate(x), ey = evaluate(y);
  // Recover coefficients by unitarity: with P(lam) = x(t_lam) y(t_lam),
  // sum_nu c_nu S_{nu,*lam} = P(lam) S_{0,*lam}, so
  // c_nu = sum_lam P(lam) S_{0,*lam} conj(S_{nu,*lam}).
  FusionVector out;
  out.coefficients.assign(n, 0);
  for (int nu = 0; nu < n; ++nu) {
    Complex c = 0;
    for (int lam = 0; lam < n; ++lam) {
      int dl = dual_index[lam];
      c += ex[lam] * ey[lam] * S(0, dl) * std::conj(S(nu, dl));
    }
    if (std::abs(c.imag()) > tol)
      throw residual_error("fusion_product: imaginary residual");
    out.coefficients[nu] = round_guarded(c.real(), tol, "fusion_product");
  }
  return out;
}

CenterActionOnWeights CenterActionOnWeights::build(const RootDatum& rd,
                                                   const WeylGroup& W,
                                                   const CenterSubgroup& Z,
                                                   const LevelWeightTable& table) {
  CenterActionOnWeights act;
  CenterSubgroup ZG = center_group(rd);
  for (const auto& c : Z.elements) {
    auto cw = center_weyl_map(rd, W, ZG, c);
    int ci = ZG.index_of(c);
    const CenterElement& cinv = ZG.elements[ZG.inv(ci)];
    std::vector<int> perm(table.size());
    for (int i = 0; i < table.size(); ++i) {
      LevelWeight image = center_act_on_Pk(rd, cw.w, cinv.rep, table.k,
                                             table.weights[i]);
      int j = table.index_of(image);
      if (j < 0) throw std::logic_error("center action left the weight table");
      perm[i] = j;
    }
    act.perms_.push_back(std::move(perm));
  }
  return act;
}

std::vector<int> CenterActionOnWeights::common_fixed(
    const std::vector<int>& elems) const {
  std::vector<int> out;
  const int n = perms_.empty() ? 0 : static_cast<int>(perms_[0].size());
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int e : elems)
      if (perms_[e][i] != i) {
        ok = false;
        break;
      }
    if (ok) out.push_back(i);
  }
  return out;
}

bool CenterActionOnWeights::has_fixed_point(int elem_idx) const {
  for (size_t i = 0; i < perms_[elem_idx].size(); ++i)
    if (perms_[elem_idx][i] == static_cast<int>(i)) return true;
  return false;
}

LevelWeight center_act_on_Pk(const RootDatum& rd, const WeylElement& w_c,
                             const RatVec& zeta_c_inv, long long k,
                             const LevelWeight& lam) {
  RatVec mu = rd.weight_from_labels(lam.labels);
  RatVec shiftedv =
      vec_sub(mu, vec_scale(Rat(k), rd.coweight_to_weight(zeta_c_inv)));
  RatVec image = act(w_c, shiftedv);
  return LevelWeight{rd.labels_from_weight(image)};
}

int epsilon(const RootDatum& rd, const WeylGroup& W, const RatVec& mu,
            double tol) {
  if (!rd.is_simply_laced())
    throw precondition_error("epsilon: requires a simply laced type");
  Complex num = character(rd, W, mu, rd.principal_point());
  if (std::abs(num.imag()) > tol)
    throw residual_error("epsilon: imaginary residual");
  long long numeric = round_guarded(num.real(), tol, "epsilon");

  // Combinatorial route: sign(w) when w(mu+rho) - rho lands in h Q.
  Lattice Q = rd.root_lattice();
  const Rat h = Rat(rd.coxeter_number);
  RatVec shifted = vec_add(mu, rd.rho);
  int comb = 0;
  for (const auto& w : W.elements) {
    RatVec v = vec_sub(act(w, shifted), rd.rho);
    if (Q.contains(vec_scale(Rat(1) / h, v))) {
      comb = w.sign;
      break;
    }
  }
  if (comb != numeric)
    throw residual_error("epsilon: numeric and lattice criteria disagree");
  return static_cast<int>(numeric);
}

FusionVector tau_natural(const RootDatum& rd, const WeylGroup& W,
                         const LevelWeightTable& table, double tol) {
  FusionVector v;
  v.coefficients.assign(table.size(), 0);
  for (int i = 0; i < table.size(); ++i)
    v.coefficients[i] = epsilon(rd, W, table.weight_vectors[i], tol);
  return v;
}

}  // namespace verlinde
