#include "verlinde/moduli.hpp"

#include <cmath>

#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

long long round_guarded(double x, double tol, const char* what) {
  double r = std::nearbyint(x);
  if (std::abs(x - r) > tol)
    throw residual_error(std::string(what) + ": residual " +
                         std::to_string(std::abs(x - r)) + " exceeds tolerance");
  return static_cast<long long>(r);
}

Complex int_pow(Complex z, int e) {
  if (e < 0) return 1.0 / int_pow(z, -e);
  Complex r = 1;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

Int int_pow_exact(long long base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

VerlindeContext VerlindeContext::build(LieType type, long long k,
                                       long long weyl_budget) {
  VerlindeContext ctx{build_root_datum(type), {}, {}, {}, {}};
  ctx.W = enumerate_weyl(ctx.rd, weyl_budget);
  ctx.table = level_weights(ctx.rd, k);
  ctx.S = s_matrix(ctx.rd, ctx.W, ctx.table);
  ctx.dual = dual_index_map(ctx.rd, ctx.table);
  return ctx;
}

long long verlinde_sc(const VerlindeContext& ctx, int genus, int mu_idx,
                      double tol) {
  if (genus < 0) throw precondition_error("verlinde_sc: negative genus");
  if (mu_idx < 0 || mu_idx >= ctx.S.n)
    throw precondition_error("verlinde_sc: boundary weight not at this level");
  const int n = ctx.S.n;
  const int star_mu = ctx.dual[mu_idx];
  Complex sum = 0;
  for (int lam = 0; lam < n; ++lam)
    sum += int_pow(ctx.S(lam, 0), 1 - 2 * genus) * ctx.S(lam, star_mu);
  if (std::abs(sum.imag()) > tol)
    throw residual_error("verlinde_sc: imaginary residual");
  long long v = round_guarded(sum.real(), tol, "verlinde_sc");
  if (v < 0) throw residual_error("verlinde_sc: negative value");
  return v;
}

QuantizationResult verlinde_nsc(const VerlindeContext& ctx,
                                const CenterActionOnWeights& action,
                                const ModuliSpec& spec, double tol) {
  if (spec.Z == nullptr)
    throw precondition_error("verlinde_nsc: missing center subgroup");
  const CenterSubgroup& Z = *spec.Z;
  const int mu_idx = ctx.table.index_of(spec.mu);
  const int g = spec.genus;
  if (g < 0) throw precondition_error("verlinde_nsc: negative genus");
  if (static_cast<int>(spec.phi.size()) != 2 * g)
    throw precondition_error("verlinde_nsc: need exactly 2*genus characters");
  auto [k0, k1] = levels(ctx.rd, Z);
  if (spec.k != ctx.table.k)
    throw precondition_error("verlinde_nsc: context built at a different level");
  if (spec.k % k0 != 0)
    throw precondition_error(
        "verlinde_nsc: level is not a multiple of the basic level");
  if (mu_idx < 0 || mu_idx >= ctx.S.n)
    throw precondition_error("verlinde_nsc: boundary weight not at this level");

  const int n = ctx.S.n;
  const int nz = static_cast<int>(Z.size());
  const int star_mu = ctx.dual[mu_idx];

  // Restricted weight sums, one per tuple; the per-lambda factor is shared.
  std::vector<Complex> base(n);
  for (int lam = 0; lam < n; ++lam)
    base[lam] = int_pow(ctx.S(lam, 0), 1 - 2 * g) * ctx.S(lam, star_mu);

  // Fixed sets per element once; a tuple's common fixed set is the meet.
  std::vector<std::vector<char>> fixed(nz, std::vector<char>(n, 0));
  for (int c = 0; c < nz; ++c)
    for (int i = 0; i < n; ++i) fixed[c][i] = action.apply(c, i) == i;

  // Phase table over contributing pairs, filled lazily.
  std::vector<std::vector<std::optional<PhaseValue>>> delta_tab(
      nz, std::vector<std::optional<PhaseValue>>(nz));
  auto delta_at = [&](int a, int b) -> PhaseValue {
    if (!delta_tab[a][b])
      delta_tab[a][b] = delta(ctx.rd, Z, spec.k, Z.elements[a], Z.elements[b]);
    return *delta_tab[a][b];
  };

  Complex total = 0;
  Complex leading = 0;
  std::vector<int> tuple(2 * g, 0);
  while (true) {
    std::vector<char> mask(n, 1);
    bool nonempty_possible = true;
    for (int t = 0; t < 2 * g && nonempty_possible; ++t) {
      bool any = false;
      for (int i = 0; i < n; ++i) {
        mask[i] = mask[i] && fixed[tuple[t]][i];
        any = any || mask[i];
      }
      nonempty_possible = any;
    }
    if (nonempty_possible) {
      Complex weight_sum = 0;
      for (int i = 0; i < n; ++i)
        if (mask[i]) weight_sum += base[i];
      Complex factor = 1;
      for (int t = 0; t < 2 * g; ++t)
        factor *= spec.phi[t].eval(Z, tuple[t]).value();
      for (int j = 0; j < g; ++j)
        factor *= delta_at(tuple[2 * j], tuple[2 * j + 1]).value();
      total += factor * weight_sum;
      bool is_identity_tuple = true;
      for (int t = 0; t < 2 * g; ++t) is_identity_tuple &= tuple[t] == 0;
      if (is_identity_tuple) leading = factor * weight_sum;
    }
    int t = 0;
    for (; t < 2 * g; ++t) {
      if (++tuple[t] < nz) break;
      tuple[t] = 0;
    }
    if (t == 2 * g) break;
  }

  const double denom = std::pow(static_cast<double>(nz), 2 * g);
  Complex q = total / denom;
  if (std::abs(q.imag()) > tol)
    throw residual_error("verlinde_nsc: imaginary residual");
  QuantizationResult res;
  res.value = round_guarded(q.real(), tol, "verlinde_nsc");
  if (res.value < 0) throw residual_error("verlinde_nsc: negative value");
  res.residual = std::abs(q.real() - static_cast<double>(res.value)) +
                 std::abs(q.imag());
  res.leading = (leading / denom).real();
  res.correction = static_cast<double>(res.value) - res.leading;
  return res;
}

NscSweep verlinde_nsc_sweep(const VerlindeContext& ctx, const CenterSubgroup& Z,
                            const CenterActionOnWeights& action, int genus,
                            double tol) {
  const int g = genus;
  if (g < 0) throw precondition_error("verlinde_nsc_sweep: negative genus");
  auto [k0, k1] = levels(ctx.rd, Z);
  if (ctx.table.k % k0 != 0)
    throw precondition_error(
        "verlinde_nsc_sweep: level is not a multiple of the basic level");
  const int n = ctx.S.n;
  const int nz = static_cast<int>(Z.size());

  std::vector<std::vector<char>> fixed(nz, std::vector<char>(n, 0));
  for (int c = 0; c < nz; ++c)
    for (int i = 0; i < n; ++i) fixed[c][i] = action.apply(c, i) == i;

  std::vector<std::vector<std::optional<PhaseValue>>> delta_tab(
      nz, std::vector<std::optional<PhaseValue>>(nz));
  auto delta_at = [&](int a, int b) {
    if (!delta_tab[a][b])
      delta_tab[a][b] =
          delta(ctx.rd, Z, ctx.table.k, Z.elements[a], Z.elements[b]);
    return delta_tab[a][b]->value();
  };

  // Contributing tuples, their phase factors, and per-mask weight sums.
  struct Tuple {
    std::vector<int> elems;
    Complex delta_factor;
    int mask_id;
  };
  std::vector<Tuple> tuples;
  std::vector<std::vector<char>> masks;
  std::vector<int> odometer(2 * g, 0);
  while (true) {
    std::vector<char> mask(n, 1);
    bool any = true;
    for (int t = 0; t < 2 * g && any; ++t) {
      any = false;
      for (int i = 0; i < n; ++i) {
        mask[i] = mask[i] && fixed[odometer[t]][i];
        any = any || mask[i];
      }
    }
    if (any) {
      Complex df = 1;
      for (int j = 0; j < g; ++j)
        df *= delta_at(odometer[2 * j], odometer[2 * j + 1]);
      int mid = -1;
      for (size_t m = 0; m < masks.size(); ++m)
        if (masks[m] == mask) {
          mid = static_cast<int>(m);
          break;
        }
      if (mid < 0) {
        mid = static_cast<int>(masks.size());
        masks.push_back(mask);
      }
      tuples.push_back(Tuple{odometer, df, mid});
    }
    int t = 0;
    for (; t < 2 * g; ++t) {
      if (++odometer[t] < nz) break;
      odometer[t] = 0;
    }
    if (t == 2 * g) break;
  }

  // Restricted sums per distinct mask: V[m][mu].
  std::vector<Complex> base(n);
  std::vector<std::vector<Complex>> V(masks.size(), std::vector<Complex>(n));
  for (int lam = 0; lam < n; ++lam)
    base[lam] = int_pow(ctx.S(lam, 0), 1 - 2 * g);
  for (size_t m = 0; m < masks.size(); ++m)
    for (int mu = 0; mu < n; ++mu) {
      Complex s = 0;
      for (int lam = 0; lam < n; ++lam)
        if (masks[m][lam]) s += base[lam] * ctx.S(lam, ctx.dual[mu]);
      V[m][mu] = s;
    }

  // All character 2g-tuples, lexicographic with the leading slot slowest.
  NscSweep sweep;
  auto chars = all_characters(Z);
  const size_t nchar = chars.size();
  std::vector<size_t> cidx(2 * g, 0);
  while (true) {
    std::vector<CenterCharacter> phi;
    for (int t = 0; t < 2 * g; ++t) phi.push_back(chars[cidx[t]]);
    sweep.phis.push_back(phi);
    size_t t = 0;
    for (; t < static_cast<size_t>(2 * g); ++t) {
      if (++cidx[t] < nchar) break;
      cidx[t] = 0;
    }
    if (t == static_cast<size_t>(2 * g)) break;
  }

  // Character values on the group, once.
  std::vector<std::vector<Complex>> chi_val(nchar, std::vector<Complex>(nz));
  for (size_t c = 0; c < nchar; ++c)
    for (int a = 0; a < nz; ++a) chi_val[c][a] = chars[c].eval(Z, a).value();

  const double denom = std::pow(static_cast<double>(nz), 2 * g);
  sweep.values.assign(sweep.phis.size(), std::vector<long long>(n, 0));
  std::vector<Complex> acc(n);
  for (size_t p = 0; p < sweep.phis.size(); ++p) {
    std::fill(acc.begin(), acc.end(), Complex(0));
    // recover the character indices of tuple p
    std::vector<size_t> ci(2 * g);
    size_t rem = p;
    for (int t = 0; t < 2 * g; ++t) {
      ci[t] = rem % nchar;
      rem /= nchar;
    }
    for (const auto& tup : tuples) {
      Complex f = tup.delta_factor;
      for (int t = 0; t < 2 * g; ++t) f *= chi_val[ci[t]][tup.elems[t]];
      const auto& row = V[tup.mask_id];
      for (int mu = 0; mu < n; ++mu) acc[mu] += f * row[mu];
    }
    for (int mu = 0; mu < n; ++mu) {
      Complex q = acc[mu] / denom;
      long long v = round_guarded(q.real(), tol, "verlinde_nsc_sweep");
      if (std::abs(q.imag()) > tol)
        throw residual_error("verlinde_nsc_sweep: imaginary residual");
      if (v < 0) throw residual_error("verlinde_nsc_sweep: negative value");
      sweep.max_residual =
          std::max(sweep.max_residual,
                   std::abs(q.real() - static_cast<double>(v)) + std::abs(q.imag()));
      sweep.values[p][mu] = v;
    }
  }
  return sweep;
}

long long pu_n_prime(const VerlindeContext& ctx, long long n, int genus,
                     bool twisted, int mu_idx, double tol) {
  const long long l = ctx.rd.rank;
  if (ctx.rd.type.family != Family::A || l != n - 1)
    throw precondition_error("pu_n_prime: context is not the A_{n-1} type");
  if (n < 3 || n % 2 == 0)
    throw precondition_error("pu_n_prime: n must be an odd prime");
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) throw precondition_error("pu_n_prime: n must be an odd prime");
  if (ctx.table.k % n != 0)
    throw precondition_error("pu_n_prime: level must be a multiple of n");
  if (genus < 1) throw precondition_error("pu_n_prime: genus must be >= 1");

  long long N = verlinde_sc(ctx, genus, mu_idx, tol);
  int eps = epsilon(ctx.rd, ctx.W, ctx.table.weight_vectors[mu_idx], tol);
  Int corr = int_pow_exact(ctx.table.k / n + 1,
                           static_cast<int>((n - 1) * (genus - 1)));
  Int order = int_pow_exact(n, 2 * genus);
  Int numer = twisted ? Int(N) - corr * eps : Int(N) + (order - 1) * corr * eps;
  if (numer % order != 0)
    throw residual_error("pu_n_prime: numerator not divisible by #Z^{2g}");
  return to_ll(numer / order);
}

CongruenceReport congruence_check(const VerlindeContext& ctx, long long n,
                                  int genus, double tol) {
  if (genus < 1) throw precondition_error("congruence_check: genus must be >= 1");
  if (ctx.table.k % n != 0)
    throw precondition_error("congruence_check: level must be a multiple of n");
  CongruenceReport rep;
  Int modulus = int_pow_exact(n, 2 * genus);
  rep.modulus = to_ll(modulus);
  Int corr = int_pow_exact(ctx.table.k / n + 1,
                           static_cast<int>((n - 1) * (genus - 1)));
  for (int i = 0; i < ctx.S.n; ++i) {
    CongruenceReport::Entry e;
    e.labels = ctx.table.weights[i].labels;
    e.verlinde = verlinde_sc(ctx, genus, i, tol);
    int eps = epsilon(ctx.rd, ctx.W, ctx.table.weight_vectors[i], tol);
    Int t = (corr * eps) % modulus;
    if (t < 0) t += modulus;
    e.target = to_ll(t);
    e.ok = (Int(e.verlinde) % modulus) == t;
    rep.pass = rep.pass && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

StabilizerReport trivial_stabilizer_check(const VerlindeContext& ctx,
                                          long long m, int genus, double tol) {
  StabilizerReport rep;
  rep.genus = genus;
  const long long l = ctx.rd.rank;
  if (ctx.rd.type.family != Family::A)
    throw precondition_error("trivial_stabilizer_check: A-family only");
  bool m_prime = m >= 2;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) m_prime = false;
  if (!m_prime || ((l + 1) % (m * m) != 0)) {
    rep.applicable = false;
    return rep;
  }
  if (ctx.table.k % m == 0) {
    rep.applicable = false;  // hypothesis gate: k must not be a multiple of m
    return rep;
  }

  // Z = Z_m generated by the n-th power of the standard generator.
  long long pw = (l + 1) / m;
  CenterElement gen = element_from_coweight(
      ctx.rd, vec_scale(Rat(pw), ctx.rd.fund_coweights[0]));
  CenterSubgroup Z = subgroup_from_generators(ctx.rd, {gen});
  auto action = CenterActionOnWeights::build(ctx.rd, ctx.W, Z, ctx.table);
  for (int c = 0; c < Z.size(); ++c) {
    if (c == Z.identity()) continue;
    long long cnt = 0;
    for (int i = 0; i < ctx.table.size(); ++i)
      if (action.apply(c, i) == i) ++cnt;
    rep.fixed_counts.emplace_back(Z.element_name(c), cnt);
    if (cnt != 0) rep.free_action = false;
  }

  // With a free action only the identity tuple survives, so the simply
  // connected numbers must all be divisible by #Z^{2g}.
  Int order = int_pow_exact(Z.size(), 2 * genus);
  for (int i = 0; i < ctx.S.n && rep.free_action; ++i) {
    long long N = verlinde_sc(ctx, genus, i, tol);
    if (Int(N) % order != 0) rep.divisibility_ok = false;
  }
  return rep;
}

}  // namespace verlinde
