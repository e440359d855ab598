#include "verlinde/weyl.hpp"

#include <map>
#include <string>

#include "verlinde/errors.hpp"

namespace verlinde {

bool WeylElement::is_identity() const {
  for (int i = 0; i < matrix.rows; ++i)
    for (int j = 0; j < matrix.cols; ++j)
      if (matrix(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

WeylElement identity_element(const RootDatum& rd) {
  return WeylElement{RatMat::identity(rd.ambient), {}, 1};
}

WeylElement simple_reflection(const RootDatum& rd, int i) {
  if (i < 1 || i > rd.rank)
    throw precondition_error("simple_reflection: index out of range");
  const RatVec& a = rd.simple_roots[i - 1];
  const RatVec& ac = rd.simple_coroots[i - 1];
  // x -> x - <a, x> a_check; symmetric since a_check = 2a/(a.a).
  RatMat m = RatMat::identity(rd.ambient);
  for (int r = 0; r < rd.ambient; ++r)
    for (int c = 0; c < rd.ambient; ++c) m(r, c) -= ac[r] * a[c];
  return WeylElement{std::move(m), {i}, -1};
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  r.matrix = a.matrix * b.matrix;
  r.word = a.word;
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  r.sign = a.sign * b.sign;
  return r;
}

WeylElement inverse_element(const WeylElement& w) {
  return WeylElement{w.matrix.transposed(), std::vector<int>(w.word.rbegin(), w.word.rend()),
                     w.sign};
}

RatVec act(const WeylElement& w, const RatVec& v) { return w.matrix * v; }

WeylElement coxeter_element(const RootDatum& rd) {
  WeylElement w = identity_element(rd);
  for (int i = 1; i <= rd.rank; ++i) w = compose(w, simple_reflection(rd, i));
  return w;
}

long long element_order(const WeylElement& w) {
  RatMat id = RatMat::identity(w.matrix.rows);
  RatMat p = w.matrix;
  long long m = 1;
  while (!(p == id)) {
    p = p * w.matrix;
    ++m;
    if (m > 1000) throw std::logic_error("element_order: runaway power");
  }
  return m;
}

long long weyl_order_formula(const RootDatum& rd) {
  const long long l = rd.rank;
  auto fact = [](long long n) {
    long long f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (rd.type.family) {
    case Family::A: return fact(l + 1);
    case Family::B:
    case Family::C: return (1LL << l) * fact(l);
    case Family::D: return (1LL << (l - 1)) * fact(l);
    case Family::E:
      if (l == 6) return 51840;
      if (l == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

WeylGroup enumerate_weyl(const RootDatum& rd, long long max_order) {
  const long long expect = weyl_order_formula(rd);
  if (expect > max_order)
    throw precondition_error("enumerate_weyl: |W| = " + std::to_string(expect) +
                             " exceeds budget " + std::to_string(max_order));
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rd.rank; ++i) gens.push_back(simple_reflection(rd, i));

  WeylGroup g;
  std::map<std::vector<Rat>, int> seen;
  g.elements.push_back(identity_element(rd));
  seen.emplace(g.elements[0].matrix.a, 0);
  for (size_t head = 0; head < g.elements.size(); ++head) {
    WeylElement w = g.elements[head];  // copy: vector may reallocate
    for (const auto& s : gens) {
      WeylElement next = compose(w, s);
      if (seen.emplace(next.matrix.a, static_cast<int>(g.elements.size())).second)
        g.elements.push_back(std::move(next));
    }
  }
  g.order = static_cast<long long>(g.elements.size());
  if (g.order != expect)
    throw std::logic_error("enumerate_weyl: closure size mismatch");
  return g;
}

WeylElement longest_element(const RootDatum& rd) {
  // Greedy descent of a regular dominant vector to the antidominant chamber.
  RatVec x = rd.rho_check;
  WeylElement w = identity_element(rd);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= rd.rank; ++i) {
      if (vec_dot(rd.simple_roots[i - 1], x) > 0) {
        WeylElement s = simple_reflection(rd, i);
        x = act(s, x);
        w = compose(s, w);
        moved = true;
      }
    }
  }
  return w;
}

RatVec dual_weight(const RootDatum& rd, const RatVec& mu) {
  for (int i = 0; i < rd.rank; ++i)
    if (vec_dot(mu, rd.simple_coroots[i]) < 0)
      throw precondition_error("dual_weight: weight not dominant");
  return vec_scale(-1, act(longest_element(rd), mu));
}

RatVec solve_one_minus_w(const RootDatum& rd, const WeylElement& w,
                         const RatVec& v) {
  // Solve (1 - w) S a = v for coordinates a over the simple coroots, so the
  // solution is pinned to the root span even when 1 - w kills the ambient
  // complement.
  const int n = rd.ambient, l = rd.rank;
  RatMat one_minus(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      one_minus(i, j) = Rat(i == j ? 1 : 0) - w.matrix(i, j);
  RatMat S(n, l);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < n; ++i) S(i, j) = rd.simple_coroots[j][i];
  RatMat A = one_minus * S;
  auto a = solve_exact(A, v);
  if (!a)
    throw precondition_error(
        "solve_one_minus_w: singular system (w fixes part of the root span) "
        "or v outside the root span");
  return S * (*a);
}

}  // namespace verlinde
