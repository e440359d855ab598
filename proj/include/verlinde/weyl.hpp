#pragma once

#include <vector>

#include "verlinde/root_datum.hpp"

namespace verlinde {

// Exact orthogonal matrix on the ambient space, acting on both weight- and
// coweight-side vectors (the realizations are self-dual, so one matrix
// serves both). `word` lists simple reflections in matrix-product order:
// matrix = M_{word[0]} * M_{word[1]} * ..., i.e. the last letter acts first.
struct WeylElement {
  RatMat matrix;
  std::vector<int> word;  // 1-based simple reflection indices
  int sign = 1;           // (-1)^{word length} = det on the root span

  bool is_identity() const;
};

WeylElement identity_element(const RootDatum& rd);
WeylElement simple_reflection(const RootDatum& rd, int i);  // 1-based
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse_element(const WeylElement& w);  // orthogonal: transpose
RatVec act(const WeylElement& w, const RatVec& v);

// Product of all simple reflections, rightmost index l (so s_l acts first).
// This is the ordering under which the closed-form phase computations are
// stated; ord = Coxeter number.
WeylElement coxeter_element(const RootDatum& rd);

long long element_order(const WeylElement& w);

// Read-only after enumeration; concurrent reads are safe.
struct WeylGroup {
  std::vector<WeylElement> elements;  // breadth-first, identity first
  long long order = 0;
};

// Theoretical |W| from the product formula for the type.
long long weyl_order_formula(const RootDatum& rd);

// Complete duplicate-free enumeration by breadth-first closure under right
// multiplication by simple reflections. Throws when the formula order
// exceeds max_order (the message reports |W|).
WeylGroup enumerate_weyl(const RootDatum& rd, long long max_order = 1000000);

// Unique element sending all positive roots to negative ones.
WeylElement longest_element(const RootDatum& rd);

// -w0(mu) for dominant mu; an involution on dominant weights.
RatVec dual_weight(const RootDatum& rd, const RatVec& mu);

// Exact x in the root span with (1 - w) x = v; requires 1 - w invertible on
// the span and v inside it.
RatVec solve_one_minus_w(const RootDatum& rd, const WeylElement& w,
                         const RatVec& v);

}  // namespace verlinde
