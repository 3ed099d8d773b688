#pragma once

#include <random>
#include <vector>

#include "relcat/quantize.hpp"
#include "relcat/relation.hpp"

namespace relcat::test {

inline std::mt19937_64 rng(std::uint64_t seed = 20240915ULL) {
  return std::mt19937_64(seed);
}

inline std::size_t pick(std::mt19937_64& r, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(r);
}

inline Mor random_table(std::mt19937_64& r, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> t(dom);
  for (auto& v : t) v = pick(r, 0, cod - 1);
  return mor_from_table(finset(dom), finset(cod), std::move(t));
}

inline Relation random_finset_relation(std::mt19937_64& r, const CCategory& cc,
                                       std::size_t max_base, std::size_t max_dom) {
  std::size_t a = pick(r, 1, max_base);
  std::size_t b = pick(r, 1, max_dom);
  std::vector<std::size_t> t(b);
  for (auto& v : t) v = pick(r, 0, a * a - 1);
  Mor arrow = mor_from_table(finset(b), finset(a * a), std::move(t));
  arrow.cod = finset(a * a);
  return make_relation(cc, finset(a), arrow);
}

inline Rat random_rat(std::mt19937_64& r, long lo = -3, long hi = 3) {
  long num = static_cast<long>(pick(r, 0, hi - lo)) + lo;
  long den = static_cast<long>(pick(r, 1, 3));
  return make_rat(num, den);
}

inline Rat random_nonzero_rat(std::mt19937_64& r) {
  Rat v = random_rat(r);
  while (v == 0) v = random_rat(r);
  return v;
}

inline Mor random_matrix_mor(std::mt19937_64& r, Ambient a, std::size_t dom,
                             std::size_t cod) {
  Matrix m(cod, std::vector<Rat>(dom, Rat(0)));
  for (auto& row : m)
    for (auto& v : row) v = random_rat(r);
  return mor_from_matrix(Obj{a, dom}, Obj{a, cod}, std::move(m));
}

inline Relation random_vecsum_relation(std::mt19937_64& r, const CCategory& cc,
                                       std::size_t max_dim) {
  std::size_t a = pick(r, 1, max_dim);
  std::size_t b = pick(r, 1, max_dim);
  Mor arrow = random_matrix_mor(r, Ambient::FinVectSum, b, 2 * a);
  arrow.cod = vec_sum(2 * a);
  return make_relation(cc, vec_sum(a), arrow);
}

/// Scalar deformation triple c . identity on every lambda component.
inline QuantTriple scalar_triple(Ambient amb, const std::vector<Obj>& universe,
                                 const std::vector<Mor>& gens, const Rat& c) {
  QuantTriple t = identity_triple(amb, universe, gens);
  for (auto& [key, m] : t.lambda)
    for (auto& row : m.matrix)
      for (auto& v : row) v *= c;
  return t;
}

/// Diagonal lambda with random nonzero entries; mu stays the identity.
inline QuantTriple diagonal_triple(std::mt19937_64& r, Ambient amb,
                                   const std::vector<Obj>& universe,
                                   const std::vector<Mor>& gens) {
  QuantTriple t = identity_triple(amb, universe, gens);
  for (auto& [key, m] : t.lambda)
    for (std::size_t i = 0; i < m.matrix.size(); ++i)
      m.matrix[i][i] = random_nonzero_rat(r);
  return t;
}

/// mu_X = -identity on selected universe objects (never the unit), eta and
/// lambda untouched.
inline QuantTriple sign_mu_triple(std::mt19937_64& r, Ambient amb,
                                  const std::vector<Obj>& universe,
                                  const std::vector<Mor>& gens) {
  QuantTriple t = identity_triple(amb, universe, gens);
  Obj e = unit_object(amb);
  for (auto& [size, m] : t.mu) {
    if (size == e.size) continue;
    if (pick(r, 0, 1) == 0) continue;
    for (auto& row : m.matrix)
      for (auto& v : row) v = -v;
  }
  return t;
}

}  // namespace relcat::test
