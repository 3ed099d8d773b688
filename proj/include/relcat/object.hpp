#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "relcat/errors.hpp"

namespace relcat {

/// The three concrete ambient categories the engine knows.
enum class Ambient { FinSet, FinVectSum, FinVectTensor };

std::string ambient_name(Ambient a);

/// A finite set {0,..,size-1} or a rational vector space of dimension size.
/// Objects are fully determined by (ambient, size).
struct Obj {
  Ambient ambient = Ambient::FinSet;
  std::size_t size = 0;

  friend bool operator==(const Obj&, const Obj&) = default;
  friend auto operator<=>(const Obj&, const Obj&) = default;
};

inline Obj finset(std::size_t n) { return {Ambient::FinSet, n}; }
inline Obj vec_sum(std::size_t n) { return {Ambient::FinVectSum, n}; }
inline Obj vec_tensor(std::size_t n) { return {Ambient::FinVectTensor, n}; }

/// Unit object: one-point set, the zero space (for direct sum) or the
/// one-dimensional space (for the tensor product).
Obj unit_object(Ambient a);

/// Product on objects: size product for FinSet/FinVectTensor, sum for
/// FinVectSum. Throws AmbientError on mixed ambients.
Obj tensor_object(const Obj& x, const Obj& y);

std::string obj_name(const Obj& o);

/// Row-major pair index: idx(x, y) = x * ysize + y. Fixed everywhere.
inline std::size_t pair_index(std::size_t x, std::size_t y, std::size_t ysize) {
  return x * ysize + y;
}

}  // namespace relcat
