#pragma once

#include <memory>
#include <vector>

#include "mobi/instances/algebras.hpp"

namespace mobi {

// Endomorphisms of the additive group Z_n (n odd) with
// p(f,g,h)(x) = f(x) - g(f(x)) + g(h(x)).
MobiAlgebra<EndoMap> endo_algebra(int n);

// Z_n (n odd) as a midpoint algebra: x (+) y = (x + y) / 2.
struct MidpointZn {
  int n;
  int e;
  int inv2;

  MidpointZn(int n, int e = 0);
  int mid(int x, int y) const;
  // The z with mid(e, z) = w; unique by cancellation.
  int solve_from_base(int w) const;
};

// Which of the four membership conditions of End_e^(+)(X) a map satisfies:
// (i) g(x (+) y) = g(x) (+) g(y); (ii) g(e) = e;
// (iii) some gbar with gbar(x) (+) g(x) = e (+) x;
// (iv) some gtilde with gbar(x) (+) g(y) = e (+) gtilde(x, y).
struct MidpointEndoConditions {
  bool preserves_midpoint = false;
  bool fixes_base = false;
  bool has_complement = false;
  bool has_tilde = false;
  std::vector<int> complement;  // gbar table when (iii) holds
  std::vector<int> tilde;       // n*n table, gtilde(x,y) at x*n+y, when (iv) holds

  bool all() const { return preserves_midpoint && fixes_base && has_complement && has_tilde; }
};

// Decides (i)-(iv) by exhaustive search over Z_n.
MidpointEndoConditions midpoint_endo_conditions(const MidpointZn& x, const EndoMap& g);

// Carrier maps of End_e^(+)(Z_n): every self-map for n <= 5, otherwise the
// midpoint homomorphisms fixing e (x -> e + k(x - e)). Each one is checked
// against (i)-(iv); a failure throws ConstructionError.
std::vector<EndoMap> midpoint_endo_members(const MidpointZn& x);

// p(f,g,h)(x) = gtilde(f(x), h(x)); constants x -> e, x -> e (+) x, identity.
MobiAlgebra<EndoMap> midpoint_endo_algebra(int n, int e = 0);

}  // namespace mobi
