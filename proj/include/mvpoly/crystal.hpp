#pragma once

#include "mvpoly/polytope.hpp"

namespace mvpoly {

/*
  The bicrystal structure on MV polytopes.  Elements are represented by their
  polytopes; the crystal zero is std::nullopt on the raising operators.

  The lowering/raising operators are defined through the vertex data: f_j
  shifts mu_w by +alpha_j^vee exactly on {w : s_j w < w}, the starred
  operators shift mu_{w0} keeping {w : s_j w > w} fixed.  The implementation
  re-derives the full hyperplane datum from the shifted vertices along a path
  through the pinned set and re-validates the shift law on every pinned
  vertex.
*/

bool is_point(const MVPolytope& P);

Coweight crystal_wt(const MVContext& ctx, const MVPolytope& P); // -mu_{w0}

Int epsilon(const MVContext& ctx, const MVPolytope& P, int j);
Int epsilon_star(const MVContext& ctx, const MVPolytope& P, int j);
Int phi(const MVContext& ctx, const MVPolytope& P, int j);
Int phi_star(const MVContext& ctx, const MVPolytope& P, int j);

MVPolytope f_op(const MVContext& ctx, const MVPolytope& P, int j);
std::optional<MVPolytope> e_op(const MVContext& ctx, const MVPolytope& P, int j);
MVPolytope f_star(const MVContext& ctx, const MVPolytope& P, int j);
std::optional<MVPolytope> e_star(const MVContext& ctx, const MVPolytope& P, int j);

// Saito reflections and their composition along a reduced word.
MVPolytope saito(const MVContext& ctx, const MVPolytope& P, int j);
MVPolytope saito_star(const MVContext& ctx, const MVPolytope& P, int j);
// sigma_{s_{j_1}} ... sigma_{s_{j_m}} applied as a function product (the last
// letter acts first).
MVPolytope saito_word(const MVContext& ctx, const MVPolytope& P, const Word& word);
MVPolytope saito_star_word(const MVContext& ctx, const MVPolytope& P, const Word& word);

// w . wt(sigma_{w^{-1}}(P)) - wt(P); must coincide with the vertex mu_w.
Coweight mu_via_saito(const MVContext& ctx, const MVPolytope& P, const WeylElement& w);

} // namespace mvpoly
