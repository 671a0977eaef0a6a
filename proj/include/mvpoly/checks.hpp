#pragma once

#include <random>

#include "mvpoly/crystal.hpp"
#include "mvpoly/highest_vertex.hpp"
#include "mvpoly/sweep.hpp"
#include "mvpoly/trop_minors.hpp"

namespace mvpoly {

/*
  Verification sweeps behind `verify` and the acceptance suite.  Every sweep
  is deterministic given (bound, samples, seed); items are independent, so
  the parallel mode only changes scheduling, never output.
*/
struct SweepConfig {
    Int bound = 2;
    int samples = 200;
    uint64_t seed = 1;
    SweepMode mode = SweepMode::Serial;
};

// A deterministic random MV polytope (chart and Lusztig entries from rng).
MVPolytope random_polytope(const MVContext& ctx, std::mt19937_64& rng, Int bound);

// Theorem A over all P in P_w with prefix entries <= bound.
Report sweep_theorem_a(const MVContext& ctx, const WeylElement& w, const SweepConfig& cfg);
// Forced zero patterns over generated members of P_w.
Report sweep_zeros(const MVContext& ctx, const WeylElement& w, const SweepConfig& cfg);
// Generalized diagonal inequalities on unrestricted random polytopes.
Report sweep_diagonals(const MVContext& ctx, const SweepConfig& cfg);
// Crystal axioms for both structures on random polytopes.
Report sweep_crystal_axioms(const MVContext& ctx, const SweepConfig& cfg);
// Saito braid relations, shift laws, the membership equivalence and the
// membership transport, and the vertex formula mu_w = w wt(sigma_{w^{-1}}) - wt.
Report sweep_saito(const MVContext& ctx, const SweepConfig& cfg);
// coarsening_check == membership over random polytopes and all w.
Report sweep_fan(const MVContext& ctx, const SweepConfig& cfg);
// Valuation oracle versus combinatorial pipeline over tropical points of w
// (exhaustive up to bound when feasible, sampled otherwise).  Type A.
Report sweep_theorem_b(const MVContext& ctx, const WeylElement& w, const SweepConfig& cfg);
// Conjecture scan over every w in W (type A).
Report sweep_conjectures(const MVContext& ctx, const SweepConfig& cfg);
// B2-face transition solver: exhaustive uniqueness/involution/conservation.
Report sweep_b2_solver(const MVContext& ctx, const SweepConfig& cfg);

// name in {theorem-a, zeros, diagonals, crystal-axioms, saito, fan,
// theorem-b, conjecture-scan, b2-solver}; w may be empty where unused.
Report run_check(const std::string& name, const MVContext& ctx, const Word& w,
                 const SweepConfig& cfg);

} // namespace mvpoly
