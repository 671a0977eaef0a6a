#pragma once

#include <array>
#include <functional>
#include <optional>

#include "mvpoly/weyl.hpp"

namespace mvpoly {

// A chamber weight w omega_i, keyed by its weight vector.  The witness is the
// minimal-length Weyl element of the coset (unique), stored by element index.
struct ChamberWeight {
    Weight weight;
    int witness = -1; // element index
    int i = 0;        // fundamental weight index, 1-based
};

/*
  Shared immutable context for polytope computations over one Cartan datum:
  the enumerated Weyl group with multiplication tables, the chamber weights,
  and per-element coroot images.  Building it enumerates W, so the usual
  desk-scale caps apply.
*/
class MVContext {
  public:
    explicit MVContext(CartanData cartan);

    const CartanData& cartan() const { return cartan_; }
    const WeylGroup& group() const { return group_; }
    int rank() const { return cartan_.rank(); }

    int num_elements() const { return static_cast<int>(group_.elements().size()); }
    const WeylElement& element(int idx) const { return group_.elements()[idx]; }
    int index(const WeylElement& w) const { return group_.element_index(w); }
    int identity_index() const { return e_idx_; }
    int longest_index() const { return w0_idx_; }
    int length_of(int idx) const { return element(idx).len; }
    int inverse_index(int idx) const { return inv_[idx]; }
    // index of s_i * w (Left) or w * s_i (Right)
    int mult(int idx, int i, Side side) const {
        return side == Side::Left ? left_[idx][i - 1] : right_[idx][i - 1];
    }
    bool is_descent(int idx, int i, Side side) const {
        return length_of(mult(idx, i, side)) < length_of(idx);
    }

    int num_chambers() const { return static_cast<int>(chambers_.size()); }
    const ChamberWeight& chamber(int c) const { return chambers_[c]; }
    int chamber_index(const Weight& w) const;
    int chamber_of(int elt_idx, int i) const { return chamber_of_[elt_idx][i - 1]; }

    // w . alpha_i^vee
    const Coweight& coroot_image(int elt_idx, int i) const { return coroot_img_[elt_idx][i - 1]; }

    // Reduced word of w0 beginning with j / ending with j.
    const Word& w0_word_starting(int j) const { return w0_start_[j - 1]; }
    const Word& w0_word_ending(int j) const { return w0_end_[j - 1]; }

  private:
    CartanData cartan_;
    WeylGroup group_;
    int e_idx_ = 0, w0_idx_ = 0;
    std::vector<int> inv_;
    std::vector<std::vector<int>> left_, right_;
    std::vector<ChamberWeight> chambers_;
    std::map<Weight, int> chamber_lookup_;
    std::vector<std::vector<int>> chamber_of_;
    std::vector<std::vector<Coweight>> coroot_img_;
    std::vector<Word> w0_start_, w0_end_;
};

// Hyperplane data: one integer per chamber weight, in context order.
struct BZData {
    IntVec m;
    bool operator==(const BZData&) const = default;
};

struct MVPolytope {
    BZData bz;
    std::vector<Coweight> mu; // vertex per element index
    bool operator==(const MVPolytope& o) const { return bz == o.bz; }
};

BZData zero_bz(const MVContext& ctx);
std::vector<Coweight> bz_to_vertices(const MVContext& ctx, const BZData& bz);
// Validates that the family is GGMS (consistent across witnesses, all
// twisted-order inequalities hold); throws math_error otherwise.
BZData vertices_to_bz(const MVContext& ctx, const std::vector<Coweight>& mu);

struct EdgeViolation {
    int elt;
    int i;
    Int excess; // the (positive) amount by which the inequality fails
};
std::vector<EdgeViolation> check_edge_inequalities(const MVContext& ctx, const BZData& bz);

struct PluckerViolation {
    int elt;
    int i, j;
    int relation; // 1..4 within the face
    Int lhs, rhs;
};
std::vector<PluckerViolation> check_tropical_plucker(const MVContext& ctx, const BZData& bz);

bool is_normalized(const MVContext& ctx, const BZData& bz);
bool is_bz_datum(const MVContext& ctx, const BZData& bz);
Coweight bz_coweight(const MVContext& ctx, const BZData& bz); // mu_{w0}

// Edge lengths along the path of a reduced word of w0.
IntVec lusztig_from_bz(const MVContext& ctx, const BZData& bz, const Word& word);

// The unique BZ datum with the given Lusztig data, by braid-move propagation
// over the full reduced-word graph of w0 (globally consistency-checked).
BZData bz_from_lusztig(const MVContext& ctx, const Word& word, const IntVec& n);

MVPolytope polytope_from_bz(const MVContext& ctx, BZData bz);
MVPolytope polytope_from_lusztig(const MVContext& ctx, const Word& word, const IntVec& n);

// Rank-2 braid transitions on Lusztig data.
std::array<Int, 3> a2_braid_transition(const std::array<Int, 3>& n);
// src4 is the source word (x,y,x,y) read from the identity; requires a rank-2
// context whose w0 has length 4.
std::array<Int, 4> b2_braid_transition(const MVContext& ctx, const Word& src4,
                                       const std::array<Int, 4>& n);

// Whether the corrected and the literal reading of the case-2 relation (the
// printed "M_{omega_j}" versus M_{w omega_j}) ever disagree on this datum.
bool case2_literal_reading_differs(const MVContext& ctx, const BZData& bz);

} // namespace mvpoly
