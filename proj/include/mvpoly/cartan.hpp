#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mvpoly/errors.hpp"

namespace mvpoly {

using Int = long long;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Weights live in the fundamental-weight basis, coweights in the simple-coroot
// basis.  These bases are dual (<alpha_i^vee, omega_j> = delta_ij), so the
// pairing below is the plain dot product and stays integral.
struct Weight {
    IntVec c;
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

struct Coweight {
    IntVec c;
    bool operator==(const Coweight&) const = default;
    auto operator<=>(const Coweight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator*(Int k, const Coweight& a);

Int pairing(const Coweight& cw, const Weight& w);

// True iff the coweight lies in the positive coroot cone.
bool in_positive_coroot_cone(const Coweight& cw);

/*
  Root datum of a finite type with every edge satisfying
  a_ij * a_ji in {0,1,2}.  Generator indices are 1-based throughout the
  public interface, matching the usual subscripts s_1, ..., s_rank.
*/
class CartanData {
  public:
    static CartanData build(char kind, int rank);
    static CartanData parse(std::string_view label); // e.g. "A2", "B3"

    char kind() const { return kind_; }
    int rank() const { return rank_; }
    std::string label() const { return std::string(1, kind_) + std::to_string(rank_); }

    // a(i,j) = <alpha_i^vee, alpha_j>
    Int a(int i, int j) const { return cartan_[i - 1][j - 1]; }
    const IntMat& matrix() const { return cartan_; }

    Weight omega(int i) const;
    Weight alpha(int i) const;        // column i of the Cartan matrix
    Coweight alpha_vee(int i) const;  // i-th standard vector in coroot coords

    Weight reflect(int i, const Weight& b) const;     // b - <a_i^vee, b> a_i
    Coweight reflect(int i, const Coweight& b) const; // b - <b, a_i> a_i^vee

    int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
    // Positive roots in simple-root coordinates.
    const std::vector<IntVec>& positive_roots() const { return positive_roots_; }

    // Sign of a root given in omega coordinates: +1 positive, -1 negative.
    // Throws if the vector is not a root.
    int root_sign(const IntVec& omega_coords) const;

    IntVec root_to_omega(const IntVec& alpha_coords) const;

  private:
    CartanData() = default;
    void validate_and_close();

    char kind_ = 0;
    int rank_ = 0;
    IntMat cartan_;
    std::vector<IntVec> positive_roots_;
    std::map<IntVec, int> root_signs_; // omega coords -> +-1
};

} // namespace mvpoly
