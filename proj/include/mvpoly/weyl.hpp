#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "mvpoly/cartan.hpp"

namespace mvpoly {

using Word = std::vector<int>; // 1-based generator indices

enum class Side { Left, Right };

/*
  A Weyl group element in canonical form: its action on the weight lattice in
  the fundamental-weight basis.  Equality is equality of action matrices; the
  stored word is one reduced witness (the lexicographically first one).
*/
struct WeylElement {
    IntMat m;    // action on weights (column-vector convention)
    IntMat minv; // action of the inverse
    Word word;   // reduced witness, multiplies to m
    int len = 0;

    bool operator==(const WeylElement& o) const { return m == o.m; }
    bool operator<(const WeylElement& o) const { return m < o.m; }
    bool is_identity() const { return len == 0; }
};

struct BraidMove {
    int pos;   // 1-based start position in the word
    int span;  // 2 (commutation), 3 (A2 braid) or 4 (B2 braid)
    Word word; // the neighbouring word
};

/*
  Weyl group arithmetic for a fixed Cartan datum.  All operations are pure and
  the cached tables are built eagerly under locks, so concurrent use from
  sweep workers is safe.

  Full enumeration of the group, of Bruhat intervals and of the reduced words
  of w0 is a desk-scale facility: it is guarded by caps (rank <= 4 and an
  element/word budget) unless the caller passes allow_large = true.
*/
class WeylGroup {
  public:
    explicit WeylGroup(CartanData cartan);

    const CartanData& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }

    WeylElement identity() const;
    WeylElement simple(int i) const;
    WeylElement from_word(const Word& w) const;
    WeylElement mul(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse(const WeylElement& a) const;

    int length(const WeylElement& w) const { return w.len; }
    bool is_reduced(const Word& w) const;
    Word canonical_word(const IntMat& action_inv) const;

    Weight apply(const WeylElement& w, const Weight& b) const;
    Coweight apply(const WeylElement& w, const Coweight& b) const;

    bool is_descent(const WeylElement& w, int i, Side side) const;
    std::set<int> descents(const WeylElement& w, Side side) const;

    bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;
    bool weak_leq(const WeylElement& u, const WeylElement& w, Side side) const;

    const WeylElement& longest() const { return w0_; }
    int star(int i) const { return star_[i - 1]; }

    WeylElement demazure(const WeylElement& u, const WeylElement& w) const;

    // The unique maximal-length element of [e,v]_R cap [e,w].
    WeylElement v_w(const WeylElement& v, const WeylElement& w) const;
    // Same by exhaustive search; asserts the maximum is unique.
    WeylElement v_w_brute(const WeylElement& v, const WeylElement& w) const;

    // Positions (1-based, sorted) of the reverse-lex-first reduced subword of
    // w inside a reduced word of w0.
    std::vector<int> rightmost_subword(const Word& word_of_w0, const WeylElement& w) const;

    std::vector<Word> reduced_words(const WeylElement& w, bool allow_large = false) const;
    std::vector<BraidMove> braid_neighbors(const Word& word) const;

    std::vector<WeylElement> interval(const WeylElement& w) const; // [e, w]

    // All group elements, ordered by (length, action matrix).
    const std::vector<WeylElement>& elements() const;
    int element_index(const WeylElement& w) const;

    // Reduced words of w0 plus braid-move adjacency, cached.
    struct W0Graph {
        std::vector<Word> words;
        std::map<Word, int> index;
        std::vector<std::vector<std::pair<int, BraidMove>>> adj; // word id -> (neighbor id, move)
    };
    const W0Graph& w0_graph(bool allow_large = false) const;

    int order() const { return static_cast<int>(elements().size()); }

  private:
    void build_elements() const;

    CartanData cartan_;
    std::vector<WeylElement> gens_;
    WeylElement w0_;
    std::vector<int> star_;

    mutable std::once_flag elements_once_;
    mutable std::vector<WeylElement> elements_;
    mutable std::map<IntMat, int> element_index_;

    mutable std::once_flag w0_graph_once_;
    mutable std::unique_ptr<W0Graph> w0_graph_;
};

// Words render as "1,2,1" on the CLI and in reports.
std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

} // namespace mvpoly
