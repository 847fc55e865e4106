#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jts/rational.hpp"

namespace jts {

// Signed generator index: +i / -i for the i-th generator and its inverse,
// 1-based, i <= rank. Serialized as 'a'..'z' with capitals for inverses.
using Letter = int;

inline Letter inv(Letter l) { return -l; }

// Letter ordering used everywhere enumeration order matters: a < A < b < B < ...
inline int letter_key(Letter l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

// A freely reduced word in F_rank. Immutable value type; the empty word is
// the identity o.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int rank);  // reduces, validates indices
  static Word identity(int rank) { return Word({}, rank); }
  static Word parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter at(int i) const { return letters_[static_cast<size_t>(i)]; }

  std::string str() const;

  Word inverse() const;
  Word operator*(const Word& o) const;  // group law, freely reduced
  Word pow(int m) const;

  // x = conjugator * core * conjugator^{-1} with core cyclically reduced.
  std::pair<Word, Word> cyclic_reduce() const;  // (core, conjugator)
  bool is_cyclically_reduced() const;
  Word rotated(int k) const;           // cyclic rotation by k letters
  Word canonical_rotation() const;     // lex-least rotation

  // Signed exponent sum per generator (size == rank).
  std::vector<long long> exponent_sums() const;

  bool operator==(const Word& o) const { return rank_ == o.rank_ && letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;  // length-lexicographic

 private:
  std::vector<Letter> letters_;
  int rank_ = 0;
};

struct WordHash {
  size_t operator()(const Word& w) const;
};

// Reduce a raw letter sequence; the module-level entry point mirroring the
// constructor (idempotent by construction).
Word reduce(const std::vector<Letter>& letters, int rank);

// A finite symmetric generating set. Standard sets carry a fast path; general
// ones get validated (symmetry, generation via breadth-first closure) and own
// a shared distance cache.
class GenSet {
 public:
  static GenSet standard(int rank);
  GenSet(std::vector<Word> members, int rank);

  int rank() const { return rank_; }
  bool is_standard() const { return standard_; }
  const std::vector<Word>& members() const { return members_; }
  uint64_t key() const { return key_; }

  // max standard length of a member, and max S-length of a standard generator.
  int stretch_out() const { return stretch_out_; }
  int stretch_in() const { return stretch_in_; }

 private:
  GenSet() = default;
  void validate_and_close();

  std::vector<Word> members_;
  int rank_ = 0;
  bool standard_ = false;
  uint64_t key_ = 0;
  int stretch_out_ = 1;
  int stretch_in_ = 1;
};

// Exact graph distance from o to x in the Cayley graph of S. Standard sets
// read off the reduced length; general sets run a bidirectional BFS confined
// to a corridor around the tree geodesic [o, x]. The corridor width
// stretch_in * stretch_out^2 + stretch_out is a Morse bound for S-geodesics
// in a tree, so the search is exact. Results are memoized per GenSet.
int word_length(const Word& x, const GenSet& S);

// All words at distance exactly T, deterministic length-lex order.
// Refuses when the projected element count exceeds the cap.
std::vector<Word> sphere(const GenSet& S, int T, long long cap = 100000000LL);

// Exact Gromov product (x|y)_o = (|x| + |y| - |x^{-1} y|) / 2, a half-integer.
Rat gromov_product(const Word& x, const Word& y, const GenSet& S);

bool is_proximal(const Word& x, const Rat& eps, const GenSet& S);

// --- streaming enumeration -------------------------------------------------

// Depth-first walk over all freely reduced words of length <= max_len in
// lex order. push/pop hooks let callers maintain incremental state; visit is
// called at every node (the identity included when visit_identity).
struct ReducedWalkHooks {
  std::function<void(Letter)> push;       // called before descending
  std::function<void()> pop;              // called after the subtree
  // Return false to prune: children of the current node are skipped.
  std::function<bool(const std::vector<Letter>&)> visit;
};
void walk_reduced_words(int rank, int max_len, const ReducedWalkHooks& hooks,
                        bool visit_identity = false);

// One representative per cyclic class of cyclically reduced words of length
// 1..L: the lex-least rotation. Inverses are not identified.
void for_each_cyclic_class(int rank, int L, const std::function<void(const Word&)>& visit);

}  // namespace jts
