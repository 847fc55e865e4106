#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jts/matrix.hpp"
#include "jts/rational.hpp"
#include "jts/words.hpp"

namespace jts {

// Certified two-sided bound on a stable translation length.
// exact implies lower == upper (and exact_value is set for rational kinds).
struct LengthBracket {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  std::optional<Rat> exact_value;

  double mid() const { return exact ? upper : 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
  bool contains_zero() const { return lower <= 0.0 && upper >= 0.0; }
};

// Per-letter increment bounds of psi(o, w g) - psi(o, w) along reduced
// extensions, indexed by letter_key. Used to certify enumeration by psi.
struct IncrementBounds {
  std::vector<double> lower;
  std::vector<double> upper;
  bool certified = false;  // true when the bounds are proven, not sampled
};

enum class PotentialKind { WordMetric, Homology, Brooks, MatrixNorm, Combo };

// An evaluable left-invariant potential psi(o, .); psi(x, y) = psi(o, x^{-1}y)
// by construction. Immutable and cheap to copy.
class Potential {
 public:
  static Potential word_metric(GenSet S);
  static Potential homology(std::vector<double> weights, int rank);
  static Potential brooks(Word pattern);
  // One invertible image per positive generator; log sigma1 of the product.
  static Potential matrix_norm(std::vector<Matrix> images, int rank);
  static Potential combo(std::vector<double> coefficients, std::vector<Potential> parts);
  static Potential scaled(double c, const Potential& p) { return combo({c}, {p}); }

  PotentialKind kind() const;
  int rank() const;
  std::string describe() const;

  double evaluate(const Word& x) const;
  // Exact value when every ingredient is rational (word metrics, integer
  // pattern counts, rational homology weights / combo coefficients).
  std::optional<Rat> evaluate_exact(const Word& x) const;
  bool exact_kind() const;

  // Proper by construction (word metrics) or by user assertion (matrix kinds
  // flagged 1-dominated). Combos are proper when certified increments are
  // positive; callers may still override.
  bool proper_hint() const;

  LengthBracket stable_length(const Word& x, int m_max = 24, double c0 = 4.0) const;

  IncrementBounds increment_bounds() const;

  // Access for the variant payloads (used by labeling and IO).
  const GenSet* as_word_metric() const;
  const std::vector<double>* as_homology() const;
  const Word* as_brooks() const;
  const std::vector<Matrix>* as_matrix_images() const;
  const std::vector<double>* combo_coefficients() const;
  const std::vector<Potential>* combo_parts() const;

  struct Impl;
  explicit Potential(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<const Impl> impl_;
};

// Incremental evaluation of psi(o, prefix) along a reduced-word DFS; push is
// called with the letter and the word contents before the letter is appended.
class RunningEval {
 public:
  RunningEval(const Potential& p, const std::vector<Letter>* stack);
  ~RunningEval();
  RunningEval(RunningEval&&) noexcept;
  RunningEval& operator=(RunningEval&&) = delete;

  void push(Letter l);  // stack already holds the letters before l
  void pop();
  double value() const;
  std::optional<Rat> value_exact() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

struct GrowthEstimate {
  double rate = 0.0;
  double band = 0.0;      // residual-based confidence band
  bool certified = true;  // false when the enumeration bound was sampled
  std::vector<long long> ball_counts;  // #{psi < T} for T = 1..T_max
};

// Exponential growth rate of psi by a least-squares fit of log #ball(T) over
// the window [T_max/2, T_max].
GrowthEstimate growth_rate(const Potential& psi, int T_max, long long node_cap = 200000000LL);

struct DilationBound {
  double value = 0.0;   // certified lower bound of the true supremum
  Word witness;
  bool contaminated = false;  // some inexact stable length entered the max
  std::optional<Rat> exact_value;
};

// max of l_{psi_star}(x) / l_psi(x) over cyclic classes of standard length
// <= L. One-sided: a lower bound for the true dilation.
DilationBound dilation(const Potential& psi_star, const Potential& psi, int L);

// The tuple (psi_1..psi_n) plus the proper reference psi.
class PotentialSystem {
 public:
  PotentialSystem(std::vector<Potential> D, Potential psi);

  int n() const { return static_cast<int>(D_.size()); }
  int rank() const { return psi_.rank(); }
  const std::vector<Potential>& D() const { return D_; }
  const Potential& psi() const { return psi_; }

  // Affine normalization constant making psi >= 1 on sphere(1); added to
  // psi(o, x) for every x != o.
  double norm_shift() const { return shift_; }
  double psi_value(const Word& x) const;

  VecD D_vec(const Word& x) const;
  VecD D_psi(const Word& x) const;  // D(x) / psi'(o,x); throws on x == o
  std::optional<VecR> D_vec_exact(const Word& x) const;
  std::optional<VecR> D_psi_exact(const Word& x) const;

  struct LambdaResult {
    VecD vec;
    double worst_width = 0.0;
    std::optional<VecR> exact;
  };
  LambdaResult Lambda_vec(const Word& x, int m_max = 24) const;
  LambdaResult Lambda_psi(const Word& x, int m_max = 24) const;  // normalized

  bool all_exact() const;

  // Numerical rank of stable-length rows over cyclic words; a warning-only
  // independence diagnostic (rank < n+1 means dependent).
  int independence_rank(int max_len = 8, double tol = 1e-8) const;

  // Shell radius default: max psi'(s) over the standard sphere of radius 1.
  double default_R() const;

 private:
  std::vector<Potential> D_;
  Potential psi_;
  double shift_ = 0.0;
};

}  // namespace jts
