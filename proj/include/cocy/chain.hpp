#pragma once

#include <array>
#include <string>

#include "cocy/lattice.hpp"

namespace cocy {

// The six valid plaquette labelings, in fixed index order. Codes read the
// edges clockwise from the lower-left vertex: left, top, right, bottom.
class SquareState {
 public:
  static constexpr int kCount = 6;
  static constexpr std::array<const char*, kCount> kCodes = {"0110", "1001", "1010",
                                                             "0101", "1111", "0000"};

  SquareState() = default;
  explicit SquareState(int index) : index_(index) {
    if (index < 0 || index >= kCount) throw DomainError("square state index out of range");
  }

  static SquareState from_labels(const SquareLabels& labels);

  int index() const { return index_; }
  std::string code() const { return kCodes[index_]; }
  SquareLabels labels() const;

  int left() const { return kCodes[index_][0] - '0'; }
  int top() const { return kCodes[index_][1] - '0'; }
  int right() const { return kCodes[index_][2] - '0'; }
  int bottom() const { return kCodes[index_][3] - '0'; }

  friend bool operator==(SquareState a, SquareState b) { return a.index_ == b.index_; }

 private:
  int index_ = 0;
};

// Completes a square from its left and bottom labels. When left == bottom the
// two completions top=right=0 and top=right=1 exist; heads picks the all-ones
// one. When left != bottom the completion is forced and the coin is ignored.
SquareState complete_square(int left, int bottom, bool heads);

struct TransitionMatrix6 {
  // p[i][j] = probability of moving from state i to state j
  std::array<std::array<double, SquareState::kCount>, SquareState::kCount> p{};

  double at(int i, int j) const { return p[i][j]; }
};

struct Dist6 {
  std::array<double, SquareState::kCount> p{};

  double at(int i) const { return p[i]; }
};

// Transition matrix of the square chain along a strip: next left edge is the
// current right edge, the next bottom label is Bernoulli(prob_one), and the
// square is completed with a fair coin. Built by enumerating those moves.
TransitionMatrix6 derive_transition_matrix(double prob_one);

// Stationary distribution to residual 1e-12: power iteration with a 1e5
// budget, then a direct linear solve, then ConvergenceFailure.
Dist6 stationary_distribution(const TransitionMatrix6& P);

double stationary_residual(const TransitionMatrix6& P, const Dist6& pi);

// Checks the time-reversal identity behind the strip chain's i.i.d. top row:
// swap the 0110/1001 rows and columns of P to get P', reverse P' against the
// correspondingly swapped pi, and compare with P entrywise (1e-9).
bool reversal_check(const TransitionMatrix6& P, const Dist6& pi);

// Conditional law of (left, bottom) given (top, right) under the stationary
// square distribution. Rows with top != right are deterministic; top == right
// rows split mass between the two valid completions.
struct BackwardCompletionTable {
  // probability[top][right][left*2+bottom]
  std::array<std::array<std::array<double, 4>, 2>, 2> probability{};

  double at(int top, int right, int left, int bottom) const {
    return probability[top][right][left * 2 + bottom];
  }
};

BackwardCompletionTable backward_completion_distribution(const TransitionMatrix6& P,
                                                         const Dist6& pi);

}  // namespace cocy
