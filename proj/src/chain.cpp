#include "cocy/chain.hpp"

#include <algorithm>
#include <cmath>

namespace cocy {

namespace {

constexpr double kStationaryTol = 1e-12;
constexpr int kPowerIterationBudget = 100000;
constexpr double kReversalTol = 1e-9;

}  // namespace

SquareState SquareState::from_labels(const SquareLabels& labels) {
  const char code[5] = {static_cast<char>('0' + labels.left), static_cast<char>('0' + labels.top),
                        static_cast<char>('0' + labels.right),
                        static_cast<char>('0' + labels.bottom), '\0'};
  for (int i = 0; i < kCount; ++i)
    if (std::string(kCodes[i]) == code) return SquareState(i);
  throw DomainError(std::string("not a valid square labeling: ") + code);
}

SquareLabels SquareState::labels() const {
  SquareLabels s;
  s.left = static_cast<std::uint8_t>(left());
  s.top = static_cast<std::uint8_t>(top());
  s.right = static_cast<std::uint8_t>(right());
  s.bottom = static_cast<std::uint8_t>(bottom());
  return s;
}

SquareState complete_square(int left, int bottom, bool heads) {
  if ((left & ~1) || (bottom & ~1)) throw DomainError("edge labels must be 0 or 1");
  if (left == bottom) {
    const int fill = heads ? 1 : 0;
    SquareLabels s;
    s.left = static_cast<std::uint8_t>(left);
    s.bottom = static_cast<std::uint8_t>(bottom);
    s.top = static_cast<std::uint8_t>(fill);
    s.right = static_cast<std::uint8_t>(fill);
    return SquareState::from_labels(s);
  }
  // bottom + right = left + top with left != bottom forces top = bottom' and
  // right = left' flipped: enumerate the four candidates.
  for (int top = 0; top < 2; ++top) {
    for (int right = 0; right < 2; ++right) {
      if (bottom + right == left + top) {
        SquareLabels s;
        s.left = static_cast<std::uint8_t>(left);
        s.bottom = static_cast<std::uint8_t>(bottom);
        s.top = static_cast<std::uint8_t>(top);
        s.right = static_cast<std::uint8_t>(right);
        return SquareState::from_labels(s);
      }
    }
  }
  throw DomainError("unreachable: every (left,bottom) pair has a completion");
}

TransitionMatrix6 derive_transition_matrix(double prob_one) {
  if (!(prob_one > 0.0 && prob_one < 1.0)) throw DomainError("p must lie strictly in (0,1)");
  TransitionMatrix6 P;
  for (int i = 0; i < SquareState::kCount; ++i) {
    const int next_left = SquareState(i).right();
    for (int bottom = 0; bottom < 2; ++bottom) {
      const double w_bottom = bottom ? prob_one : 1.0 - prob_one;
      if (next_left == bottom) {
        P.p[i][complete_square(next_left, bottom, true).index()] += w_bottom * 0.5;
        P.p[i][complete_square(next_left, bottom, false).index()] += w_bottom * 0.5;
      } else {
        P.p[i][complete_square(next_left, bottom, false).index()] += w_bottom;
      }
    }
  }
  return P;
}

double stationary_residual(const TransitionMatrix6& P, const Dist6& pi) {
  double worst = 0.0;
  for (int j = 0; j < SquareState::kCount; ++j) {
    double acc = 0.0;
    for (int i = 0; i < SquareState::kCount; ++i) acc += pi.p[i] * P.p[i][j];
    worst = std::max(worst, std::abs(acc - pi.p[j]));
  }
  return worst;
}

namespace {

Dist6 power_iteration(const TransitionMatrix6& P) {
  Dist6 pi;
  pi.p.fill(1.0 / SquareState::kCount);
  for (int iter = 0; iter < kPowerIterationBudget; ++iter) {
    Dist6 next;
    for (int j = 0; j < SquareState::kCount; ++j) {
      double acc = 0.0;
      for (int i = 0; i < SquareState::kCount; ++i) acc += pi.p[i] * P.p[i][j];
      next.p[j] = acc;
    }
    double norm = 0.0;
    for (double x : next.p) norm += x;
    for (double& x : next.p) x /= norm;
    double delta = 0.0;
    for (int j = 0; j < SquareState::kCount; ++j)
      delta = std::max(delta, std::abs(next.p[j] - pi.p[j]));
    pi = next;
    if (delta <= kStationaryTol * 0.5) break;
  }
  return pi;
}

// Solve pi (P - I) = 0 with sum(pi) = 1 by Gaussian elimination on the
// transposed system; the last equation is replaced by the normalization.
Dist6 linear_solve(const TransitionMatrix6& P) {
  constexpr int n = SquareState::kCount;
  double a[n][n + 1] = {};
  for (int r = 0; r < n - 1; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = P.p[c][r] - (r == c ? 1.0 : 0.0);
    a[r][n] = 0.0;
  }
  for (int c = 0; c < n; ++c) a[n - 1][c] = 1.0;
  a[n - 1][n] = 1.0;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-14) throw ConvergenceFailure("singular stationary system");
    if (pivot != col) std::swap_ranges(a[pivot], a[pivot] + n + 1, a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  Dist6 pi;
  for (int i = 0; i < n; ++i) pi.p[i] = a[i][n] / a[i][i];
  return pi;
}

}  // namespace

Dist6 stationary_distribution(const TransitionMatrix6& P) {
  Dist6 pi = power_iteration(P);
  if (stationary_residual(P, pi) <= kStationaryTol) return pi;
  pi = linear_solve(P);
  if (stationary_residual(P, pi) <= kStationaryTol) return pi;
  throw ConvergenceFailure("stationary distribution did not reach 1e-12 residual");
}

bool reversal_check(const TransitionMatrix6& P, const Dist6& pi) {
  constexpr int n = SquareState::kCount;
  // States 0110 and 1001 sit at indices 0 and 1.
  auto swap_idx = [](int i) { return i == 0 ? 1 : (i == 1 ? 0 : i); };
  TransitionMatrix6 Pp;
  Dist6 pip;
  for (int i = 0; i < n; ++i) {
    pip.p[i] = pi.p[swap_idx(i)];
    for (int j = 0; j < n; ++j) Pp.p[i][j] = P.p[swap_idx(i)][swap_idx(j)];
  }
  for (int i = 0; i < n; ++i) {
    if (!(pip.p[i] > 0.0)) return false;
    for (int j = 0; j < n; ++j) {
      const double reversed = pip.p[j] * Pp.p[j][i] / pip.p[i];
      if (std::abs(reversed - P.p[i][j]) > kReversalTol) return false;
    }
  }
  return true;
}

BackwardCompletionTable backward_completion_distribution(const TransitionMatrix6& P,
                                                         const Dist6& pi) {
  (void)P;  // pi already is the stationary square distribution the rows condition on
  BackwardCompletionTable table;
  for (int top = 0; top < 2; ++top) {
    for (int right = 0; right < 2; ++right) {
      double mass[4] = {};
      double total = 0.0;
      for (int i = 0; i < SquareState::kCount; ++i) {
        const SquareState s(i);
        if (s.top() == top && s.right() == right) {
          mass[s.left() * 2 + s.bottom()] += pi.p[i];
          total += pi.p[i];
        }
      }
      for (int k = 0; k < 4; ++k) table.probability[top][right][k] = mass[k] / total;
    }
  }
  return table;
}

}  // namespace cocy
