#pragma once

#include <array>
#include <memory>
#include <string>

#include "rkhspg/env.hpp"
#include "rkhspg/policy.hpp"

namespace rkhspg {

// Finite MDP over N states with two effective actions given by the sign of the
// scalar policy output. The continuous state shown to the kernel policy is a
// 1-D embedding value per discrete state, so exact Q-values are computable for
// any Gaussian policy while the policy side stays fully continuous.
struct ChainMdpSpec {
  Mat rewards;                       // N x 2: column 0 for a < 0, column 1 for a >= 0
  std::array<Mat, 2> transitions;    // per action sign, N x N row-stochastic
  Vec embedding;                     // N distinct scalars exposed as states

  int num_states() const { return static_cast<int>(embedding.size()); }
  double reward_bound() const;
  void validate() const;
};

// 5-state drift chain used by the test suite and as the CLI default: action
// sign +/- drifts right/left with probability 0.9, the right end pays 1 under
// "+" and the left end pays a 0.25 distractor under "-".
ChainMdpSpec default_chain();

ChainMdpSpec chain_from_json(const std::string& text);
ChainMdpSpec load_chain(const std::string& path);

class ChainMdp final : public Environment {
 public:
  explicit ChainMdp(ChainMdpSpec spec, long max_horizon = 10000);

  Vec reset(RandomStream& rng) const override;
  StepResult step(const Vec& s, const Vec& a, RandomStream& rng) const override;

  const ChainMdpSpec& chain() const { return chain_; }
  int state_index(const Vec& s) const;  // exact embedding lookup
  Vec state_of(int index) const;

 private:
  ChainMdpSpec chain_;
};

struct ValueIterationResult {
  Vec v;   // N
  Mat q;   // N x 2, same column convention as the rewards table
  int iterations = 0;
};

// Fixed point of the Bellman operator under the policy "choose a >= 0 with
// probability sign_prob[s]", iterated until the sup-norm change is < 1e-10.
ValueIterationResult value_iteration(const ChainMdpSpec& chain, const Vec& sign_prob,
                                     double gamma);

// P(a >= 0 | s) = Phi(h(embedding[s]) / sqrt(sigma)) for a scalar Gaussian policy.
Vec sign_probabilities(const ChainMdpSpec& chain, const GaussianPolicy& policy);

double normal_cdf(double x);

}  // namespace rkhspg
