#include "rkhspg/chain.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace rkhspg {

double ChainMdpSpec::reward_bound() const {
  return rewards.cwiseAbs().maxCoeff();
}

void ChainMdpSpec::validate() const {
  const int n = num_states();
  if (n <= 0) throw std::invalid_argument("chain: needs at least one state");
  if (rewards.rows() != n || rewards.cols() != 2) {
    throw std::invalid_argument("chain: rewards table must be N x 2");
  }
  for (const Mat& t : transitions) {
    if (t.rows() != n || t.cols() != n) {
      throw std::invalid_argument("chain: transition tables must be N x N");
    }
    for (int s = 0; s < n; ++s) {
      double row_sum = 0.0;
      for (int s2 = 0; s2 < n; ++s2) {
        if (t(s, s2) < 0.0) throw std::invalid_argument("chain: negative transition probability");
        row_sum += t(s, s2);
      }
      if (std::abs(row_sum - 1.0) > 1e-12) {
        throw std::invalid_argument("chain: transition rows must sum to 1");
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int s2 = s + 1; s2 < n; ++s2) {
      if (embedding[s] == embedding[s2]) {
        throw std::invalid_argument("chain: embedding values must be distinct");
      }
    }
  }
}

ChainMdpSpec default_chain() {
  const int n = 5;
  ChainMdpSpec spec;
  spec.embedding = Vec(n);
  spec.embedding << -1.0, -0.5, 0.0, 0.5, 1.0;
  spec.rewards = Mat::Zero(n, 2);
  spec.rewards(n - 1, 1) = 1.0;   // stay-right pay-off under "+"
  spec.rewards(0, 0) = 0.25;      // distractor at the left end under "-"
  Mat plus = Mat::Zero(n, n);
  Mat minus = Mat::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    const int right = std::min(s + 1, n - 1);
    const int left = std::max(s - 1, 0);
    plus(s, right) += 0.9;
    plus(s, s) += 0.1;
    minus(s, left) += 0.9;
    minus(s, s) += 0.1;
  }
  spec.transitions = {minus, plus};
  spec.validate();
  return spec;
}

ChainMdpSpec chain_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  const int n = doc.at("num_states").get<int>();
  ChainMdpSpec spec;
  spec.embedding = Vec(n);
  spec.rewards = Mat(n, 2);
  spec.transitions = {Mat(n, n), Mat(n, n)};
  const auto& emb = doc.at("embedding");
  const auto& rew = doc.at("rewards");
  const auto& tra = doc.at("transitions");
  for (int s = 0; s < n; ++s) {
    spec.embedding[s] = emb.at(s).get<double>();
    spec.rewards(s, 0) = rew.at(s).at(0).get<double>();
    spec.rewards(s, 1) = rew.at(s).at(1).get<double>();
    for (int a = 0; a < 2; ++a) {
      for (int s2 = 0; s2 < n; ++s2) {
        spec.transitions[a](s, s2) = tra.at(s).at(a).at(s2).get<double>();
      }
    }
  }
  spec.validate();
  return spec;
}

ChainMdpSpec load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("chain: cannot open spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return chain_from_json(buf.str());
}

ChainMdp::ChainMdp(ChainMdpSpec spec, long max_horizon)
    : Environment(EnvSpec{1, 1, 0.0, max_horizon}), chain_(std::move(spec)) {
  chain_.validate();
  spec_.reward_bound = chain_.reward_bound();
}

Vec ChainMdp::state_of(int index) const {
  Vec s(1);
  s[0] = chain_.embedding[index];
  return s;
}

int ChainMdp::state_index(const Vec& s) const {
  if (s.size() != 1) throw std::invalid_argument("chain: bad state");
  for (int i = 0; i < chain_.num_states(); ++i) {
    if (chain_.embedding[i] == s[0]) return i;
  }
  throw std::invalid_argument("chain: state is not an embedding value");
}

Vec ChainMdp::reset(RandomStream&) const { return state_of(0); }

StepResult ChainMdp::step(const Vec& s, const Vec& a, RandomStream& rng) const {
  check_action(a);
  const int idx = state_index(s);
  const int sign = a[0] >= 0.0 ? 1 : 0;
  const double reward = chain_.rewards(idx, sign);
  const double u = rng.uniform01();
  double acc = 0.0;
  int next = chain_.num_states() - 1;
  for (int s2 = 0; s2 < chain_.num_states(); ++s2) {
    acc += chain_.transitions[sign](idx, s2);
    if (u < acc) {
      next = s2;
      break;
    }
  }
  return emit(state_of(next), reward, false);
}

ValueIterationResult value_iteration(const ChainMdpSpec& chain, const Vec& sign_prob,
                                     double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("value_iteration: gamma must lie in (0, 1)");
  }
  const int n = chain.num_states();
  if (sign_prob.size() != n) {
    throw std::invalid_argument("value_iteration: sign_prob must have one entry per state");
  }
  for (int s = 0; s < n; ++s) {
    if (!(sign_prob[s] >= 0.0 && sign_prob[s] <= 1.0)) {
      throw std::invalid_argument("value_iteration: sign_prob entries must lie in [0, 1]");
    }
  }
  ValueIterationResult out;
  out.v = Vec::Zero(n);
  out.q = Mat::Zero(n, 2);
  const int max_iters = 10'000'000;
  for (out.iterations = 0; out.iterations < max_iters; ++out.iterations) {
    Mat q(n, 2);
    for (int a = 0; a < 2; ++a) {
      q.col(a) = chain.rewards.col(a) + gamma * chain.transitions[a] * out.v;
    }
    Vec v(n);
    for (int s = 0; s < n; ++s) {
      v[s] = (1.0 - sign_prob[s]) * q(s, 0) + sign_prob[s] * q(s, 1);
    }
    const double delta = (v - out.v).cwiseAbs().maxCoeff();
    out.v = v;
    out.q = q;
    if (delta < 1e-10) return out;
  }
  throw std::runtime_error("value_iteration: did not converge");
}

Vec sign_probabilities(const ChainMdpSpec& chain, const GaussianPolicy& policy) {
  if (policy.mean.action_dim() != 1 || policy.mean.state_dim() != 1) {
    throw std::invalid_argument("sign_probabilities: chain policies are scalar");
  }
  Vec probs(chain.num_states());
  Vec s(1);
  for (int i = 0; i < chain.num_states(); ++i) {
    s[0] = chain.embedding[i];
    const double mean = policy.mean.evaluate(s)[0];
    probs[i] = normal_cdf(mean / std::sqrt(policy.sigma[0]));
  }
  return probs;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace rkhspg
