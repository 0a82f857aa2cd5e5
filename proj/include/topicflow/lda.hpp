#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "topicflow/textproc.hpp"

namespace topicflow {

struct StepSchedule {
  double s = 1.0;
  double tau = 10.0;
  double kappa = 0.9;
};

struct LdaConfig {
  int topics = 5;
  double alpha = 1.0;  // symmetric Dirichlet prior on paragraph-topic
  double eta = 0.01;   // symmetric Dirichlet prior on topic-word
  int iterations = 200;
  std::uint64_t seed = 42;
  int minibatch = 0;  // 0 = full batch CVB0
  StepSchedule schedule;
  bool deterministic = false;

  void validate() const;  // throws InvalidConfig
};

/// Expected-count statistics of a trained model. Row sums of n_theta
/// equal the paragraph lengths; column sums of n_phi equal n_z.
struct TopicModel {
  LdaConfig config;
  Vocabulary vocab;
  int paragraph_count = 0;
  int vocab_size = 0;
  std::vector<double> n_theta;  // P x K, row-major
  std::vector<double> n_phi;    // W x K, row-major
  std::vector<double> n_z;      // K
  std::vector<int> lengths;     // C_j per paragraph

  int topics() const { return config.topics; }
  double theta_count(int j, int k) const {
    return n_theta[static_cast<std::size_t>(j) * config.topics + k];
  }
  double phi_count(int w, int k) const {
    return n_phi[static_cast<std::size_t>(w) * config.topics + k];
  }
  long total_tokens() const;
};

using IterationCallback = std::function<void(const TopicModel&, int iteration)>;

// Batch CVB0 (minibatch = 0) or stochastic minibatch CVB0 with
// Robbins-Monro step sizes. Deterministic for a fixed seed. The callback,
// when given, runs after initialization (iteration 0) and after every
// full pass.
TopicModel train(const std::vector<Paragraph>& paragraphs,
                 const Vocabulary& vocab, const LdaConfig& cfg,
                 const IterationCallback& callback = {});

// theta_hat_jk = (n_theta_jk + alpha - 1) / (C_j + K*alpha - K),
// clamped at 0 when alpha < 1 drives the numerator negative.
// j, k are 0-based. Throws IndexOutOfRange, DegeneratePrior.
double theta_hat(const TopicModel& model, int j, int k);
double theta_hat_with_alpha(const TopicModel& model, int j, int k,
                            double alpha);

// Words ranked by descending expected topic-word count, ties broken
// lexicographically.
std::vector<std::pair<std::string, double>> top_words(const TopicModel& model,
                                                      int k, int n);

// exp(-mean per-token log-likelihood) under posterior-mean smoothing.
double perplexity(const TopicModel& model,
                  const std::vector<Paragraph>& paragraphs);

struct BlockCounts {
  int input = 0;
  int background = 0;
  int output = 0;
};

// Versioned text dump of (config, vocab, counts, block layout).
void save_model(const TopicModel& model, const BlockCounts& blocks,
                const std::string& path);
std::pair<TopicModel, BlockCounts> load_model(const std::string& path);

}  // namespace topicflow
