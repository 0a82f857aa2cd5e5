#pragma once

#include <vector>

#include "topicflow/lda.hpp"

namespace topicflow {

/// 0-based half-open interval over the pooled paragraph list.
struct Interval {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
};

/// Contiguous block layout Input -> Background -> Output.
struct ParagraphRanges {
  int input_count = 0;
  int background_count = 0;
  int output_count = 0;

  Interval input() const { return {0, input_count}; }
  Interval background() const {
    return {input_count, input_count + background_count};
  }
  Interval output() const {
    return {input_count + background_count,
            input_count + background_count + output_count};
  }
  int total() const { return input_count + background_count + output_count; }
};

// Sum of theta_hat(j, k) over the interval, per topic. Throws EmptyRange,
// IndexOutOfRange.
std::vector<double> component_weights(const TopicModel& model, Interval range);

struct GammaVector {
  std::vector<double> values;   // meaningful only where defined
  std::vector<bool> defined;    // gamma_k defined iff B_k * I_k >= epsilon
  int size() const { return static_cast<int>(values.size()); }
  bool fully_defined() const;
};

// gamma_k = (O_k - B_k) / (B_k * I_k) where B_k * I_k >= epsilon.
GammaVector solve_gamma(const std::vector<double>& input_weights,
                        const std::vector<double>& background_weights,
                        const std::vector<double>& output_weights,
                        double epsilon);

// O_k = B_k + gamma_k * B_k * I_k. Throws UndefinedGamma on any
// undefined entry.
std::vector<double> predict_output(const std::vector<double>& background_weights,
                                   const std::vector<double>& input_weights,
                                   const GammaVector& gamma);
std::vector<double> predict_output(const std::vector<double>& background_weights,
                                   const std::vector<double>& input_weights,
                                   const std::vector<double>& gamma);

struct ApproxEntry {
  double exact = 0;        // direct per-paragraph sum
  double approximate = 0;  // equal-length approximation via mean counts
  double relative_deviation = 0;
};

// Compares the exact component weight against its equal-length
// approximation, per topic. At alpha = 1 the approximation is evaluated
// in its analytic limit.
std::vector<ApproxEntry> approx_check(const TopicModel& model, Interval range,
                                      double alpha);

// Divides by the series maximum so the largest entry is 1.
std::vector<double> normalize_series(const std::vector<double>& weights);

// Sample Pearson correlation coefficient.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

enum class Phase { Same, Opposite, Flat };
const char* to_string(Phase p);

// Consecutive-difference sign agreement between two topic series.
std::vector<Phase> phase_classify(const std::vector<double>& a,
                                  const std::vector<double>& b,
                                  double tolerance = 1e-9);

struct TopicProcessResult {
  std::vector<double> input_weights;       // I_k
  std::vector<double> background_weights;  // B_k
  std::vector<double> output_weights;      // O_k
  GammaVector gamma;
  double epsilon = 1e-9;

  int topics() const { return static_cast<int>(input_weights.size()); }
};

TopicProcessResult topic_process(const TopicModel& model,
                                 const ParagraphRanges& ranges,
                                 double epsilon = 1e-9);

}  // namespace topicflow
