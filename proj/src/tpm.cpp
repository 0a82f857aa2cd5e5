#include "topicflow/tpm.hpp"

#include <algorithm>
#include <cmath>

#include "topicflow/error.hpp"

namespace topicflow {

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Same: return "Same";
    case Phase::Opposite: return "Opposite";
    case Phase::Flat: return "Flat";
  }
  return "?";
}

std::vector<double> component_weights(const TopicModel& model, Interval range) {
  if (range.size() <= 0)
    raise(ErrorCode::EmptyRange, "paragraph range is empty");
  if (range.begin < 0 || range.end > model.paragraph_count)
    raise(ErrorCode::IndexOutOfRange,
          "range [" + std::to_string(range.begin) + ", " +
              std::to_string(range.end) + ") outside " +
              std::to_string(model.paragraph_count) + " paragraphs");
  const int K = model.topics();
  std::vector<double> weights(K, 0.0);
  for (int j = range.begin; j < range.end; ++j)
    for (int k = 0; k < K; ++k) weights[k] += theta_hat(model, j, k);
  return weights;
}

bool GammaVector::fully_defined() const {
  return std::all_of(defined.begin(), defined.end(), [](bool b) { return b; });
}

GammaVector solve_gamma(const std::vector<double>& input_weights,
                        const std::vector<double>& background_weights,
                        const std::vector<double>& output_weights,
                        double epsilon) {
  const std::size_t K = input_weights.size();
  if (background_weights.size() != K || output_weights.size() != K)
    raise(ErrorCode::LengthMismatch, "I, B, O must share one topic count");
  GammaVector g;
  g.values.assign(K, 0.0);
  g.defined.assign(K, false);
  for (std::size_t k = 0; k < K; ++k) {
    const double bi = background_weights[k] * input_weights[k];
    if (bi >= epsilon) {
      g.values[k] = (output_weights[k] - background_weights[k]) / bi;
      g.defined[k] = true;
    }
  }
  return g;
}

std::vector<double> predict_output(const std::vector<double>& background_weights,
                                   const std::vector<double>& input_weights,
                                   const std::vector<double>& gamma) {
  const std::size_t K = background_weights.size();
  if (input_weights.size() != K || gamma.size() != K)
    raise(ErrorCode::LengthMismatch, "B, I, gamma must share one topic count");
  std::vector<double> out(K);
  for (std::size_t k = 0; k < K; ++k)
    out[k] = background_weights[k] +
             gamma[k] * background_weights[k] * input_weights[k];
  return out;
}

std::vector<double> predict_output(const std::vector<double>& background_weights,
                                   const std::vector<double>& input_weights,
                                   const GammaVector& gamma) {
  if (gamma.values.size() != background_weights.size())
    raise(ErrorCode::LengthMismatch, "B and gamma must share one topic count");
  if (!gamma.fully_defined())
    raise(ErrorCode::UndefinedGamma,
          "predict_output requires a fully defined gamma vector");
  return predict_output(background_weights, input_weights, gamma.values);
}

std::vector<ApproxEntry> approx_check(const TopicModel& model, Interval range,
                                      double alpha) {
  if (range.size() <= 0) raise(ErrorCode::EmptyRange, "paragraph range is empty");
  if (range.begin < 0 || range.end > model.paragraph_count)
    raise(ErrorCode::IndexOutOfRange, "range outside trained model");
  const int K = model.topics();
  const double P = static_cast<double>(range.size());

  double mean_len = 0;
  for (int j = range.begin; j < range.end; ++j) mean_len += model.lengths[j];
  mean_len /= P;

  // Shared factors of the equal-length form; alpha = 1 is the analytic
  // limit (the prior term vanishes).
  double prior_term = 0.0;
  double count_denom = 1.0;
  if (alpha != 1.0) {
    const double d1 = 1.0 / (alpha - 1.0) + K / mean_len;
    count_denom = 1.0 + (K / mean_len) * (alpha - 1.0);
    if (std::abs(d1) < 1e-300 || std::abs(count_denom) < 1e-300)
      raise(ErrorCode::DegeneratePrior, "approximation denominator vanishes");
    prior_term = 1.0 / d1;
  }

  std::vector<ApproxEntry> out(K);
  for (int k = 0; k < K; ++k) {
    double exact = 0;
    double mean_count = 0;
    for (int j = range.begin; j < range.end; ++j) {
      exact += theta_hat_with_alpha(model, j, k, alpha);
      mean_count += model.theta_count(j, k);
    }
    mean_count /= P;
    const double approx =
        (P / mean_len) * (prior_term + mean_count / count_denom);
    out[k].exact = exact;
    out[k].approximate = approx;
    const double scale = std::max(std::abs(exact), 1e-300);
    out[k].relative_deviation = std::abs(exact - approx) / scale;
  }
  return out;
}

std::vector<double> normalize_series(const std::vector<double>& weights) {
  double max = 0;
  for (double w : weights) max = std::max(max, w);
  if (!(max > 0))
    raise(ErrorCode::AllZeroSeries, "series has no strictly positive entry");
  std::vector<double> out(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) out[i] = weights[i] / max;
  return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (y.size() != n) raise(ErrorCode::LengthMismatch, "vector sizes differ");
  if (n < 2) raise(ErrorCode::InvalidConfig, "need at least 2 points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0) || !(syy > 0))
    raise(ErrorCode::ZeroVariance, "a series is constant");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<Phase> phase_classify(const std::vector<double>& a,
                                  const std::vector<double>& b,
                                  double tolerance) {
  const std::size_t n = a.size();
  if (b.size() != n) raise(ErrorCode::LengthMismatch, "vector sizes differ");
  if (n < 2) raise(ErrorCode::InvalidConfig, "need at least 2 topics");
  std::vector<Phase> out;
  out.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double da = a[i + 1] - a[i];
    const double db = b[i + 1] - b[i];
    if (std::abs(da) <= tolerance || std::abs(db) <= tolerance)
      out.push_back(Phase::Flat);
    else if ((da > 0) == (db > 0))
      out.push_back(Phase::Same);
    else
      out.push_back(Phase::Opposite);
  }
  return out;
}

TopicProcessResult topic_process(const TopicModel& model,
                                 const ParagraphRanges& ranges,
                                 double epsilon) {
  if (ranges.total() != model.paragraph_count)
    raise(ErrorCode::MismatchedCorpus,
          "paragraph ranges cover " + std::to_string(ranges.total()) +
              " paragraphs, model has " +
              std::to_string(model.paragraph_count));
  TopicProcessResult r;
  r.input_weights = component_weights(model, ranges.input());
  r.background_weights = component_weights(model, ranges.background());
  r.output_weights = component_weights(model, ranges.output());
  r.gamma = solve_gamma(r.input_weights, r.background_weights,
                        r.output_weights, epsilon);
  r.epsilon = epsilon;
  return r;
}

}  // namespace topicflow
