#include "topicflow/lda.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "topicflow/error.hpp"

namespace topicflow {

namespace {
constexpr const char* kModelMagic = "TOPICFLOW_MODEL";
constexpr int kModelVersion = 1;
}  // namespace

void LdaConfig::validate() const {
  if (topics < 1) raise(ErrorCode::InvalidConfig, "topics must be >= 1");
  if (!(alpha > 0)) raise(ErrorCode::InvalidConfig, "alpha must be > 0");
  if (!(eta > 0)) raise(ErrorCode::InvalidConfig, "eta must be > 0");
  if (iterations < 1) raise(ErrorCode::InvalidConfig, "iterations must be >= 1");
  if (minibatch < 0) raise(ErrorCode::InvalidConfig, "minibatch must be >= 0");
  if (!(schedule.s > 0) || !(schedule.tau > 0) || !(schedule.kappa > 0))
    raise(ErrorCode::InvalidConfig, "step schedule parameters must be > 0");
}

long TopicModel::total_tokens() const {
  long n = 0;
  for (int c : lengths) n += c;
  return n;
}

namespace {

struct Workspace {
  TopicModel model;
  long total_tokens = 0;
};

Workspace init_model(const std::vector<Paragraph>& paragraphs,
                     const Vocabulary& vocab, const LdaConfig& cfg) {
  cfg.validate();
  if (paragraphs.empty()) raise(ErrorCode::EmptyCorpus, "no paragraphs");
  if (vocab.size() == 0) raise(ErrorCode::EmptyCorpus, "empty vocabulary");

  Workspace ws;
  TopicModel& m = ws.model;
  m.config = cfg;
  m.vocab = vocab;
  m.paragraph_count = static_cast<int>(paragraphs.size());
  m.vocab_size = vocab.size();
  const int K = cfg.topics;
  m.n_theta.assign(static_cast<std::size_t>(m.paragraph_count) * K, 0.0);
  m.n_phi.assign(static_cast<std::size_t>(m.vocab_size) * K, 0.0);
  m.n_z.assign(K, 0.0);
  m.lengths.reserve(m.paragraph_count);
  for (const auto& p : paragraphs) {
    if (p.length() == 0) raise(ErrorCode::EmptyCorpus, "empty paragraph");
    for (int w : p.tokens)
      if (w < 0 || w >= m.vocab_size)
        raise(ErrorCode::UnseenWord,
              "token id " + std::to_string(w) + " outside vocabulary");
    m.lengths.push_back(p.length());
    ws.total_tokens += p.length();
  }
  return ws;
}

// Draws a symmetric Dirichlet(1) point into out[0..K).
void draw_responsibility(std::mt19937_64& rng, int K, double* out) {
  std::exponential_distribution<double> expd(1.0);
  double sum = 0;
  for (int k = 0; k < K; ++k) {
    out[k] = expd(rng);
    sum += out[k];
  }
  for (int k = 0; k < K; ++k) out[k] /= sum;
}

void train_batch(const std::vector<Paragraph>& paragraphs, Workspace& ws,
                 const IterationCallback& callback) {
  TopicModel& m = ws.model;
  const int K = m.config.topics;
  const int P = m.paragraph_count;
  const double alpha = m.config.alpha;
  const double eta = m.config.eta;
  const double w_eta = m.vocab_size * eta;

  // Per-token responsibilities, flattened in paragraph order.
  std::vector<double> resp(static_cast<std::size_t>(ws.total_tokens) * K);
  std::mt19937_64 rng(m.config.seed);
  {
    std::size_t off = 0;
    for (int j = 0; j < P; ++j) {
      double* th = &m.n_theta[static_cast<std::size_t>(j) * K];
      for (int w : paragraphs[j].tokens) {
        double* g = &resp[off];
        draw_responsibility(rng, K, g);
        double* ph = &m.n_phi[static_cast<std::size_t>(w) * K];
        for (int k = 0; k < K; ++k) {
          th[k] += g[k];
          ph[k] += g[k];
          m.n_z[k] += g[k];
        }
        off += K;
      }
    }
  }
  if (callback) callback(m, 0);

  for (int it = 1; it <= m.config.iterations; ++it) {
    std::size_t off = 0;
    for (int j = 0; j < P; ++j) {
      double* th = &m.n_theta[static_cast<std::size_t>(j) * K];
      for (int w : paragraphs[j].tokens) {
        double* g = &resp[off];
        double* ph = &m.n_phi[static_cast<std::size_t>(w) * K];
        // Exclude this token's own expected count, then re-estimate.
        double sum = 0;
        for (int k = 0; k < K; ++k) {
          double tk = std::max(0.0, th[k] - g[k]);
          double pk = std::max(0.0, ph[k] - g[k]);
          double zk = std::max(0.0, m.n_z[k] - g[k]);
          double v = (pk + eta) * (tk + alpha) / (zk + w_eta);
          th[k] = tk;
          ph[k] = pk;
          m.n_z[k] = zk;
          g[k] = v;
          sum += v;
        }
        for (int k = 0; k < K; ++k) {
          g[k] /= sum;
          th[k] += g[k];
          ph[k] += g[k];
          m.n_z[k] += g[k];
        }
        off += K;
      }
    }
    if (callback) callback(m, it);
  }
}

void train_stochastic(const std::vector<Paragraph>& paragraphs, Workspace& ws,
                      const IterationCallback& callback) {
  TopicModel& m = ws.model;
  const int K = m.config.topics;
  const int P = m.paragraph_count;
  const double alpha = m.config.alpha;
  const double eta = m.config.eta;
  const double w_eta = m.vocab_size * eta;
  const double N = static_cast<double>(ws.total_tokens);
  const StepSchedule& sch = m.config.schedule;
  const int batch = std::min(m.config.minibatch, P);

  std::mt19937_64 rng(m.config.seed);
  {
    std::vector<double> g(K);
    for (int j = 0; j < P; ++j) {
      double* th = &m.n_theta[static_cast<std::size_t>(j) * K];
      for (int w : paragraphs[j].tokens) {
        draw_responsibility(rng, K, g.data());
        double* ph = &m.n_phi[static_cast<std::size_t>(w) * K];
        for (int k = 0; k < K; ++k) {
          th[k] += g[k];
          ph[k] += g[k];
          m.n_z[k] += g[k];
        }
      }
    }
  }
  if (callback) callback(m, 0);

  std::vector<double> g(K);
  std::vector<double> hat_phi(m.n_phi.size());
  std::vector<double> hat_z(K);
  long step = 0;
  for (int it = 1; it <= m.config.iterations; ++it) {
    for (int start = 0; start < P; start += batch) {
      const int stop = std::min(start + batch, P);
      const double rho =
          std::min(1.0, sch.s / std::pow(sch.tau + step, sch.kappa));
      ++step;
      std::fill(hat_phi.begin(), hat_phi.end(), 0.0);
      std::fill(hat_z.begin(), hat_z.end(), 0.0);
      long batch_tokens = 0;
      for (int j = start; j < stop; ++j) {
        double* th = &m.n_theta[static_cast<std::size_t>(j) * K];
        const double cj = static_cast<double>(m.lengths[j]);
        batch_tokens += m.lengths[j];
        for (int w : paragraphs[j].tokens) {
          const double* ph = &m.n_phi[static_cast<std::size_t>(w) * K];
          double sum = 0;
          for (int k = 0; k < K; ++k) {
            g[k] = (ph[k] + eta) * (th[k] + alpha) / (m.n_z[k] + w_eta);
            sum += g[k];
          }
          double* hp = &hat_phi[static_cast<std::size_t>(w) * K];
          for (int k = 0; k < K; ++k) {
            g[k] /= sum;
            // Online average keeps the row sum at C_j.
            th[k] = (1.0 - rho) * th[k] + rho * cj * g[k];
            hp[k] += g[k];
            hat_z[k] += g[k];
          }
        }
      }
      const double scale = N / static_cast<double>(batch_tokens);
      for (std::size_t i = 0; i < m.n_phi.size(); ++i)
        m.n_phi[i] = (1.0 - rho) * m.n_phi[i] + rho * scale * hat_phi[i];
      for (int k = 0; k < K; ++k)
        m.n_z[k] = (1.0 - rho) * m.n_z[k] + rho * scale * hat_z[k];
    }
    if (callback) callback(m, it);
  }
}

}  // namespace

TopicModel train(const std::vector<Paragraph>& paragraphs,
                 const Vocabulary& vocab, const LdaConfig& cfg,
                 const IterationCallback& callback) {
  Workspace ws = init_model(paragraphs, vocab, cfg);
  if (cfg.minibatch > 0)
    train_stochastic(paragraphs, ws, callback);
  else
    train_batch(paragraphs, ws, callback);
  return std::move(ws.model);
}

double theta_hat_with_alpha(const TopicModel& model, int j, int k,
                            double alpha) {
  if (j < 0 || j >= model.paragraph_count || k < 0 || k >= model.topics())
    raise(ErrorCode::IndexOutOfRange,
          "paragraph " + std::to_string(j) + ", topic " + std::to_string(k));
  const double denom =
      model.lengths[j] + model.topics() * alpha - model.topics();
  if (!(denom > 0))
    raise(ErrorCode::DegeneratePrior,
          "C_j + K*(alpha - 1) = " + std::to_string(denom));
  const double num = model.theta_count(j, k) + alpha - 1.0;
  return num < 0 ? 0.0 : num / denom;
}

double theta_hat(const TopicModel& model, int j, int k) {
  return theta_hat_with_alpha(model, j, k, model.config.alpha);
}

std::vector<std::pair<std::string, double>> top_words(const TopicModel& model,
                                                      int k, int n) {
  if (k < 0 || k >= model.topics())
    raise(ErrorCode::IndexOutOfRange, "topic " + std::to_string(k));
  if (n < 0) raise(ErrorCode::InvalidConfig, "n must be >= 0");
  std::vector<std::pair<std::string, double>> ranked;
  ranked.reserve(model.vocab_size);
  for (int w = 0; w < model.vocab_size; ++w)
    ranked.emplace_back(model.vocab.tokens[w], model.phi_count(w, k));
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  ranked.resize(std::min<std::size_t>(ranked.size(), n));
  return ranked;
}

double perplexity(const TopicModel& model,
                  const std::vector<Paragraph>& paragraphs) {
  const int K = model.topics();
  const double alpha = model.config.alpha;
  const double eta = model.config.eta;
  const double w_eta = model.vocab_size * eta;

  // Posterior-mean smoothing on both factors.
  std::vector<double> phi(model.n_phi.size());
  for (int w = 0; w < model.vocab_size; ++w)
    for (int k = 0; k < K; ++k)
      phi[static_cast<std::size_t>(w) * K + k] =
          (model.phi_count(w, k) + eta) / (model.n_z[k] + w_eta);

  double ll = 0;
  long tokens = 0;
  std::vector<double> theta(K);
  for (std::size_t j = 0; j < paragraphs.size(); ++j) {
    if (static_cast<int>(j) >= model.paragraph_count)
      raise(ErrorCode::IndexOutOfRange, "paragraph beyond trained model");
    const double denom = model.lengths[j] + K * alpha;
    for (int k = 0; k < K; ++k)
      theta[k] = (model.theta_count(static_cast<int>(j), k) + alpha) / denom;
    for (int w : paragraphs[j].tokens) {
      if (w < 0 || w >= model.vocab_size)
        raise(ErrorCode::UnseenWord, "token id " + std::to_string(w));
      double p = 0;
      const double* ph = &phi[static_cast<std::size_t>(w) * K];
      for (int k = 0; k < K; ++k) p += theta[k] * ph[k];
      ll += std::log(p);
      ++tokens;
    }
  }
  if (tokens == 0) raise(ErrorCode::EmptyCorpus, "no tokens to score");
  return std::exp(-ll / static_cast<double>(tokens));
}

void save_model(const TopicModel& model, const BlockCounts& blocks,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::IoError, "cannot write model: " + path);
  out.precision(17);
  out << kModelMagic << " " << kModelVersion << "\n";
  const LdaConfig& c = model.config;
  out << "config " << c.topics << " " << c.alpha << " " << c.eta << " "
      << c.iterations << " " << c.seed << " " << c.minibatch << " "
      << c.schedule.s << " " << c.schedule.tau << " " << c.schedule.kappa
      << "\n";
  out << "blocks " << blocks.input << " " << blocks.background << " "
      << blocks.output << "\n";
  out << "vocab " << model.vocab_size << "\n";
  for (int w = 0; w < model.vocab_size; ++w)
    out << model.vocab.tokens[w] << " " << model.vocab.frequency[w] << "\n";
  out << "lengths " << model.paragraph_count << "\n";
  for (int c_j : model.lengths) out << c_j << "\n";
  auto dump = [&](const char* name, const std::vector<double>& v) {
    out << name << " " << v.size() << "\n";
    for (double x : v) out << x << "\n";
  };
  dump("n_theta", model.n_theta);
  dump("n_phi", model.n_phi);
  dump("n_z", model.n_z);
  if (!out) raise(ErrorCode::IoError, "write failure: " + path);
}

std::pair<TopicModel, BlockCounts> load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::MissingFile, "model file: " + path);
  std::string magic, word;
  int version = 0;
  if (!(in >> magic >> version) || magic != kModelMagic)
    raise(ErrorCode::ParseError, "not a model file: " + path);
  if (version != kModelVersion)
    raise(ErrorCode::VersionMismatch,
          "model format version " + std::to_string(version) + ", expected " +
              std::to_string(kModelVersion));

  TopicModel m;
  BlockCounts blocks;
  LdaConfig& c = m.config;
  auto expect = [&](const char* key) {
    if (!(in >> word) || word != key)
      raise(ErrorCode::ParseError,
            std::string("model file: expected '") + key + "', got '" + word + "'");
  };
  expect("config");
  if (!(in >> c.topics >> c.alpha >> c.eta >> c.iterations >> c.seed >>
        c.minibatch >> c.schedule.s >> c.schedule.tau >> c.schedule.kappa))
    raise(ErrorCode::ParseError, "model file: bad config line");
  expect("blocks");
  if (!(in >> blocks.input >> blocks.background >> blocks.output))
    raise(ErrorCode::ParseError, "model file: bad blocks line");
  expect("vocab");
  if (!(in >> m.vocab_size) || m.vocab_size < 1)
    raise(ErrorCode::ParseError, "model file: bad vocab size");
  for (int w = 0; w < m.vocab_size; ++w) {
    std::string tok;
    long freq = 0;
    if (!(in >> tok >> freq))
      raise(ErrorCode::ParseError, "model file: truncated vocabulary");
    m.vocab.ids.emplace(tok, w);
    m.vocab.tokens.push_back(tok);
    m.vocab.frequency.push_back(freq);
  }
  expect("lengths");
  if (!(in >> m.paragraph_count) || m.paragraph_count < 1)
    raise(ErrorCode::ParseError, "model file: bad paragraph count");
  m.lengths.resize(m.paragraph_count);
  for (int& v : m.lengths)
    if (!(in >> v)) raise(ErrorCode::ParseError, "model file: truncated lengths");
  auto read_vec = [&](const char* key, std::vector<double>& v) {
    expect(key);
    std::size_t n = 0;
    if (!(in >> n)) raise(ErrorCode::ParseError, "model file: bad vector size");
    v.resize(n);
    for (double& x : v)
      if (!(in >> x))
        raise(ErrorCode::ParseError,
              std::string("model file: truncated ") + key);
  };
  read_vec("n_theta", m.n_theta);
  read_vec("n_phi", m.n_phi);
  read_vec("n_z", m.n_z);
  const std::size_t K = static_cast<std::size_t>(c.topics);
  if (m.n_theta.size() != static_cast<std::size_t>(m.paragraph_count) * K ||
      m.n_phi.size() != static_cast<std::size_t>(m.vocab_size) * K ||
      m.n_z.size() != K)
    raise(ErrorCode::ParseError, "model file: inconsistent dimensions");
  return {std::move(m), blocks};
}

}  // namespace topicflow
