#pragma once

// The full response classifier: stacked GRU over frozen word embeddings,
// single-query scaled dot-product attention pooling, softmax head. The model
// reads a *response* and predicts which question-type cluster the question
// belongs to; it never sees answer annotations. Because the supervision is
// only the question type, the attention weights concentrate on the response
// tokens that discriminate between types — which is exactly the answer — and
// extract_answer() harvests them.
//
// Training is Adam on analytic gradients (cross-checked against finite
// differences in the tests) and is bit-reproducible for a fixed
// (data, config, seed).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "anspar/attention.hpp"
#include "anspar/confighash.hpp"
#include "anspar/corpus.hpp"
#include "anspar/embeddings.hpp"
#include "anspar/gru.hpp"
#include "anspar/matrix.hpp"
#include "anspar/rng.hpp"

namespace anspar {

struct TrainConfig {
  int layers = 1;
  int hidden_dim = 300;
  int d_k = 0;  // attention projection width; 0 means "use hidden_dim"
  int batch_size = 140;
  int epochs = 10;
  double learning_rate = 5e-4;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  std::uint64_t seed = 0;
};

struct GruAttnModel {
  int input_dim = 0;
  int hidden_dim = 0;
  int d_k = 0;
  int n_classes = 0;
  std::vector<GruParams> gru_layers;  // [0] maps input_dim -> hidden_dim, rest are square
  AttnParams attn;
  ClassifierHead head;
};

/// Builds and initializes a model from one seed. Draw order (GRU layers
/// bottom-up, then attention, then head) is part of the reproducibility
/// contract.
inline GruAttnModel make_gru_attn_model(int input_dim, int n_classes, const TrainConfig& cfg) {
  if (input_dim < 1) throw std::runtime_error("model: input_dim must be >= 1");
  if (cfg.layers < 1) throw std::runtime_error("model: layers must be >= 1");
  if (cfg.hidden_dim < 1) throw std::runtime_error("model: hidden_dim must be >= 1");
  GruAttnModel m;
  m.input_dim = input_dim;
  m.hidden_dim = cfg.hidden_dim;
  m.d_k = cfg.d_k > 0 ? cfg.d_k : cfg.hidden_dim;
  m.n_classes = n_classes;
  Rng rng(cfg.seed);
  for (int l = 0; l < cfg.layers; ++l) {
    m.gru_layers.emplace_back(l == 0 ? input_dim : cfg.hidden_dim, cfg.hidden_dim);
    m.gru_layers.back().init(rng);
  }
  m.attn = AttnParams(cfg.hidden_dim, m.d_k);
  m.attn.init(rng);
  m.head = ClassifierHead(m.d_k, n_classes);
  m.head.init(rng);
  return m;
}

struct HeadGrads {
  Matrix weight;
  Vec bias;

  explicit HeadGrads(const ClassifierHead& h)
      : weight(h.weight.rows, h.weight.cols), bias(h.bias.size(), 0.0) {}
};

struct ModelGrads {
  std::vector<GruGrads> gru_layers;
  AttnGrads attn;
  HeadGrads head;

  explicit ModelGrads(const GruAttnModel& m) : attn(m.attn), head(m.head) {
    gru_layers.reserve(m.gru_layers.size());
    for (const GruParams& layer : m.gru_layers) gru_layers.emplace_back(layer);
  }
};

/// Visits every parameter tensor as a flat Vec in one fixed order. Model and
/// gradient structs share field names, so the same traversal covers both —
/// which is what keeps Adam's slot assignment aligned.
template <class ModelLike, class F>
void for_each_tensor(ModelLike& m, F&& f) {
  for (auto& layer : m.gru_layers) {
    f(layer.U_z.data);
    f(layer.U_r.data);
    f(layer.U_h.data);
    f(layer.W_z.data);
    f(layer.W_r.data);
    f(layer.W_h.data);
    f(layer.b_z);
    f(layer.b_r);
    f(layer.b_h);
  }
  f(m.attn.key_proj.data);
  f(m.attn.value_proj.data);
  f(m.attn.query);
  f(m.head.weight.data);
  f(m.head.bias);
}

inline void zero_grads(ModelGrads& g) {
  for_each_tensor(g, [](Vec& v) { std::fill(v.begin(), v.end(), 0.0); });
}

inline void scale_grads(ModelGrads& g, double a) {
  for_each_tensor(g, [a](Vec& v) {
    for (double& x : v) x *= a;
  });
}

struct ForwardTrace {
  std::vector<GruCache> layers;
  AttnResult attn;
  Vec probs;
};

inline ForwardTrace model_forward(const GruAttnModel& m, const std::vector<Vec>& inputs) {
  if (inputs.empty()) throw std::runtime_error("model_forward: empty input sequence");
  ForwardTrace tr;
  tr.layers.reserve(m.gru_layers.size());
  const std::vector<Vec>* cur = &inputs;
  for (const GruParams& layer : m.gru_layers) {
    tr.layers.push_back(
        gru_forward_cache(layer, *cur, Vec(static_cast<size_t>(layer.hidden_dim), 0.0)));
    cur = &tr.layers.back().states;
  }
  tr.attn = attend(m.attn, *cur);
  tr.probs = classify(m.head, tr.attn.context);
  return tr;
}

/// Cross-entropy loss for one example plus full backward pass; gradients
/// accumulate into `g`. Deliberately unclamped: if the model drives the true
/// class's probability to zero the loss goes infinite and train() reports it
/// rather than papering over the divergence.
inline double example_backward(const GruAttnModel& m, const ForwardTrace& tr, int label,
                               ModelGrads& g) {
  const double loss = -std::log(tr.probs[static_cast<size_t>(label)]);

  Vec dlogits = tr.probs;  // softmax + CE: dL/dlogit = p - onehot
  dlogits[static_cast<size_t>(label)] -= 1.0;
  add_outer(g.head.weight, tr.attn.context, dlogits);
  axpy(g.head.bias, 1.0, dlogits);
  Vec d_context = vec_mat_t(dlogits, m.head.weight);

  const std::vector<Vec>& top_states = tr.layers.back().states;
  std::vector<Vec> d_states = attn_backward(m.attn, top_states, tr.attn, d_context, g.attn);

  for (size_t l = m.gru_layers.size(); l-- > 0;) {
    if (l == 0) {
      gru_backward(m.gru_layers[l], tr.layers[l], d_states, g.gru_layers[l]);
    } else {
      std::vector<Vec> d_inputs;
      gru_backward(m.gru_layers[l], tr.layers[l], d_states, g.gru_layers[l], &d_inputs);
      d_states = std::move(d_inputs);
    }
  }
  return loss;
}

struct AdamState {
  std::vector<Vec> m, v;
  long long step = 0;

  explicit AdamState(GruAttnModel& model) {
    for_each_tensor(model, [&](Vec& t) {
      m.emplace_back(t.size(), 0.0);
      v.emplace_back(t.size(), 0.0);
    });
  }
};

inline void adam_step(GruAttnModel& model, ModelGrads& grads, AdamState& st,
                      const TrainConfig& cfg) {
  ++st.step;
  const double bc1 = 1.0 - std::pow(cfg.adam_beta1, static_cast<double>(st.step));
  const double bc2 = 1.0 - std::pow(cfg.adam_beta2, static_cast<double>(st.step));
  std::vector<Vec*> ps, gs;
  for_each_tensor(model, [&](Vec& t) { ps.push_back(&t); });
  for_each_tensor(grads, [&](Vec& t) { gs.push_back(&t); });
  for (size_t k = 0; k < ps.size(); ++k) {
    Vec& p = *ps[k];
    Vec& g = *gs[k];
    Vec& mk = st.m[k];
    Vec& vk = st.v[k];
    for (size_t i = 0; i < p.size(); ++i) {
      mk[i] = cfg.adam_beta1 * mk[i] + (1.0 - cfg.adam_beta1) * g[i];
      vk[i] = cfg.adam_beta2 * vk[i] + (1.0 - cfg.adam_beta2) * g[i] * g[i];
      const double mhat = mk[i] / bc1;
      const double vhat = vk[i] / bc2;
      p[i] -= cfg.learning_rate * mhat / (std::sqrt(vhat) + cfg.adam_eps);
    }
  }
}

/// Embeds tokens through the frozen table, silently dropping OOV tokens.
/// `kept` (when given) receives the original index of each surviving token so
/// weights can be mapped back.
inline std::vector<Vec> embed_tokens(const EmbeddingTable& table, const TokenSeq& tokens,
                                     std::vector<size_t>* kept = nullptr) {
  std::vector<Vec> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (const Vec* v = table.find(tokens[i])) {
      out.push_back(*v);
      if (kept) kept->push_back(i);
    }
  }
  return out;
}

struct TrainHistory {
  std::vector<double> train_loss;    // per-epoch mean cross-entropy over seen examples
  std::vector<double> val_accuracy;  // per-epoch accuracy on the validation split
};

namespace detail {

struct EncodedPoint {
  std::vector<Vec> inputs;
  int label = 0;
};

inline std::vector<EncodedPoint> encode_points(const std::vector<DataPoint>& points,
                                               const EmbeddingTable& table, int n_classes,
                                               const char* split) {
  std::vector<EncodedPoint> out;
  out.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const DataPoint& p = points[i];
    if (!p.label)
      throw std::runtime_error(std::string(split) + " point " + std::to_string(i) +
                               " has no label");
    if (*p.label < 0 || *p.label >= n_classes)
      throw std::runtime_error(std::string(split) + " point " + std::to_string(i) +
                               ": label " + std::to_string(*p.label) + " out of range [0, " +
                               std::to_string(n_classes) + ")");
    EncodedPoint ep;
    ep.inputs = embed_tokens(table, preprocess_text(p.response));
    ep.label = *p.label;
    out.push_back(std::move(ep));
  }
  return out;
}

}  // namespace detail

/// Accuracy of the question-type prediction over labeled points. Responses
/// with no in-vocabulary token cannot be classified and count as wrong.
inline double evaluate_accuracy(const GruAttnModel& m, const EmbeddingTable& table,
                                const std::vector<DataPoint>& points) {
  if (points.empty()) throw std::runtime_error("evaluate_accuracy: no points");
  const auto encoded = detail::encode_points(points, table, m.n_classes, "eval");
  size_t correct = 0;
  for (const auto& ep : encoded) {
    if (ep.inputs.empty()) continue;
    const ForwardTrace tr = model_forward(m, ep.inputs);
    const auto arg =
        std::max_element(tr.probs.begin(), tr.probs.end()) - tr.probs.begin();
    if (static_cast<int>(arg) == ep.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(points.size());
}

/// Trains in place. Examples are bucketed by (in-vocabulary) sequence length;
/// each epoch shuffles within buckets and then the batch order, all from one
/// seeded generator, so runs are bit-identical. The batch loss is the mean
/// over its sequences; a non-finite batch loss aborts with the epoch and
/// batch named.
inline TrainHistory train(GruAttnModel& model, const std::vector<DataPoint>& train_points,
                          const std::vector<DataPoint>& val_points,
                          const EmbeddingTable& table, const TrainConfig& cfg) {
  if (cfg.batch_size < 1) throw std::runtime_error("train: batch_size must be >= 1");
  if (cfg.epochs < 0) throw std::runtime_error("train: epochs must be >= 0");
  if (cfg.learning_rate < 0.0) throw std::runtime_error("train: learning_rate must be >= 0");
  if (train_points.empty()) throw std::runtime_error("train: no training points");

  const auto encoded = detail::encode_points(train_points, table, model.n_classes, "train");
  // validate eagerly so label errors surface before any epoch runs
  const auto val_encoded = detail::encode_points(val_points, table, model.n_classes, "val");
  (void)val_encoded;

  std::map<size_t, std::vector<size_t>> buckets;  // sequence length -> example indices
  for (size_t i = 0; i < encoded.size(); ++i) {
    if (encoded[i].inputs.empty()) continue;  // nothing to read; skipped
    buckets[encoded[i].inputs.size()].push_back(i);
  }
  if (buckets.empty()) throw std::runtime_error("train: every response is out of vocabulary");

  Rng rng(cfg.seed);
  ModelGrads grads(model);
  AdamState adam(model);
  TrainHistory history;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::vector<std::vector<size_t>> batches;
    for (auto& [len, idxs] : buckets) {
      (void)len;
      rng.shuffle(idxs);
      for (size_t start = 0; start < idxs.size(); start += static_cast<size_t>(cfg.batch_size)) {
        const size_t stop = std::min(idxs.size(), start + static_cast<size_t>(cfg.batch_size));
        batches.emplace_back(idxs.begin() + static_cast<std::ptrdiff_t>(start),
                             idxs.begin() + static_cast<std::ptrdiff_t>(stop));
      }
    }
    rng.shuffle(batches);

    double loss_sum = 0.0;
    size_t seen = 0;
    for (size_t b = 0; b < batches.size(); ++b) {
      zero_grads(grads);
      double batch_loss = 0.0;
      for (size_t idx : batches[b]) {
        const ForwardTrace tr = model_forward(model, encoded[idx].inputs);
        batch_loss += example_backward(model, tr, encoded[idx].label, grads);
      }
      batch_loss /= static_cast<double>(batches[b].size());
      if (!std::isfinite(batch_loss))
        throw std::runtime_error("train: non-finite loss at epoch " + std::to_string(epoch) +
                                 ", batch " + std::to_string(b));
      scale_grads(grads, 1.0 / static_cast<double>(batches[b].size()));
      adam_step(model, grads, adam, cfg);
      loss_sum += batch_loss * static_cast<double>(batches[b].size());
      seen += batches[b].size();
    }
    history.train_loss.push_back(loss_sum / static_cast<double>(seen));
    history.val_accuracy.push_back(val_points.empty()
                                       ? 0.0
                                       : evaluate_accuracy(model, table, val_points));
  }
  return history;
}

/// Runs the trained model over a response and keeps the tokens the attention
/// concentrated on. OOV tokens never reach the model, so they can't be part
/// of the answer; an entirely out-of-vocabulary response is a no-match.
inline ParseResult parse_with_attention(const GruAttnModel& m, const EmbeddingTable& table,
                                        const std::string& response,
                                        const ExtractionConfig& cfg = {}) {
  const TokenSeq tokens = preprocess_text(response);
  std::vector<size_t> kept_idx;
  const std::vector<Vec> inputs = embed_tokens(table, tokens, &kept_idx);
  if (inputs.empty()) {
    ParseResult res;
    res.no_match = true;
    return res;
  }
  const ForwardTrace tr = model_forward(m, inputs);
  TokenSeq kept;
  kept.reserve(kept_idx.size());
  for (size_t i : kept_idx) kept.push_back(tokens[i]);
  return extract_answer(kept, tr.attn.weights, cfg);
}

/// Predicted question-type cluster for a response; nullopt when no token is
/// in vocabulary.
inline std::optional<int> predict_question_type(const GruAttnModel& m,
                                                const EmbeddingTable& table,
                                                const std::string& response) {
  const std::vector<Vec> inputs = embed_tokens(table, preprocess_text(response));
  if (inputs.empty()) return std::nullopt;
  const ForwardTrace tr = model_forward(m, inputs);
  return static_cast<int>(std::max_element(tr.probs.begin(), tr.probs.end()) -
                          tr.probs.begin());
}

// ---- checkpoint I/O ----
// JSON with explicit shape headers on every tensor. Doubles round-trip
// exactly through the serializer, so a reloaded model validates to the very
// same accuracy that was logged when it was saved.

namespace detail {

inline nlohmann::json matrix_json(const Matrix& m) {
  return nlohmann::json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
}

inline Matrix matrix_from_json(const nlohmann::json& j, const std::string& what) {
  Matrix m(j.at("rows").get<size_t>(), j.at("cols").get<size_t>());
  const auto data = j.at("data").get<Vec>();
  if (data.size() != m.rows * m.cols)
    throw std::runtime_error("checkpoint: " + what + ": data length " +
                             std::to_string(data.size()) + " != rows*cols " +
                             std::to_string(m.rows * m.cols));
  m.data = data;
  return m;
}

inline nlohmann::json vec_json(const Vec& v) {
  return nlohmann::json{{"len", v.size()}, {"data", v}};
}

inline Vec vec_from_json(const nlohmann::json& j, const std::string& what) {
  Vec v = j.at("data").get<Vec>();
  if (v.size() != j.at("len").get<size_t>())
    throw std::runtime_error("checkpoint: " + what + ": data length != len header");
  return v;
}

}  // namespace detail

inline nlohmann::json train_config_json(const TrainConfig& c) {
  return nlohmann::json{{"layers", c.layers},
                        {"hidden_dim", c.hidden_dim},
                        {"d_k", c.d_k},
                        {"batch_size", c.batch_size},
                        {"epochs", c.epochs},
                        {"learning_rate", c.learning_rate},
                        {"adam_beta1", c.adam_beta1},
                        {"adam_beta2", c.adam_beta2},
                        {"adam_eps", c.adam_eps},
                        {"seed", c.seed}};
}

inline TrainConfig train_config_from_json(const nlohmann::json& j) {
  TrainConfig c;
  c.layers = j.at("layers").get<int>();
  c.hidden_dim = j.at("hidden_dim").get<int>();
  c.d_k = j.at("d_k").get<int>();
  c.batch_size = j.at("batch_size").get<int>();
  c.epochs = j.at("epochs").get<int>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.adam_beta1 = j.at("adam_beta1").get<double>();
  c.adam_beta2 = j.at("adam_beta2").get<double>();
  c.adam_eps = j.at("adam_eps").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

struct Checkpoint {
  GruAttnModel model;
  TrainConfig config;
  TrainHistory history;
  double val_accuracy = 0.0;
};

inline void save_checkpoint(const std::string& path, const GruAttnModel& m,
                            const TrainConfig& cfg, const TrainHistory& history,
                            double val_accuracy) {
  nlohmann::json j;
  j["format"] = "anspar-gru-attn-checkpoint";
  j["version"] = 1;
  j["config"] = train_config_json(cfg);
  j["config_hash"] = fnv1a64_hex(j["config"].dump());
  j["seed"] = cfg.seed;
  j["input_dim"] = m.input_dim;
  j["hidden_dim"] = m.hidden_dim;
  j["d_k"] = m.d_k;
  j["n_classes"] = m.n_classes;
  j["layers"] = m.gru_layers.size();
  nlohmann::json layers = nlohmann::json::array();
  for (const GruParams& p : m.gru_layers) {
    layers.push_back(nlohmann::json{{"U_z", detail::matrix_json(p.U_z)},
                                    {"U_r", detail::matrix_json(p.U_r)},
                                    {"U_h", detail::matrix_json(p.U_h)},
                                    {"W_z", detail::matrix_json(p.W_z)},
                                    {"W_r", detail::matrix_json(p.W_r)},
                                    {"W_h", detail::matrix_json(p.W_h)},
                                    {"b_z", detail::vec_json(p.b_z)},
                                    {"b_r", detail::vec_json(p.b_r)},
                                    {"b_h", detail::vec_json(p.b_h)}});
  }
  j["gru_layers"] = std::move(layers);
  j["attn"] = nlohmann::json{{"key_proj", detail::matrix_json(m.attn.key_proj)},
                             {"value_proj", detail::matrix_json(m.attn.value_proj)},
                             {"query", detail::vec_json(m.attn.query)}};
  j["head"] = nlohmann::json{{"weight", detail::matrix_json(m.head.weight)},
                             {"bias", detail::vec_json(m.head.bias)}};
  j["val_accuracy"] = val_accuracy;
  j["history"] =
      nlohmann::json{{"train_loss", history.train_loss}, {"val_accuracy", history.val_accuracy}};

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
  out << j.dump() << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("checkpoint " + path + ": bad JSON: " + e.what());
  }
  if (j.value("format", "") != "anspar-gru-attn-checkpoint")
    throw std::runtime_error("checkpoint " + path + ": unrecognized format");

  Checkpoint ck;
  ck.config = train_config_from_json(j.at("config"));
  GruAttnModel& m = ck.model;
  m.input_dim = j.at("input_dim").get<int>();
  m.hidden_dim = j.at("hidden_dim").get<int>();
  m.d_k = j.at("d_k").get<int>();
  m.n_classes = j.at("n_classes").get<int>();

  const auto& layers = j.at("gru_layers");
  if (layers.size() != j.at("layers").get<size_t>())
    throw std::runtime_error("checkpoint: layer count mismatch");
  for (size_t l = 0; l < layers.size(); ++l) {
    const int in_dim = l == 0 ? m.input_dim : m.hidden_dim;
    GruParams p(in_dim, m.hidden_dim);
    const auto& lj = layers[l];
    const std::string tag = "gru_layers[" + std::to_string(l) + "]";
    p.U_z = detail::matrix_from_json(lj.at("U_z"), tag + ".U_z");
    p.U_r = detail::matrix_from_json(lj.at("U_r"), tag + ".U_r");
    p.U_h = detail::matrix_from_json(lj.at("U_h"), tag + ".U_h");
    p.W_z = detail::matrix_from_json(lj.at("W_z"), tag + ".W_z");
    p.W_r = detail::matrix_from_json(lj.at("W_r"), tag + ".W_r");
    p.W_h = detail::matrix_from_json(lj.at("W_h"), tag + ".W_h");
    p.b_z = detail::vec_from_json(lj.at("b_z"), tag + ".b_z");
    p.b_r = detail::vec_from_json(lj.at("b_r"), tag + ".b_r");
    p.b_h = detail::vec_from_json(lj.at("b_h"), tag + ".b_h");
    if (p.U_z.rows != static_cast<size_t>(in_dim) ||
        p.U_z.cols != static_cast<size_t>(m.hidden_dim))
      throw std::runtime_error("checkpoint: " + tag + " has wrong shape for declared dims");
    check_dim(p.b_z.size(), static_cast<size_t>(m.hidden_dim), "checkpoint gru bias");
    m.gru_layers.push_back(std::move(p));
  }

  m.attn = AttnParams(m.hidden_dim, m.d_k);
  m.attn.key_proj = detail::matrix_from_json(j.at("attn").at("key_proj"), "attn.key_proj");
  m.attn.value_proj = detail::matrix_from_json(j.at("attn").at("value_proj"), "attn.value_proj");
  m.attn.query = detail::vec_from_json(j.at("attn").at("query"), "attn.query");
  if (m.attn.key_proj.rows != static_cast<size_t>(m.hidden_dim) ||
      m.attn.key_proj.cols != static_cast<size_t>(m.d_k))
    throw std::runtime_error("checkpoint: attn.key_proj has wrong shape for declared dims");
  check_dim(m.attn.query.size(), static_cast<size_t>(m.d_k), "checkpoint attn query");

  m.head = ClassifierHead(m.d_k, m.n_classes);
  m.head.weight = detail::matrix_from_json(j.at("head").at("weight"), "head.weight");
  m.head.bias = detail::vec_from_json(j.at("head").at("bias"), "head.bias");
  if (m.head.weight.rows != static_cast<size_t>(m.d_k) ||
      m.head.weight.cols != static_cast<size_t>(m.n_classes))
    throw std::runtime_error("checkpoint: head.weight has wrong shape for declared dims");
  check_dim(m.head.bias.size(), static_cast<size_t>(m.n_classes), "checkpoint head bias");

  ck.val_accuracy = j.at("val_accuracy").get<double>();
  if (j.contains("history")) {
    ck.history.train_loss = j.at("history").at("train_loss").get<std::vector<double>>();
    ck.history.val_accuracy = j.at("history").at("val_accuracy").get<std::vector<double>>();
  }
  return ck;
}

}  // namespace anspar
