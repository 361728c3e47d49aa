#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "anspar/attention.hpp"
#include "anspar/attnmodel.hpp"
#include "anspar/gru.hpp"
#include "anspar/rng.hpp"
#include "oracles.hpp"

using anspar::AttnParams;
using anspar::AttnResult;
using anspar::ClassifierHead;
using anspar::ExtractionConfig;
using anspar::GruAttnModel;
using anspar::GruParams;
using anspar::Matrix;
using anspar::ModelGrads;
using anspar::ParseResult;
using anspar::Rng;
using anspar::TokenSeq;
using anspar::TrainConfig;
using anspar::Vec;

namespace {

std::vector<Vec> random_sequence(Rng& rng, size_t t, size_t dim, double lo = -2.0,
                                 double hi = 2.0) {
  std::vector<Vec> xs(t, Vec(dim));
  for (auto& x : xs) {
    for (double& v : x) v = rng.uniform(lo, hi);
  }
  return xs;
}

double rel_err(double a, double f) {
  return std::fabs(a - f) / std::max({std::fabs(a), std::fabs(f), 1e-6});
}

}  // namespace

// ---- forward parity against the scalar-loop evaluator ----

TEST_CASE("gru forward matches the scalar-loop evaluator") {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(9000 + static_cast<std::uint64_t>(trial));
    const size_t E = 1 + trial % 4;
    const size_t H = 1 + (trial / 4) % 5;
    const size_t T = 1 + trial % 6;

    GruParams p(static_cast<int>(E), static_cast<int>(H));
    p.init(rng);
    for (Vec* b : {&p.b_z, &p.b_r, &p.b_h}) {
      for (double& v : *b) v = rng.uniform(-0.5, 0.5);
    }
    const auto xs = random_sequence(rng, T, E);
    Vec s0(H);
    for (double& v : s0) v = rng.uniform(-0.9, 0.9);

    oracle::ScalarGru ref;
    ref.E = E;
    ref.H = H;
    ref.Uz = p.U_z.data;
    ref.Ur = p.U_r.data;
    ref.Uh = p.U_h.data;
    ref.Wz = p.W_z.data;
    ref.Wr = p.W_r.data;
    ref.Wh = p.W_h.data;
    ref.bz = p.b_z;
    ref.br = p.b_r;
    ref.bh = p.b_h;

    const auto got = anspar::gru_forward(p, xs, s0);
    const auto want = oracle::gru_scalar_forward(ref, xs, s0);
    REQUIRE(got.size() == want.size());
    for (size_t t = 0; t < got.size(); ++t) {
      for (size_t j = 0; j < H; ++j) {
        REQUIRE(std::fabs(got[t][j] - want[t][j]) < 1e-12);
      }
    }
  }
}

TEST_CASE("zero parameters and zero start keep the state at zero") {
  GruParams p(3, 4);  // all weights and biases are zero by construction
  Rng rng(1);
  const auto xs = random_sequence(rng, 5, 3);
  const auto states = anspar::gru_forward(p, xs, Vec(4, 0.0));
  for (const Vec& s : states) {
    for (double v : s) REQUIRE(v == 0.0);
  }
}

TEST_CASE("saturated gates pin the state at the tanh ceiling") {
  GruParams p(2, 3);
  for (double& v : p.b_z) v = -50.0;  // z ~ 0: state follows the candidate
  for (double& v : p.b_h) v = 50.0;   // h ~ +1
  Rng rng(7);
  const auto xs = random_sequence(rng, 4, 2, -0.1, 0.1);
  const auto states = anspar::gru_forward(p, xs, Vec(3, 0.0));
  for (const Vec& s : states) {
    // tanh(50) rounds to 1.0 in double precision, so allow equality here;
    // the strict (-1, 1) bound is asserted separately at moderate magnitudes.
    for (double v : s) {
      REQUIRE(v > 0.999);
      REQUIRE(v <= 1.0);
    }
  }
}

TEST_CASE("states stay strictly inside (-1, 1) from a zero start") {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(3100 + static_cast<std::uint64_t>(trial));
    GruParams p(3, 4);
    p.init(rng);
    for (Vec* b : {&p.b_z, &p.b_r, &p.b_h}) {
      for (double& v : *b) v = rng.uniform(-3.0, 3.0);
    }
    const auto xs = random_sequence(rng, 8, 3, -5.0, 5.0);
    const auto states = anspar::gru_forward(p, xs, Vec(4, 0.0));
    for (const Vec& s : states) {
      for (double v : s) {
        REQUIRE(v > -1.0);
        REQUIRE(v < 1.0);
      }
    }
  }
}

TEST_CASE("gru rejects bad dimensions and non-finite states") {
  GruParams p(3, 4);
  Rng rng(5);
  p.init(rng);
  SECTION("input width mismatch") {
    REQUIRE_THROWS(anspar::gru_forward(p, {Vec(2, 0.0)}, Vec(4, 0.0)));
  }
  SECTION("s0 width mismatch") {
    REQUIRE_THROWS(anspar::gru_forward(p, {Vec(3, 0.0)}, Vec(3, 0.0)));
  }
  SECTION("NaN input is reported at its step") {
    std::vector<Vec> xs = {Vec(3, 0.1), Vec(3, std::numeric_limits<double>::quiet_NaN())};
    REQUIRE_THROWS_WITH(anspar::gru_forward(p, xs, Vec(4, 0.0)),
                        Catch::Matchers::ContainsSubstring("non-finite"));
  }
}

// ---- attention invariants ----

TEST_CASE("attention weights form a distribution and match the direct evaluation") {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(4200 + static_cast<std::uint64_t>(trial));
    const size_t H = 1 + trial % 5;
    const size_t Dk = 1 + (trial / 5) % 4;
    const size_t T = 1 + trial % 7;
    AttnParams p(static_cast<int>(H), static_cast<int>(Dk));
    p.init(rng);
    const auto states = random_sequence(rng, T, H, -3.0, 3.0);

    const AttnResult res = anspar::attend(p, states);
    double sum = 0.0;
    for (double w : res.weights) {
      REQUIRE(w >= 0.0);
      REQUIRE(w <= 1.0);
      sum += w;
    }
    REQUIRE(std::fabs(sum - 1.0) < 1e-9);

    oracle::ScalarAttn ref;
    ref.H = H;
    ref.Dk = Dk;
    ref.key_proj = p.key_proj.data;
    ref.value_proj = p.value_proj.data;
    ref.query = p.query;
    std::vector<double> want_w, want_c;
    oracle::attend_scalar(ref, states, want_w, want_c);
    for (size_t t = 0; t < T; ++t) REQUIRE(std::fabs(res.weights[t] - want_w[t]) < 1e-12);
    for (size_t j = 0; j < Dk; ++j) REQUIRE(std::fabs(res.context[j] - want_c[j]) < 1e-12);
  }
}

TEST_CASE("a single state takes all the attention") {
  Rng rng(11);
  AttnParams p(4, 3);
  p.init(rng);
  const auto states = random_sequence(rng, 1, 4);
  const AttnResult res = anspar::attend(p, states);
  REQUIRE(res.weights.size() == 1);
  REQUIRE(res.weights[0] == 1.0);
}

TEST_CASE("identical states attract exactly uniform attention") {
  Rng rng(12);
  AttnParams p(3, 2);
  p.init(rng);
  Vec s(3);
  for (double& v : s) v = rng.uniform(-1.0, 1.0);
  for (size_t T : {2, 3, 5, 8}) {
    const std::vector<Vec> states(T, s);
    const AttnResult res = anspar::attend(p, states);
    for (double w : res.weights) REQUIRE(w == 1.0 / static_cast<double>(T));
  }
}

TEST_CASE("attention rejects an empty sequence") {
  Rng rng(13);
  AttnParams p(3, 2);
  p.init(rng);
  REQUIRE_THROWS(anspar::attend(p, {}));
}

// ---- classifier head ----

TEST_CASE("classifier probabilities sum to one and ignore constant logit shifts") {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(6600 + static_cast<std::uint64_t>(trial));
    const int dk = 1 + trial % 4;
    const int classes = 2 + trial % 5;
    ClassifierHead head(dk, classes);
    head.init(rng);
    for (double& b : head.bias) b = rng.uniform(-1.0, 1.0);
    Vec ctx(static_cast<size_t>(dk));
    for (double& v : ctx) v = rng.uniform(-2.0, 2.0);

    const Vec probs = anspar::classify(head, ctx);
    double sum = 0.0;
    for (double v : probs) sum += v;
    REQUIRE(std::fabs(sum - 1.0) < 1e-9);

    const double shift = rng.uniform(-10.0, 10.0);
    ClassifierHead shifted = head;
    for (double& b : shifted.bias) b += shift;
    const Vec probs2 = anspar::classify(shifted, ctx);
    for (int c = 0; c < classes; ++c) {
      REQUIRE(std::fabs(probs[static_cast<size_t>(c)] - probs2[static_cast<size_t>(c)]) < 1e-9);
    }
  }
}

TEST_CASE("zero-parameter head over four classes gives exactly 0.25 each") {
  ClassifierHead head(3, 4);  // weights and bias zero
  const Vec probs = anspar::classify(head, Vec(3, 0.7));
  REQUIRE(probs.size() == 4);
  for (double v : probs) REQUIRE(v == 0.25);
}

TEST_CASE("logits (0, ln 3) give probabilities (0.25, 0.75)") {
  ClassifierHead head(1, 2);
  head.weight(0, 0) = 0.0;
  head.weight(0, 1) = std::log(3.0);
  const Vec probs = anspar::classify(head, Vec{1.0});
  REQUIRE(std::fabs(probs[0] - 0.25) < 1e-12);
  REQUIRE(std::fabs(probs[1] - 0.75) < 1e-12);
}

// ---- answer extraction ----

TEST_CASE("extraction keeps tokens above max/x in order") {
  const TokenSeq tokens = {"it", "is", "a", "rug"};
  const Vec weights = {0.1, 0.1, 0.2, 0.6};

  ParseResult r2 = anspar::extract_answer(tokens, weights, {2.0});
  REQUIRE(r2.tokens == TokenSeq{"rug"});
  REQUIRE(r2.weights == Vec{0.6});
  REQUIRE_FALSE(r2.no_match);

  ParseResult r3 = anspar::extract_answer(tokens, weights, {3.0});
  REQUIRE(r3.tokens == TokenSeq{"a", "rug"});
  REQUIRE(r3.weights == Vec{0.2, 0.6});
}

TEST_CASE("uniform attention keeps every token") {
  const TokenSeq tokens = {"red", "and", "blue"};
  const Vec weights(3, 1.0 / 3.0);
  ParseResult r = anspar::extract_answer(tokens, weights, {1.5});
  REQUIRE(r.tokens == tokens);
}

TEST_CASE("the argmax token always survives extraction") {
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng(7800 + static_cast<std::uint64_t>(trial));
    const size_t n = 1 + trial % 9;
    TokenSeq tokens;
    Vec weights(n);
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
      tokens.push_back("t" + std::to_string(i));
      weights[i] = rng.uniform(0.0, 1.0) + 1e-9;
      sum += weights[i];
    }
    for (double& w : weights) w /= sum;
    const double x = 1.0 + rng.uniform(0.01, 9.0);
    const size_t arg = static_cast<size_t>(
        std::max_element(weights.begin(), weights.end()) - weights.begin());

    ParseResult r = anspar::extract_answer(tokens, weights, {x});
    REQUIRE_FALSE(r.tokens.empty());
    REQUIRE(std::find(r.tokens.begin(), r.tokens.end(), tokens[arg]) != r.tokens.end());
    // order preservation: result is a subsequence of the input
    size_t pos = 0;
    for (const std::string& tok : r.tokens) {
      while (pos < tokens.size() && tokens[pos] != tok) ++pos;
      REQUIRE(pos < tokens.size());
      ++pos;
    }
  }
}

TEST_CASE("extraction validates its inputs") {
  REQUIRE_THROWS_WITH(anspar::extract_answer({"a", "b"}, Vec{0.5}, {2.0}),
                      Catch::Matchers::ContainsSubstring("2") &&
                          Catch::Matchers::ContainsSubstring("1"));
  REQUIRE_THROWS(anspar::extract_answer({"a"}, Vec{1.0}, {1.0}));
  REQUIRE_THROWS(anspar::extract_answer({"a"}, Vec{1.0}, {0.5}));
  ParseResult empty = anspar::extract_answer({}, {}, {2.0});
  REQUIRE(empty.no_match);
  REQUIRE(empty.tokens.empty());
}

// ---- the gradient check: analytic backward vs central finite differences ----

TEST_CASE("analytic gradients match finite differences on every tensor") {
  for (int seed = 0; seed < 24; ++seed) {
    TrainConfig cfg;
    cfg.layers = 1 + seed % 2;  // exercise the stacked path too
    cfg.hidden_dim = 2 + seed % 3;
    cfg.d_k = 1 + seed % 4;
    cfg.seed = 100 + static_cast<std::uint64_t>(seed);
    const int E = 2 + seed % 2;
    const int classes = 2 + seed % 3;
    GruAttnModel model = anspar::make_gru_attn_model(E, classes, cfg);

    Rng rng(cfg.seed + 1);
    // nonzero biases so their gradients aren't trivially zero at init
    for (auto& layer : model.gru_layers) {
      for (Vec* b : {&layer.b_z, &layer.b_r, &layer.b_h}) {
        for (double& v : *b) v = rng.uniform(-0.3, 0.3);
      }
    }
    for (double& b : model.head.bias) b = rng.uniform(-0.3, 0.3);

    const size_t T = 1 + static_cast<size_t>(seed) % 4;
    const auto inputs = random_sequence(rng, T, static_cast<size_t>(E), -1.5, 1.5);
    const int label = seed % classes;

    ModelGrads grads(model);
    anspar::zero_grads(grads);
    const auto trace = anspar::model_forward(model, inputs);
    anspar::example_backward(model, trace, label, grads);

    const auto loss = [&]() {
      const auto tr = anspar::model_forward(model, inputs);
      return -std::log(tr.probs[static_cast<size_t>(label)]);
    };

    std::vector<Vec*> param_tensors, grad_tensors;
    anspar::for_each_tensor(model, [&](Vec& t) { param_tensors.push_back(&t); });
    anspar::for_each_tensor(grads, [&](Vec& t) { grad_tensors.push_back(&t); });
    REQUIRE(param_tensors.size() == grad_tensors.size());

    for (size_t k = 0; k < param_tensors.size(); ++k) {
      const Vec fd = oracle::finite_diff(*param_tensors[k], loss, 1e-5);
      const Vec& an = *grad_tensors[k];
      REQUIRE(fd.size() == an.size());
      for (size_t i = 0; i < fd.size(); ++i) {
        INFO("seed " << seed << " tensor " << k << " entry " << i << " analytic " << an[i]
                     << " fd " << fd[i]);
        REQUIRE(rel_err(an[i], fd[i]) < 1e-4);
      }
    }
  }
}

TEST_CASE("model construction validates its knobs") {
  TrainConfig cfg;
  REQUIRE_THROWS(anspar::make_gru_attn_model(0, 3, cfg));
  cfg.layers = 0;
  REQUIRE_THROWS(anspar::make_gru_attn_model(4, 3, cfg));
  cfg.layers = 1;
  cfg.hidden_dim = 0;
  REQUIRE_THROWS(anspar::make_gru_attn_model(4, 3, cfg));
  cfg.hidden_dim = 8;
  REQUIRE_THROWS(anspar::make_gru_attn_model(4, 1, cfg));  // needs >= 2 classes
}

TEST_CASE("d_k defaults to hidden_dim and can be overridden") {
  TrainConfig cfg;
  cfg.hidden_dim = 6;
  GruAttnModel a = anspar::make_gru_attn_model(3, 2, cfg);
  REQUIRE(a.d_k == 6);
  cfg.d_k = 2;
  GruAttnModel b = anspar::make_gru_attn_model(3, 2, cfg);
  REQUIRE(b.d_k == 2);
  REQUIRE(b.attn.key_proj.cols == 2);
  REQUIRE(b.head.weight.rows == 2);
}
