// Release gate. Each numbered check verifies one promised property of the
// library at a pinned tolerance, prints exactly one PASS/FAIL line, and the
// process exits nonzero if anything failed. Checks 1-6, 8 and 9 compare the
// fast implementations against independent reference routes (scalar loops,
// finite differences, brute-force enumeration, long-double accumulation);
// check 7 runs the full synthetic end-to-end pipeline; check 10 replays the
// command-line pipeline twice and demands byte-identical artifacts.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "anspar/attnmodel.hpp"
#include "anspar/baselines.hpp"
#include "anspar/cli.hpp"
#include "anspar/cluster.hpp"
#include "anspar/corpus.hpp"
#include "anspar/embeddings.hpp"
#include "anspar/eval.hpp"
#include "anspar/selector.hpp"
#include "anspar/templates.hpp"
#include "oracles.hpp"

using namespace anspar;
namespace fs = std::filesystem;

namespace {

// ---- pinned tolerances and budgets ----
constexpr double kGradRelTol = 1e-4;     // analytic vs central finite differences
constexpr double kExactTol = 1e-12;      // dual-route equality for closed-form math
constexpr double kProbTol = 1e-9;        // softmax normalization / shift invariance
constexpr double kInertiaSlack = 1e-9;   // k-means inertia monotonicity
constexpr double kResnikTol = 1e-9;      // toy-taxonomy similarity
constexpr double kEntropyLooseTol = 1e-4;
constexpr double kValAccuracyBar = 0.60;  // 3x chance on 5 classes
constexpr double kGradTimeBudget = 10.0;  // seconds
constexpr double kForwardTimeBudget = 5.0;
constexpr double kE2eTimeBudget = 300.0;

const std::string kDataDir = ANSPAR_DATA_DIR;

struct Criterion {
  std::string name;
  bool ok = false;
  std::string detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

double rel_err(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-6});
}

bool is_subsequence(const TokenSeq& sub, const TokenSeq& seq) {
  size_t j = 0;
  for (size_t i = 0; i < seq.size() && j < sub.size(); ++i) {
    if (seq[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

// ---- 1: gradients of the full model vs central finite differences ----

Criterion crit_gradient_check() {
  Criterion c{"1 gradient-check", false, ""};
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  const int n_seeds = 24;
  for (int seed = 0; seed < n_seeds; ++seed) {
    Rng rng(1000 + seed);
    TrainConfig cfg;
    cfg.layers = 1 + seed % 2;
    cfg.hidden_dim = 2 + seed % 3;          // 2..4
    cfg.d_k = 1 + seed % 4;                 // 1..4
    cfg.seed = 77 + seed;
    const int input_dim = 2 + seed % 2;     // 2..3
    const int n_classes = 2 + seed % 3;     // 2..4
    const int T = 1 + seed % 4;             // 1..4

    GruAttnModel model = make_gru_attn_model(input_dim, n_classes, cfg);
    // nonzero biases so their gradients are exercised away from the origin
    for (auto& layer : model.gru_layers) {
      for (Vec* b : {&layer.b_z, &layer.b_r, &layer.b_h}) {
        for (double& v : *b) v = rng.uniform(-0.5, 0.5);
      }
    }
    for (double& v : model.head.bias) v = rng.uniform(-0.5, 0.5);

    std::vector<Vec> inputs(T, Vec(input_dim));
    for (auto& x : inputs) {
      for (double& v : x) v = rng.uniform(-1.0, 1.0);
    }
    const int label = seed % n_classes;

    ModelGrads grads(model);
    zero_grads(grads);
    const ForwardTrace tr = model_forward(model, inputs);
    example_backward(model, tr, label, grads);

    std::vector<Vec*> params, analytic;
    for_each_tensor(model, [&](Vec& v) { params.push_back(&v); });
    for_each_tensor(grads, [&](Vec& v) { analytic.push_back(&v); });

    auto loss = [&]() {
      const ForwardTrace t = model_forward(model, inputs);
      return -std::log(t.probs[label]);
    };
    for (size_t ti = 0; ti < params.size(); ++ti) {
      const Vec fd = oracle::finite_diff(*params[ti], loss);
      for (size_t i = 0; i < fd.size(); ++i) {
        worst = std::max(worst, rel_err((*analytic[ti])[i], fd[i]));
      }
    }
  }
  const double dt = seconds_since(t0);
  c.ok = worst < kGradRelTol && dt < kGradTimeBudget;
  c.detail = fmt("max rel err %.3g (tol %.0e) over %d seeds, %.1fs (budget %.0fs)", worst,
                 kGradRelTol, n_seeds, dt, kGradTimeBudget);
  return c;
}

// ---- 2: recurrent forward pass vs independent scalar-loop evaluator ----

Criterion crit_forward_parity() {
  Criterion c{"2 gru-forward-parity", false, ""};
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(2000 + i);
    const int E = 1 + i % 5, H = 1 + (i / 5) % 5, T = 1 + i % 5;
    GruParams p(E, H);
    p.init(rng);
    for (Vec* b : {&p.b_z, &p.b_r, &p.b_h}) {
      for (double& v : *b) v = rng.uniform(-0.5, 0.5);
    }
    std::vector<Vec> xs(T, Vec(E));
    for (auto& x : xs) {
      for (double& v : x) v = rng.uniform(-2.0, 2.0);
    }
    const Vec s0(H, 0.0);

    oracle::ScalarGru g;
    g.E = E;
    g.H = H;
    g.Uz = p.U_z.data;
    g.Ur = p.U_r.data;
    g.Uh = p.U_h.data;
    g.Wz = p.W_z.data;
    g.Wr = p.W_r.data;
    g.Wh = p.W_h.data;
    g.bz = p.b_z;
    g.br = p.b_r;
    g.bh = p.b_h;

    const std::vector<Vec> fast = gru_forward(p, xs, s0);
    const std::vector<Vec> slow = oracle::gru_scalar_forward(g, xs, s0);
    for (int t = 0; t < T; ++t) {
      for (int j = 0; j < H; ++j) {
        worst = std::max(worst, std::fabs(fast[t][j] - slow[t][j]));
      }
    }
  }
  const double dt = seconds_since(t0);
  c.ok = worst < kExactTol && dt < kForwardTimeBudget;
  c.detail = fmt("max abs diff %.3g (tol %.0e) over 100 instances, %.2fs", worst, kExactTol, dt);
  return c;
}

// ---- 3: attention weights normalize and ignore constant logit shifts ----

Criterion crit_attention_invariance() {
  Criterion c{"3 attention-invariance", false, ""};
  double worst_sum = 0.0, worst_shift = 0.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(3000 + i);
    const int H = 2 + i % 4, dk = 1 + i % 4, T = 1 + i % 6;
    AttnParams p(H, dk);
    p.init(rng);
    std::vector<Vec> states(T, Vec(H));
    for (auto& s : states) {
      for (double& v : s) v = rng.uniform(-2.0, 2.0);
    }
    const AttnResult res = attend(p, states);

    double sum = 0.0;
    for (double w : res.weights) sum += w;
    worst_sum = std::max(worst_sum, std::fabs(sum - 1.0));

    // scalar logits, shifted by a constant; softmax must not notice
    const double shift = 3.25;
    Vec logits(T, shift);
    for (int t = 0; t < T; ++t) {
      for (int d = 0; d < dk; ++d) {
        double kd = 0.0;
        for (int h = 0; h < H; ++h) kd += states[t][h] * p.key_proj(h, d);
        logits[t] += p.query[d] * kd / std::sqrt(double(dk));
      }
    }
    const double mx = *std::max_element(logits.begin(), logits.end());
    double denom = 0.0;
    Vec shifted(T);
    for (int t = 0; t < T; ++t) {
      shifted[t] = std::exp(logits[t] - mx);
      denom += shifted[t];
    }
    for (int t = 0; t < T; ++t) {
      worst_shift = std::max(worst_shift, std::fabs(res.weights[t] - shifted[t] / denom));
    }
  }
  c.ok = worst_sum < kProbTol && worst_shift < kProbTol;
  c.detail = fmt("sum-to-1 err %.3g, shift err %.3g (tol %.0e) over 100 instances", worst_sum,
                 worst_shift, kProbTol);
  return c;
}

// ---- 4: BLEU vs brute-force n-gram oracle on hand-built pairs ----

Criterion crit_bleu_oracle() {
  Criterion c{"4 bleu-oracle", false, ""};
  const std::vector<std::string> V = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
  std::vector<std::pair<TokenSeq, TokenSeq>> pairs;
  pairs.push_back({{"the", "cat", "sat", "on", "mat"}, {"the", "cat", "sat", "on", "mat"}});
  pairs.push_back({{"x", "y", "z"}, {"p", "q"}});  // zero n-gram overlap
  while (pairs.size() < 50) {
    const int i = static_cast<int>(pairs.size());
    TokenSeq hyp, ref;
    const int lh = 1 + (i * 7) % 9, lr = 1 + (i * 5) % 9;
    for (int t = 0; t < lh; ++t) hyp.push_back(V[(i + t * t) % 10]);
    for (int t = 0; t < lr; ++t) ref.push_back(V[(i * 2 + t) % 10]);
    if (i % 5 == 0) hyp.assign(ref.begin(), ref.begin() + 1 + (i / 5) % lr);  // prefix
    if (i % 7 == 0) hyp.assign(4, V[i % 10]);                                 // repeats
    pairs.push_back({hyp, ref});
  }

  double worst = 0.0;
  for (const auto& [hyp, ref] : pairs) {
    for (int n = 1; n <= 4; ++n) {
      for (bool smooth : {false, true}) {
        BleuConfig cfg;
        cfg.max_n = n;
        cfg.smoothing = smooth ? BleuSmoothing::AddEpsilon : BleuSmoothing::None;
        worst = std::max(
            worst, std::fabs(bleu(hyp, ref, cfg) - oracle::bleu_bruteforce(hyp, ref, n, smooth)));
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (bool smooth : {false, true}) {
      BleuConfig cfg;
      cfg.max_n = n;
      cfg.smoothing = smooth ? BleuSmoothing::AddEpsilon : BleuSmoothing::None;
      worst = std::max(worst, std::fabs(corpus_bleu(pairs, cfg) -
                                        oracle::corpus_bleu_bruteforce(pairs, n, smooth)));
    }
  }
  const double self = bleu(pairs[0].first, pairs[0].second, {});
  const double disjoint = bleu(pairs[1].first, pairs[1].second, {});
  c.ok = worst < kExactTol && std::fabs(self - 1.0) < kExactTol && disjoint == 0.0;
  c.detail = fmt("max |lib-oracle| %.3g (tol %.0e) on 50 pairs x 4 orders; bleu(h,h)=%.12f, "
                 "disjoint=%.1f",
                 worst, kExactTol, self, disjoint);
  return c;
}

// ---- 5: k-means invariants and tiny-instance optimality ----

Criterion crit_kmeans() {
  Criterion c{"5 kmeans", false, ""};
  // (a) inertia never increases along a run; (b) converged assignments are
  // nearest-centroid
  for (int inst = 0; inst < 10; ++inst) {
    Rng rng(4000 + inst);
    std::vector<Vec> pts(40, Vec(3));
    for (auto& p : pts) {
      for (double& v : p) v = rng.uniform(-5.0, 5.0);
    }
    KmeansTrace trace;
    const ClusterModel m = kmeans_fit(pts, 3, 11 + inst, 300, &trace, 5);
    for (size_t i = 1; i < trace.inertia_history.size(); ++i) {
      if (trace.inertia_history[i] > trace.inertia_history[i - 1] + kInertiaSlack) {
        c.detail = fmt("inertia rose at iteration %zu of instance %d", i, inst);
        return c;
      }
    }
    for (size_t i = 0; i < pts.size(); ++i) {
      double assigned = 0.0, best = 1e300;
      for (int k = 0; k < m.k; ++k) {
        double d2 = 0.0;
        for (size_t j = 0; j < pts[i].size(); ++j) {
          const double d = pts[i][j] - m.centroids[k][j];
          d2 += d * d;
        }
        if (k == trace.assignments[i]) assigned = d2;
        best = std::min(best, d2);
      }
      if (assigned > best + kInertiaSlack) {
        c.detail = fmt("point %zu of instance %d not nearest-centroid", i, inst);
        return c;
      }
    }
  }
  // (c) k=1 centroid is the mean
  {
    Rng rng(4100);
    std::vector<Vec> pts(25, Vec(4));
    Vec mean(4, 0.0);
    for (auto& p : pts) {
      for (size_t j = 0; j < 4; ++j) {
        p[j] = rng.uniform(-3.0, 3.0);
        mean[j] += p[j] / 25.0;
      }
    }
    const ClusterModel m = kmeans_fit(pts, 1, 1);
    for (size_t j = 0; j < 4; ++j) {
      if (std::fabs(m.centroids[0][j] - mean[j]) > kExactTol) {
        c.detail = fmt("k=1 centroid off mean by %.3g", std::fabs(m.centroids[0][j] - mean[j]));
        return c;
      }
    }
  }
  // (d) 4-point/k=2 instance matches the exhaustive optimum
  {
    const std::vector<Vec> pts = {{0.0, 0.0}, {0.1, 0.0}, {10.0, 10.0}, {10.1, 10.0}};
    KmeansTrace trace;
    const ClusterModel m = kmeans_fit(pts, 2, 7, 300, &trace, 10);
    const oracle::BestPartition opt = oracle::kmeans_bruteforce(pts, 2);
    if (std::fabs(m.inertia - opt.inertia) > kInertiaSlack) {
      c.detail = fmt("4-point inertia %.6f vs optimum %.6f", m.inertia, opt.inertia);
      return c;
    }
    if (trace.assignments[0] != trace.assignments[1] ||
        trace.assignments[2] != trace.assignments[3] ||
        trace.assignments[0] == trace.assignments[2]) {
      c.detail = "4-point partition is not {{0,1},{2,3}}";
      return c;
    }
  }
  c.ok = true;
  c.detail = fmt("monotone inertia + nearest-centroid on 10 instances; k=1 mean within %.0e; "
                 "4-point optimum matched",
                 kExactTol);
  return c;
}

// ---- 6: template mining shapes and parse behaviors ----

Criterion crit_templates() {
  Criterion c{"6 templates", false, ""};
  const PosTagger tagger = load_tagger(kDataDir + "/lexicon.tsv");

  // mining the location family must put the prepositional answer shape first
  const Dataset ds = generate_synthetic(default_synth_spec(200), 42);
  std::vector<TokenSeq> location;
  for (const auto& p : ds.points) {
    if (p.family == "location") location.push_back(preprocess_text(p.response));
  }
  const TemplateSet mined = extract_templates(location, tagger, 3, 0);
  const std::vector<std::string> top = mined.templates.at(0).tags;
  const bool shape_ok = top == std::vector<std::string>{"IN", "NN"} ||
                        top == std::vector<std::string>{"IN", "NN", "NN"};
  if (!shape_ok) {
    std::string got;
    for (const auto& t : top) got += t + " ";
    c.detail = "location top template is [" + got + "], wanted (IN,NN) or (IN,NN,NN)";
    return c;
  }

  // noun-noun template picks the answer span out of a clothing response
  TemplateSet nn;
  nn.cluster_id = 0;
  nn.templates.push_back({{"NN", "NN"}, 10});
  const ParseResult r1 =
      parse_with_templates(preprocess_text("she is wearing her work uniform"), tagger, nn);
  if (r1.no_match || r1.tokens != TokenSeq{"work", "uniform"}) {
    c.detail = "noun-noun parse did not return [work, uniform]";
    return c;
  }

  // a leading-filler template keeps the filler span verbatim
  TemplateSet filler;
  filler.cluster_id = 0;
  filler.templates.push_back({{"PRP", "VBZ", "DT"}, 10});
  const ParseResult r2 = parse_with_templates(preprocess_text("it is a rug"), tagger, filler);
  if (r2.no_match || r2.tokens != TokenSeq{"it", "is", "a"}) {
    c.detail = "leading-filler parse did not return [it, is, a]";
    return c;
  }
  c.ok = true;
  c.detail = "location family mines (IN,NN*) first; span parses match exactly";
  return c;
}

// ---- 7: full synthetic end-to-end run ----

Criterion crit_end_to_end() {
  Criterion c{"7 end-to-end", false, ""};
  const auto t0 = std::chrono::steady_clock::now();
  const uint64_t seed = 42;

  SynthSpec spec = default_synth_spec(200);
  spec.image_dim = 8;
  Dataset ds = generate_synthetic(spec, seed);

  std::vector<TokenSeq> corpus;
  corpus.reserve(ds.size() * 2);
  for (const auto& p : ds.points) {
    corpus.push_back(preprocess_text(p.question));
    corpus.push_back(preprocess_text(p.response));
  }
  GloveFitConfig gcfg;
  gcfg.dim = 50;
  gcfg.max_iterations = 100;
  gcfg.seed = seed;
  const EmbeddingTable table = fit_glove(corpus, gcfg).table;

  // question types: k-means over fused question-text + image features
  FusionConfig fusion;
  fusion.image_weight = 0.8;
  std::vector<Vec> qfeats;
  qfeats.reserve(ds.size());
  for (const auto& p : ds.points) {
    qfeats.push_back(fuse_features(embed_sentence(preprocess_text(p.question), table).vec,
                                   *p.image_features, fusion));
  }
  KmeansTrace qtrace;
  kmeans_fit(qfeats, 5, seed, 300, &qtrace, 10);
  for (size_t i = 0; i < ds.points.size(); ++i) ds.points[i].label = qtrace.assignments[i];

  const auto [train_ds, val_ds] = split_dataset(ds, 0.8, seed);
  TrainConfig tcfg;
  tcfg.hidden_dim = 48;
  tcfg.d_k = 48;
  tcfg.batch_size = 32;
  tcfg.epochs = 10;
  tcfg.learning_rate = 8e-4;
  tcfg.seed = seed;
  GruAttnModel model = make_gru_attn_model(static_cast<int>(table.dim), 5, tcfg);
  const TrainHistory hist = train(model, train_ds.points, val_ds.points, table, tcfg);
  const double val_acc = hist.val_accuracy.back();

  // (a) classifier accuracy on held-out points
  if (val_acc < kValAccuracyBar) {
    c.detail = fmt("val accuracy %.3f below bar %.2f", val_acc, kValAccuracyBar);
    return c;
  }

  // BLEU-1 per route on the validation split (per-response mean)
  auto bleu1 = [&](const std::vector<ParseResult>& parses) {
    std::vector<std::pair<TokenSeq, TokenSeq>> pairs;
    pairs.reserve(val_ds.size());
    for (size_t i = 0; i < val_ds.points.size(); ++i) {
      pairs.emplace_back(parses[i].tokens, *val_ds.points[i].cleaned_answer);
    }
    return make_eval_row("route", pairs).bleu_sentence_mean[0];
  };

  std::vector<ParseResult> attn;
  attn.reserve(val_ds.size());
  for (const auto& p : val_ds.points) {
    attn.push_back(parse_with_attention(model, table, p.response, {3.0}));
  }

  // template route: mine on clustered training responses, parse by nearest
  // centroid
  std::vector<Vec> rfeats;
  rfeats.reserve(train_ds.size());
  for (const auto& p : train_ds.points) {
    rfeats.push_back(fuse_features(embed_sentence(preprocess_text(p.response), table).vec,
                                   *p.image_features, fusion));
  }
  KmeansTrace rtrace;
  const ClusterModel rmodel = kmeans_fit(rfeats, 10, seed, 300, &rtrace, 10);
  const PosTagger tagger = load_tagger(kDataDir + "/lexicon.tsv");
  std::map<int, std::vector<TokenSeq>> grouped;
  for (size_t i = 0; i < train_ds.points.size(); ++i) {
    grouped[rtrace.assignments[i]].push_back(preprocess_text(train_ds.points[i].response));
  }
  std::map<int, TemplateSet> sets;
  for (const auto& [cid, responses] : grouped) {
    try {
      sets[cid] = extract_templates(responses, tagger, 3, cid);
    } catch (const std::exception&) {
      // a degenerate cluster mines nothing; its points fall back to no_match
    }
  }
  std::vector<ParseResult> tpl;
  tpl.reserve(val_ds.size());
  for (const auto& p : val_ds.points) {
    const TokenSeq toks = preprocess_text(p.response);
    const int cid = kmeans_assign(
        rmodel, fuse_features(embed_sentence(toks, table).vec, *p.image_features, fusion));
    const auto it = sets.find(cid);
    if (it == sets.end()) {
      ParseResult r;
      r.no_match = true;
      tpl.push_back(std::move(r));
    } else {
      tpl.push_back(parse_with_templates(toks, tagger, it->second));
    }
  }

  const Taxonomy tax = load_taxonomy(kDataDir + "/taxonomy.tsv");
  const PosExpectationRules rules = load_pos_rules(kDataDir + "/pos_rules.tsv");
  std::vector<ParseResult> base_wn, base_pos;
  base_wn.reserve(val_ds.size());
  base_pos.reserve(val_ds.size());
  for (const auto& p : val_ds.points) {
    const TokenSeq q = preprocess_text(p.question), r = preprocess_text(p.response);
    base_wn.push_back(baseline_wordnet_parse(q, r, tax, tagger, 0.0));
    base_pos.push_back(baseline_pos_parse(q, r, rules, tagger));
  }

  const double b_attn = bleu1(attn);
  const double b_tpl = bleu1(tpl);
  const double b_base = std::max(bleu1(base_wn), bleu1(base_pos));

  // (b) the learned route beats mined templates, which beat the baselines
  if (!(b_attn >= b_tpl && b_tpl >= b_base)) {
    c.detail = fmt("BLEU1 ordering broken: attn %.4f, templates %.4f, best baseline %.4f",
                   b_attn, b_tpl, b_base);
    return c;
  }

  // (c) a looser threshold keeps a superset of tokens on every example
  for (const auto& p : ds.points) {
    const ParseResult r2 = parse_with_attention(model, table, p.response, {2.0});
    const ParseResult r3 = parse_with_attention(model, table, p.response, {3.0});
    if (!is_subsequence(r2.tokens, r3.tokens)) {
      c.detail = "x=3 extraction lost a token kept at x=2 on point " + p.id;
      return c;
    }
  }

  const double dt = seconds_since(t0);
  if (dt >= kE2eTimeBudget) {
    c.detail = fmt("runtime %.1fs over budget %.0fs", dt, kE2eTimeBudget);
    return c;
  }
  c.ok = true;
  c.detail = fmt("val acc %.3f (bar %.2f); BLEU1 attn %.4f >= templates %.4f >= baseline %.4f; "
                 "x=3 superset on 1000/1000; %.1fs",
                 val_acc, kValAccuracyBar, b_attn, b_tpl, b_base, dt);
  return c;
}

// ---- 8: taxonomy similarity closed form + baseline subsequence safety ----

Criterion crit_baselines() {
  Criterion c{"8 baselines", false, ""};
  // toy taxonomy: root -> animal(1){cat(1),dog(1)}, root -> artifact(1){chair(1)}
  // p(animal subtree) = 3/5, so sim(cat,dog) = -ln(3/5)
  const fs::path toy = fs::temp_directory_path() / "anspar_acceptance_toy_taxonomy.tsv";
  {
    std::ofstream out(toy);
    out << "root\t-\t0\t\n"
        << "animal\troot\t1\tanimal\n"
        << "cat\tanimal\t1\tcat\n"
        << "dog\tanimal\t1\tdog\n"
        << "artifact\troot\t1\tartifact\n"
        << "chair\tartifact\t1\tchair\n";
  }
  const Taxonomy toy_tax = load_taxonomy(toy.string());
  const double sim = resnik_similarity(toy_tax, "cat", "dog");
  const double expected = -std::log(3.0 / 5.0);
  if (std::fabs(sim - expected) > kResnikTol) {
    c.detail = fmt("resnik(cat,dog) %.12f vs -ln(3/5) %.12f", sim, expected);
    return c;
  }

  // fuzz both parsers: output must always be an ordered subsequence of the
  // response
  const PosTagger tagger = load_tagger(kDataDir + "/lexicon.tsv");
  const Taxonomy tax = load_taxonomy(kDataDir + "/taxonomy.tsv");
  const PosExpectationRules rules = load_pos_rules(kDataDir + "/pos_rules.tsv");
  const std::vector<std::string> pool = {
      "what", "where", "is",    "the",  "a",     "this", "color", "wearing", "animal",
      "food", "in",    "cat",   "dog",  "red",   "blue", "jacket", "pizza",  "tokyo",
      "she",  "lol",   "photo", "work", "plate", "of",   "zzq",    "blorp",  "uniform",
      "it",   "on",    "was",   "mat",  "green", "tiny", "warm",   "my"};
  Rng rng(123);
  for (int i = 0; i < 1000; ++i) {
    TokenSeq q, r;
    const size_t lq = 2 + rng.below(6), lr = 1 + rng.below(11);
    for (size_t t = 0; t < lq; ++t) q.push_back(pool[rng.below(pool.size())]);
    for (size_t t = 0; t < lr; ++t) r.push_back(pool[rng.below(pool.size())]);
    const ParseResult w = baseline_wordnet_parse(q, r, tax, tagger, 0.0);
    const ParseResult p = baseline_pos_parse(q, r, rules, tagger);
    if (!is_subsequence(w.tokens, r) || !is_subsequence(p.tokens, r)) {
      c.detail = fmt("non-subsequence output on fuzz case %d", i);
      return c;
    }
  }
  c.ok = true;
  c.detail = fmt("resnik toy value within %.0e; 1000 fuzzed parses are ordered subsequences",
                 kResnikTol);
  return c;
}

// ---- 9: selection entropy closed forms and base invariance ----

Criterion crit_selector() {
  Criterion c{"9 selector", false, ""};
  const double h_point = entropy({1.0, 0.0, 0.0});
  const double h_uniform = entropy({0.25, 0.25, 0.25, 0.25});
  const double h_skewed = entropy({0.9, 0.1});
  if (std::fabs(h_point) > kExactTol) {
    c.detail = fmt("entropy of a point mass is %.3g, not 0", h_point);
    return c;
  }
  if (std::fabs(h_uniform - std::log(4.0)) > kExactTol) {
    c.detail = fmt("entropy of uniform-4 off ln4 by %.3g", std::fabs(h_uniform - std::log(4.0)));
    return c;
  }
  if (std::fabs(h_skewed - 0.3251) > kEntropyLooseTol) {
    c.detail = fmt("entropy(0.9,0.1) = %.6f, expected 0.3251 within %.0e", h_skewed,
                   kEntropyLooseTol);
    return c;
  }

  // changing the logarithm base rescales entropy but cannot move the argmax
  Rng rng(9000);
  for (int i = 0; i < 1000; ++i) {
    std::vector<CandidateQuestion> cands(2 + rng.below(7));
    for (size_t j = 0; j < cands.size(); ++j) {
      cands[j].text = "q" + std::to_string(j);
      Vec p(2 + rng.below(5));
      double sum = 0.0;
      for (double& v : p) {
        v = rng.uniform(0.01, 1.0);
        sum += v;
      }
      for (double& v : p) v /= sum;
      cands[j].answer_distribution = std::move(p);
    }
    size_t best_bits = 0;
    double h_best = -1.0;
    for (size_t j = 0; j < cands.size(); ++j) {
      double h = 0.0;
      for (double v : cands[j].answer_distribution) {
        if (v > 0.0) h -= v * std::log2(v);
      }
      if (h > h_best) {
        h_best = h;
        best_bits = j;
      }
    }
    if (select_question(cands) != best_bits) {
      c.detail = fmt("nats/bits argmax disagree on candidate set %d", i);
      return c;
    }
  }
  c.ok = true;
  c.detail = "closed forms exact; nats vs bits argmax identical on 1000 candidate sets";
  return c;
}

// ---- 10: the command pipeline is byte-deterministic ----

struct StdoutSilencer {
  std::ostringstream sink;
  std::streambuf* old;
  StdoutSilencer() : old(std::cout.rdbuf(sink.rdbuf())) {}
  ~StdoutSilencer() { std::cout.rdbuf(old); }
};

Criterion crit_determinism() {
  Criterion c{"10 determinism", false, ""};
  const fs::path base = fs::temp_directory_path() / "anspar_acceptance_det";
  fs::remove_all(base);
  const fs::path saved_cwd = fs::current_path();

  auto run_pipeline = [&](const fs::path& root) -> int {
    fs::create_directories(root);
    fs::current_path(root);
    {
      std::ofstream cands("cands.jsonl");
      cands << R"({"text":"what color is it","answer_distribution":[0.5,0.5]})" << "\n";
      cands << R"({"text":"is it a cat","answer_distribution":[0.9,0.1]})" << "\n";
    }
    const std::string lex = kDataDir + "/lexicon.tsv";
    const std::vector<std::vector<std::string>> commands = {
        {"synth", "--per-family", "30", "--image-dim", "4", "--seed", "9"},
        {"fit-glove", "--dataset", "out/synth.jsonl", "--dim", "16", "--iters", "40", "--seed",
         "9"},
        {"label-questions", "--dataset", "out/synth.jsonl", "--embeddings", "out/glove.txt",
         "--k", "5", "--features", "text+image", "--image-weight", "0.8", "--seed", "9"},
        {"train-attn", "--dataset", "out/labeled.jsonl", "--embeddings", "out/glove.txt",
         "--hidden", "12", "--dk", "12", "--epochs", "3", "--batch", "16", "--lr", "3e-3",
         "--seed", "9"},
        {"parse-attn", "--dataset", "out/labeled.jsonl", "--embeddings", "out/glove.txt",
         "--checkpoint", "out/attn_checkpoint.json", "--x", "2"},
        {"evaluate", "--dataset", "out/labeled.jsonl", "--parses", "out/parses_attn.jsonl",
         "--name", "attention"},
        {"cluster", "--dataset", "out/synth.jsonl", "--embeddings", "out/glove.txt", "--k", "6",
         "--seed", "9"},
        {"extract-templates", "--dataset", "out/synth.jsonl", "--clusters", "out/clusters.json",
         "--lexicon", lex},
        {"parse-templates", "--dataset", "out/synth.jsonl", "--clusters", "out/clusters.json",
         "--templates", "out/templates.json", "--lexicon", lex},
        {"evaluate", "--dataset", "out/synth.jsonl", "--parses", "out/parses_templates.jsonl",
         "--name", "templates", "--output", "report_templates.csv"},
        {"baseline", "--which", "pos", "--dataset", "out/synth.jsonl", "--lexicon", lex,
         "--rules", kDataDir + "/pos_rules.tsv"},
        {"baseline", "--which", "wordnet", "--dataset", "out/synth.jsonl", "--lexicon", lex,
         "--taxonomy", kDataDir + "/taxonomy.tsv"},
        {"select", "--candidates", "cands.jsonl", "--decorate", "--prefixes", "wow!,hey!",
         "--seed", "9"},
        {"visualize", "--what", "scatter", "--dataset", "out/synth.jsonl", "--embeddings",
         "out/glove.txt", "--clusters", "out/clusters.json"},
        {"visualize", "--what", "attention", "--dataset", "out/synth.jsonl", "--embeddings",
         "out/glove.txt", "--checkpoint", "out/attn_checkpoint.json", "--index", "3"},
    };
    StdoutSilencer quiet;
    for (const auto& cmd : commands) {
      std::vector<std::string> argv = {"anspar"};
      argv.insert(argv.end(), cmd.begin(), cmd.end());
      const int rc = cli::run_command(argv);
      if (rc != 0) return rc;
    }
    return 0;
  };

  int rc = run_pipeline(base / "a");
  if (rc == 0) rc = run_pipeline(base / "b");
  fs::current_path(saved_cwd);
  if (rc != 0) {
    c.detail = fmt("a pipeline command exited %d", rc);
    return c;
  }

  auto listing = [](const fs::path& root) {
    std::vector<std::string> names;
    for (const auto& e : fs::recursive_directory_iterator(root / "out")) {
      if (e.is_regular_file()) names.push_back(fs::relative(e.path(), root).string());
    }
    std::sort(names.begin(), names.end());
    return names;
  };
  const std::vector<std::string> files_a = listing(base / "a");
  const std::vector<std::string> files_b = listing(base / "b");
  if (files_a != files_b) {
    c.detail = fmt("runs wrote different file sets (%zu vs %zu)", files_a.size(),
                   files_b.size());
    return c;
  }
  if (files_a.size() < 20) {
    c.detail = fmt("pipeline wrote only %zu files; expected the full artifact set",
                   files_a.size());
    return c;
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  for (const auto& name : files_a) {
    if (slurp(base / "a" / name) != slurp(base / "b" / name)) {
      c.detail = "byte mismatch in " + name;
      return c;
    }
  }
  const std::set<std::string> required = {"out/attn_checkpoint.json", "out/report.csv",
                                          "out/clusters.csv", "out/scatter.csv",
                                          "out/attention.csv"};
  for (const auto& req : required) {
    if (!std::count(files_a.begin(), files_a.end(), req)) {
      c.detail = "expected artifact missing: " + req;
      return c;
    }
  }
  c.ok = true;
  c.detail = fmt("two pipeline replays: %zu artifacts byte-identical (checkpoint, reports, "
                 "CSVs included)",
                 files_a.size());
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> checks = {
      {"1 gradient-check", crit_gradient_check},
      {"2 gru-forward-parity", crit_forward_parity},
      {"3 attention-invariance", crit_attention_invariance},
      {"4 bleu-oracle", crit_bleu_oracle},
      {"5 kmeans", crit_kmeans},
      {"6 templates", crit_templates},
      {"7 end-to-end", crit_end_to_end},
      {"8 baselines", crit_baselines},
      {"9 selector", crit_selector},
      {"10 determinism", crit_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : checks) {
    Criterion c;
    try {
      c = check();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.name = name;
    std::printf("%s  %-24s %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  if (failed > 0) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", checks.size());
  return 0;
}
