#pragma once

// Command-line front end: each subcommand drives one pipeline stage, reads a
// flat key=value config file overridden by flags, resolves every knob into a
// canonical string that is FNV-hashed, and stamps that hash plus the seed
// into whatever it writes. Exit codes: 0 success, 1 usage error, 2 data
// error. Each command prints a one-line JSON summary to stdout.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anspar/attnmodel.hpp"
#include "anspar/baselines.hpp"
#include "anspar/cluster.hpp"
#include "anspar/confighash.hpp"
#include "anspar/corpus.hpp"
#include "anspar/embeddings.hpp"
#include "anspar/eval.hpp"
#include "anspar/pca.hpp"
#include "anspar/selector.hpp"
#include "anspar/templates.hpp"
#include "anspar/visualize.hpp"

namespace anspar::cli {

namespace fs = std::filesystem;

namespace detail {

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Canonical "command=...\nkey=value\n..." string (keys sorted by map order)
/// hashed into the provenance fingerprint every artifact carries.
inline std::string hash_options(const std::string& command,
                                const std::map<std::string, std::string>& resolved) {
  std::string canon = "command=" + command + "\n";
  for (const auto& [k, v] : resolved) canon += k + "=" + v + "\n";
  return fnv1a64_hex(canon);
}

struct Context {
  std::string command;
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  std::string config_hash;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> outputs;

  void finish(const std::string& cmd, const std::map<std::string, std::string>& resolved) {
    command = cmd;
    config_hash = hash_options(cmd, resolved);
    fs::create_directories(out_dir);
  }

  std::string resolve(const std::string& name) {
    const fs::path p = fs::path(out_dir) / name;
    return p.string();
  }

  /// Sidecar provenance for artifacts whose format has no room for extra
  /// fields (JSONL, SVG/CSV, text embeddings).
  void write_meta(const std::string& artifact_path, const nlohmann::json& extra = {}) {
    nlohmann::json j;
    j["command"] = command;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::ofstream out(artifact_path + ".meta.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + artifact_path + ".meta.json");
    out << j.dump(2) << "\n";
  }

  void note_output(const std::string& path) { outputs.push_back(path); }

  int done() {
    summary["command"] = command;
    summary["config_hash"] = config_hash;
    summary["seed"] = seed;
    summary["outputs"] = outputs;
    std::cout << summary.dump() << "\n";
    return 0;
  }
};

inline void add_common(CLI::App& app, Context& ctx) {
  app.set_config("--config", "", "flat key=value config file; flags override it");
  // A shared config file may carry keys for other subcommands; ignore those
  // without loosening strictness for unknown command-line flags.
  app.allow_config_extras(CLI::config_extras_mode::ignore);
  app.add_option("--out-dir", ctx.out_dir, "output directory")
      ->envname("ANSPAR_OUT")
      ->capture_default_str();
}

inline nlohmann::json parse_result_json(size_t index, const std::string& id,
                                        const ParseResult& r) {
  nlohmann::json j;
  j["index"] = index;
  j["id"] = id;
  j["tokens"] = r.tokens;
  j["no_match"] = r.no_match;
  if (!r.weights.empty()) j["weights"] = r.weights;
  if (!r.matched_template.empty()) j["matched_template"] = r.matched_template;
  return j;
}

inline std::vector<ParseResult> load_parses(const std::string& path, size_t expect_n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parses file: " + path);
  std::vector<ParseResult> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("parses line " + std::to_string(line_no) + ": " + e.what());
    }
    ParseResult r;
    r.tokens = j.at("tokens").get<TokenSeq>();
    r.no_match = j.at("no_match").get<bool>();
    if (j.contains("weights")) r.weights = j.at("weights").get<Vec>();
    if (j.contains("matched_template"))
      r.matched_template = j.at("matched_template").get<std::vector<std::string>>();
    out.push_back(std::move(r));
  }
  if (out.size() != expect_n)
    throw std::runtime_error("parses file has " + std::to_string(out.size()) +
                             " rows but the dataset has " + std::to_string(expect_n));
  return out;
}

/// Mean-embedding feature vector per point (questions or responses),
/// optionally fused with the point's image features.
inline std::vector<Vec> point_features(const Dataset& ds, const EmbeddingTable& table,
                                       const std::string& on, const std::string& features,
                                       double image_weight) {
  std::vector<Vec> out;
  out.reserve(ds.size());
  const bool use_image = features == "text+image";
  FusionConfig fusion;
  fusion.image_weight = image_weight;
  for (size_t i = 0; i < ds.points.size(); ++i) {
    const DataPoint& p = ds.points[i];
    const std::string& text = on == "questions" ? p.question : p.response;
    Vec v = embed_sentence(preprocess_text(text), table).vec;
    if (use_image) {
      if (!p.image_features)
        throw std::runtime_error("point " + std::to_string(i) +
                                 " has no image_features but --features text+image was given");
      v = fuse_features(v, *p.image_features, fusion);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// The cluster artifact written by `cluster`: model + per-point assignments.
struct ClusterArtifact {
  ClusterModel model;
  std::vector<int> assignments;
};

inline ClusterArtifact load_cluster_artifact(const std::string& path) {
  ClusterArtifact a;
  a.model = load_cluster_model(path);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cluster file: " + path);
  const nlohmann::json j = nlohmann::json::parse(in);
  if (!j.contains("assignments"))
    throw std::runtime_error("cluster file " + path + " has no assignments");
  a.assignments = j.at("assignments").get<std::vector<int>>();
  return a;
}

inline std::map<int, TemplateSet> load_template_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open templates file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("templates file " + path + ": " + std::string(e.what()));
  }
  std::map<int, TemplateSet> out;
  for (const auto& cj : j.at("clusters")) {
    TemplateSet set;
    set.cluster_id = cj.at("cluster_id").get<int>();
    for (const auto& item : cj.at("templates")) {
      TemplateEntry tpl;
      tpl.tags = item.at("tags").get<std::vector<std::string>>();
      tpl.count = item.at("count").get<long>();
      set.templates.push_back(std::move(tpl));
    }
    out[set.cluster_id] = std::move(set);
  }
  return out;
}

// ---- shared parse drivers (used by parse commands and `evaluate --model`) ----

inline std::vector<ParseResult> parse_all_attn(const Dataset& ds, const EmbeddingTable& table,
                                               const GruAttnModel& model, double x) {
  std::vector<ParseResult> out;
  out.reserve(ds.size());
  for (const DataPoint& p : ds.points) {
    out.push_back(parse_with_attention(model, table, p.response, ExtractionConfig{x}));
  }
  return out;
}

inline std::vector<ParseResult> parse_all_templates(const Dataset& ds, const PosTagger& tagger,
                                                    const std::map<int, TemplateSet>& sets,
                                                    const std::vector<int>& assignments) {
  if (assignments.size() != ds.size())
    throw std::runtime_error("cluster assignments cover " + std::to_string(assignments.size()) +
                             " points but the dataset has " + std::to_string(ds.size()));
  std::vector<ParseResult> out;
  out.reserve(ds.size());
  for (size_t i = 0; i < ds.points.size(); ++i) {
    const auto it = sets.find(assignments[i]);
    if (it == sets.end() || it->second.templates.empty()) {
      ParseResult r;
      r.no_match = true;  // cluster yielded no usable templates
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(
        parse_with_templates(preprocess_text(ds.points[i].response), tagger, it->second));
  }
  return out;
}

inline std::vector<ParseResult> parse_all_baseline(const Dataset& ds, const std::string& which,
                                                   const Taxonomy& tax, const PosTagger& tagger,
                                                   const PosExpectationRules& rules,
                                                   double theta) {
  std::vector<ParseResult> out;
  out.reserve(ds.size());
  for (const DataPoint& p : ds.points) {
    const TokenSeq q = preprocess_text(p.question);
    const TokenSeq r = preprocess_text(p.response);
    if (which == "wordnet") {
      out.push_back(baseline_wordnet_parse(q, r, tax, tagger, theta));
    } else {
      out.push_back(baseline_pos_parse(q, r, rules, tagger));
    }
  }
  return out;
}

inline void write_parses(const std::string& path, const Dataset& ds,
                         const std::vector<ParseResult>& parses) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  for (size_t i = 0; i < parses.size(); ++i) {
    out << parse_result_json(i, ds.points[i].id, parses[i]).dump() << "\n";
  }
}

inline size_t count_no_match(const std::vector<ParseResult>& parses) {
  size_t n = 0;
  for (const ParseResult& r : parses) {
    if (r.no_match) ++n;
  }
  return n;
}

}  // namespace detail

// ---- commands ----

inline int cmd_preprocess(const std::vector<std::string>& args);
inline int cmd_synth(const std::vector<std::string>& args);
inline int cmd_embed(const std::vector<std::string>& args);
inline int cmd_fit_glove(const std::vector<std::string>& args);
inline int cmd_cluster(const std::vector<std::string>& args);
inline int cmd_extract_templates(const std::vector<std::string>& args);
inline int cmd_parse_templates(const std::vector<std::string>& args);
inline int cmd_label_questions(const std::vector<std::string>& args);
inline int cmd_train_attn(const std::vector<std::string>& args);
inline int cmd_parse_attn(const std::vector<std::string>& args);
inline int cmd_baseline(const std::vector<std::string>& args);
inline int cmd_evaluate(const std::vector<std::string>& args);
inline int cmd_select(const std::vector<std::string>& args);
inline int cmd_visualize(const std::vector<std::string>& args);

namespace detail {

/// Thrown once a parse has already produced its user-facing output (help
/// text or usage error); carries the process exit code to return.
struct CliExit {
  int code;
};

inline void parse_or_exit(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("anspar");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    throw CliExit{0};
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    throw CliExit{1};
  }
}

}  // namespace detail

inline int cmd_preprocess(const std::vector<std::string>& args) {
  CLI::App app{"validate a dataset and rewrite it in canonical form"};
  detail::Context ctx;
  std::string dataset, output = "preprocessed.jsonl";
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("preprocess", {{"dataset", dataset}, {"output", output}, {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  size_t q_tokens = 0, r_tokens = 0;
  for (const DataPoint& p : ds.points) {
    q_tokens += preprocess_text(p.question).size();
    r_tokens += preprocess_text(p.response).size();
  }
  const std::string out_path = ctx.resolve(output);
  save_dataset(ds, out_path);
  ctx.write_meta(out_path, {{"points", ds.size()}});
  ctx.note_output(out_path);
  ctx.summary["points"] = ds.size();
  ctx.summary["question_tokens"] = q_tokens;
  ctx.summary["response_tokens"] = r_tokens;
  return ctx.done();
}

inline int cmd_synth(const std::vector<std::string>& args) {
  CLI::App app{"generate the seeded synthetic five-family corpus"};
  detail::Context ctx;
  int per_family = 200, image_dim = 0;
  std::string output = "synth.jsonl";
  detail::add_common(app, ctx);
  app.add_option("--per-family", per_family, "points per family")->capture_default_str();
  app.add_option("--image-dim", image_dim, "synthetic image feature width (0 = none)")
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("synth", {{"per-family", std::to_string(per_family)},
                       {"image-dim", std::to_string(image_dim)},
                       {"seed", std::to_string(ctx.seed)},
                       {"output", output},
                       {"out-dir", ctx.out_dir}});
  SynthSpec spec = default_synth_spec(per_family);
  spec.image_dim = image_dim;
  const Dataset ds = generate_synthetic(spec, ctx.seed);
  const std::string out_path = ctx.resolve(output);
  save_dataset(ds, out_path);
  ctx.write_meta(out_path, {{"points", ds.size()}});
  ctx.note_output(out_path);
  ctx.summary["points"] = ds.size();
  ctx.summary["families"] = spec.families.size();
  return ctx.done();
}

inline int cmd_embed(const std::vector<std::string>& args) {
  CLI::App app{"write one mean-embedding vector per data point"};
  detail::Context ctx;
  std::string dataset, embeddings, on = "responses", output = "embedded.jsonl";
  std::uint64_t vocab_cap = 10000;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--embeddings", embeddings, "GloVe-format text embeddings")->required();
  app.add_option("--on", on, "questions | responses")
      ->check(CLI::IsMember({"questions", "responses"}))
      ->capture_default_str();
  app.add_option("--vocab-cap", vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("embed", {{"dataset", dataset},
                       {"embeddings", embeddings},
                       {"on", on},
                       {"vocab-cap", std::to_string(vocab_cap)},
                       {"output", output},
                       {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const EmbeddingTable table = load_embeddings(embeddings, vocab_cap);
  const std::string out_path = ctx.resolve(output);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + out_path);
  size_t all_oov = 0;
  for (size_t i = 0; i < ds.points.size(); ++i) {
    const std::string& text = on == "questions" ? ds.points[i].question : ds.points[i].response;
    const SentenceEmbedding emb = embed_sentence(preprocess_text(text), table);
    if (emb.all_oov) ++all_oov;
    nlohmann::json j;
    j["index"] = i;
    j["vec"] = emb.vec;
    j["all_oov"] = emb.all_oov;
    out << j.dump() << "\n";
  }
  out.close();
  ctx.write_meta(out_path, {{"points", ds.size()}, {"dim", table.dim}});
  ctx.note_output(out_path);
  ctx.summary["points"] = ds.size();
  ctx.summary["dim"] = table.dim;
  ctx.summary["all_oov"] = all_oov;
  return ctx.done();
}

inline int cmd_fit_glove(const std::vector<std::string>& args) {
  CLI::App app{"fit word vectors on the dataset's questions and responses"};
  detail::Context ctx;
  std::string dataset, output = "glove.txt";
  GloveFitConfig cfg;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--dim", cfg.dim, "vector width")->capture_default_str();
  app.add_option("--window", cfg.window, "co-occurrence window")->capture_default_str();
  app.add_option("--iters", cfg.max_iterations, "training iterations")->capture_default_str();
  app.add_option("--x-max", cfg.x_max, "weighting cutoff")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "weighting exponent")->capture_default_str();
  app.add_option("--lr", cfg.learning_rate, "adagrad learning rate")->capture_default_str();
  app.add_option("--vocab-cap", cfg.vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);
  cfg.seed = ctx.seed;

  ctx.finish("fit-glove", {{"dataset", dataset},
                           {"dim", std::to_string(cfg.dim)},
                           {"window", std::to_string(cfg.window)},
                           {"iters", std::to_string(cfg.max_iterations)},
                           {"x-max", detail::fmt_double(cfg.x_max)},
                           {"alpha", detail::fmt_double(cfg.alpha)},
                           {"lr", detail::fmt_double(cfg.learning_rate)},
                           {"vocab-cap", std::to_string(cfg.vocab_cap)},
                           {"seed", std::to_string(ctx.seed)},
                           {"output", output},
                           {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  std::vector<TokenSeq> corpus;
  corpus.reserve(ds.size() * 2);
  for (const DataPoint& p : ds.points) {
    corpus.push_back(preprocess_text(p.question));
    corpus.push_back(preprocess_text(p.response));
  }
  const GloveFitResult fit = fit_glove(corpus, cfg);
  const std::string out_path = ctx.resolve(output);
  save_embeddings(fit.table, out_path,
                  {"config_hash " + ctx.config_hash, "seed " + std::to_string(ctx.seed)});
  ctx.note_output(out_path);
  ctx.summary["vocab"] = fit.table.size();
  ctx.summary["dim"] = cfg.dim;
  ctx.summary["objective_initial"] = fit.objective_history.front();
  ctx.summary["objective_final"] = fit.objective_history.back();
  return ctx.done();
}

inline int cmd_cluster(const std::vector<std::string>& args) {
  CLI::App app{"k-means over point features, with a scatter rendering"};
  detail::Context ctx;
  std::string dataset, embeddings, on = "responses", features = "text";
  std::string output = "clusters.json", scatter = "clusters.svg";
  int k = 10, max_iter = 300, n_init = 10;
  double image_weight = 0.5;
  std::uint64_t vocab_cap = 10000;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--embeddings", embeddings, "GloVe-format text embeddings")->required();
  app.add_option("--k", k, "number of clusters")->capture_default_str();
  app.add_option("--on", on, "questions | responses")
      ->check(CLI::IsMember({"questions", "responses"}))
      ->capture_default_str();
  app.add_option("--features", features, "text | text+image")
      ->check(CLI::IsMember({"text", "text+image"}))
      ->capture_default_str();
  app.add_option("--image-weight", image_weight, "fusion weight for image features")
      ->capture_default_str();
  app.add_option("--max-iter", max_iter, "max Lloyd iterations")->capture_default_str();
  app.add_option("--n-init", n_init, "seeding restarts")->capture_default_str();
  app.add_option("--vocab-cap", vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
  app.add_option("--output", output, "cluster model file name")->capture_default_str();
  app.add_option("--scatter", scatter, "scatter SVG file name (empty to skip)")
      ->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("cluster", {{"dataset", dataset},
                         {"embeddings", embeddings},
                         {"k", std::to_string(k)},
                         {"on", on},
                         {"features", features},
                         {"image-weight", detail::fmt_double(image_weight)},
                         {"max-iter", std::to_string(max_iter)},
                         {"n-init", std::to_string(n_init)},
                         {"vocab-cap", std::to_string(vocab_cap)},
                         {"seed", std::to_string(ctx.seed)},
                         {"output", output},
                         {"scatter", scatter},
                         {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const EmbeddingTable table = load_embeddings(embeddings, vocab_cap);
  const std::vector<Vec> feats = detail::point_features(ds, table, on, features, image_weight);

  KmeansTrace trace;
  const ClusterModel model = kmeans_fit(feats, k, ctx.seed, max_iter, &trace, n_init);
  const std::string out_path = ctx.resolve(output);
  save_cluster_model(model, out_path,
                     {{"assignments", trace.assignments},
                      {"inertia", model.inertia},
                      {"on", on},
                      {"features", features},
                      {"config_hash", ctx.config_hash}});
  ctx.note_output(out_path);

  if (!scatter.empty()) {
    const std::vector<Vec> reduced = pca_reduce(feats, 2);
    ScatterSpec spec;
    spec.k = k;
    for (size_t i = 0; i < reduced.size(); ++i) {
      spec.points.push_back({reduced[i][0], reduced[i][1], trace.assignments[i]});
    }
    const std::string svg_path = ctx.resolve(scatter);
    render_scatter(spec, svg_path);
    ctx.write_meta(svg_path, {{"points", spec.points.size()}});
    ctx.note_output(svg_path);
    ctx.note_output(csv_twin_path(svg_path));
  }
  ctx.summary["k"] = k;
  ctx.summary["inertia"] = model.inertia;
  ctx.summary["iterations"] = model.iterations_run;
  return ctx.done();
}

inline int cmd_extract_templates(const std::vector<std::string>& args) {
  CLI::App app{"mine frequent POS templates per response cluster"};
  detail::Context ctx;
  std::string dataset, clusters, lexicon, output = "templates.json";
  int top = 3;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--clusters", clusters, "cluster artifact from the cluster command")
      ->required();
  app.add_option("--lexicon", lexicon, "POS lexicon TSV")->required();
  app.add_option("--top", top, "templates kept per cluster")->capture_default_str();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("extract-templates", {{"dataset", dataset},
                                   {"clusters", clusters},
                                   {"lexicon", lexicon},
                                   {"top", std::to_string(top)},
                                   {"output", output},
                                   {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const detail::ClusterArtifact art = detail::load_cluster_artifact(clusters);
  if (art.assignments.size() != ds.size())
    throw std::runtime_error("cluster assignments cover " +
                             std::to_string(art.assignments.size()) +
                             " points but the dataset has " + std::to_string(ds.size()));
  const PosTagger tagger = load_tagger(lexicon);

  std::map<int, std::vector<TokenSeq>> grouped;
  for (size_t i = 0; i < ds.points.size(); ++i) {
    grouped[art.assignments[i]].push_back(preprocess_text(ds.points[i].response));
  }

  nlohmann::json clusters_json = nlohmann::json::array();
  size_t skipped = 0;
  for (const auto& [cid, responses] : grouped) {
    try {
      const TemplateSet set = extract_templates(responses, tagger, top, cid);
      nlohmann::json cj;
      cj["cluster_id"] = cid;
      cj["templates"] = nlohmann::json::array();
      for (const TemplateEntry& tpl : set.templates) {
        cj["templates"].push_back({{"tags", tpl.tags}, {"count", tpl.count}});
      }
      clusters_json.push_back(std::move(cj));
    } catch (const std::exception&) {
      ++skipped;  // cluster too short/degenerate to mine; parses become no_match
    }
  }
  nlohmann::json j;
  j["format"] = "anspar-templates";
  j["config_hash"] = ctx.config_hash;
  j["seed"] = ctx.seed;
  j["clusters"] = std::move(clusters_json);
  const std::string out_path = ctx.resolve(output);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + out_path);
  out << j.dump(2) << "\n";
  out.close();
  ctx.note_output(out_path);
  ctx.summary["clusters"] = grouped.size();
  ctx.summary["skipped_clusters"] = skipped;
  ctx.summary["top"] = top;
  return ctx.done();
}

inline int cmd_parse_templates(const std::vector<std::string>& args) {
  CLI::App app{"parse answers out of responses with mined POS templates"};
  detail::Context ctx;
  std::string dataset, clusters, templates, lexicon, output = "parses_templates.jsonl";
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--clusters", clusters, "cluster artifact")->required();
  app.add_option("--templates", templates, "templates artifact")->required();
  app.add_option("--lexicon", lexicon, "POS lexicon TSV")->required();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("parse-templates", {{"dataset", dataset},
                                 {"clusters", clusters},
                                 {"templates", templates},
                                 {"lexicon", lexicon},
                                 {"output", output},
                                 {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const detail::ClusterArtifact art = detail::load_cluster_artifact(clusters);
  const PosTagger tagger = load_tagger(lexicon);
  const std::map<int, TemplateSet> sets = detail::load_template_file(templates);
  const std::vector<ParseResult> parses =
      detail::parse_all_templates(ds, tagger, sets, art.assignments);

  const std::string out_path = ctx.resolve(output);
  detail::write_parses(out_path, ds, parses);
  ctx.write_meta(out_path, {{"points", ds.size()}});
  ctx.note_output(out_path);
  ctx.summary["points"] = ds.size();
  ctx.summary["no_match"] = detail::count_no_match(parses);
  return ctx.done();
}

inline int cmd_label_questions(const std::vector<std::string>& args) {
  CLI::App app{"cluster question embeddings and write the labels back"};
  detail::Context ctx;
  std::string dataset, embeddings, features = "text";
  std::string output = "labeled.jsonl", model_out = "question_clusters.json";
  int k = 10, max_iter = 300, n_init = 10;
  double image_weight = 0.5;
  std::uint64_t vocab_cap = 10000;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--embeddings", embeddings, "GloVe-format text embeddings")->required();
  app.add_option("--k", k, "number of question types")->capture_default_str();
  app.add_option("--features", features, "text | text+image")
      ->check(CLI::IsMember({"text", "text+image"}))
      ->capture_default_str();
  app.add_option("--image-weight", image_weight, "fusion weight for image features")
      ->capture_default_str();
  app.add_option("--max-iter", max_iter, "max Lloyd iterations")->capture_default_str();
  app.add_option("--n-init", n_init, "seeding restarts")->capture_default_str();
  app.add_option("--vocab-cap", vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
  app.add_option("--output", output, "labeled dataset file name")->capture_default_str();
  app.add_option("--model-out", model_out, "cluster model file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("label-questions", {{"dataset", dataset},
                                 {"embeddings", embeddings},
                                 {"k", std::to_string(k)},
                                 {"features", features},
                                 {"image-weight", detail::fmt_double(image_weight)},
                                 {"max-iter", std::to_string(max_iter)},
                                 {"n-init", std::to_string(n_init)},
                                 {"vocab-cap", std::to_string(vocab_cap)},
                                 {"seed", std::to_string(ctx.seed)},
                                 {"output", output},
                                 {"model-out", model_out},
                                 {"out-dir", ctx.out_dir}});
  Dataset ds = load_dataset(dataset);
  const EmbeddingTable table = load_embeddings(embeddings, vocab_cap);
  const std::vector<Vec> feats =
      detail::point_features(ds, table, "questions", features, image_weight);

  KmeansTrace trace;
  const ClusterModel model = kmeans_fit(feats, k, ctx.seed, max_iter, &trace, n_init);
  for (size_t i = 0; i < ds.points.size(); ++i) ds.points[i].label = trace.assignments[i];

  const std::string out_path = ctx.resolve(output);
  save_dataset(ds, out_path);
  ctx.write_meta(out_path, {{"points", ds.size()}, {"k", k}});
  ctx.note_output(out_path);
  const std::string model_path = ctx.resolve(model_out);
  save_cluster_model(model, model_path,
                     {{"assignments", trace.assignments},
                      {"inertia", model.inertia},
                      {"on", "questions"},
                      {"features", features},
                      {"config_hash", ctx.config_hash}});
  ctx.note_output(model_path);
  ctx.summary["k"] = k;
  ctx.summary["inertia"] = model.inertia;
  ctx.summary["points"] = ds.size();
  return ctx.done();
}

inline int cmd_train_attn(const std::vector<std::string>& args) {
  CLI::App app{"train the GRU/attention question-type classifier"};
  detail::Context ctx;
  std::string dataset, embeddings, output = "attn_checkpoint.json";
  TrainConfig cfg;
  double val_frac = 0.2;
  int n_classes = 0;
  std::uint64_t vocab_cap = 10000;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "labeled dataset JSONL")->required();
  app.add_option("--embeddings", embeddings, "GloVe-format text embeddings")->required();
  app.add_option("--val-frac", val_frac, "validation fraction")->capture_default_str();
  app.add_option("--layers", cfg.layers, "stacked GRU layers")->capture_default_str();
  app.add_option("--hidden", cfg.hidden_dim, "hidden width")->capture_default_str();
  app.add_option("--dk", cfg.d_k, "attention width (0 = hidden)")->capture_default_str();
  app.add_option("--batch", cfg.batch_size, "batch size")->capture_default_str();
  app.add_option("--epochs", cfg.epochs, "training epochs")->capture_default_str();
  app.add_option("--lr", cfg.learning_rate, "adam learning rate")->capture_default_str();
  app.add_option("--beta1", cfg.adam_beta1, "adam beta1")->capture_default_str();
  app.add_option("--beta2", cfg.adam_beta2, "adam beta2")->capture_default_str();
  app.add_option("--eps", cfg.adam_eps, "adam epsilon")->capture_default_str();
  app.add_option("--n-classes", n_classes, "class count (0 = infer from labels)")
      ->capture_default_str();
  app.add_option("--vocab-cap", vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
  app.add_option("--output", output, "checkpoint file name")->capture_default_str();
  detail::parse_or_exit(app, args);
  cfg.seed = ctx.seed;

  ctx.finish("train-attn", {{"dataset", dataset},
                            {"embeddings", embeddings},
                            {"val-frac", detail::fmt_double(val_frac)},
                            {"layers", std::to_string(cfg.layers)},
                            {"hidden", std::to_string(cfg.hidden_dim)},
                            {"dk", std::to_string(cfg.d_k)},
                            {"batch", std::to_string(cfg.batch_size)},
                            {"epochs", std::to_string(cfg.epochs)},
                            {"lr", detail::fmt_double(cfg.learning_rate)},
                            {"beta1", detail::fmt_double(cfg.adam_beta1)},
                            {"beta2", detail::fmt_double(cfg.adam_beta2)},
                            {"eps", detail::fmt_double(cfg.adam_eps)},
                            {"n-classes", std::to_string(n_classes)},
                            {"vocab-cap", std::to_string(vocab_cap)},
                            {"seed", std::to_string(ctx.seed)},
                            {"output", output},
                            {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const EmbeddingTable table = load_embeddings(embeddings, vocab_cap);
  if (n_classes == 0) {
    int max_label = -1;
    for (const DataPoint& p : ds.points) {
      if (p.label) max_label = std::max(max_label, *p.label);
    }
    if (max_label < 1) throw std::runtime_error("cannot infer n_classes: need labels >= 1");
    n_classes = max_label + 1;
  }

  const auto [train_ds, val_ds] = split_dataset(ds, 1.0 - val_frac, ctx.seed);
  GruAttnModel model =
      make_gru_attn_model(static_cast<int>(table.dim), n_classes, cfg);
  const TrainHistory history = train(model, train_ds.points, val_ds.points, table, cfg);
  const double val_acc = history.val_accuracy.empty()
                             ? evaluate_accuracy(model, table, val_ds.points)
                             : history.val_accuracy.back();

  const std::string out_path = ctx.resolve(output);
  save_checkpoint(out_path, model, cfg, history, val_acc);
  ctx.note_output(out_path);
  ctx.summary["n_classes"] = n_classes;
  ctx.summary["train_points"] = train_ds.size();
  ctx.summary["val_points"] = val_ds.size();
  ctx.summary["val_accuracy"] = val_acc;
  if (!history.train_loss.empty()) {
    ctx.summary["train_loss_first"] = history.train_loss.front();
    ctx.summary["train_loss_final"] = history.train_loss.back();
  }
  return ctx.done();
}

inline int cmd_parse_attn(const std::vector<std::string>& args) {
  CLI::App app{"extract answers with the trained attention model"};
  detail::Context ctx;
  std::string dataset, embeddings, checkpoint, output = "parses_attn.jsonl";
  double x = 2.0;
  std::uint64_t vocab_cap = 10000;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--embeddings", embeddings, "GloVe-format text embeddings")->required();
  app.add_option("--checkpoint", checkpoint, "trained model checkpoint")->required();
  app.add_option("--x", x, "attention threshold divisor (> 1)")->capture_default_str();
  app.add_option("--vocab-cap", vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("parse-attn", {{"dataset", dataset},
                            {"embeddings", embeddings},
                            {"checkpoint", checkpoint},
                            {"x", detail::fmt_double(x)},
                            {"vocab-cap", std::to_string(vocab_cap)},
                            {"output", output},
                            {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const EmbeddingTable table = load_embeddings(embeddings, vocab_cap);
  const Checkpoint ck = load_checkpoint(checkpoint);
  ctx.seed = ck.config.seed;
  if (static_cast<size_t>(ck.model.input_dim) != table.dim)
    throw std::runtime_error("checkpoint expects input_dim " +
                             std::to_string(ck.model.input_dim) + " but embeddings have dim " +
                             std::to_string(table.dim));
  const std::vector<ParseResult> parses = detail::parse_all_attn(ds, table, ck.model, x);

  const std::string out_path = ctx.resolve(output);
  detail::write_parses(out_path, ds, parses);
  ctx.write_meta(out_path, {{"points", ds.size()}, {"x", x}});
  ctx.note_output(out_path);
  size_t kept_total = 0;
  for (const ParseResult& r : parses) kept_total += r.tokens.size();
  ctx.summary["points"] = ds.size();
  ctx.summary["no_match"] = detail::count_no_match(parses);
  ctx.summary["kept_tokens"] = kept_total;
  ctx.summary["x"] = x;
  return ctx.done();
}

inline int cmd_baseline(const std::vector<std::string>& args) {
  CLI::App app{"run a baseline answer parser"};
  detail::Context ctx;
  std::string which, dataset, taxonomy, lexicon, rules, output;
  double theta = 0.0;
  detail::add_common(app, ctx);
  app.add_option("--which", which, "wordnet | pos")
      ->check(CLI::IsMember({"wordnet", "pos"}))
      ->required();
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--taxonomy", taxonomy, "taxonomy TSV (wordnet baseline)");
  app.add_option("--lexicon", lexicon, "POS lexicon TSV")->required();
  app.add_option("--rules", rules, "expectation rules TSV (pos baseline)");
  app.add_option("--theta", theta, "similarity threshold (wordnet baseline)")
      ->capture_default_str();
  app.add_option("--output", output, "output file name (default parses_<which>.jsonl)");
  detail::parse_or_exit(app, args);
  if (output.empty()) output = "parses_" + which + ".jsonl";

  ctx.finish("baseline", {{"which", which},
                          {"dataset", dataset},
                          {"taxonomy", taxonomy},
                          {"lexicon", lexicon},
                          {"rules", rules},
                          {"theta", detail::fmt_double(theta)},
                          {"output", output},
                          {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const PosTagger tagger = load_tagger(lexicon);
  Taxonomy tax;
  PosExpectationRules rule_set;
  if (which == "wordnet") {
    if (taxonomy.empty()) throw std::runtime_error("wordnet baseline needs --taxonomy");
    tax = load_taxonomy(taxonomy);
  } else {
    if (rules.empty()) throw std::runtime_error("pos baseline needs --rules");
    rule_set = load_pos_rules(rules);
  }
  const std::vector<ParseResult> parses =
      detail::parse_all_baseline(ds, which, tax, tagger, rule_set, theta);

  const std::string out_path = ctx.resolve(output);
  detail::write_parses(out_path, ds, parses);
  ctx.write_meta(out_path, {{"points", ds.size()}, {"which", which}});
  ctx.note_output(out_path);
  ctx.summary["which"] = which;
  ctx.summary["points"] = ds.size();
  ctx.summary["no_match"] = detail::count_no_match(parses);
  return ctx.done();
}

inline int cmd_evaluate(const std::vector<std::string>& args) {
  CLI::App app{"score parses against the reference answers with BLEU"};
  detail::Context ctx;
  std::string dataset, parses_path, model, checkpoint, embeddings, clusters, templates;
  std::string taxonomy, lexicon, rules, output = "report.csv", name;
  double x = 2.0, theta = 0.0;
  std::uint64_t vocab_cap = 10000;
  detail::add_common(app, ctx);
  app.add_option("--dataset", dataset, "dataset JSONL with reference answers")->required();
  app.add_option("--parses", parses_path, "pre-computed parses JSONL");
  app.add_option("--model", model, "attn | templates | wordnet | pos (runs the parser here)")
      ->check(CLI::IsMember({"attn", "templates", "wordnet", "pos"}));
  app.add_option("--checkpoint", checkpoint, "trained model checkpoint (attn)");
  app.add_option("--embeddings", embeddings, "embeddings (attn)");
  app.add_option("--clusters", clusters, "cluster artifact (templates)");
  app.add_option("--templates", templates, "templates artifact (templates)");
  app.add_option("--taxonomy", taxonomy, "taxonomy TSV (wordnet)");
  app.add_option("--lexicon", lexicon, "POS lexicon TSV (templates/wordnet/pos)");
  app.add_option("--rules", rules, "expectation rules TSV (pos)");
  app.add_option("--x", x, "attention threshold divisor (attn)")->capture_default_str();
  app.add_option("--theta", theta, "similarity threshold (wordnet)")->capture_default_str();
  app.add_option("--vocab-cap", vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--name", name, "row label (defaults to the model or 'parses')");
  app.add_option("--output", output, "report CSV file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("evaluate", {{"dataset", dataset},
                          {"parses", parses_path},
                          {"model", model},
                          {"checkpoint", checkpoint},
                          {"embeddings", embeddings},
                          {"clusters", clusters},
                          {"templates", templates},
                          {"taxonomy", taxonomy},
                          {"lexicon", lexicon},
                          {"rules", rules},
                          {"x", detail::fmt_double(x)},
                          {"theta", detail::fmt_double(theta)},
                          {"vocab-cap", std::to_string(vocab_cap)},
                          {"name", name},
                          {"output", output},
                          {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);

  std::vector<ParseResult> parses;
  if (!parses_path.empty()) {
    parses = detail::load_parses(parses_path, ds.size());
    if (name.empty()) name = "parses";
  } else if (model == "attn") {
    if (checkpoint.empty() || embeddings.empty())
      throw std::runtime_error("evaluate --model attn needs --checkpoint and --embeddings");
    const EmbeddingTable table = load_embeddings(embeddings, vocab_cap);
    const Checkpoint ck = load_checkpoint(checkpoint);
    parses = detail::parse_all_attn(ds, table, ck.model, x);
    if (name.empty()) name = "attention";
  } else if (model == "templates") {
    if (clusters.empty() || templates.empty() || lexicon.empty())
      throw std::runtime_error(
          "evaluate --model templates needs --clusters, --templates and --lexicon");
    const detail::ClusterArtifact art = detail::load_cluster_artifact(clusters);
    const PosTagger tagger = load_tagger(lexicon);
    parses = detail::parse_all_templates(ds, tagger, detail::load_template_file(templates),
                                         art.assignments);
    if (name.empty()) name = "templates";
  } else if (model == "wordnet" || model == "pos") {
    if (lexicon.empty()) throw std::runtime_error("evaluate --model needs --lexicon");
    const PosTagger tagger = load_tagger(lexicon);
    Taxonomy tax;
    PosExpectationRules rule_set;
    if (model == "wordnet") {
      if (taxonomy.empty()) throw std::runtime_error("evaluate --model wordnet needs --taxonomy");
      tax = load_taxonomy(taxonomy);
    } else {
      if (rules.empty()) throw std::runtime_error("evaluate --model pos needs --rules");
      rule_set = load_pos_rules(rules);
    }
    parses = detail::parse_all_baseline(ds, model, tax, tagger, rule_set, theta);
    if (name.empty()) name = model == "wordnet" ? "baseline-wordnet" : "baseline-pos";
  } else {
    throw std::runtime_error("evaluate needs either --parses or --model");
  }

  std::vector<std::pair<TokenSeq, TokenSeq>> pairs;
  pairs.reserve(ds.size());
  for (size_t i = 0; i < ds.points.size(); ++i) {
    if (!ds.points[i].cleaned_answer)
      throw std::runtime_error("point " + std::to_string(i) +
                               " has no cleaned_answer reference");
    pairs.emplace_back(parses[i].tokens, *ds.points[i].cleaned_answer);
  }
  EvalReport report;
  report.rows.push_back(make_eval_row(name, pairs));
  const EvalRow& row = report.rows[0];

  const std::string csv_path = ctx.resolve(output);
  write_text_file(csv_path,
                  report_to_csv(report, {"config_hash " + ctx.config_hash,
                                         "seed " + std::to_string(ctx.seed)}));
  ctx.note_output(csv_path);

  nlohmann::json rj;
  rj["name"] = name;
  rj["config_hash"] = ctx.config_hash;
  rj["seed"] = ctx.seed;
  rj["n"] = row.n_examples;
  rj["bleu_corpus"] = row.bleu_corpus;
  rj["bleu_sentence_mean"] = row.bleu_sentence_mean;
  rj["no_match"] = detail::count_no_match(parses);
  const std::string json_path = csv_path + ".json";
  std::ofstream jout(json_path, std::ios::binary);
  if (!jout) throw std::runtime_error("cannot write: " + json_path);
  jout << rj.dump(2) << "\n";
  jout.close();
  ctx.note_output(json_path);

  ctx.summary["name"] = name;
  ctx.summary["n"] = row.n_examples;
  ctx.summary["bleu1_corpus"] = row.bleu_corpus[0];
  ctx.summary["bleu1_sentence_mean"] = row.bleu_sentence_mean[0];
  ctx.summary["no_match"] = detail::count_no_match(parses);
  return ctx.done();
}

inline int cmd_select(const std::vector<std::string>& args) {
  CLI::App app{"pick the question with the least confident answer"};
  detail::Context ctx;
  std::string candidates, prefixes = "wow!", output = "selection.json";
  bool decorate = false;
  detail::add_common(app, ctx);
  app.add_option("--candidates", candidates, "candidates JSONL")->required();
  app.add_flag("--decorate", decorate, "prepend a seeded exclamation prefix");
  app.add_option("--prefixes", prefixes, "comma-separated decoration prefixes")
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
  app.add_option("--output", output, "output file name")->capture_default_str();
  detail::parse_or_exit(app, args);

  ctx.finish("select", {{"candidates", candidates},
                        {"decorate", decorate ? "1" : "0"},
                        {"prefixes", prefixes},
                        {"seed", std::to_string(ctx.seed)},
                        {"output", output},
                        {"out-dir", ctx.out_dir}});
  const std::vector<CandidateQuestion> cands = load_candidates(candidates);
  const size_t idx = select_question(cands);

  nlohmann::json j;
  j["config_hash"] = ctx.config_hash;
  j["seed"] = ctx.seed;
  j["selected_index"] = idx;
  j["text"] = cands[idx].text;
  j["entropy"] = entropy(cands[idx].answer_distribution);
  if (decorate) {
    DecorationPool pool;
    std::string cur;
    for (char ch : prefixes + ",") {
      if (ch == ',') {
        if (!cur.empty()) pool.prefixes.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    j["decorated"] = decorate_question(cands[idx].text, pool, ctx.seed);
  }
  const std::string out_path = ctx.resolve(output);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + out_path);
  out << j.dump(2) << "\n";
  out.close();
  ctx.note_output(out_path);
  ctx.summary["selected_index"] = idx;
  ctx.summary["text"] = cands[idx].text;
  if (j.contains("decorated")) ctx.summary["decorated"] = j["decorated"];
  return ctx.done();
}

inline int cmd_visualize(const std::vector<std::string>& args) {
  CLI::App app{"render figure-style artifacts (cluster scatter, attention strip)"};
  detail::Context ctx;
  std::string what, dataset, embeddings, clusters, checkpoint, output;
  std::uint64_t index = 0, vocab_cap = 10000;
  double x = 2.0;
  detail::add_common(app, ctx);
  app.add_option("--what", what, "scatter | attention")
      ->check(CLI::IsMember({"scatter", "attention"}))
      ->required();
  app.add_option("--dataset", dataset, "input dataset JSONL")->required();
  app.add_option("--embeddings", embeddings, "GloVe-format text embeddings")->required();
  app.add_option("--clusters", clusters, "cluster artifact (scatter)");
  app.add_option("--checkpoint", checkpoint, "trained model checkpoint (attention)");
  app.add_option("--index", index, "data point index (attention)")->capture_default_str();
  app.add_option("--x", x, "attention threshold divisor")->capture_default_str();
  app.add_option("--vocab-cap", vocab_cap, "max vocabulary")->capture_default_str();
  app.add_option("--output", output, "SVG file name (default <what>.svg)");
  detail::parse_or_exit(app, args);
  if (output.empty()) output = what + ".svg";

  ctx.finish("visualize", {{"what", what},
                           {"dataset", dataset},
                           {"embeddings", embeddings},
                           {"clusters", clusters},
                           {"checkpoint", checkpoint},
                           {"index", std::to_string(index)},
                           {"x", detail::fmt_double(x)},
                           {"vocab-cap", std::to_string(vocab_cap)},
                           {"output", output},
                           {"out-dir", ctx.out_dir}});
  const Dataset ds = load_dataset(dataset);
  const EmbeddingTable table = load_embeddings(embeddings, vocab_cap);
  const std::string svg_path = ctx.resolve(output);

  if (what == "scatter") {
    if (clusters.empty()) throw std::runtime_error("visualize --what scatter needs --clusters");
    const detail::ClusterArtifact art = detail::load_cluster_artifact(clusters);
    if (art.assignments.size() != ds.size())
      throw std::runtime_error("cluster assignments cover " +
                               std::to_string(art.assignments.size()) +
                               " points but the dataset has " + std::to_string(ds.size()));
    const std::vector<Vec> feats = detail::point_features(ds, table, "responses", "text", 0.0);
    const std::vector<Vec> reduced = pca_reduce(feats, 2);
    ScatterSpec spec;
    spec.k = art.model.k;
    for (size_t i = 0; i < reduced.size(); ++i) {
      spec.points.push_back({reduced[i][0], reduced[i][1], art.assignments[i]});
    }
    render_scatter(spec, svg_path);
    ctx.summary["points"] = spec.points.size();
  } else {
    if (checkpoint.empty())
      throw std::runtime_error("visualize --what attention needs --checkpoint");
    if (index >= ds.size())
      throw std::runtime_error("--index " + std::to_string(index) +
                               " out of range for dataset of " + std::to_string(ds.size()));
    const Checkpoint ck = load_checkpoint(checkpoint);
    const TokenSeq tokens = preprocess_text(ds.points[index].response);
    std::vector<size_t> kept_idx;
    const std::vector<Vec> inputs = embed_tokens(table, tokens, &kept_idx);
    if (inputs.empty())
      throw std::runtime_error("point " + std::to_string(index) +
                               ": response is entirely out of vocabulary");
    const ForwardTrace tr = model_forward(ck.model, inputs);
    const double max_w = *std::max_element(tr.attn.weights.begin(), tr.attn.weights.end());
    AttentionStrip strip;
    for (size_t i = 0; i < kept_idx.size(); ++i) {
      strip.tokens.push_back(tokens[kept_idx[i]]);
      strip.weights.push_back(tr.attn.weights[i]);
      strip.kept.push_back(tr.attn.weights[i] >= max_w / x);
    }
    render_attention(strip, svg_path);
    ctx.summary["index"] = index;
    ctx.summary["tokens"] = strip.tokens.size();
  }
  ctx.write_meta(svg_path);
  ctx.note_output(svg_path);
  ctx.note_output(csv_twin_path(svg_path));
  return ctx.done();
}

// ---- dispatch ----

inline const std::map<std::string, int (*)(const std::vector<std::string>&)>& command_table() {
  static const std::map<std::string, int (*)(const std::vector<std::string>&)> table = {
      {"preprocess", cmd_preprocess},
      {"synth", cmd_synth},
      {"embed", cmd_embed},
      {"fit-glove", cmd_fit_glove},
      {"cluster", cmd_cluster},
      {"extract-templates", cmd_extract_templates},
      {"parse-templates", cmd_parse_templates},
      {"label-questions", cmd_label_questions},
      {"train-attn", cmd_train_attn},
      {"parse-attn", cmd_parse_attn},
      {"baseline", cmd_baseline},
      {"evaluate", cmd_evaluate},
      {"select", cmd_select},
      {"visualize", cmd_visualize},
  };
  return table;
}

inline void print_usage(std::ostream& os) {
  os << "usage: anspar <command> [options]\n\ncommands:\n";
  for (const auto& [name, fn] : command_table()) {
    (void)fn;
    os << "  " << name << "\n";
  }
  os << "\nrun `anspar <command> --help` for the command's options\n";
}

/// Dispatches argv[1]; returns the process exit code (0 ok, 1 usage, 2 data).
inline int run_command(const std::vector<std::string>& argv) {
  if (argv.size() < 2) {
    print_usage(std::cerr);
    return 1;
  }
  const std::string command = argv[1];
  if (command == "--help" || command == "-h" || command == "help") {
    print_usage(std::cout);
    return 0;
  }
  const auto it = command_table().find(command);
  if (it == command_table().end()) {
    std::cerr << "unknown command: " << command << "\n";
    print_usage(std::cerr);
    return 1;
  }
  const std::vector<std::string> rest(argv.begin() + 2, argv.end());
  try {
    return it->second(rest);
  } catch (const detail::CliExit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int run_command(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<size_t>(argc));
  for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args);
}

}  // namespace anspar::cli
