#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "anspar/cli.hpp"

using namespace anspar;
namespace fs = std::filesystem;

namespace {

struct CaptureStdout {
  std::ostringstream oss;
  std::streambuf* old;
  CaptureStdout() : old(std::cout.rdbuf(oss.rdbuf())) {}
  ~CaptureStdout() { std::cout.rdbuf(old); }
  std::string str() const { return oss.str(); }
};

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "anspar");
  return cli::run_command(args);
}

// run + parse the one-line JSON summary from stdout
std::pair<int, nlohmann::json> run_json(std::vector<std::string> args) {
  CaptureStdout cap;
  const int rc = run(std::move(args));
  nlohmann::json j;
  const std::string out = cap.str();
  if (rc == 0 && !out.empty()) j = nlohmann::json::parse(out);
  return {rc, j};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TmpDir {
  fs::path root;
  TmpDir() {
    root = fs::temp_directory_path() / "anspar_cli_tests";
    fs::remove_all(root);
    fs::create_directories(root);
  }
  std::string operator/(const std::string& name) const { return (root / name).string(); }
};

const std::string kLexicon = std::string(ANSPAR_DATA_DIR) + "/lexicon.tsv";
const std::string kRules = std::string(ANSPAR_DATA_DIR) + "/pos_rules.tsv";
const std::string kTaxonomy = std::string(ANSPAR_DATA_DIR) + "/taxonomy.tsv";

}  // namespace

TEST_CASE("unknown or missing command exits 1, help exits 0") {
  CaptureStdout cap;
  CHECK(run({"no-such-command"}) == 1);
  CHECK(run({}) == 1);
  CHECK(run({"--help"}) == 0);
  CHECK(run({"synth", "--help"}) == 0);
  CHECK(cap.str().find("synth") != std::string::npos);
}

TEST_CASE("usage errors exit 1, data errors exit 2") {
  TmpDir tmp;
  CaptureStdout cap;
  // missing required flag
  CHECK(run({"embed", "--embeddings", "x.txt"}) == 1);
  // unknown flag
  CHECK(run({"synth", "--frobnicate", "3"}) == 1);
  // referenced file does not exist
  CHECK(run({"embed", "--dataset", tmp / "missing.jsonl", "--embeddings", tmp / "missing.txt",
             "--out-dir", tmp / "out"}) == 2);
}

TEST_CASE("synth is seed-deterministic and byte-identical across reruns") {
  TmpDir tmp;
  auto [rc1, s1] = run_json({"synth", "--per-family", "10", "--seed", "11", "--out-dir",
                             tmp / "a"});
  auto [rc2, s2] = run_json({"synth", "--per-family", "10", "--seed", "11", "--out-dir",
                             tmp / "b"});
  auto [rc3, s3] = run_json({"synth", "--per-family", "10", "--seed", "12", "--out-dir",
                             tmp / "c"});
  REQUIRE(rc1 == 0);
  REQUIRE(rc2 == 0);
  REQUIRE(rc3 == 0);
  CHECK(s1["points"] == 50);
  CHECK(slurp(tmp / "a/synth.jsonl") == slurp(tmp / "b/synth.jsonl"));
  CHECK(slurp(tmp / "a/synth.jsonl") != slurp(tmp / "c/synth.jsonl"));
  // summary carries provenance
  CHECK(s1["config_hash"].get<std::string>().size() == 16);
  CHECK(s1["seed"] == 11);
  // sidecar meta carries the same hash
  const auto meta = nlohmann::json::parse(slurp(tmp / "a/synth.jsonl.meta.json"));
  CHECK(meta["config_hash"] == s1["config_hash"]);
  CHECK(meta["command"] == "synth");
}

TEST_CASE("config file sets options, flags override, env var sets out-dir") {
  TmpDir tmp;
  {
    std::ofstream cfg(tmp / "synth.cfg");
    cfg << "per-family=10\nseed=11\n";
  }
  auto [rc1, s1] = run_json({"synth", "--config", tmp / "synth.cfg", "--out-dir", tmp / "d"});
  REQUIRE(rc1 == 0);
  CHECK(s1["points"] == 50);
  CHECK(s1["seed"] == 11);

  // flag beats config file
  auto [rc2, s2] =
      run_json({"synth", "--config", tmp / "synth.cfg", "--seed", "12", "--out-dir", tmp / "e"});
  REQUIRE(rc2 == 0);
  CHECK(s2["seed"] == 12);

  // environment variable supplies the output dir when the flag is absent
  setenv("ANSPAR_OUT", (tmp / "f").c_str(), 1);
  auto [rc3, s3] = run_json({"synth", "--per-family", "10", "--seed", "11"});
  unsetenv("ANSPAR_OUT");
  REQUIRE(rc3 == 0);
  CHECK(fs::exists(tmp / "f/synth.jsonl"));
  CHECK(slurp(tmp / "d/synth.jsonl") == slurp(tmp / "f/synth.jsonl"));
}

TEST_CASE("pipeline commands chain into each other") {
  TmpDir tmp;
  const std::string out = tmp / "run";

  auto [rc_synth, s_synth] =
      run_json({"synth", "--per-family", "20", "--seed", "5", "--out-dir", out});
  REQUIRE(rc_synth == 0);

  auto [rc_pre, s_pre] = run_json(
      {"preprocess", "--dataset", out + "/synth.jsonl", "--out-dir", out});
  REQUIRE(rc_pre == 0);
  CHECK(s_pre["points"] == 100);
  CHECK(s_pre["response_tokens"].get<int>() > 0);

  auto [rc_glove, s_glove] = run_json({"fit-glove", "--dataset", out + "/synth.jsonl", "--dim",
                                       "8", "--iters", "30", "--seed", "5", "--out-dir", out});
  REQUIRE(rc_glove == 0);
  CHECK(s_glove["vocab"].get<int>() > 20);
  CHECK(s_glove["objective_final"].get<double>() < s_glove["objective_initial"].get<double>());

  auto [rc_emb, s_emb] =
      run_json({"embed", "--dataset", out + "/synth.jsonl", "--embeddings", out + "/glove.txt",
                "--on", "questions", "--out-dir", out});
  REQUIRE(rc_emb == 0);
  CHECK(s_emb["dim"] == 8);
  CHECK(s_emb["all_oov"] == 0);

  auto [rc_lab, s_lab] =
      run_json({"label-questions", "--dataset", out + "/synth.jsonl", "--embeddings",
                out + "/glove.txt", "--k", "5", "--seed", "5", "--out-dir", out});
  REQUIRE(rc_lab == 0);
  const Dataset labeled = load_dataset(out + "/labeled.jsonl");
  REQUIRE(labeled.size() == 100);
  for (const auto& p : labeled.points) {
    REQUIRE(p.label.has_value());
    CHECK(*p.label >= 0);
    CHECK(*p.label < 5);
  }

  auto [rc_train, s_train] =
      run_json({"train-attn", "--dataset", out + "/labeled.jsonl", "--embeddings",
                out + "/glove.txt", "--hidden", "8", "--dk", "8", "--epochs", "2", "--batch",
                "16", "--seed", "5", "--out-dir", out});
  REQUIRE(rc_train == 0);
  CHECK(s_train["n_classes"] == 5);
  CHECK(s_train["train_points"] == 80);
  CHECK(s_train["val_points"] == 20);

  auto [rc_p2, s_p2] = run_json({"parse-attn", "--dataset", out + "/synth.jsonl", "--embeddings",
                                 out + "/glove.txt", "--checkpoint",
                                 out + "/attn_checkpoint.json", "--x", "2", "--output",
                                 "parses_x2.jsonl", "--out-dir", out});
  auto [rc_p3, s_p3] = run_json({"parse-attn", "--dataset", out + "/synth.jsonl", "--embeddings",
                                 out + "/glove.txt", "--checkpoint",
                                 out + "/attn_checkpoint.json", "--x", "3", "--output",
                                 "parses_x3.jsonl", "--out-dir", out});
  REQUIRE(rc_p2 == 0);
  REQUIRE(rc_p3 == 0);

  // raising x can only widen what survives: x=3 rows keep a superset of x=2 rows
  std::ifstream f2(out + "/parses_x2.jsonl"), f3(out + "/parses_x3.jsonl");
  std::string l2, l3;
  size_t rows = 0;
  while (std::getline(f2, l2) && std::getline(f3, l3)) {
    const auto j2 = nlohmann::json::parse(l2);
    const auto j3 = nlohmann::json::parse(l3);
    const auto t2 = j2["tokens"].get<TokenSeq>();
    const auto t3 = j3["tokens"].get<TokenSeq>();
    REQUIRE(t3.size() >= t2.size());
    // t2 must be an ordered subsequence of t3
    size_t pos = 0;
    for (const auto& tok : t2) {
      while (pos < t3.size() && t3[pos] != tok) ++pos;
      REQUIRE(pos < t3.size());
      ++pos;
    }
    ++rows;
  }
  CHECK(rows == 100);
  CHECK(s_p3["kept_tokens"].get<int>() >= s_p2["kept_tokens"].get<int>());

  auto [rc_ev, s_ev] =
      run_json({"evaluate", "--dataset", out + "/synth.jsonl", "--parses",
                out + "/parses_x2.jsonl", "--name", "attn-x2", "--out-dir", out});
  REQUIRE(rc_ev == 0);
  CHECK(s_ev["n"] == 100);
  CHECK(s_ev["bleu1_corpus"].get<double>() >= 0.0);
  CHECK(s_ev["bleu1_corpus"].get<double>() <= 1.0);
  const std::string report = slurp(out + "/report.csv");
  CHECK(report.find("attn-x2") != std::string::npos);
  CHECK(report.find("# config_hash") != std::string::npos);

  // evaluate --model attn runs the parser itself and matches the --parses route
  auto [rc_ev2, s_ev2] =
      run_json({"evaluate", "--dataset", out + "/synth.jsonl", "--model", "attn", "--checkpoint",
                out + "/attn_checkpoint.json", "--embeddings", out + "/glove.txt", "--x", "2",
                "--name", "attn-x2", "--output", "report_direct.csv", "--out-dir", out});
  REQUIRE(rc_ev2 == 0);
  CHECK(s_ev2["bleu1_corpus"] == s_ev["bleu1_corpus"]);
}

TEST_CASE("template and baseline routes produce scored parses") {
  TmpDir tmp;
  const std::string out = tmp / "tpl";
  REQUIRE(run({"synth", "--per-family", "20", "--seed", "5", "--out-dir", out}) == 0);
  REQUIRE(run({"fit-glove", "--dataset", out + "/synth.jsonl", "--dim", "8", "--iters", "30",
               "--seed", "5", "--out-dir", out}) == 0);
  REQUIRE(run({"cluster", "--dataset", out + "/synth.jsonl", "--embeddings", out + "/glove.txt",
               "--k", "6", "--seed", "5", "--out-dir", out}) == 0);
  CHECK(fs::exists(out + "/clusters.svg"));
  CHECK(fs::exists(out + "/clusters.csv"));

  auto [rc_ex, s_ex] =
      run_json({"extract-templates", "--dataset", out + "/synth.jsonl", "--clusters",
                out + "/clusters.json", "--lexicon", kLexicon, "--out-dir", out});
  REQUIRE(rc_ex == 0);
  const auto tpl = nlohmann::json::parse(slurp(out + "/templates.json"));
  CHECK(tpl["format"] == "anspar-templates");
  CHECK(tpl["clusters"].size() + s_ex["skipped_clusters"].get<size_t>() == 6);

  auto [rc_pt, s_pt] = run_json({"parse-templates", "--dataset", out + "/synth.jsonl",
                                 "--clusters", out + "/clusters.json", "--templates",
                                 out + "/templates.json", "--lexicon", kLexicon, "--out-dir",
                                 out});
  REQUIRE(rc_pt == 0);
  CHECK(s_pt["points"] == 100);

  auto [rc_bp, s_bp] = run_json({"baseline", "--which", "pos", "--dataset", out + "/synth.jsonl",
                                 "--lexicon", kLexicon, "--rules", kRules, "--out-dir", out});
  REQUIRE(rc_bp == 0);
  CHECK(fs::exists(out + "/parses_pos.jsonl"));

  auto [rc_bw, s_bw] =
      run_json({"baseline", "--which", "wordnet", "--dataset", out + "/synth.jsonl", "--lexicon",
                kLexicon, "--taxonomy", kTaxonomy, "--out-dir", out});
  REQUIRE(rc_bw == 0);
  CHECK(fs::exists(out + "/parses_wordnet.jsonl"));

  // pos baseline without --rules is a data error
  CHECK(run({"baseline", "--which", "pos", "--dataset", out + "/synth.jsonl", "--lexicon",
             kLexicon, "--out-dir", out}) == 2);

  // row-count mismatch between parses and dataset is a data error
  {
    std::ofstream bad(out + "/short.jsonl");
    bad << R"({"index":0,"id":"x","tokens":["a"],"no_match":false})" << "\n";
  }
  CHECK(run({"evaluate", "--dataset", out + "/synth.jsonl", "--parses", out + "/short.jsonl",
             "--out-dir", out}) == 2);
}

TEST_CASE("select and visualize write their artifacts") {
  TmpDir tmp;
  const std::string out = tmp / "sv";
  {
    fs::create_directories(out);
    std::ofstream c(out + "/cands.jsonl");
    c << R"({"text":"what color is it","answer_distribution":[0.5,0.5]})" << "\n";
    c << R"({"text":"is it a cat","answer_distribution":[0.9,0.1]})" << "\n";
  }
  auto [rc_sel, s_sel] = run_json({"select", "--candidates", out + "/cands.jsonl", "--decorate",
                                   "--prefixes", "wow!,hey!", "--seed", "3", "--out-dir", out});
  REQUIRE(rc_sel == 0);
  CHECK(s_sel["selected_index"] == 0);
  const auto sel = nlohmann::json::parse(slurp(out + "/selection.json"));
  CHECK(sel["text"] == "what color is it");
  CHECK(sel["entropy"].get<double>() == Catch::Approx(std::log(2.0)).epsilon(1e-12));
  const std::string dec = sel["decorated"].get<std::string>();
  CHECK((dec == "wow! what color is it" || dec == "hey! what color is it"));

  REQUIRE(run({"synth", "--per-family", "10", "--seed", "5", "--out-dir", out}) == 0);
  REQUIRE(run({"fit-glove", "--dataset", out + "/synth.jsonl", "--dim", "8", "--iters", "20",
               "--seed", "5", "--out-dir", out}) == 0);
  REQUIRE(run({"cluster", "--dataset", out + "/synth.jsonl", "--embeddings", out + "/glove.txt",
               "--k", "4", "--seed", "5", "--scatter", "", "--out-dir", out}) == 0);
  // --scatter "" suppressed the rendering; visualize produces it on demand
  CHECK(!fs::exists(out + "/clusters.svg"));
  REQUIRE(run({"visualize", "--what", "scatter", "--dataset", out + "/synth.jsonl",
               "--embeddings", out + "/glove.txt", "--clusters", out + "/clusters.json",
               "--out-dir", out}) == 0);
  CHECK(fs::exists(out + "/scatter.svg"));
  CHECK(fs::exists(out + "/scatter.csv"));

  REQUIRE(run({"label-questions", "--dataset", out + "/synth.jsonl", "--embeddings",
               out + "/glove.txt", "--k", "5", "--seed", "5", "--out-dir", out}) == 0);
  REQUIRE(run({"train-attn", "--dataset", out + "/labeled.jsonl", "--embeddings",
               out + "/glove.txt", "--hidden", "8", "--dk", "8", "--epochs", "1", "--batch",
               "16", "--seed", "5", "--out-dir", out}) == 0);
  auto [rc_vis, s_vis] =
      run_json({"visualize", "--what", "attention", "--dataset", out + "/synth.jsonl",
                "--embeddings", out + "/glove.txt", "--checkpoint",
                out + "/attn_checkpoint.json", "--index", "3", "--out-dir", out});
  REQUIRE(rc_vis == 0);
  CHECK(fs::exists(out + "/attention.svg"));
  CHECK(fs::exists(out + "/attention.csv"));
  CHECK(s_vis["tokens"].get<int>() > 0);
  // out-of-range index is a data error
  CHECK(run({"visualize", "--what", "attention", "--dataset", out + "/synth.jsonl",
             "--embeddings", out + "/glove.txt", "--checkpoint", out + "/attn_checkpoint.json",
             "--index", "50000", "--out-dir", out}) == 2);
}
