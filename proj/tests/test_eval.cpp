#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "anspar/eval.hpp"
#include "anspar/rng.hpp"
#include "oracles.hpp"

using anspar::BleuConfig;
using anspar::BleuLevel;
using anspar::BleuSmoothing;
using anspar::TokenSeq;

namespace {

TokenSeq random_tokens(anspar::Rng& rng, size_t max_len, size_t vocab) {
  size_t len = 1 + rng.below(max_len);
  TokenSeq t;
  for (size_t i = 0; i < len; ++i) t.push_back("w" + std::to_string(rng.below(vocab)));
  return t;
}

}  // namespace

TEST_CASE("bleu basics") {
  TokenSeq ref = {"work", "uniform"};
  BleuConfig cfg;
  cfg.max_n = 2;
  REQUIRE(anspar::bleu(ref, ref, cfg) == Catch::Approx(1.0));

  BleuConfig uni;
  uni.max_n = 1;
  uni.smoothing = BleuSmoothing::None;
  REQUIRE(anspar::bleu({"it", "is", "a"}, {"rug"}, uni) == 0.0);

  REQUIRE(anspar::bleu({}, ref, cfg) == 0.0);
  REQUIRE_THROWS(anspar::bleu(ref, {}, cfg));
  BleuConfig bad;
  bad.max_n = 5;
  REQUIRE_THROWS(anspar::bleu(ref, ref, bad));
}

TEST_CASE("bleu zero overlap and smoothing behaviour") {
  BleuConfig none;
  none.smoothing = BleuSmoothing::None;
  REQUIRE(anspar::bleu({"a", "b"}, {"c", "d"}, none) == 0.0);

  // Unigram hit but no bigram: unsmoothed BLEU2 is 0, smoothed is tiny but > 0.
  BleuConfig two_none;
  two_none.max_n = 2;
  two_none.smoothing = BleuSmoothing::None;
  BleuConfig two_eps = two_none;
  two_eps.smoothing = BleuSmoothing::AddEpsilon;
  TokenSeq hyp = {"rug", "blue"};
  TokenSeq ref = {"blue", "rug", "thing"};
  REQUIRE(anspar::bleu(hyp, ref, two_none) == 0.0);
  double smoothed = anspar::bleu(hyp, ref, two_eps);
  REQUIRE(smoothed > 0.0);
  REQUIRE(smoothed < 1e-3);
}

TEST_CASE("bleu matches brute-force oracle on random pairs") {
  anspar::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    TokenSeq hyp = random_tokens(rng, 8, 6);
    TokenSeq ref = random_tokens(rng, 8, 6);
    for (int max_n = 1; max_n <= 4; ++max_n) {
      for (bool smooth : {false, true}) {
        BleuConfig cfg;
        cfg.max_n = max_n;
        cfg.smoothing = smooth ? BleuSmoothing::AddEpsilon : BleuSmoothing::None;
        double got = anspar::bleu(hyp, ref, cfg);
        double want = oracle::bleu_bruteforce(hyp, ref, max_n, smooth);
        REQUIRE(got == Catch::Approx(want).margin(1e-12));
        REQUIRE(got >= 0.0);
        REQUIRE(got <= 1.0);
      }
    }
  }
}

TEST_CASE("corpus_bleu pooling and sentence mean") {
  std::vector<std::pair<TokenSeq, TokenSeq>> identical = {
      {{"a", "b"}, {"a", "b"}}, {{"c"}, {"c"}}};
  for (BleuLevel level : {BleuLevel::Corpus, BleuLevel::SentenceMean}) {
    BleuConfig cfg;
    cfg.max_n = 1;
    cfg.level = level;
    REQUIRE(anspar::corpus_bleu(identical, cfg) == Catch::Approx(1.0));
  }

  std::vector<std::pair<TokenSeq, TokenSeq>> single = {{{"a", "x"}, {"a", "b"}}};
  BleuConfig cfg;
  cfg.max_n = 2;
  REQUIRE(anspar::corpus_bleu(single, cfg) ==
          Catch::Approx(anspar::bleu(single[0].first, single[0].second, cfg)).margin(1e-15));

  // Pooled two-pair value against the oracle's pooled computation.
  std::vector<std::pair<TokenSeq, TokenSeq>> pairs = {
      {{"it", "is", "a"}, {"a", "rug"}},
      {{"work", "uniform"}, {"work", "uniform", "today"}}};
  for (int max_n = 1; max_n <= 4; ++max_n) {
    BleuConfig pooled;
    pooled.max_n = max_n;
    pooled.level = BleuLevel::Corpus;
    REQUIRE(anspar::corpus_bleu(pairs, pooled) ==
            Catch::Approx(oracle::corpus_bleu_bruteforce(pairs, max_n, true)).margin(1e-12));
  }

  REQUIRE_THROWS(anspar::corpus_bleu({}, cfg));
  REQUIRE_THROWS(anspar::corpus_bleu({{TokenSeq{"a"}, TokenSeq{}}}, cfg));
}

TEST_CASE("corpus_bleu sentence-mean equals arithmetic mean of bleu") {
  anspar::Rng rng(7);
  std::vector<std::pair<TokenSeq, TokenSeq>> pairs;
  for (int i = 0; i < 20; ++i) {
    pairs.emplace_back(random_tokens(rng, 6, 5), random_tokens(rng, 6, 5));
  }
  BleuConfig cfg;
  cfg.max_n = 4;
  cfg.level = BleuLevel::SentenceMean;
  double mean = 0.0;
  for (const auto& [h, r] : pairs) mean += anspar::bleu(h, r, cfg);
  mean /= static_cast<double>(pairs.size());
  REQUIRE(anspar::corpus_bleu(pairs, cfg) == Catch::Approx(mean).margin(1e-12));
}

TEST_CASE("unigram clipped matches never decrease when appending ref tokens") {
  anspar::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    TokenSeq ref = random_tokens(rng, 8, 4);
    TokenSeq hyp = random_tokens(rng, 4, 4);
    long before = anspar::clipped_matches(hyp, ref, 1);
    TokenSeq grown = hyp;
    grown.push_back(ref[rng.below(ref.size())]);
    long after = anspar::clipped_matches(grown, ref, 1);
    REQUIRE(after >= before);
  }
}

TEST_CASE("bleu1 non-decreasing while growing a sub-multiset hypothesis") {
  // Parsed answers are sub-multisets of the reference; adding back reference
  // tokens (without exceeding their reference counts) never hurts BLEU1.
  anspar::Rng rng(123);
  BleuConfig cfg;
  cfg.max_n = 1;
  for (int trial = 0; trial < 100; ++trial) {
    TokenSeq ref = random_tokens(rng, 8, 5);
    std::vector<size_t> order(ref.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    TokenSeq hyp;
    double prev = 0.0;
    for (size_t idx : order) {
      hyp.push_back(ref[idx]);
      double cur = anspar::bleu(hyp, ref, cfg);
      REQUIRE(cur >= prev - 1e-12);
      prev = cur;
    }
    REQUIRE(prev == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("classification accuracy") {
  std::vector<std::string> a = {"x", "y", "z"};
  REQUIRE(anspar::classification_accuracy(a, a) == 1.0);
  std::vector<std::string> b = {"p", "q", "r"};
  REQUIRE(anspar::classification_accuracy(a, b) == 0.0);
  std::vector<std::string> c = {"x", "q", "z"};
  REQUIRE(anspar::classification_accuracy(c, a) == Catch::Approx(2.0 / 3.0));
  REQUIRE_THROWS(anspar::classification_accuracy(a, std::vector<std::string>{"x"}));

  // 10-class uniform random guessing lands near 0.10.
  anspar::Rng rng(5);
  std::vector<int> gold, pred;
  for (int i = 0; i < 10000; ++i) {
    gold.push_back(static_cast<int>(i % 10));
    pred.push_back(static_cast<int>(rng.below(10)));
  }
  double acc = anspar::classification_accuracy(pred, gold);
  REQUIRE(acc > 0.07);
  REQUIRE(acc < 0.13);
}

TEST_CASE("report output shape") {
  std::vector<std::pair<TokenSeq, TokenSeq>> pairs = {
      {{"work", "uniform"}, {"work", "uniform"}},
      {{"rug"}, {"a", "rug"}}};
  anspar::EvalReport report;
  report.rows.push_back(anspar::make_eval_row("template-parser", pairs));
  report.classifier_accuracy = 0.75;
  std::string csv = anspar::report_to_csv(report, {"seed=1"});
  REQUIRE(csv.find("# seed=1\n") == 0);
  REQUIRE(csv.find("model,level,bleu1,bleu2,bleu3,bleu4,n") != std::string::npos);
  REQUIRE(csv.find("template-parser,corpus,") != std::string::npos);
  REQUIRE(csv.find("template-parser,sentence-mean,") != std::string::npos);
  std::string table = anspar::report_to_table(report);
  REQUIRE(table.find("BLEU1") != std::string::npos);
  REQUIRE(table.find("classifier accuracy") != std::string::npos);
  for (double v : report.rows[0].bleu_corpus) {
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0);
  }
}
