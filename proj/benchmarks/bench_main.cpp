#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "sentorient/classifier.hpp"
#include "sentorient/corpus.hpp"
#include "sentorient/lexicon.hpp"
#include "sentorient/tagger.hpp"
#include "sentorient/wordnet.hpp"

using namespace sentorient;

namespace {

const WordNetDb& db() {
  static WordNetDb instance =
      load_wordnet(std::filesystem::path(SENTORIENT_DATA_DIR) / "wordnet" /
                   "dict");
  return instance;
}

const TagLexicon& tagdict() {
  static TagLexicon lex = load_tag_dictionary(
      std::filesystem::path(SENTORIENT_DATA_DIR) / "tagdict.tsv");
  return lex;
}

SeedLexicon seed() {
  return load_seed(std::filesystem::path(SENTORIENT_DATA_DIR) / "seed.tsv");
}

std::string synthetic_review(int sentences) {
  static const std::vector<std::string> pool = {
      "the",  "movie",  "is",    "good",  "bad",   "boring", "with",
      "very", "story",  "plot",  "songs", "great", "actors", "watch",
      "not",  "people", "love",  "fine",  "slow",  "film",   "a"};
  std::mt19937 rng(42);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::string text;
  for (int s = 0; s < sentences; ++s) {
    for (int w = 0; w < 9; ++w) {
      if (!text.empty()) text += ' ';
      text += pool[pick(rng)];
    }
    text += ".";
  }
  return text;
}

void BM_Preprocess(benchmark::State& state) {
  std::string raw = "<p>Great   movie!!</p> &amp; more " +
                    synthetic_review(20);
  for (auto _ : state) benchmark::DoNotOptimize(preprocess(raw));
}
BENCHMARK(BM_Preprocess);

void BM_Tokenize(benchmark::State& state) {
  std::string text = synthetic_review(20);
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(text));
}
BENCHMARK(BM_Tokenize);

void BM_Tag(benchmark::State& state) {
  auto tokens = tokenize(synthetic_review(20));
  const TagLexicon& lex = tagdict();
  for (auto _ : state) benchmark::DoNotOptimize(tag(tokens, lex));
}
BENCHMARK(BM_Tag);

void BM_ResolveDirect(benchmark::State& state) {
  SeedLexicon lex = seed();
  const WordNetDb& d = db();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        resolve_polarity("good", WnPos::Adj, lex, d, false));
}
BENCHMARK(BM_ResolveDirect);

void BM_ResolveOneHop(benchmark::State& state) {
  SeedLexicon lex = seed();
  const WordNetDb& d = db();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        resolve_polarity("splendid", WnPos::Adj, lex, d, false));
}
BENCHMARK(BM_ResolveOneHop);

void BM_ResolveUnknown(benchmark::State& state) {
  SeedLexicon lex = seed();
  const WordNetDb& d = db();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        resolve_polarity("predictable", WnPos::Adj, lex, d, false));
}
BENCHMARK(BM_ResolveUnknown);

void BM_ClassifyDocument(benchmark::State& state) {
  Document doc{"bench", std::nullopt,
               tag(tokenize(synthetic_review(20)), tagdict())};
  SeedLexicon lex = seed();
  const WordNetDb& d = db();
  ClassifierConfig cfg;
  cfg.grow_lexicon = false;
  for (auto _ : state) {
    CachedResolver resolver(lex, d, false);
    benchmark::DoNotOptimize(classify_document(doc, resolver, cfg));
  }
}
BENCHMARK(BM_ClassifyDocument);

void BM_ExpandClosureDepth1(benchmark::State& state) {
  SeedLexicon lex = seed();
  std::vector<std::string> vocab = {"splendid",  "rotten",   "superior",
                                    "atrocious", "stunning", "tiresome",
                                    "evil",      "lovely",   "shoddy",
                                    "gorgeous"};
  const WordNetDb& d = db();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        expand_closure(lex, d, vocab, 1, {WnPos::Adj}));
}
BENCHMARK(BM_ExpandClosureDepth1);

void BM_WordNetLoad(benchmark::State& state) {
  auto dir = std::filesystem::path(SENTORIENT_DATA_DIR) / "wordnet" / "dict";
  for (auto _ : state) benchmark::DoNotOptimize(load_wordnet(dir));
}
BENCHMARK(BM_WordNetLoad)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
