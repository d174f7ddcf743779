#include <benchmark/benchmark.h>

#include "clinex/lexicon.hpp"
#include "clinex/ner.hpp"
#include "clinex/preprocess.hpp"

namespace {

clinex::Lexicon build_lexicon(int dummy_terms) {
  clinex::Lexicon lexicon;
  lexicon.add_term({"pulmonary", "embolism"}, "C-PE", clinex::Role::Fact,
                   clinex::FactKind::Disorder);
  lexicon.add_term({"right", "lower", "lobe"}, "C-RLL",
                   clinex::Role::Location);
  lexicon.add_term({"effusion"}, "C-EFF", clinex::Role::Fact);
  for (int i = 0; i < dummy_terms; ++i) {
    lexicon.add_term({"zz" + std::to_string(i), "qq" + std::to_string(i)},
                     "D" + std::to_string(i), clinex::Role::Fact);
  }
  return lexicon;
}

clinex::SentenceBuffer sample_sentence() {
  clinex::SentenceBuffer sentence;
  sentence.raw =
      "there is a small effusion near the right lower lobe without "
      "pulmonary embolism today";
  sentence.span =
      clinex::Span{0, static_cast<int>(sentence.raw.size()), 0};
  clinex::tokenize(sentence);
  return sentence;
}

// Match time should track sentence length, not dictionary size.
void BM_RecognizeByDictSize(benchmark::State& state) {
  const clinex::Lexicon lexicon =
      build_lexicon(static_cast<int>(state.range(0)));
  const clinex::SentenceBuffer sentence = sample_sentence();
  for (auto _ : state) {
    benchmark::DoNotOptimize(clinex::recognize(lexicon, sentence));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RecognizeByDictSize)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_LongestMatch(benchmark::State& state) {
  const clinex::Lexicon lexicon = build_lexicon(10000);
  const clinex::SentenceBuffer sentence = sample_sentence();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexicon.longest_match(sentence.tokens, 7));
  }
}
BENCHMARK(BM_LongestMatch);

}  // namespace

BENCHMARK_MAIN();
