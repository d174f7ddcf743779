#include <benchmark/benchmark.h>

#include <json.hpp>

#include <sstream>

#include "clinex/engine.hpp"
#include "corpus.hpp"

namespace {

clinex::Engine build_engine() {
  clinex::EngineOptions options;
  options.term_files = {std::string(CLINEX_DATA_DIR) + "/ctpa_terms.tsv"};
  return clinex::Engine::build(options);
}

void BM_ProcessNote(benchmark::State& state) {
  const clinex::Engine engine = build_engine();
  const std::string note =
      "There are segmental and subsegmental filling defects in the right "
      "upper lobe, superior segment of the right lower lobe, and "
      "subsegmental filling defect in the in the anterolateral segment of "
      "the left lower lobe pulmonary arteries. No change in the pleural "
      "effusion. Assess for PE; no PE found.";
  std::size_t bytes = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.process_note("bench", note));
    bytes += note.size();
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_ProcessNote);

void BM_CorpusThroughput(benchmark::State& state) {
  const clinex::Engine engine = build_engine();
  std::ostringstream corpus;
  clinex::tools::generate_synthetic_corpus(corpus, 200, 7);
  std::vector<std::pair<std::string, std::string>> notes;
  std::istringstream in(corpus.str());
  std::string line;
  std::size_t corpus_bytes = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    notes.emplace_back(j.at("id").get<std::string>(),
                       j.at("text").get<std::string>());
    corpus_bytes += notes.back().second.size();
  }
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& [id, text] : notes) {
      benchmark::DoNotOptimize(engine.process_note(id, text));
    }
    bytes += corpus_bytes;
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(notes.size()));
}
BENCHMARK(BM_CorpusThroughput);

}  // namespace

BENCHMARK_MAIN();
