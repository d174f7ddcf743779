#include "clinex/engine.hpp"

#include "clinex/ner.hpp"

namespace clinex {

Engine::Engine(std::shared_ptr<const Lexicon> lexicon, AbbreviationList abbrevs,
               PipelineConfig pipeline)
    : lexicon_(std::move(lexicon)),
      abbreviations_(std::move(abbrevs)),
      pipeline_(std::move(pipeline)) {}

Engine Engine::build(const EngineOptions& options) {
  validate_pipeline(options.pipeline);

  auto lexicon = std::make_shared<Lexicon>(Lexicon::base_dictionary());
  for (const std::string& path : options.term_files) {
    lexicon->load_term_file(path);
  }

  AbbreviationList abbrevs = AbbreviationList::defaults();
  if (!options.abbreviation_file.empty()) {
    abbrevs.load_file(options.abbreviation_file);
  }

  PipelineConfig pipeline = options.pipeline;
  if (!options.hierarchy_file.empty()) {
    pipeline.hierarchy.load_file(options.hierarchy_file);
  }

  return Engine(std::move(lexicon), std::move(abbrevs), std::move(pipeline));
}

std::vector<AnnotatedSentence> Engine::annotate(std::string_view text) const {
  std::vector<SentenceBuffer> sentences = preprocess_note(text, abbreviations_);
  std::vector<AnnotatedSentence> annotated;
  annotated.reserve(sentences.size());
  for (SentenceBuffer& sentence : sentences) {
    AnnotatedSentence a = recognize(*lexicon_, std::move(sentence));
    expand_conjunctions(*lexicon_, a);
    run_pipeline(a, pipeline_);
    annotated.push_back(std::move(a));
  }
  return annotated;
}

std::vector<FactRecord> Engine::process_note(const std::string& note_id,
                                             std::string_view text) const {
  const std::vector<AnnotatedSentence> annotated = annotate(text);
  return to_records(note_id, annotated);
}

}  // namespace clinex
