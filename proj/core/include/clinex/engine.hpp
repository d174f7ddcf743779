#ifndef CLINEX_ENGINE_HPP
#define CLINEX_ENGINE_HPP

#include <memory>
#include <string>
#include <vector>

#include "clinex/analysis.hpp"
#include "clinex/lexicon.hpp"
#include "clinex/output.hpp"
#include "clinex/preprocess.hpp"

namespace clinex {

struct EngineOptions {
  std::vector<std::string> term_files;
  std::string abbreviation_file;  // optional, extends the built-in list
  std::string hierarchy_file;     // optional location hierarchy
  PipelineConfig pipeline;
};

// Immutable note processor: preprocessing -> NER -> analyzer pipeline ->
// fact records. Safe to share across threads once built.
class Engine {
 public:
  static Engine build(const EngineOptions& options);

  std::vector<FactRecord> process_note(const std::string& note_id,
                                       std::string_view text) const;

  // The analyzed sentences behind process_note, for inspection and tests.
  std::vector<AnnotatedSentence> annotate(std::string_view text) const;

  const Lexicon& lexicon() const { return *lexicon_; }
  const PipelineConfig& pipeline() const { return pipeline_; }

 private:
  Engine(std::shared_ptr<const Lexicon> lexicon, AbbreviationList abbrevs,
         PipelineConfig pipeline);

  std::shared_ptr<const Lexicon> lexicon_;
  AbbreviationList abbreviations_;
  PipelineConfig pipeline_;
};

}  // namespace clinex

#endif  // CLINEX_ENGINE_HPP
