#ifndef CLINEX_ANALYSIS_HPP
#define CLINEX_ANALYSIS_HPP

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "clinex/sentence.hpp"

namespace clinex {

// Optional domain knowledge for conjunction attachment between locations:
// child phrase -> parent phrase, consulted when a conjunction sibling could
// share the final sibling's nested parent.
class LocationHierarchy {
 public:
  void add(std::string child, std::string parent);
  // TSV lines: child_phrase<TAB>parent_phrase; '#' comments.
  void load_file(const std::string& path);
  bool is_parent(const std::string& child, const std::string& parent) const;
  bool empty() const { return parents_.empty(); }

 private:
  std::unordered_map<std::string, std::string> parents_;
};

// Analyzer pipeline configuration. The default order is the full pipeline;
// cue merging must precede presence, and presence must precede locations.
struct PipelineConfig {
  std::vector<std::string> analyzers = {"merge_cues", "presence", "locations",
                                        "modifiers",  "ignore",   "family"};
  // How many tokens a forward cue reaches past its own end.
  int forward_scope_max_gap = 8;
  // Verbs of removal/resolution: dictionary role NegationCue, but they
  // negate the preceding fact group ("the tumor was removed").
  std::set<std::string> removal_verbs = {"removed", "resected", "resolved",
                                         "excised"};
  LocationHierarchy hierarchy;
};

// Throws ConfigError on unknown analyzer names, duplicates, or an order
// that breaks the merge -> presence -> locations prerequisites.
void validate_pipeline(const PipelineConfig& config);

// Fuses adjacent verb/cue runs ending in a confirmation participle into a
// single cue object: "is found" becomes a backward confirmation cue,
// "haven't been found" a backward negation cue, and so on.
void merge_cues(AnnotatedSentence& annotated);

// Assigns YES/NO/MAYBE to facts and fact attributes in one left-to-right
// pass. `transitions`, when given, receives the number of objects the
// machine consumed.
void analyze_presence(AnnotatedSentence& annotated,
                      const PipelineConfig& config,
                      int* transitions = nullptr);

// Builds nested location trees ("location A location B" nests A inside B,
// "A of B" nests B inside A) and attaches them to the governing fact.
void analyze_locations(AnnotatedSentence& annotated,
                       const PipelineConfig& config);

// Attaches remaining modifiers and fact attributes flat to the nearest
// fact, preferring the nearest following one.
void analyze_modifiers(AnnotatedSentence& annotated);

// An ignore cue marks every fact in the sentence ignored (presence MAYBE)
// except facts a confirmation or negation cue already governs.
void analyze_ignore(AnnotatedSentence& annotated);

// Any relative-role mention labels every fact in the sentence as family
// history.
void analyze_family(AnnotatedSentence& annotated);

// Runs the configured analyzers in order.
void run_pipeline(AnnotatedSentence& annotated, const PipelineConfig& config);

// Object indices that appear in some modifiers list of the sentence.
std::vector<bool> attached_objects(const AnnotatedSentence& annotated);

}  // namespace clinex

#endif  // CLINEX_ANALYSIS_HPP
