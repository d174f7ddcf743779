#ifndef CLINEX_OUTPUT_HPP
#define CLINEX_OUTPUT_HPP

#include <set>
#include <span>
#include <string>
#include <vector>

#include "clinex/sentence.hpp"

namespace clinex {

// One node of a fact's modifier tree: a location, modifier, or fact
// attribute, with nested children for location structure.
struct ModifierNode {
  std::string text;
  std::set<std::string> codes;
  Role role = Role::Modifier;
  Presence presence = Presence::Yes;
  std::vector<ModifierNode> children;

  bool operator==(const ModifierNode&) const = default;
};

// Output-facing fact. Only Fact-role objects become records; locations and
// modifiers appear inside the `modifiers` tree.
struct FactRecord {
  std::string note_id;
  int sentence_index = 0;
  std::string text;
  std::set<std::string> codes;
  FactKind kind = FactKind::Finding;
  Presence presence = Presence::Yes;
  Experiencer experiencer = Experiencer::Self;
  bool ignored = false;
  std::vector<ModifierNode> modifiers;
  Span span;
  bool synthetic = false;

  bool operator==(const FactRecord&) const = default;
};

// One record per Fact object, in sentence and left-to-right order.
std::vector<FactRecord> to_records(
    const std::string& note_id,
    std::span<const AnnotatedSentence> sentences);

// Paper-style display line:
//   filling defects: YES (right upper lobe; superior segment (right lower
//   lobe); segmental; subsegmental)
// Nested children are parenthesized recursively; siblings join with "; ".
std::string render_text(const FactRecord& record);

// One JSON object per line, stable key order.
std::string record_to_jsonl(const FactRecord& record);
FactRecord record_from_jsonl(std::string_view line);

}  // namespace clinex

#endif  // CLINEX_OUTPUT_HPP
