#include "clinex/output.hpp"

#include <json.hpp>

namespace clinex {

namespace {

ModifierNode materialize(const AnnotatedSentence& annotated, int index) {
  const SemanticObject& o = annotated.objects[index];
  ModifierNode node;
  node.text = o.text;
  node.codes = o.codes;
  node.role = o.role;
  node.presence = o.presence;
  node.children.reserve(o.modifiers.size());
  for (int child : o.modifiers) {
    node.children.push_back(materialize(annotated, child));
  }
  return node;
}

void render_children(const std::vector<ModifierNode>& children,
                     std::string& out) {
  out.push_back('(');
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out += "; ";
    out += children[i].text;
    if (!children[i].children.empty()) {
      out.push_back(' ');
      render_children(children[i].children, out);
    }
  }
  out.push_back(')');
}

nlohmann::ordered_json modifier_to_json(const ModifierNode& node) {
  nlohmann::ordered_json j;
  j["text"] = node.text;
  j["codes"] = node.codes;
  j["role"] = role_name(node.role);
  j["presence"] = presence_name(node.presence);
  j["children"] = nlohmann::ordered_json::array();
  for (const ModifierNode& child : node.children) {
    j["children"].push_back(modifier_to_json(child));
  }
  return j;
}

ModifierNode modifier_from_json(const nlohmann::json& j) {
  ModifierNode node;
  node.text = j.at("text").get<std::string>();
  node.codes = j.at("codes").get<std::set<std::string>>();
  FactKind unused;
  parse_role_name(j.at("role").get<std::string>(), node.role, unused);
  node.presence = parse_presence(j.at("presence").get<std::string>());
  for (const auto& child : j.at("children")) {
    node.children.push_back(modifier_from_json(child));
  }
  return node;
}

}  // namespace

std::vector<FactRecord> to_records(
    const std::string& note_id,
    std::span<const AnnotatedSentence> sentences) {
  std::vector<FactRecord> records;
  for (const AnnotatedSentence& annotated : sentences) {
    for (std::size_t i = 0; i < annotated.objects.size(); ++i) {
      const SemanticObject& o = annotated.objects[i];
      if (o.role != Role::Fact) continue;
      FactRecord record;
      record.note_id = note_id;
      record.sentence_index = o.span.sentence_index;
      record.text = o.text;
      record.codes = o.codes;
      record.kind = o.fact_kind;
      record.presence = o.presence;
      record.experiencer = o.experiencer;
      record.ignored = o.ignored;
      record.span = o.span;
      record.synthetic = o.synthetic;
      record.modifiers.reserve(o.modifiers.size());
      for (int child : o.modifiers) {
        record.modifiers.push_back(materialize(annotated, child));
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::string render_text(const FactRecord& record) {
  std::string out = record.text;
  out += ": ";
  out += presence_name(record.presence);
  if (!record.modifiers.empty()) {
    out.push_back(' ');
    render_children(record.modifiers, out);
  }
  return out;
}

std::string record_to_jsonl(const FactRecord& record) {
  nlohmann::ordered_json j;
  j["note_id"] = record.note_id;
  j["sentence_index"] = record.sentence_index;
  j["text"] = record.text;
  j["codes"] = record.codes;
  j["kind"] = fact_kind_name(record.kind);
  j["presence"] = presence_name(record.presence);
  j["experiencer"] = experiencer_name(record.experiencer);
  j["ignored"] = record.ignored;
  j["modifiers"] = nlohmann::ordered_json::array();
  for (const ModifierNode& node : record.modifiers) {
    j["modifiers"].push_back(modifier_to_json(node));
  }
  j["span"] = {{"start", record.span.start}, {"end", record.span.end}};
  j["synthetic"] = record.synthetic;
  return j.dump();
}

FactRecord record_from_jsonl(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  FactRecord record;
  record.note_id = j.at("note_id").get<std::string>();
  record.sentence_index = j.at("sentence_index").get<int>();
  record.text = j.at("text").get<std::string>();
  record.codes = j.at("codes").get<std::set<std::string>>();
  record.kind = parse_fact_kind(j.at("kind").get<std::string>());
  record.presence = parse_presence(j.at("presence").get<std::string>());
  record.experiencer =
      parse_experiencer(j.at("experiencer").get<std::string>());
  record.ignored = j.at("ignored").get<bool>();
  for (const auto& node : j.at("modifiers")) {
    record.modifiers.push_back(modifier_from_json(node));
  }
  record.span.start = j.at("span").at("start").get<int>();
  record.span.end = j.at("span").at("end").get<int>();
  record.span.sentence_index = record.sentence_index;
  record.synthetic = j.at("synthetic").get<bool>();
  return record;
}

}  // namespace clinex
