#include "clinex/semantic_object.hpp"

#include <json.hpp>

namespace clinex {

SemanticObject make_semantic_object(std::string text,
                                    std::set<std::string> codes, Role role,
                                    Span span, int first_token, int last_token,
                                    FactKind kind) {
  if (text.empty()) {
    throw std::invalid_argument("semantic object text must not be empty");
  }
  if (codes.empty()) {
    throw std::invalid_argument("semantic object needs at least one code");
  }
  if (span.start >= span.end) {
    throw std::invalid_argument("semantic object span must not be empty");
  }
  if (first_token > last_token) {
    throw std::invalid_argument("semantic object token range inverted");
  }
  SemanticObject object;
  object.text = std::move(text);
  object.codes = std::move(codes);
  object.role = role;
  object.fact_kind = kind;
  object.span = span;
  object.first_token = first_token;
  object.last_token = last_token;
  return object;
}

std::string semantic_object_to_json(const SemanticObject& o) {
  nlohmann::ordered_json j;
  j["text"] = o.text;
  j["codes"] = o.codes;
  j["role"] = role_name(o.role, o.fact_kind);
  j["span"] = {{"start", o.span.start},
               {"end", o.span.end},
               {"sentence_index", o.span.sentence_index}};
  j["token_range"] = {o.first_token, o.last_token};
  j["presence"] = presence_name(o.presence);
  j["experiencer"] = experiencer_name(o.experiencer);
  j["ignored"] = o.ignored;
  j["modifiers"] = o.modifiers;
  j["synthetic"] = o.synthetic;
  j["governed"] = o.governed;
  return j.dump();
}

SemanticObject semantic_object_from_json(std::string_view json_text) {
  const auto j = nlohmann::json::parse(json_text);
  SemanticObject o;
  o.text = j.at("text").get<std::string>();
  o.codes = j.at("codes").get<std::set<std::string>>();
  parse_role_name(j.at("role").get<std::string>(), o.role, o.fact_kind);
  const auto& span = j.at("span");
  o.span.start = span.at("start").get<int>();
  o.span.end = span.at("end").get<int>();
  o.span.sentence_index = span.at("sentence_index").get<int>();
  o.first_token = j.at("token_range").at(0).get<int>();
  o.last_token = j.at("token_range").at(1).get<int>();
  o.presence = parse_presence(j.at("presence").get<std::string>());
  o.experiencer = parse_experiencer(j.at("experiencer").get<std::string>());
  o.ignored = j.at("ignored").get<bool>();
  o.modifiers = j.at("modifiers").get<std::vector<int>>();
  o.synthetic = j.at("synthetic").get<bool>();
  o.governed = j.at("governed").get<bool>();
  return o;
}

}  // namespace clinex
