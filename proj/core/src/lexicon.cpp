#include "clinex/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace clinex {

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::vector<std::string> split_phrase(const std::string& phrase) {
  std::vector<std::string> tokens;
  std::istringstream in(phrase);
  std::string token;
  while (in >> token) {
    for (char& c : token) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace

void Lexicon::add_term(const std::vector<std::string>& phrase_tokens,
                       const std::string& code, Role role, FactKind kind) {
  if (phrase_tokens.empty()) {
    throw ConfigError("cannot add an empty phrase");
  }
  if (code.empty()) {
    throw ConfigError("cannot add a phrase without a concept code");
  }
  Node* node = &root_;
  for (const std::string& token : phrase_tokens) {
    if (token.empty()) throw ConfigError("phrase contains an empty token");
    auto [it, inserted] = node->children.try_emplace(token);
    if (inserted) it->second = std::make_unique<Node>();
    node = it->second.get();
  }
  if (node->payload) {
    const bool same_role =
        node->payload->role == role &&
        (role != Role::Fact || node->payload->fact_kind == kind);
    if (!same_role) {
      throw ConfigError("phrase '" + join_tokens(phrase_tokens) +
                        "' already has role " +
                        role_name(node->payload->role,
                                  node->payload->fact_kind) +
                        "; a term can only have one semantic role");
    }
    node->payload->codes.insert(code);
    return;
  }
  node->payload = PhrasePayload{{code}, role, kind};
  ++term_count_;
  role_index_.emplace(join_tokens(phrase_tokens), role);
}

std::optional<Lexicon::Match> Lexicon::longest_match(
    std::span<const Token> tokens, int start) const {
  return probe(tokens, start).match;
}

Lexicon::Probe Lexicon::probe(std::span<const Token> tokens, int start) const {
  Probe result;
  const Node* node = &root_;
  int pos = start;
  while (pos < static_cast<int>(tokens.size())) {
    auto it = node->children.find(tokens[pos].text);
    if (it == node->children.end()) break;
    node = it->second.get();
    ++pos;
    if (node->payload) {
      result.match = Match{pos, &*node->payload};
    }
  }
  result.walked = pos - start;
  return result;
}

const Lexicon::Node* Lexicon::walk(
    const std::vector<std::string>& phrase_tokens) const {
  const Node* node = &root_;
  for (const std::string& token : phrase_tokens) {
    auto it = node->children.find(token);
    if (it == node->children.end()) return nullptr;
    node = it->second.get();
  }
  return node;
}

const PhrasePayload* Lexicon::find_phrase(
    const std::vector<std::string>& phrase_tokens) const {
  const Node* node = walk(phrase_tokens);
  if (node == nullptr || !node->payload) return nullptr;
  return &*node->payload;
}

bool Lexicon::is_prefix(const std::vector<std::string>& phrase_tokens) const {
  return walk(phrase_tokens) != nullptr;
}

void Lexicon::load_term_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open term file: " + path);
  }
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
      std::size_t tab = line.find('\t', begin);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(begin));
        break;
      }
      fields.push_back(line.substr(begin, tab - begin));
      begin = tab + 1;
    }
    const std::string where = path + ":" + std::to_string(line_number);
    if (fields.size() != 3) {
      throw ConfigError(where + ": expected 3 tab-separated fields, got " +
                        std::to_string(fields.size()));
    }
    const std::vector<std::string> tokens = split_phrase(fields[0]);
    if (tokens.empty()) {
      throw ConfigError(where + ": empty phrase");
    }
    Role role;
    FactKind kind;
    try {
      parse_role_name(fields[2], role, kind);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
    try {
      add_term(tokens, fields[1], role, kind);
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
}

}  // namespace clinex
