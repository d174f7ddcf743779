#include "clinex/analysis.hpp"

#include <algorithm>
#include <fstream>

namespace clinex {

void LocationHierarchy::add(std::string child, std::string parent) {
  parents_.insert_or_assign(std::move(child), std::move(parent));
}

void LocationHierarchy::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open location hierarchy file: " + path);
  }
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ConfigError(path + ":" + std::to_string(line_number) +
                        ": expected child<TAB>parent");
    }
    add(line.substr(0, tab), line.substr(tab + 1));
  }
}

bool LocationHierarchy::is_parent(const std::string& child,
                                  const std::string& parent) const {
  auto it = parents_.find(child);
  return it != parents_.end() && it->second == parent;
}

void validate_pipeline(const PipelineConfig& config) {
  static const std::set<std::string> known = {
      "merge_cues", "presence", "locations", "modifiers", "ignore", "family"};
  std::unordered_map<std::string, int> position;
  for (std::size_t i = 0; i < config.analyzers.size(); ++i) {
    const std::string& name = config.analyzers[i];
    if (!known.contains(name)) {
      throw ConfigError("unknown analyzer '" + name + "'");
    }
    if (!position.emplace(name, static_cast<int>(i)).second) {
      throw ConfigError("analyzer '" + name + "' listed twice");
    }
  }
  auto ordered = [&](const char* before, const char* after) {
    auto b = position.find(before);
    auto a = position.find(after);
    if (b != position.end() && a != position.end() && b->second > a->second) {
      throw ConfigError(std::string("analyzer '") + before +
                        "' must run before '" + after + "'");
    }
  };
  ordered("merge_cues", "presence");
  ordered("presence", "locations");
  if (config.forward_scope_max_gap < 0) {
    throw ConfigError("forward_scope_max_gap must be non-negative");
  }
}

namespace {

bool token_adjacent(const SemanticObject& left, const SemanticObject& right) {
  return left.last_token + 1 == right.first_token;
}

bool absorbable_into_participle(const SemanticObject& o) {
  switch (o.role) {
    case Role::LinkVerbPositive:
    case Role::LinkVerbNegative:
    case Role::AuxVerbPositive:
    case Role::AuxVerbNegative:
      return true;
    case Role::NegationCue:
      return o.text == "not";
    default:
      return false;
  }
}

bool negative_element(const SemanticObject& o) {
  return o.role == Role::LinkVerbNegative || o.role == Role::AuxVerbNegative ||
         o.role == Role::NegationCue;
}

bool link_element(const SemanticObject& o) {
  return o.role == Role::LinkVerbPositive || o.role == Role::LinkVerbNegative;
}

}  // namespace

void merge_cues(AnnotatedSentence& annotated) {
  std::vector<SemanticObject>& objects = annotated.objects;
  std::vector<SemanticObject> out;
  out.reserve(objects.size());

  for (SemanticObject& object : objects) {
    if (object.role != Role::ParticipleConfirmation) {
      out.push_back(std::move(object));
      continue;
    }
    // Gather the adjacent run of link/aux verbs (and "not") before the
    // participle; Table-style combination decides the merged cue.
    std::size_t run_begin = out.size();
    const SemanticObject* next = &object;
    while (run_begin > 0 && absorbable_into_participle(out[run_begin - 1]) &&
           token_adjacent(out[run_begin - 1], *next)) {
      next = &out[run_begin - 1];
      --run_begin;
    }
    bool negative = false;
    bool backward = false;
    for (std::size_t i = run_begin; i < out.size(); ++i) {
      if (negative_element(out[i])) negative = !negative;
      if (link_element(out[i]) || out[i].role == Role::NegationCue) {
        backward = true;
      }
    }
    const Role merged_role =
        backward ? (negative ? Role::BackwardNegationCue
                             : Role::BackwardConfirmationCue)
                 : (negative ? Role::NegationCue : Role::ConfirmationCue);

    SemanticObject merged = std::move(object);
    merged.role = merged_role;
    for (std::size_t i = out.size(); i-- > run_begin;) {
      merged.text = out[i].text + " " + merged.text;
      merged.codes.insert(out[i].codes.begin(), out[i].codes.end());
      merged.span.start = out[i].span.start;
      merged.first_token = out[i].first_token;
    }
    out.resize(run_begin);
    out.push_back(std::move(merged));
  }
  objects = std::move(out);
}

void analyze_modifiers(AnnotatedSentence& annotated) {
  std::vector<SemanticObject>& objects = annotated.objects;
  const std::vector<bool> attached = attached_objects(annotated);

  std::vector<int> facts;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].role == Role::Fact) facts.push_back(static_cast<int>(i));
  }
  if (facts.empty()) return;

  for (std::size_t i = 0; i < objects.size(); ++i) {
    const Role role = objects[i].role;
    if (role != Role::Modifier && role != Role::FactAttribute) continue;
    if (attached[i]) continue;
    auto follower = std::find_if(facts.begin(), facts.end(), [&](int f) {
      return objects[f].first_token > objects[i].last_token;
    });
    int target = -1;
    if (follower != facts.end()) {
      target = *follower;
    } else {
      for (auto it = facts.rbegin(); it != facts.rend(); ++it) {
        if (objects[*it].last_token < objects[i].first_token) {
          target = *it;
          break;
        }
      }
    }
    if (target >= 0) {
      objects[target].modifiers.push_back(static_cast<int>(i));
    }
  }
}

void analyze_ignore(AnnotatedSentence& annotated) {
  const bool has_ignore_cue =
      std::any_of(annotated.objects.begin(), annotated.objects.end(),
                  [](const SemanticObject& o) {
                    return o.role == Role::IgnoreCue;
                  });
  for (SemanticObject& object : annotated.objects) {
    if (object.role != Role::Fact) continue;
    object.ignored = has_ignore_cue && !object.governed;
    if (object.ignored) object.presence = Presence::Maybe;
  }
}

void analyze_family(AnnotatedSentence& annotated) {
  const bool has_relative =
      std::any_of(annotated.objects.begin(), annotated.objects.end(),
                  [](const SemanticObject& o) {
                    return o.role == Role::Relative;
                  });
  for (SemanticObject& object : annotated.objects) {
    if (object.role != Role::Fact) continue;
    object.experiencer =
        has_relative ? Experiencer::Family : Experiencer::Self;
  }
}

void run_pipeline(AnnotatedSentence& annotated, const PipelineConfig& config) {
  validate_pipeline(config);
  for (const std::string& name : config.analyzers) {
    if (name == "merge_cues") {
      merge_cues(annotated);
    } else if (name == "presence") {
      analyze_presence(annotated, config);
    } else if (name == "locations") {
      analyze_locations(annotated, config);
    } else if (name == "modifiers") {
      analyze_modifiers(annotated);
    } else if (name == "ignore") {
      analyze_ignore(annotated);
    } else if (name == "family") {
      analyze_family(annotated);
    }
  }
}

std::vector<bool> attached_objects(const AnnotatedSentence& annotated) {
  std::vector<bool> attached(annotated.objects.size(), false);
  for (const SemanticObject& object : annotated.objects) {
    for (int child : object.modifiers) {
      attached[child] = true;
    }
  }
  return attached;
}

}  // namespace clinex
