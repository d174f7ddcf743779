#include "clinex/ner.hpp"

#include <algorithm>
#include <map>

namespace clinex {

namespace {

std::string join_range(const std::vector<Token>& tokens, int begin, int end) {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i].text;
  }
  return out;
}

SemanticObject object_from_payload(const std::vector<Token>& tokens, int begin,
                                   int end, const PhrasePayload& payload) {
  SemanticObject object;
  object.text = join_range(tokens, begin, end);
  object.codes = payload.codes;
  object.role = payload.role;
  object.fact_kind = payload.fact_kind;
  object.span.start = tokens[begin].span.start;
  object.span.end = tokens[end - 1].span.end;
  object.span.sentence_index = tokens[begin].span.sentence_index;
  object.first_token = begin;
  object.last_token = end - 1;
  return object;
}

// A conjunction-group element: one object or one stalled partial spanning
// [start, end) tokens.
struct GroupItem {
  int start = 0;
  int end = 0;
  int object_index = -1;  // -1 when backed by a partial
};

struct Rewrite {
  std::vector<int> remove_objects;
  std::vector<SemanticObject> add_objects;
  int group_begin = 0;
  int group_end = 0;
};

class Expander {
 public:
  Expander(const Lexicon& lexicon, AnnotatedSentence& annotated)
      : lexicon_(lexicon),
        annotated_(annotated),
        tokens_(annotated.sentence.tokens) {
    for (std::size_t i = 0; i < annotated_.objects.size(); ++i) {
      const SemanticObject& o = annotated_.objects[i];
      object_by_start_[o.first_token] = static_cast<int>(i);
      object_by_end_[o.last_token + 1] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < annotated_.partials.size(); ++i) {
      const MatchCandidate& p = annotated_.partials[i];
      partial_by_start_[p.start] = static_cast<int>(i);
      // Prefer the partial covering more tokens when two share an end.
      auto [it, inserted] = partial_by_end_.try_emplace(p.end, static_cast<int>(i));
      if (!inserted &&
          annotated_.partials[it->second].start > p.start) {
        it->second = static_cast<int>(i);
      }
    }
  }

  void run() {
    std::vector<Rewrite> rewrites;
    int applied_until = -1;
    for (std::size_t i = 0; i < annotated_.objects.size(); ++i) {
      const SemanticObject& o = annotated_.objects[i];
      if (o.role != Role::Conjunction || (o.text != "and" && o.text != "or")) {
        continue;
      }
      if (o.first_token <= applied_until) continue;
      std::vector<GroupItem> items;
      if (!collect_group(o, items)) continue;
      if (auto rewrite = try_rewrite(items)) {
        applied_until = rewrite->group_end;
        rewrites.push_back(std::move(*rewrite));
      }
    }
    if (!rewrites.empty()) apply(rewrites);
  }

 private:
  bool lookup_item_ending(int end, GroupItem& item) const {
    int obj_start = -1;
    if (auto it = object_by_end_.find(end); it != object_by_end_.end()) {
      const SemanticObject& o = annotated_.objects[it->second];
      if (o.role != Role::Comma && o.role != Role::Conjunction) {
        obj_start = o.first_token;
      }
    }
    int part_start = -1;
    if (auto it = partial_by_end_.find(end); it != partial_by_end_.end()) {
      part_start = annotated_.partials[it->second].start;
    }
    if (obj_start < 0 && part_start < 0) return false;
    if (part_start >= 0 && (obj_start < 0 || part_start < obj_start)) {
      item = GroupItem{part_start, end, -1};
    } else {
      item = GroupItem{obj_start, end, object_by_end_.at(end)};
    }
    return true;
  }

  bool lookup_item_starting(int start, GroupItem& item) const {
    if (auto it = object_by_start_.find(start); it != object_by_start_.end()) {
      const SemanticObject& o = annotated_.objects[it->second];
      if (o.role != Role::Comma && o.role != Role::Conjunction) {
        item = GroupItem{start, o.last_token + 1, it->second};
        return true;
      }
    }
    if (auto it = partial_by_start_.find(start); it != partial_by_start_.end()) {
      const MatchCandidate& p = annotated_.partials[it->second];
      item = GroupItem{start, p.end, -1};
      return true;
    }
    return false;
  }

  const SemanticObject* comma_ending_at(int end) const {
    auto it = object_by_end_.find(end);
    if (it == object_by_end_.end()) return nullptr;
    const SemanticObject& o = annotated_.objects[it->second];
    return o.role == Role::Comma ? &o : nullptr;
  }

  // Builds X1 (, X2)* (,)? and|or Xn around the conjunction, requiring each
  // item to tile the gap between separators exactly.
  bool collect_group(const SemanticObject& conj,
                     std::vector<GroupItem>& items) const {
    GroupItem last;
    if (!lookup_item_starting(conj.last_token + 1, last)) return false;

    int before = conj.first_token;
    if (const SemanticObject* oxford = comma_ending_at(before)) {
      before = oxford->first_token;
    }
    std::vector<GroupItem> head;
    while (true) {
      GroupItem item;
      if (!lookup_item_ending(before, item)) break;
      head.push_back(item);
      const SemanticObject* comma = comma_ending_at(item.start);
      if (comma == nullptr) break;
      before = comma->first_token;
    }
    if (head.empty()) return false;
    std::reverse(head.begin(), head.end());
    items = std::move(head);
    items.push_back(last);
    // Already-expanded groups contain synthetic objects; leave them alone.
    for (const GroupItem& item : items) {
      if (item.object_index >= 0 &&
          annotated_.objects[item.object_index].synthetic) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::string> item_tokens(const GroupItem& item) const {
    std::vector<std::string> out;
    out.reserve(item.end - item.start);
    for (int i = item.start; i < item.end; ++i) {
      out.push_back(tokens_[i].text);
    }
    return out;
  }

  // Tries suffix sharing first, then prefix sharing, then both combined.
  // P is a leading segment of X1 distributed rightward, S a trailing
  // segment of Xn distributed leftward.
  std::optional<Rewrite> try_rewrite(const std::vector<GroupItem>& items) const {
    const std::size_t n = items.size();
    std::vector<std::vector<std::string>> words(n);
    for (std::size_t i = 0; i < n; ++i) words[i] = item_tokens(items[i]);

    const int max_prefix = static_cast<int>(words.front().size()) - 1;
    const int max_suffix = static_cast<int>(words.back().size()) - 1;

    auto attempt = [&](int j, int k) -> std::optional<Rewrite> {
      std::vector<std::string> prefix(words.front().begin(),
                                      words.front().begin() + j);
      std::vector<std::string> suffix(words.back().end() - k,
                                      words.back().end());
      std::vector<const PhrasePayload*> payloads(n, nullptr);
      std::vector<std::vector<std::string>> candidates(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> cand;
        if (i > 0) cand.insert(cand.end(), prefix.begin(), prefix.end());
        cand.insert(cand.end(), words[i].begin(), words[i].end());
        if (i + 1 < n) cand.insert(cand.end(), suffix.begin(), suffix.end());
        if (cand == words[i]) {
          // Item kept verbatim; it must already be a complete match.
          if (items[i].object_index < 0) return std::nullopt;
        } else {
          payloads[i] = lexicon_.find_phrase(cand);
          if (payloads[i] == nullptr) return std::nullopt;
        }
        candidates[i] = std::move(cand);
      }
      Rewrite rewrite;
      rewrite.group_begin = items.front().start;
      rewrite.group_end = items.back().end;
      for (std::size_t i = 0; i < n; ++i) {
        if (payloads[i] == nullptr) continue;
        SemanticObject object = object_from_payload(
            tokens_, items[i].start, items[i].end, *payloads[i]);
        object.text = join_words(candidates[i]);
        object.synthetic = true;
        rewrite.add_objects.push_back(std::move(object));
        if (items[i].object_index >= 0) {
          rewrite.remove_objects.push_back(items[i].object_index);
        }
      }
      return rewrite;
    };

    for (int k = 1; k <= max_suffix; ++k) {
      if (auto r = attempt(0, k)) return r;
    }
    for (int j = 1; j <= max_prefix; ++j) {
      for (int k = 0; k <= max_suffix; ++k) {
        if (auto r = attempt(j, k)) return r;
      }
    }
    return std::nullopt;
  }

  static std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (const std::string& w : words) {
      if (!out.empty()) out.push_back(' ');
      out += w;
    }
    return out;
  }

  void apply(const std::vector<Rewrite>& rewrites) {
    std::vector<bool> removed(annotated_.objects.size(), false);
    std::vector<SemanticObject> added;
    std::vector<std::pair<int, int>> spans;
    for (const Rewrite& r : rewrites) {
      for (int index : r.remove_objects) removed[index] = true;
      added.insert(added.end(), r.add_objects.begin(), r.add_objects.end());
      spans.emplace_back(r.group_begin, r.group_end);
    }
    std::vector<SemanticObject> result;
    result.reserve(annotated_.objects.size() + added.size());
    for (std::size_t i = 0; i < annotated_.objects.size(); ++i) {
      if (!removed[i]) result.push_back(std::move(annotated_.objects[i]));
    }
    result.insert(result.end(), std::make_move_iterator(added.begin()),
                  std::make_move_iterator(added.end()));
    std::sort(result.begin(), result.end(),
              [](const SemanticObject& a, const SemanticObject& b) {
                return a.first_token < b.first_token;
              });
    annotated_.objects = std::move(result);

    // Partials inside a rewritten group have been consumed.
    std::erase_if(annotated_.partials, [&](const MatchCandidate& p) {
      return std::any_of(spans.begin(), spans.end(), [&](const auto& span) {
        return p.start >= span.first && p.end <= span.second;
      });
    });
  }

  const Lexicon& lexicon_;
  AnnotatedSentence& annotated_;
  const std::vector<Token>& tokens_;
  std::map<int, int> object_by_start_;
  std::map<int, int> object_by_end_;
  std::map<int, int> partial_by_start_;
  std::map<int, int> partial_by_end_;
};

}  // namespace

AnnotatedSentence recognize(const Lexicon& lexicon, SentenceBuffer sentence) {
  AnnotatedSentence annotated;
  annotated.sentence = std::move(sentence);
  const std::vector<Token>& tokens = annotated.sentence.tokens;

  int pos = 0;
  const int n = static_cast<int>(tokens.size());
  while (pos < n) {
    const Lexicon::Probe probe = lexicon.probe(tokens, pos);
    if (probe.match) {
      annotated.objects.push_back(object_from_payload(
          tokens, pos, probe.match->end, *probe.match->payload));
      pos = probe.match->end;
    } else {
      if (probe.walked >= 1) {
        annotated.partials.push_back(
            MatchCandidate{pos, pos + probe.walked, probe.walked});
      }
      ++pos;
    }
  }
  return annotated;
}

void expand_conjunctions(const Lexicon& lexicon,
                         AnnotatedSentence& annotated) {
  if (annotated.objects.empty()) return;
  Expander(lexicon, annotated).run();
}

}  // namespace clinex
