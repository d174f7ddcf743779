#include "clinex/analysis.hpp"

namespace clinex {

namespace {

bool is_nesting_preposition(const std::string& text) {
  return text == "of" || text == "in" || text == "within";
}

// Single pass over the semantic objects. Location runs fold into trees
// ("A B" -> B(A), "A of B" -> A(B), chains of either), completed trees wait
// in a buffer, and the buffer attaches to the fact it modifies: the next
// fact for "LOC fact" patterns, the previous one for "fact in LOC".
class LocationMachine {
 public:
  LocationMachine(AnnotatedSentence& annotated, const PipelineConfig& config)
      : objects_(annotated.objects),
        config_(config),
        attached_(attached_objects(annotated)) {}

  void run() {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      const SemanticObject& o = objects_[i];
      if (o.role == Role::Article) continue;
      if (attached_[static_cast<std::size_t>(i)]) continue;
      consume(static_cast<int>(i));
      prev_ = static_cast<int>(i);
    }
    finish();
  }

 private:
  struct Tree {
    int root = -1;
    int prep_child = -1;  // complement the root gained via of/in/within
  };

  void consume(int index) {
    SemanticObject& o = objects_[index];
    switch (o.role) {
      case Role::Location: {
        if (awaiting_complement_ && current_ >= 0) {
          head_stack_.push_back(current_);
          current_ = index;
          awaiting_complement_ = false;
        } else if (current_ >= 0 && prev_ == current_ &&
                   objects_[current_].last_token + 1 == o.first_token) {
          // "location A location B": the later location becomes the head.
          o.modifiers.push_back(current_);
          current_ = index;
        } else {
          flush();
          current_ = index;
        }
        break;
      }
      case Role::Preposition: {
        if (is_nesting_preposition(o.text)) {
          if (current_ >= 0) {
            awaiting_complement_ = true;
          } else if (last_fact_ >= 0 && (trailing_ || prev_ == last_fact_)) {
            trailing_ = true;
            trailing_fact_ = last_fact_;
          }
        }
        break;
      }
      case Role::Comma: {
        flush();
        break;
      }
      case Role::Conjunction: {
        flush();
        if (o.text == "but") {
          close_trailing();
          buffer_.clear();
        }
        break;
      }
      case Role::Fact: {
        flush();
        close_trailing();
        attach(index);
        last_fact_ = index;
        break;
      }
      case Role::ConfirmationCue:
      case Role::NegationCue:
      case Role::BackwardConfirmationCue:
      case Role::BackwardNegationCue:
      case Role::SpeculationCue:
      case Role::IgnoreCue: {
        // A cue starts a new clause; pending trees cannot cross it.
        flush();
        close_trailing();
        buffer_.clear();
        break;
      }
      default: {
        // Modifiers, verbs, pronouns: the location list ends here, but
        // trees may still wait for a fact further right.
        flush();
        close_trailing();
        break;
      }
    }
  }

  void finish() {
    flush();
    if (trailing_) {
      attach(trailing_fact_);
      trailing_ = false;
    }
    buffer_.clear();
  }

  // Resolves pending "A of ..." heads and moves the finished tree into the
  // buffer.
  void flush() {
    awaiting_complement_ = false;
    if (current_ < 0) return;
    int prep_child = -1;
    while (!head_stack_.empty()) {
      const int head = head_stack_.back();
      head_stack_.pop_back();
      objects_[head].modifiers.push_back(current_);
      prep_child = current_;
      current_ = head;
    }
    buffer_.push_back(Tree{current_, prep_child});
    current_ = -1;
  }

  void close_trailing() {
    if (!trailing_) return;
    attach(trailing_fact_);
    trailing_ = false;
  }

  void attach(int fact) {
    if (buffer_.empty()) return;
    distribute_shared_parent();
    for (const Tree& tree : buffer_) {
      objects_[fact].modifiers.push_back(tree.root);
    }
    buffer_.clear();
  }

  // "A and B of C": when the hierarchy table says C is also A's parent, the
  // conjunction sibling A shares B's nested complement.
  void distribute_shared_parent() {
    if (buffer_.size() < 2 || config_.hierarchy.empty()) return;
    const Tree& last = buffer_.back();
    if (last.prep_child < 0) return;
    const std::string& parent = objects_[last.prep_child].text;
    for (std::size_t t = 0; t + 1 < buffer_.size(); ++t) {
      SemanticObject& sibling = objects_[buffer_[t].root];
      if (sibling.modifiers.empty() &&
          config_.hierarchy.is_parent(sibling.text, parent)) {
        sibling.modifiers.push_back(last.prep_child);
      }
    }
  }

  std::vector<SemanticObject>& objects_;
  const PipelineConfig& config_;
  std::vector<bool> attached_;

  std::vector<Tree> buffer_;
  int current_ = -1;
  std::vector<int> head_stack_;
  bool awaiting_complement_ = false;
  bool trailing_ = false;
  int trailing_fact_ = -1;
  int last_fact_ = -1;
  int prev_ = -1;
};

}  // namespace

void analyze_locations(AnnotatedSentence& annotated,
                       const PipelineConfig& config) {
  LocationMachine(annotated, config).run();
}

}  // namespace clinex
