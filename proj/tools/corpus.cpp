#include "corpus.hpp"

#include <json.hpp>

#include <ostream>
#include <random>

namespace clinex::tools {

namespace {

const std::vector<std::string> kFacts = {
    "filling defects", "pulmonary embolism", "pleural effusion",
    "consolidation",   "pneumonia",          "atelectasis",
    "pneumothorax",    "nodule",             "cardiomegaly",
    "edema",           "lymphadenopathy",    "dvt",
    "emphysema",       "mass",               "tumor",
    "fracture"};

const std::vector<std::string> kLocations = {
    "right upper lobe", "right middle lobe", "right lower lobe",
    "left upper lobe",  "left lower lobe",   "superior segment",
    "pulmonary arteries", "lung bases",      "left lung",
    "right lung",       "lungs"};

const std::vector<std::string> kModifiers = {
    "segmental", "subsegmental", "acute",     "chronic", "severe", "mild",
    "moderate",  "small",        "large",     "bilateral", "scattered"};

class NoteWriter {
 public:
  explicit NoteWriter(std::mt19937_64& rng) : rng_(rng) {}

  std::string note() {
    std::string text =
        "EXAM: CT pulmonary angiography. INDICATION: evaluate for "
        "pulmonary embolism. TECHNIQUE: contrast enhanced helical CT of "
        "the chest.\nFINDINGS: ";
    const int body = std::uniform_int_distribution<int>(26, 43)(rng_);
    for (int i = 0; i < body; ++i) {
      if (i > 0) text.push_back(' ');
      // The opening sentence always mentions a dictionary fact so every
      // note yields at least one record.
      text += i == 0 ? fact_sentence() : any_sentence();
      if (i % 9 == 8) text.push_back('\n');
    }
    return text;
  }

 private:
  const std::string& pick(const std::vector<std::string>& pool) {
    return pool[std::uniform_int_distribution<std::size_t>(
        0, pool.size() - 1)(rng_)];
  }

  std::string fact_sentence() {
    switch (std::uniform_int_distribution<int>(0, 11)(rng_)) {
      case 0:
        return "There is no " + pick(kFacts) + " in the " + pick(kLocations) +
               ".";
      case 1:
        return "There are " + pick(kModifiers) + " and " + pick(kModifiers) +
               " " + pick(kFacts) + " in the " + pick(kLocations) + ".";
      case 2:
        return "No " + pick(kFacts) + " is seen to suggest " + pick(kFacts) +
               ".";
      case 3:
        return "No " + pick(kFacts) + " is seen, suggesting " + pick(kFacts) +
               ".";
      case 4:
        return "There are " + pick(kFacts) + " in the " + pick(kLocations) +
               ", " + pick(kLocations) + " of the " + pick(kLocations) + ".";
      case 5:
        return "No change in the " + pick(kFacts) + ".";
      case 6:
        return "The " + pick(kFacts) + " has resolved.";
      case 7:
        return "No mediastinal, hilar, or axillary lymphadenopathy.";
      case 8:
        return "? " + pick(kFacts) + " vs " + pick(kFacts) + ".";
      case 9:
        return "Patient denies " + pick(kFacts) + " and " + pick(kFacts) +
               ".";
      case 10:
        return "Mild " + pick(kFacts) + " is noted in the " +
               pick(kLocations) + ".";
      default:
        return "Impression: " + pick(kModifiers) + " " + pick(kFacts) +
               " in the " + pick(kLocations) + ".";
    }
  }

  std::string filler_sentence() {
    switch (std::uniform_int_distribution<int>(0, 4)(rng_)) {
      case 0:
        return "The lungs are clear.";
      case 1:
        return "The visualized osseous structures are unremarkable.";
      case 2:
        return "Comparison was made with the prior examination.";
      case 3:
        return "The central airways are patent.";
      default:
        return "Cardiac silhouette within normal limits for technique.";
    }
  }

  std::string any_sentence() {
    return std::uniform_int_distribution<int>(0, 9)(rng_) < 7
               ? fact_sentence()
               : filler_sentence();
  }

  std::mt19937_64& rng_;
};

}  // namespace

void generate_synthetic_corpus(std::ostream& out, int n_notes,
                               std::uint64_t seed) {
  if (n_notes <= 0) {
    throw std::invalid_argument("n_notes must be positive");
  }
  std::mt19937_64 rng(seed);
  NoteWriter writer(rng);
  for (int i = 0; i < n_notes; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "note-%06d", i + 1);
    nlohmann::ordered_json j;
    j["id"] = id;
    j["text"] = writer.note();
    out << j.dump() << '\n';
  }
}

const std::vector<std::string>& corpus_vocabulary() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v;
    v.insert(v.end(), kFacts.begin(), kFacts.end());
    v.insert(v.end(), kLocations.begin(), kLocations.end());
    v.insert(v.end(), kModifiers.begin(), kModifiers.end());
    v.emplace_back("mediastinal lymphadenopathy");
    v.emplace_back("hilar lymphadenopathy");
    v.emplace_back("axillary lymphadenopathy");
    v.emplace_back("ct");
    return v;
  }();
  return all;
}

}  // namespace clinex::tools
