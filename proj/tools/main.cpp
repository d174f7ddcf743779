#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "clinex/engine.hpp"
#include "corpus.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct NoteInput {
  std::string id;
  std::string text;
};

struct RunStats {
  std::uint64_t notes_processed = 0;
  std::uint64_t bytes_processed = 0;
  std::uint64_t skipped_lines = 0;
  double wall_ms = 0.0;
  double engine_ms = 0.0;
};

bool has_jsonl_extension(const fs::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".jsonl" || ext == ".ndjson";
}

std::uint64_t read_jsonl_notes(std::istream& in, std::vector<NoteInput>& notes) {
  std::uint64_t skipped = 0;
  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      notes.push_back(NoteInput{j.at("id").get<std::string>(),
                                j.at("text").get<std::string>()});
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping malformed JSONL line " << line_number
                << ": " << e.what() << "\n";
      ++skipped;
    }
  }
  return skipped;
}

std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::uint64_t load_input(const std::string& input,
                         std::vector<NoteInput>& notes) {
  if (input == "-") {
    return read_jsonl_notes(std::cin, notes);
  }
  const fs::path path(input);
  if (!fs::exists(path)) {
    throw std::runtime_error("input path does not exist: " + input);
  }
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + file.string());
      notes.push_back(NoteInput{file.filename().string(), read_stream(in)});
    }
    return 0;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + input);
  if (has_jsonl_extension(path)) {
    return read_jsonl_notes(in, notes);
  }
  notes.push_back(NoteInput{path.filename().string(), read_stream(in)});
  return 0;
}

std::string format_note_output(const clinex::Engine& engine,
                               const NoteInput& note, bool render,
                               bool include_ignored,
                               std::atomic<std::int64_t>& engine_ns) {
  const auto begin = Clock::now();
  const std::vector<clinex::FactRecord> records =
      engine.process_note(note.id, note.text);
  engine_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(
                   Clock::now() - begin)
                   .count();
  std::string out;
  for (const clinex::FactRecord& record : records) {
    if (record.ignored && !include_ignored) continue;
    out += render ? clinex::render_text(record)
                  : clinex::record_to_jsonl(record);
    out.push_back('\n');
  }
  return out;
}

// Completed note outputs flow through a single writer. Default order is
// completion order; `sorted` restores input order.
class OutputWriter {
 public:
  OutputWriter(std::ostream& out, bool sorted) : out_(out), sorted_(sorted) {}

  void push(std::size_t index, std::string chunk) {
    std::unique_lock lock(mutex_);
    if (!sorted_) {
      out_ << chunk;
      return;
    }
    pending_.emplace(index, std::move(chunk));
    while (!pending_.empty() && pending_.begin()->first == next_) {
      out_ << pending_.begin()->second;
      pending_.erase(pending_.begin());
      ++next_;
    }
  }

  void finish() {
    std::unique_lock lock(mutex_);
    for (auto& [index, chunk] : pending_) out_ << chunk;
    pending_.clear();
  }

 private:
  std::ostream& out_;
  bool sorted_;
  std::mutex mutex_;
  std::map<std::size_t, std::string> pending_;
  std::size_t next_ = 0;
};

void process_notes(const clinex::Engine& engine,
                   const std::vector<NoteInput>& notes, std::ostream& out,
                   bool render, bool include_ignored, int threads, bool sorted,
                   RunStats& stats) {
  const auto wall_begin = Clock::now();
  std::atomic<std::int64_t> engine_ns{0};
  OutputWriter writer(out, sorted);

  if (threads <= 1) {
    for (std::size_t i = 0; i < notes.size(); ++i) {
      writer.push(i, format_note_output(engine, notes[i], render,
                                        include_ignored, engine_ns));
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= notes.size()) break;
        writer.push(i, format_note_output(engine, notes[i], render,
                                          include_ignored, engine_ns));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  writer.finish();

  stats.notes_processed = notes.size();
  for (const NoteInput& note : notes) stats.bytes_processed += note.text.size();
  stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() -
                                                            wall_begin)
                      .count();
  stats.engine_ms = static_cast<double>(engine_ns.load()) / 1e6;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "clinex: dictionary-driven information extraction for clinical "
      "narratives"};

  std::vector<std::string> dict_files;
  std::string input = "-";
  std::string output = "-";
  std::string abbrev_file;
  std::string hierarchy_file;
  std::string export_base_path;
  bool render = false;
  bool include_ignored = false;
  bool bench = false;
  bool sorted = false;
  int threads = 1;
  int gen_notes = 0;
  std::uint64_t seed = 7;
  int max_gap = 8;

  app.add_option("--dict", dict_files,
                 "Term file (TSV: phrase<TAB>code<TAB>role); repeatable");
  app.add_option("--input", input,
                 "Input: JSONL file of {id,text}, plain file, directory, or "
                 "'-' for stdin JSONL");
  app.add_option("--output", output, "Output path or '-' for stdout");
  app.add_flag("--render", render,
               "Emit display text instead of JSONL records");
  app.add_flag("--include-ignored", include_ignored,
               "Keep records marked ignored");
  app.add_option("--abbrev", abbrev_file, "Abbreviation list file");
  app.add_option("--hierarchy", hierarchy_file,
                 "Location hierarchy TSV (child<TAB>parent)");
  app.add_flag("--bench", bench, "Print run statistics to stderr");
  app.add_option("--threads", threads, "Corpus-level worker threads")
      ->check(CLI::Range(1, 256));
  app.add_flag("--sorted", sorted,
               "Write output in input order when --threads > 1");
  app.add_option("--gen", gen_notes,
                 "Generate a synthetic corpus with this many notes and exit");
  app.add_option("--seed", seed, "Seed for --gen");
  app.add_option("--max-gap", max_gap,
                 "Forward cue scope limit in tokens (default 8)");
  app.add_option("--export-base-dict", export_base_path,
                 "Write the built-in base dictionary as TSV and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!export_base_path.empty()) {
      std::ofstream out(export_base_path);
      if (!out) {
        std::cerr << "error: cannot write " << export_base_path << "\n";
        return 1;
      }
      clinex::Lexicon::export_base_dictionary(out);
      return 0;
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (output != "-") {
      file_out.open(output, std::ios::binary);
      if (!file_out) {
        std::cerr << "error: cannot write " << output << "\n";
        return 1;
      }
      out = &file_out;
    }

    if (gen_notes > 0) {
      clinex::tools::generate_synthetic_corpus(*out, gen_notes, seed);
      return 0;
    }

    for (const std::string& dict : dict_files) {
      if (!fs::exists(dict)) {
        std::cerr << "error: dictionary file not found: " << dict << "\n";
        return 2;
      }
    }

    clinex::EngineOptions options;
    options.term_files = dict_files;
    options.abbreviation_file = abbrev_file;
    options.hierarchy_file = hierarchy_file;
    options.pipeline.forward_scope_max_gap = max_gap;

    clinex::Engine engine = [&] {
      try {
        return clinex::Engine::build(options);
      } catch (const clinex::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(2);
      }
    }();

    std::vector<NoteInput> notes;
    RunStats stats;
    stats.skipped_lines = load_input(input, notes);

    process_notes(engine, notes, *out, render, include_ignored, threads,
                  sorted, stats);
    out->flush();

    if (bench) {
      std::cerr << "notes=" << stats.notes_processed
                << " bytes=" << stats.bytes_processed
                << " skipped=" << stats.skipped_lines << " wall_ms="
                << static_cast<std::uint64_t>(stats.wall_ms) << " engine_ms="
                << static_cast<std::uint64_t>(stats.engine_ms)
                << " threads=" << threads << "\n";
    }
    return 0;
  } catch (const clinex::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
