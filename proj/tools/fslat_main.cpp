// Licensed under the Apache License 2.0 (see LICENSE file).

#include <fslat/fslat.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

enum Exit { kSuccess = 0, kUsage = 1, kGrammar = 2, kEmpty = 3 };

enum class Command { Parse, Count, Trace, CheckGrammar };

struct Config {
  Command command = Command::Parse;
  std::string lexicon, map, grammar;
  std::size_t limit = 16;
  std::string format = "table";
  std::string order = "as-written";
  std::string unknown = "open";
  std::vector<std::string> inputs;
};

struct Owned {
  void operator()(char* p) const { fslat_free(p); }
};
using CString = std::unique_ptr<char, Owned>;

int exitFor(fslat_status s) { return s == FSLAT_ERR_GRAMMAR ? kGrammar : kUsage; }

int report(fslat_status s) {
  std::cerr << "fslat: " << fslat_last_error() << '\n';
  return exitFor(s);
}

int checkGrammar(const Config& cfg) {
  fslat_grammar_report* raw = nullptr;
  if (auto s = fslat_check_grammar_file(cfg.grammar.c_str(), &raw)) return report(s);
  std::unique_ptr<fslat_grammar_report, decltype(&fslat_report_free)> rep(raw, fslat_report_free);
  const std::size_t n = fslat_report_rules(raw);
  std::cout << "rules\t" << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    const char* status = fslat_report_vacuous(raw, i)         ? "vacuous"
                         : fslat_report_unsatisfiable(raw, i) ? "unsatisfiable"
                                                              : "ok";
    std::cout << fslat_report_name(raw, i) << '\t' << fslat_report_states(raw, i) << '\t' << status << '\n';
  }
  return kSuccess;
}

class Runner {
 public:
  Runner(const Config& cfg, fslat_engine* engine) : cfg_(cfg), engine_(engine) {
    options_ = fslat_default_parse_options();
    options_.limit = cfg.limit;
    options_.order = cfg.order == "selective" ? FSLAT_ORDER_SELECTIVE : FSLAT_ORDER_AS_WRITTEN;
    records_ = cfg.format == "records";
  }

  // Returns 0 or a fatal exit code.
  int feed(const std::string& line) {
    fslat_tokens* raw = nullptr;
    if (auto s = fslat_tokenize(line.c_str(), &raw)) return report(s);
    std::unique_ptr<fslat_tokens, decltype(&fslat_tokens_free)> tokens(raw, fslat_tokens_free);
    for (std::size_t i = 0; i < fslat_tokens_size(raw); ++i) {
      pending_.emplace_back(fslat_tokens_get(raw, i));
      if (fslat_is_sentence_end(pending_.back().c_str())) {
        if (int rc = flush()) return rc;
      }
    }
    return 0;
  }

  int flush() {
    if (pending_.empty()) return 0;
    std::vector<const char*> words;
    for (const auto& t : pending_) words.push_back(t.c_str());
    fslat_result* raw = nullptr;
    const fslat_status s = fslat_parse(engine_, words.data(), words.size(), &options_, &raw);
    pending_.clear();
    if (s) return report(s);
    std::unique_ptr<fslat_result, decltype(&fslat_result_free)> result(raw, fslat_result_free);
    ++sentence_;
    emit(raw);
    if (fslat_result_empty(raw)) {
      empty_ = true;
      CString why;
      char* text = nullptr;
      if (fslat_result_diagnosis(raw, &text) == FSLAT_OK) why.reset(text);
      std::string names = why ? why.get() : "";
      while (!names.empty() && names.back() == '\n') names.pop_back();
      for (auto& c : names)
        if (c == '\n') c = ',';
      std::cerr << "fslat: sentence " << sentence_ << ": no reading survives; blamed rules: " << names << '\n';
    }
    std::cout.flush();
    return 0;
  }

  bool anyEmpty() const { return empty_; }

 private:
  void header(const char* text) {
    if (!headerDone_) std::cout << text;
    headerDone_ = true;
  }

  void separator() {
    if (!records_ && printed_) std::cout << '\n';
    printed_ = true;
  }

  void emit(fslat_result* r) {
    const fslat_format format = records_ ? FSLAT_FORMAT_RECORDS : FSLAT_FORMAT_TABLE;
    char* text = nullptr;
    switch (cfg_.command) {
      case Command::Parse: {
        if (records_) header(fslat_records_header());
        if (fslat_result_readings(r) == 0) return;
        separator();
        if (fslat_result_render(r, format, sentence_, &text) == FSLAT_OK) std::cout << CString(text).get();
        return;
      }
      case Command::Trace: {
        if (records_) header(fslat_trace_records_header());
        separator();
        if (fslat_result_trace(r, format, sentence_, &text) == FSLAT_OK) std::cout << CString(text).get();
        return;
      }
      case Command::Count: {
        static const std::pair<fslat_count, const char*> kinds[] = {{FSLAT_COUNT_MORPHOLOGICAL, "morphological"},
                                                                    {FSLAT_COUNT_BOUNDARIES, "boundaries"},
                                                                    {FSLAT_COUNT_FUNCTIONS, "functions"},
                                                                    {FSLAT_COUNT_FINAL, "final"}};
        std::vector<std::string> values;
        for (const auto& [kind, name] : kinds) {
          text = nullptr;
          values.emplace_back(fslat_result_count(r, kind, &text) == FSLAT_OK ? CString(text).get() : "?");
        }
        if (records_) {
          header("#sentence\tmorphological\tboundaries\tfunctions\tfinal\n");
          std::cout << sentence_;
          for (const auto& v : values) std::cout << '\t' << v;
          std::cout << '\n';
          return;
        }
        separator();
        for (std::size_t i = 0; i < values.size(); ++i) std::cout << kinds[i].second << '\t' << values[i] << '\n';
        return;
      }
      case Command::CheckGrammar: return;
    }
  }

  const Config& cfg_;
  fslat_engine* engine_;
  fslat_parse_options options_{};
  bool records_ = false;
  bool headerDone_ = false;
  bool printed_ = false;
  bool empty_ = false;
  std::size_t sentence_ = 0;
  std::vector<std::string> pending_;
};

int run(const Config& cfg) {
  if (cfg.command == Command::CheckGrammar) return checkGrammar(cfg);

  fslat_engine* raw = nullptr;
  if (auto s = fslat_engine_load(cfg.lexicon.c_str(), cfg.map.c_str(), cfg.grammar.c_str(), &raw)) return report(s);
  std::unique_ptr<fslat_engine, decltype(&fslat_engine_free)> engine(raw, fslat_engine_free);
  if (auto s = fslat_engine_set_unknown(raw, cfg.unknown == "closed" ? FSLAT_UNKNOWN_CLOSED : FSLAT_UNKNOWN_OPEN))
    return report(s);

  Runner runner(cfg, raw);
  std::vector<std::string> inputs = cfg.inputs;
  if (inputs.empty()) inputs.push_back("-");
  for (const auto& path : inputs) {
    std::ifstream file;
    if (path != "-") {
      file.open(path);
      if (!file) {
        std::cerr << "fslat: cannot read " << path << '\n';
        return kUsage;
      }
    }
    std::istream& in = path == "-" ? std::cin : file;
    for (std::string line; std::getline(in, line);) {
      if (int rc = runner.feed(line)) return rc;
    }
  }
  if (int rc = runner.flush()) return rc;
  return runner.anyEmpty() ? kEmpty : kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-state reductionistic parser"};
  app.require_subcommand(1);
  Config cfg;

  const std::map<std::string, Command> commands{{"parse", Command::Parse},
                                                {"count", Command::Count},
                                                {"trace", Command::Trace},
                                                {"check-grammar", Command::CheckGrammar}};
  const std::map<std::string, std::string> help{
      {"parse", "Parse sentences and print the surviving analyses"},
      {"count", "Print reading counts before and after the grammar"},
      {"trace", "Print the reading count after each rule"},
      {"check-grammar", "Compile a grammar and report on every rule"}};
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    const bool needsAll = command != Command::CheckGrammar;
    sub->add_option("--lexicon", cfg.lexicon, "Lexicon file")->required(needsAll);
    sub->add_option("--map", cfg.map, "Syntactic map file")->required(needsAll);
    sub->add_option("--grammar", cfg.grammar, "Grammar file")->required();
    sub->add_option("--limit", cfg.limit, "Readings decoded per sentence")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "records"}))
        ->capture_default_str();
    sub->add_option("--order", cfg.order, "Rule application order")
        ->check(CLI::IsMember({"as-written", "selective"}))
        ->capture_default_str();
    sub->add_option("--unknown", cfg.unknown, "Unknown-word policy")
        ->check(CLI::IsMember({"open", "closed"}))
        ->capture_default_str();
    sub->add_option("INPUT", cfg.inputs, "Input files; standard input when absent or '-'");
    sub->callback([&cfg, command] { cfg.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return run(cfg);
}
