// Licensed under the Apache License 2.0 (see LICENSE file).

#include "fslat/fslat.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "engine/engine.hpp"
#include "engine/render.hpp"
#include "fsa/alphabet.hpp"
#include "grammar/compile.hpp"
#include "lattice/syntactic_map.hpp"
#include "lexicon/lexicon.hpp"

using namespace fslat;

struct fslat_engine {
  std::unique_ptr<engine::Parser> parser;
};

struct fslat_result {
  engine::ParseResult result;
};

struct fslat_tokens {
  std::vector<std::string> tokens;
};

struct fslat_grammar_report {
  std::vector<grammar::CompiledRule> rules;
};

namespace {

thread_local std::string lastError;

fslat_status fail(fslat_status status, const std::string& message) {
  lastError = message;
  return status;
}

fslat_status statusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownWord: return FSLAT_ERR_UNKNOWN_WORD;
    case ErrorKind::Precondition: return FSLAT_ERR_PRECONDITION;
    case ErrorKind::Io: return FSLAT_ERR_IO;
    case ErrorKind::Parse:
    case ErrorKind::Compile:
    case ErrorKind::InfiniteLanguage:
    case ErrorKind::Internal: break;
  }
  return FSLAT_ERR_INTERNAL;
}

// Runs f, turning exceptions into a status. `parseStatus` replaces the
// generic mapping of Parse and Compile errors.
template <class F>
fslat_status guarded(F&& f, fslat_status parseStatus = FSLAT_ERR_INTERNAL, const std::string& context = "") {
  try {
    f();
    lastError.clear();
    return FSLAT_OK;
  } catch (const Error& e) {
    const bool syntax = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Compile;
    return fail(syntax && parseStatus != FSLAT_ERR_INTERNAL ? parseStatus : statusOf(e.kind()), context + e.what());
  } catch (const std::bad_alloc&) {
    return fail(FSLAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FSLAT_ERR_INTERNAL, e.what());
  }
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string readFile(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, std::string("cannot read ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fslat_status create(const std::string& lexiconText, const std::string& mapText, const std::string& grammarText,
                    const std::string& lexiconName, const std::string& mapName, const std::string& grammarName,
                    fslat_engine** out) {
  lexicon::Lexicon lex;
  std::optional<lattice::SyntacticMap> map;
  grammar::Grammar gram;
  if (auto s = guarded([&] { lex = lexicon::parseLexicon(lexiconText); }, FSLAT_ERR_LEXICON, lexiconName + ": "))
    return s;
  if (auto s = guarded([&] { map = lattice::parseSyntacticMap(mapText); }, FSLAT_ERR_MAP, mapName + ": ")) return s;
  if (auto s = guarded([&] { gram = grammar::parseGrammar(grammarText); }, FSLAT_ERR_GRAMMAR, grammarName + ": "))
    return s;
  return guarded(
      [&] {
        auto e = std::make_unique<fslat_engine>();
        e->parser = std::make_unique<engine::Parser>(std::move(lex), std::move(*map), gram);
        *out = e.release();
      },
      FSLAT_ERR_GRAMMAR, grammarName + ": ");
}

fslat_status check(const std::string& text, const std::string& name, fslat_grammar_report** out) {
  return guarded(
      [&] {
        auto report = std::make_unique<fslat_grammar_report>();
        fsa::Alphabet alphabet;
        report->rules = grammar::compileGrammar(grammar::parseGrammar(text), alphabet);
        for (auto& r : report->rules) r.alphabet = nullptr;
        *out = report.release();
      },
      FSLAT_ERR_GRAMMAR, name);
}

}  // namespace

extern "C" {

const char* fslat_version(void) { return "1.0.0"; }

const char* fslat_last_error(void) { return lastError.c_str(); }

void fslat_free(void* p) { std::free(p); }

fslat_parse_options fslat_default_parse_options(void) { return {16, FSLAT_ORDER_AS_WRITTEN}; }

fslat_status fslat_engine_create(const char* lexicon_text, const char* map_text, const char* grammar_text,
                                 fslat_engine** out) {
  if (!lexicon_text || !map_text || !grammar_text || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return create(lexicon_text, map_text, grammar_text, "lexicon", "map", "grammar", out);
}

fslat_status fslat_engine_load(const char* lexicon_path, const char* map_path, const char* grammar_path,
                               fslat_engine** out) {
  if (!lexicon_path || !map_path || !grammar_path || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  std::string texts[3];
  const char* paths[3] = {lexicon_path, map_path, grammar_path};
  for (int i = 0; i < 3; ++i) {
    if (auto s = guarded([&] { texts[i] = readFile(paths[i]); })) return s;
  }
  return create(texts[0], texts[1], texts[2], lexicon_path, map_path, grammar_path, out);
}

void fslat_engine_free(fslat_engine* engine) { delete engine; }

fslat_status fslat_engine_set_unknown(fslat_engine* engine, fslat_unknown policy) {
  if (!engine) return fail(FSLAT_ERR_ARGUMENT, "null engine");
  if (policy != FSLAT_UNKNOWN_OPEN && policy != FSLAT_UNKNOWN_CLOSED) return fail(FSLAT_ERR_ARGUMENT, "bad policy");
  engine->parser->lexicon().setPolicy(policy == FSLAT_UNKNOWN_CLOSED ? lexicon::UnknownWordPolicy::Closed
                                                                     : lexicon::UnknownWordPolicy::OpenClassGuess);
  return FSLAT_OK;
}

size_t fslat_engine_rule_count(const fslat_engine* engine) { return engine ? engine->parser->rules().size() : 0; }

fslat_status fslat_tokenize(const char* text, fslat_tokens** out) {
  if (!text || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto t = std::make_unique<fslat_tokens>();
    t->tokens = lexicon::tokenize(text);
    *out = t.release();
  });
}

size_t fslat_tokens_size(const fslat_tokens* tokens) { return tokens ? tokens->tokens.size() : 0; }

const char* fslat_tokens_get(const fslat_tokens* tokens, size_t i) {
  if (!tokens || i >= tokens->tokens.size()) return nullptr;
  return tokens->tokens[i].c_str();
}

void fslat_tokens_free(fslat_tokens* tokens) { delete tokens; }

int fslat_is_sentence_end(const char* token) { return token && lexicon::isSentenceEnd(token) ? 1 : 0; }

fslat_status fslat_parse(fslat_engine* engine, const char* const* tokens, size_t n, const fslat_parse_options* options,
                         fslat_result** out) {
  if (!engine || !out || (n && !tokens)) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  if (n == 0) return fail(FSLAT_ERR_ARGUMENT, "empty sentence");
  const fslat_parse_options opts = options ? *options : fslat_default_parse_options();
  if (opts.order != FSLAT_ORDER_AS_WRITTEN && opts.order != FSLAT_ORDER_SELECTIVE)
    return fail(FSLAT_ERR_ARGUMENT, "bad order");
  std::vector<std::string> words;
  for (size_t i = 0; i < n; ++i) {
    if (!tokens[i]) return fail(FSLAT_ERR_ARGUMENT, "null token");
    words.emplace_back(tokens[i]);
  }
  return guarded([&] {
    engine::ParseOptions po;
    po.limit = opts.limit;
    po.apply.order = opts.order == FSLAT_ORDER_SELECTIVE ? engine::Order::SelectiveFirst : engine::Order::AsWritten;
    auto r = std::make_unique<fslat_result>();
    r->result = engine->parser->parse(words, po);
    *out = r.release();
  });
}

void fslat_result_free(fslat_result* result) { delete result; }

int fslat_result_empty(const fslat_result* result) {
  return result && result->result.status == engine::Status::Empty ? 1 : 0;
}

fslat_status fslat_result_count(const fslat_result* result, fslat_count which, char** out) {
  if (!result || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  const auto& r = result->result;
  const fsa::BigCount* c = nullptr;
  switch (which) {
    case FSLAT_COUNT_MORPHOLOGICAL: c = &r.morphological; break;
    case FSLAT_COUNT_BOUNDARIES: c = &r.withBoundaries; break;
    case FSLAT_COUNT_FUNCTIONS: c = &r.trace.initial; break;
    case FSLAT_COUNT_FINAL: c = &r.trace.final(); break;
    default: return fail(FSLAT_ERR_ARGUMENT, "bad count");
  }
  return guarded([&] { *out = copy(c->toString()); });
}

size_t fslat_result_readings(const fslat_result* result) { return result ? result->result.readings.size() : 0; }

fslat_status fslat_result_render(const fslat_result* result, fslat_format format, size_t sentence, char** out) {
  if (!result || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  if (format == FSLAT_FORMAT_TABLE) return guarded([&] { *out = copy(engine::renderTable(result->result.readings)); });
  if (format == FSLAT_FORMAT_RECORDS)
    return guarded([&] { *out = copy(engine::renderRecords(result->result.readings, sentence)); });
  return fail(FSLAT_ERR_ARGUMENT, "bad format");
}

fslat_status fslat_result_trace(const fslat_result* result, fslat_format format, size_t sentence, char** out) {
  if (!result || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  if (format == FSLAT_FORMAT_TABLE) return guarded([&] { *out = copy(engine::renderTrace(result->result.trace)); });
  if (format == FSLAT_FORMAT_RECORDS)
    return guarded([&] { *out = copy(engine::renderTraceRecords(result->result.trace, sentence)); });
  return fail(FSLAT_ERR_ARGUMENT, "bad format");
}

fslat_status fslat_result_diagnosis(const fslat_result* result, char** out) {
  if (!result || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  std::string text;
  for (const auto& name : result->result.diagnosis) text += name + '\n';
  return guarded([&] { *out = copy(text); });
}

const char* fslat_records_header(void) {
  static const std::string header = engine::recordsHeader();
  return header.c_str();
}

const char* fslat_trace_records_header(void) {
  static const std::string header = engine::traceRecordsHeader();
  return header.c_str();
}

fslat_status fslat_check_grammar(const char* grammar_text, fslat_grammar_report** out) {
  if (!grammar_text || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return check(grammar_text, "", out);
}

fslat_status fslat_check_grammar_file(const char* path, fslat_grammar_report** out) {
  if (!path || !out) return fail(FSLAT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  std::string text;
  if (auto s = guarded([&] { text = readFile(path); })) return s;
  return check(text, std::string(path) + ": ", out);
}

size_t fslat_report_rules(const fslat_grammar_report* report) { return report ? report->rules.size() : 0; }

const char* fslat_report_name(const fslat_grammar_report* report, size_t i) {
  if (!report || i >= report->rules.size()) return nullptr;
  return report->rules[i].name.c_str();
}

size_t fslat_report_states(const fslat_grammar_report* report, size_t i) {
  if (!report || i >= report->rules.size()) return 0;
  return report->rules[i].automaton.stateCount();
}

int fslat_report_vacuous(const fslat_grammar_report* report, size_t i) {
  return report && i < report->rules.size() && report->rules[i].vacuous ? 1 : 0;
}

int fslat_report_unsatisfiable(const fslat_grammar_report* report, size_t i) {
  return report && i < report->rules.size() && report->rules[i].unsatisfiable ? 1 : 0;
}

void fslat_report_free(fslat_grammar_report* report) { delete report; }

}  // extern "C"
