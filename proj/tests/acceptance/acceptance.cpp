// Licensed under the Apache License 2.0 (see LICENSE file).

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "engine/engine.hpp"
#include "engine/render.hpp"
#include "fsa/operations.hpp"
#include "grammar/compile.hpp"
#include "support/fixtures.hpp"
#include "support/pipeline_oracle.hpp"
#include "support/properties.hpp"
#include "support/random_rules.hpp"
#include "support/toy_readings.hpp"

using namespace fslat;
using Clock = std::chrono::steady_clock;
using fsa::BigCount;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds(Clock::duration d) { return std::chrono::duration<double>(d).count(); }

template <class F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return seconds(Clock::now() - t0);
}

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string s; in >> s;) out.push_back(s);
  return out;
}

Verdict ruleOracle() {
  std::mt19937 rng(1000);
  testing::RuleGenerator gen(rng, {"A", "B", "C", "D", "@", "@/"});
  std::size_t agree = 0, rejected = 0;
  const int pairs = 1000;
  const double secs = timed([&] {
    for (int i = 0; i < pairs; ++i) {
      fsa::Alphabet alphabet;
      grammar::ImplicationRule rule = gen.rule();
      grammar::CompiledRule compiled = grammar::compileRule(rule, alphabet);
      const auto word = gen.word(12);
      const bool oracle = grammar::bruteForceAccepts(rule, word);
      agree += compiled.automaton.accepts(testing::toWord(word, alphabet)) == oracle ? 1 : 0;
      rejected += oracle ? 0 : 1;
    }
  });
  return {agree == pairs && secs < 60,
          fmt("%zu/%d pairs agree (%zu rejected by the oracle) in %.2f s", agree, pairs, rejected, secs)};
}

Verdict pipelineOracle() {
  std::mt19937 rng(2000);
  std::size_t equal = 0, nonTrivial = 0, readings = 0;
  const int instances = 100;
  for (int i = 0; i < instances; ++i) {
    auto p = testing::randomPipeline(rng);
    auto expected = testing::oracleSurvivors(p);
    const std::size_t all = testing::spelledReadings(p.cohorts).size();
    readings = std::max(readings, all);
    equal += testing::engineSurvivors(p, engine::Order::AsWritten) == expected ? 1 : 0;
    nonTrivial += !expected.empty() && expected.size() < all ? 1 : 0;
  }
  return {equal == static_cast<std::size_t>(instances),
          fmt("%zu/%d pipelines equal; %zu with partial pruning; largest %zu readings", equal, instances, nonTrivial,
              readings)};
}

Verdict stressMagnitude() {
  auto parser = testing::fixtureParser("stress39");
  const auto tokens = testing::fixtureTokens("stress39");
  auto lattice = parser->buildLattice(tokens);
  std::size_t lo = SIZE_MAX, hi = 0;
  for (auto n : lattice.perTokenAmbiguity) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  BigCount count;
  const double countSecs = timed([&] { count = lattice::readingCount(lattice); });
  engine::Applied applied{lattice, {}};
  const double applySecs = timed([&] { applied = engine::applyGrammar(lattice, parser->rules()); });
  const bool pass = tokens.size() == 39 && lo >= 1 && hi <= 70 && count >= BigCount::power(10, 30) &&
                    countSecs < 0.1 && parser->rules().size() == 20 && applySecs < 5;
  return {pass, fmt("%zu tokens, combinations %zu..%zu, %zu-digit count in %.2f ms, %zu rules applied in %.2f s",
                    tokens.size(), lo, hi, count.digits(), countSecs * 1e3, parser->rules().size(), applySecs)};
}

Verdict decoupling() {
  auto parser = testing::fixtureParser("stress39");
  const auto long39 = testing::fixtureTokens("stress39");
  const auto short5 = split(testing::readData("fixtures/stress5.txt"));
  auto best = [&](const std::vector<std::string>& tokens, BigCount& initial) {
    double fastest = 1e9;
    for (int i = 0; i < 5; ++i) {
      engine::ParseResult r;
      fastest = std::min(fastest, timed([&] { r = parser->parse(tokens); }));
      initial = r.trace.initial;
    }
    return fastest;
  };
  BigCount c39, c5;
  const double t39 = best(long39, c39);
  const double t5 = best(short5, c5);
  const double timeRatio = t39 / t5;
  const bool countRatio = c39 > c5 * BigCount::power(10, 20);
  return {short5.size() == 5 && timeRatio < 100 && countRatio,
          fmt("time %.1f ms / %.2f ms = %.1fx; readings %zu digits / %zu digits", t39 * 1e3, t5 * 1e3, timeRatio,
              c39.digits(), c5.digits())};
}

Verdict goldenCorpus() {
  const std::string listing = testing::readData("lexicon/i_see_a_bird.lex");
  const bool roundTrip = lexicon::serialize(lexicon::parseLexicon(listing)) == listing;
  std::size_t matched = 0;
  std::string goldens;
  for (const auto& name : testing::goldenFixtures()) {
    auto parser = testing::fixtureParser(name);
    const std::string golden = testing::readData("golden/" + name + ".table");
    goldens += golden;
    matched += engine::renderTable(parser->parse(testing::fixtureTokens(name)).readings) == golden ? 1 : 0;
  }
  const bool collapsed = goldens.find("[@OBJ --or-- @P<<]") != std::string::npos;
  const bool twoTag = goldens.find("@MV\tMAINC@") != std::string::npos;
  return {roundTrip && matched == testing::goldenFixtures().size() && collapsed && twoTag,
          fmt("lexicon round trip %s; %zu/%zu tables match; collapsed row %s; main-verb rows %s",
              roundTrip ? "exact" : "differs", matched, testing::goldenFixtures().size(), collapsed ? "yes" : "no",
              twoTag ? "yes" : "no")};
}

Verdict ruleFixtures() {
  struct Tally {
    std::size_t positive = 0, negative = 0, wrong = 0;
  };
  auto tally = [](const grammar::ImplicationRule& rule, const std::vector<testing::ToyReading>& toys) {
    fsa::Alphabet alphabet;
    grammar::CompiledRule compiled = grammar::compileRule(rule, alphabet);
    Tally t;
    for (const auto& toy : toys) {
      const auto w = split(toy.text);
      const bool oracle = grammar::bruteForceAccepts(rule, w);
      const bool automaton = compiled.automaton.accepts(testing::toWord(w, alphabet));
      if (oracle != toy.licensed || automaton != oracle) ++t.wrong;
      else if (oracle) ++t.positive;
      else ++t.negative;
    }
    return t;
  };
  auto boundary = grammar::expandConstants(grammar::parseGrammar(testing::clauseBoundaryRule())).rules.at(0);
  auto subject =
      grammar::expandConstants(grammar::parseGrammar(testing::readData("grammar/reference_rules.fsg"))).rules.at(0);
  const Tally b = tally(boundary, testing::clauseBoundaryToys());
  const Tally s = tally(subject, testing::subjectToys());
  auto ok = [](const Tally& t) { return t.wrong == 0 && t.positive >= 3 && t.negative >= 3; };
  return {ok(b) && ok(s), fmt("Subject %zu+/%zu- (%zu wrong); clause boundary %zu+/%zu- (%zu wrong)", s.positive,
                              s.negative, s.wrong, b.positive, b.negative, b.wrong)};
}

Verdict automataKernel() {
  testing::AutomataProperties properties(7000);
  std::size_t held = 0;
  std::string failed;
  const auto outcomes = properties.runAll(500);
  for (const auto& p : outcomes) {
    if (p.ok()) ++held;
    else failed += " [" + p.name + "]";
  }
  return {held == outcomes.size(),
          fmt("%zu/%zu properties hold on 500 instances each%s", held, outcomes.size(), failed.c_str())};
}

Verdict orderIndependence() {
  std::mt19937 rng(8000);
  std::size_t equal = 0;
  const int instances = 100;
  for (int i = 0; i < instances; ++i) {
    auto p = testing::randomPipeline(rng);
    equal += testing::engineSurvivors(p, engine::Order::AsWritten) ==
                     testing::engineSurvivors(p, engine::Order::AsWritten, true)
                 ? 1
                 : 0;
  }
  return {equal == static_cast<std::size_t>(instances),
          fmt("%zu/%d instances give the same survivors in reversed order", equal, instances)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"rule semantics match the brute-force oracle", ruleOracle},
      {"engine survivors match enumerate-then-filter", pipelineOracle},
      {"39-token stress sentence: magnitude and speed", stressMagnitude},
      {"parse time does not track reading count", decoupling},
      {"golden corpus", goldenCorpus},
      {"subject and clause-boundary rule fixtures", ruleFixtures},
      {"automata kernel properties", automataKernel},
      {"rule order does not change the survivors", orderIndependence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("%s [%zu] %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
