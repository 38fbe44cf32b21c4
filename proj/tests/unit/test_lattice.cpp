// Licensed under the Apache License 2.0 (see LICENSE file).

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fsa/operations.hpp"
#include "lattice/lattice.hpp"
#include "support/random_sentences.hpp"

using namespace fslat;
using namespace fslat::lattice;
using fsa::BigCount;

namespace {

const char* kSmallMap =
    "# test map\n"
    "DET -> @>N\n"
    "VFIN -> @MV @AUX\n"
    "INF -> @mv @aux\n"
    "N -> @SUBJ @OBJ @>N\n"
    "FULLSTOP ->\n"
    "* -> @ADVL\n";

MappedCohort single(const std::string& surface, std::vector<std::string> tags, std::vector<Analysis> analyses) {
  MappedCohort c{surface, {}};
  c.readings.push_back({lexicon::MorphReading{surface, {}, std::move(tags), {}}, std::move(analyses)});
  return c;
}

// Closed form for a straight-line build.
BigCount closedForm(const std::vector<MappedCohort>& cohorts) {
  BigCount n = 1;
  for (const auto& c : cohorts) n *= c.combinations();
  return n * BigCount::power(4, static_cast<unsigned>(cohorts.size() - 1));
}

std::string dumped(const fsa::Dfa& dfa, const fsa::Alphabet& alphabet) {
  std::ostringstream out;
  fsa::dump(dfa, alphabet, out);
  return out.str();
}

}  // namespace

TEST_CASE("tag registry conventions") {
  const TagRegistry& reg = TagRegistry::standard();
  for (const auto& t : reg.functionTags()) CHECK(t.front() == '@');
  for (const auto& t : reg.clauseTags()) {
    CHECK(t.back() == '@');
    CHECK(t.front() != '@');
  }
  for (const char* t : {"@SUBJ", "@OBJ", "@SC", "@AUX", "@MV", "@P<<", "@F-SUBJ", "@I-OBJ", "@OC", "@APP"}) {
    auto lower = reg.counterpart(t);
    REQUIRE(lower);
    CHECK(reg.isFunctionTag(*lower));
    CHECK(TagRegistry::isLowerCase(*lower));
    CHECK(reg.counterpart(*lower) == std::string(t));
  }
  CHECK_FALSE(reg.counterpart("@>N"));
  CHECK(reg.isFunctionTag("@ADVL/N<"));
  CHECK(reg.isFunctionTag("@CC"));
  CHECK_FALSE(reg.isFunctionTag("MAINC@"));
  CHECK(reg.clauseTagsFor("@MV") == std::vector<std::string>{"MAINC@", "SUBJ@", "OBJ@", "SC@", "P<<@", "N<@", "ADVL@"});
  for (const auto& c : reg.clauseTagsFor("@mv")) CHECK(TagRegistry::isLowerCase(c));
  CHECK(reg.clauseTagsFor("@OBJ").empty());
}

TEST_CASE("syntactic map parsing and matching") {
  SyntacticMap map = parseSyntacticMap(kSmallMap);
  CHECK(map.rules().size() == 5);
  lexicon::MorphReading det{"a", {"<Indef>"}, {"DET", "CENTRAL", "ART", "SG"}, {}};
  CHECK(map.match(det).tags == std::vector<std::string>{"@>N"});
  lexicon::MorphReading adv{"so", {}, {"ADV"}, {}};
  CHECK(map.match(adv).tags == std::vector<std::string>{"@ADVL"});

  SUBCASE("errors carry a line number") {
    auto line = [](const std::string& text) -> std::size_t {
      try {
        parseSyntacticMap(text);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        return e.where().line;
      }
      return 0;
    };
    CHECK(line("N -> @SUBJ\nV @MV\n* -> @ADVL\n") == 2);
    CHECK(line("N -> @NOPE\n* -> @ADVL\n") == 1);
    CHECK(line("* -> @ADVL\nN -> @SUBJ\n") == 2);
    CHECK(line("N -> MAINC@\n* -> @ADVL\n") == 1);
    CHECK_THROWS_AS(parseSyntacticMap("N -> @SUBJ\n"), Error);
  }
}

TEST_CASE("mapSyntax") {
  SyntacticMap map = parseSyntacticMap(kSmallMap);
  lexicon::Cohort see{"see", {{"see", {"<SVO>"}, {"V", "PRES", "-SG3", "VFIN"}, {}}}};
  MappedCohort mapped = mapSyntax(see, map);
  REQUIRE(mapped.readings.size() == 1);
  const auto& a = mapped.readings[0].analyses;
  CHECK(a.size() == 8);
  CHECK(a[0] == Analysis{"@MV", "MAINC@"});
  CHECK(a[6] == Analysis{"@MV", "ADVL@"});
  CHECK(a[7] == Analysis{"@AUX", ""});

  lexicon::Cohort stop{".", {{".", {}, {"FULLSTOP"}, {}}}};
  CHECK(mapSyntax(stop, map).readings[0].analyses == std::vector<Analysis>{Analysis{}});

  SUBCASE("tags attached in the source override the map") {
    lexicon::Cohort pinned{"inserted", {{"insert", {}, {"V", "PCP2"}, {"@MV", "obj@"}}}};
    CHECK(mapSyntax(pinned, map).readings[0].analyses == std::vector<Analysis>{{"@MV", "obj@"}});
    lexicon::Cohort two{"societies", {{"society", {}, {"N", "NOM", "PL"}, {"@OBJ", "@P<<"}}}};
    CHECK(mapSyntax(two, map).combinations() == 2);
    lexicon::Cohort bad{"x", {{"x", {}, {"N"}, {"@WHAT"}}}};
    CHECK_THROWS_AS(mapSyntax(bad, map), Error);
  }
}

TEST_CASE("buildLattice path counts") {
  fsa::Alphabet alphabet;
  SUBCASE("one token, one reading, one tag") {
    auto lat = buildLattice({single("yes", {"INTERJ"}, {{"@ADVL", ""}})}, alphabet);
    CHECK(readingCount(lat) == 1);
    auto paths = fsa::enumerate(lat.automaton, 10);
    REQUIRE(paths.size() == 1);
    std::vector<std::string> texts;
    for (auto s : paths[0]) texts.push_back(alphabet.text(s));
    CHECK(texts == std::vector<std::string>{"@@", "\"<yes>\"", "INTERJ", "@ADVL", "@@"});
  }
  SUBCASE("two tokens with 2 and 3 combinations give 2 x 4 x 3") {
    auto a = single("a", {"DET"}, {{"@>N", ""}, {"@ADVL", ""}});
    auto b = single("b", {"N"}, {{"@SUBJ", ""}, {"@OBJ", ""}, {"@SC", ""}});
    auto lat = buildLattice({a, b}, alphabet);
    CHECK(readingCount(lat) == 24);
    CHECK(fsa::enumerate(lat.automaton, 100).size() == 24);
    CHECK(lat.perTokenAmbiguity == std::vector<std::size_t>{2, 3});
    CHECK(lat.boundarySlots == 1);
  }
  SUBCASE("unambiguous three-token sentence has 16 readings") {
    auto lat = buildLattice({single("i", {"PRON"}, {{"@SUBJ", ""}}), single("run", {"V"}, {{"@MV", "MAINC@"}}),
                             single(".", {"FULLSTOP"}, {Analysis{}})},
                            alphabet);
    CHECK(readingCount(lat) == 16);
  }
  SUBCASE("empty language counts zero") {
    auto lat = buildLattice({single("i", {"PRON"}, {{"@SUBJ", ""}})}, alphabet);
    CHECK(readingCount({fsa::intersect(lat.automaton, fsa::Dfa()), {}, {}, 0}) == 0);
  }
  SUBCASE("identical blocks are merged") {
    MappedCohort c{"a", {}};
    c.readings.push_back({{"a", {}, {"DET"}, {}}, {{"@>N", ""}}});
    c.readings.push_back({{"an", {}, {"DET"}, {}}, {{"@>N", ""}}});
    auto lat = buildLattice({c}, alphabet);
    CHECK(readingCount(lat) == 1);
    CHECK(lat.perTokenAmbiguity[0] == 1);
  }
  CHECK_THROWS_AS(buildLattice({}, alphabet), Error);
}

TEST_CASE("random lattices: shape, closed form and decoding") {
  std::mt19937 rng(1234);
  fsa::Alphabet alphabet;
  const TagRegistry& reg = TagRegistry::standard();
  for (int round = 0; round < 1000; ++round) {
    auto cohorts = fslat::testing::randomCohorts(rng, 3, 2, 2);
    auto lat = buildLattice(cohorts, alphabet);
    const BigCount expected = closedForm(cohorts);
    REQUIRE(readingCount(lat) == expected);
    CHECK_FALSE(fsa::hasCycle(lat.automaton));

    auto paths = fsa::enumerate(lat.automaton, fsa::kUnlimited);
    CHECK(BigCount(paths.size()) == expected);
    std::set<std::string> seen;
    for (const auto& p : paths) {
      DecodedReading d = decodePath(p, lat, alphabet);
      REQUIRE(d.size() == cohorts.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i].reading.base = cohorts[i].surface;
        for (const auto& m : d[i].reading.tags) d[i].reading.base += m;
        CHECK(d[i].surface == cohorts[i].surface);
        CHECK((d[i].analysis.function.empty() || reg.isFunctionTag(d[i].analysis.function)));
        CHECK(d[i].analysis.clause.empty() == !reg.isMainVerbTag(d[i].analysis.function));
        const bool last = i + 1 == d.size();
        CHECK((last ? d[i].boundary == "@@" : d[i].boundary != "@@"));
      }
      std::string key;
      for (const auto& t : d) key += t.reading.base + t.analysis.function + t.analysis.clause + t.boundary + "|";
      seen.insert(key);
    }
    CHECK(seen.size() == paths.size());
  }
}

TEST_CASE("decodePath rejects strings without the lattice shape") {
  fsa::Alphabet alphabet;
  auto lat = buildLattice({single("a", {"DET"}, {{"@>N", ""}}), single("b", {"N"}, {{"@OBJ", ""}})}, alphabet);
  auto path = fsa::enumerate(lat.automaton, 1).front();
  CHECK_NOTHROW(decodePath(path, lat, alphabet));
  auto truncated = path;
  truncated.pop_back();
  CHECK_THROWS_AS(decodePath(truncated, lat, alphabet), Error);
  auto swapped = path;
  std::swap(swapped[1], swapped[2]);
  CHECK_THROWS_AS(decodePath(swapped, lat, alphabet), Error);
  CHECK_THROWS_AS(decodePath({}, lat, alphabet), Error);
}

TEST_CASE("building is deterministic") {
  std::mt19937 rng(99);
  for (int round = 0; round < 50; ++round) {
    auto cohorts = fslat::testing::randomCohorts(rng, 5, 3, 3);
    fsa::Alphabet a1, a2;
    CHECK(dumped(buildLattice(cohorts, a1).automaton, a1) == dumped(buildLattice(cohorts, a2).automaton, a2));
  }
}

TEST_CASE("39 tokens with 1 to 70 combinations each exceed 10^30 readings") {
  std::mt19937 rng(39);
  std::vector<MappedCohort> cohorts;
  const TagRegistry& reg = TagRegistry::standard();
  for (int i = 0; i < 39; ++i) {
    MappedCohort c{"w" + std::to_string(i), {}};
    const std::size_t want = 1 + rng() % 70;
    for (std::size_t r = 0; c.combinations() < want; ++r) {
      MappedReading reading{{"w", {}, {"T" + std::to_string(r)}, {}}, {}};
      for (const auto& f : reg.functionTags()) {
        if (c.combinations() + reading.analyses.size() == want) break;
        if (!reg.isMainVerbTag(f)) reading.analyses.push_back({f, ""});
      }
      c.readings.push_back(std::move(reading));
    }
    CHECK(c.combinations() == want);
    cohorts.push_back(std::move(c));
  }
  fsa::Alphabet alphabet;
  auto lat = buildLattice(cohorts, alphabet);
  auto start = std::chrono::steady_clock::now();
  BigCount n = readingCount(lat);
  auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(n == closedForm(cohorts));
  CHECK(n >= BigCount::power(10, 30));
  CHECK(elapsed < std::chrono::milliseconds(100));
}

TEST_CASE("count escalation") {
  std::vector<MappedCohort> cohorts{single("i", {"PRON"}, {{"@SUBJ", ""}, {"@OBJ", ""}}),
                                    single("run", {"V"}, {{"@MV", "MAINC@"}})};
  cohorts[0].readings.push_back({{"i", {}, {"ABBR"}, {}}, {{"@SUBJ", ""}}});
  CHECK(morphologicalCount(cohorts) == 2);
  CHECK(withBoundariesCount(cohorts) == 8);
  fsa::Alphabet alphabet;
  CHECK(readingCount(buildLattice(cohorts, alphabet)) == 12);
}
