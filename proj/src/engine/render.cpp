// Licensed under the Apache License 2.0 (see LICENSE file).

#include "engine/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fslat::engine {

namespace {

using lattice::DecodedReading;
using lattice::TokenAnalysis;

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::vector<std::string> splitOn(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t from = 0;
  for (;;) {
    const std::size_t at = text.find(sep, from);
    out.emplace_back(text.substr(from, at == std::string_view::npos ? std::string_view::npos : at - from));
    if (at == std::string_view::npos) return out;
    from = at + 1;
  }
}

std::vector<std::string> words(const std::string& field) {
  std::vector<std::string> out;
  std::istringstream in(field);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string collapse(const std::vector<std::string>& values) {
  std::vector<std::string> seen;
  for (const auto& v : values)
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  if (seen.size() == 1) return seen.front();
  std::string out = "[";
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (i) out += " --or-- ";
    out += seen[i].empty() ? "-" : seen[i];
  }
  return out + "]";
}

std::string partOfSpeech(const TokenAnalysis& t) { return t.reading.tags.empty() ? "" : t.reading.tags.front(); }

}  // namespace

std::string renderTable(const std::vector<DecodedReading>& readings) {
  if (readings.empty()) return "";
  std::string out = "\t\t\t\t@@\n";
  const std::size_t n = readings.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> surface, pos, function, clause, boundary;
    for (const auto& r : readings) {
      const TokenAnalysis& t = r.at(i);
      surface.push_back(t.surface);
      pos.push_back(partOfSpeech(t));
      function.push_back(t.analysis.function);
      clause.push_back(t.analysis.clause);
      boundary.push_back(t.boundary);
    }
    out += collapse(surface) + '\t' + collapse(pos) + '\t' + collapse(function) + '\t' + collapse(clause) + '\t' +
           collapse(boundary) + '\n';
  }
  return out;
}

std::string recordsHeader() { return "#sentence\treading\ttoken\tsurface\tbase\tmarkers\ttags\tfunction\tclause\tboundary\n"; }

std::string renderRecords(const std::vector<DecodedReading>& readings, std::size_t sentence) {
  std::string out;
  for (std::size_t r = 0; r < readings.size(); ++r) {
    for (std::size_t i = 0; i < readings[r].size(); ++i) {
      const TokenAnalysis& t = readings[r][i];
      out += std::to_string(sentence) + '\t' + std::to_string(r + 1) + '\t' + std::to_string(i + 1) + '\t' +
             t.surface + '\t' + t.reading.base + '\t' + join(t.reading.markers, ' ') + '\t' +
             join(t.reading.tags, ' ') + '\t' + t.analysis.function + '\t' + t.analysis.clause + '\t' + t.boundary +
             '\n';
    }
  }
  return out;
}

std::vector<std::vector<DecodedReading>> parseRecords(std::string_view text) {
  std::map<std::size_t, std::map<std::size_t, DecodedReading>> sentences;
  std::size_t lineNo = 0;
  for (const auto& line : splitOn(text, '\n')) {
    ++lineNo;
    if (line.empty() || line.front() == '#') continue;
    const auto f = splitOn(line, '\t');
    if (f.size() != 10) {
      throw Error(ErrorKind::Parse, "expected 10 fields, found " + std::to_string(f.size()),
                  SourceLocation{lineNo, 1});
    }
    std::size_t s = 0, r = 0, t = 0;
    try {
      s = std::stoul(f[0]);
      r = std::stoul(f[1]);
      t = std::stoul(f[2]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad index", SourceLocation{lineNo, 1});
    }
    DecodedReading& reading = sentences[s][r];
    if (t != reading.size() + 1) throw Error(ErrorKind::Parse, "tokens out of order", SourceLocation{lineNo, 1});
    TokenAnalysis ta;
    ta.surface = f[3];
    ta.reading.base = f[4];
    ta.reading.markers = words(f[5]);
    ta.reading.tags = words(f[6]);
    ta.analysis.function = f[7];
    ta.analysis.clause = f[8];
    ta.boundary = f[9];
    reading.push_back(std::move(ta));
  }
  std::vector<std::vector<DecodedReading>> out;
  for (auto& [s, readings] : sentences) {
    out.emplace_back();
    for (auto& [r, reading] : readings) out.back().push_back(std::move(reading));
  }
  return out;
}

std::string renderTrace(const TraceReport& trace) {
  std::string out;
  for (const auto& s : trace.steps) {
    out += s.rule + '\t' + s.before.toString() + '\t' + s.after.toString() + '\t' + std::to_string(s.elapsed.count()) +
           '\n';
  }
  return out;
}

std::string traceRecordsHeader() { return "#sentence\tstep\trule\tbefore\tafter\tmicros\tstates\n"; }

std::string renderTraceRecords(const TraceReport& trace, std::size_t sentence) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out += std::to_string(sentence) + '\t' + std::to_string(i + 1) + '\t' + s.rule + '\t' + s.before.toString() + '\t' +
           s.after.toString() + '\t' + std::to_string(s.elapsed.count()) + '\t' + std::to_string(s.states) + '\n';
  }
  return out;
}

}  // namespace fslat::engine
