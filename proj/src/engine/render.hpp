// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "engine/engine.hpp"
#include "lattice/lattice.hpp"

namespace fslat::engine {

// One row per token: surface, part of speech, function tag, clause tag,
// boundary, separated by single TABs, after a leading `\t\t\t\t@@` row.
// Columns that differ between readings are written `[a --or-- b]`, with an
// empty alternative shown as `-`. No readings, no output.
std::string renderTable(const std::vector<lattice::DecodedReading>& readings);

// Column header of the records format, with its leading '#'.
std::string recordsHeader();
// One line per token of every reading:
// sentence reading token surface base markers tags function clause boundary
// with markers and tags space-separated. Indices start at 1.
std::string renderRecords(const std::vector<lattice::DecodedReading>& readings, std::size_t sentence);

// Inverse of renderRecords; the header and blank lines are skipped.
// Sentences come back in index order. Throws Parse on a malformed line.
std::vector<std::vector<lattice::DecodedReading>> parseRecords(std::string_view text);

// `rule TAB before TAB after TAB micros` per step.
std::string renderTrace(const TraceReport& trace);
// Machine-readable variant; the header names the columns.
std::string traceRecordsHeader();
std::string renderTraceRecords(const TraceReport& trace, std::size_t sentence);

}  // namespace fslat::engine
