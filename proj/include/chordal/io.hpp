#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordal/atlas.hpp"
#include "chordal/betti.hpp"
#include "chordal/chordal_variants.hpp"
#include "chordal/clutter.hpp"
#include "chordal/simplicial_elim.hpp"
#include "chordal/stability.hpp"

namespace chordal {

/// Text format:
///
///   # optional comments
///   n=7 d=3
///   1 2 3
///   2 5 6
///
/// One circuit per line, members ascending; "-" denotes the empty circuit.
/// "d=?" leaves the uniformity to be inferred. Throws ParseError on malformed
/// text and the clutter validation errors otherwise.
Clutter parse_clutter_text(std::string_view text);

/// JSON format: {"n": 5, "d": 3 | null, "circuits": [[1,2,3], ...],
/// "ground": [...] (optional)}. Throws as parse_clutter_text.
Clutter parse_clutter_json(std::string_view text);

/// JSON when the first non-blank character is '{', text otherwise.
Clutter parse_clutter(std::string_view text);

/// Canonical text form: header then circuits in canonical order.
std::string serialize_clutter(const Clutter& c);
std::string serialize_clutter_json(const Clutter& c);

/// One (d-1)-set per line followed by "# verdict: chordal|not-chordal"; a
/// not-chordal verdict lists the stuck clutter's circuits as "# stuck:" lines.
std::string render_certificate(const ChordalityVerdict& v);

struct ParsedCertificate {
  std::vector<VertexSet> order;
  std::optional<bool> chordal;
};

ParsedCertificate parse_certificate(std::string_view text);

/// "# field=<char> indeg=<d>" then "i<TAB>j<TAB>beta" rows sorted by (i, j).
std::string render_betti_tsv(const BettiTable& t);
BettiTable parse_betti_tsv(std::string_view text);

/// JSON array of steps: {"start": {"n": 4, "d": 3}},
/// {"glue": {"i": 2, "n": 4, "shared": [1, 2]}}, {"add": {"F": [...], "e": [...]}}.
std::vector<BuildStep> parse_build_script(std::string_view text);
std::string serialize_build_script(const std::vector<BuildStep>& script);

/// [[i, j, beta], ...] rows of a table.
std::string betti_rows_json(const BettiTable& t);
std::string stability_report_json(const StabilityReport& r);
std::string atlas_json(const AtlasResult& a);

/// Reads a whole file. Throws InvalidArgument when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace chordal
