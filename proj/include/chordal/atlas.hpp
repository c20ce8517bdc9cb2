#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordal/chordal_variants.hpp"
#include "chordal/clutter.hpp"

namespace chordal {

struct AtlasFlags {
  bool vtv = false;
  bool w_chordal = false;
  Tristate e_chordal = Tristate::kUnknown;
  bool chordal = false;
  /// I(complement C) has a d-linear resolution; the zero ideal counts.
  bool linres_gf2 = false;
  bool linres_gf3 = false;
};

struct AtlasRecord {
  /// Circuits in canonical order, "123,124"; "-" for the empty family.
  std::string id;
  Clutter clutter;
  AtlasFlags flags;
  /// Broken containments, e.g. "w_chordal => chordal".
  std::vector<std::string> violations;
};

struct AtlasOptions {
  /// Exhaustive when 2^C(n,d) is at most this many clutters, sampled otherwise.
  std::uint64_t budget = std::uint64_t{1} << 12;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// Keep one representative per isomorphism class (n <= 8).
  bool iso_reduce = false;
};

struct AtlasResult {
  int n = 0;
  int d = 0;
  bool exhaustive = false;
  std::vector<AtlasRecord> records;
  /// Records with both linres flags but not chordal.
  std::vector<std::string> findings;

  std::size_t violation_count() const;
};

/// Classifies subfamilies of C_{n,d} under every recognizer.
AtlasResult atlas(int n, int d, const AtlasOptions& options = {});

/// Classifies one clutter.
AtlasRecord classify(const Clutter& c);

std::string atlas_id(const Clutter& c);

/// Lexicographically least relabelled circuit family over all permutations of
/// the ground set.
std::vector<VertexSet> canonical_form(const Clutter& c);

}  // namespace chordal
