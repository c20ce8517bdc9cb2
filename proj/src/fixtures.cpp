#include "chordal/fixtures.hpp"

#include <algorithm>

#include "chordal/error.hpp"

namespace chordal {

namespace {

/// "123 124" -> {{1,2,3},{1,2,4}}; every label is one digit.
std::vector<VertexSet> digits(std::string_view text) {
  std::vector<VertexSet> out;
  std::uint64_t bits = 0;
  for (char ch : text) {
    if (ch == ' ') {
      if (bits != 0) out.emplace_back(bits);
      bits = 0;
    } else {
      bits |= std::uint64_t{1} << (ch - '1');
    }
  }
  if (bits != 0) out.emplace_back(bits);
  return out;
}

}  // namespace

Clutter figure1_clutter() { return Clutter(7, digits("123 124 134 234 236 256 257 267 567"), 3); }

Clutter figure2_c() { return Clutter(6, digits("123 124 134 234 125 126 156 256"), 3); }

Clutter figure2_d() { return Clutter(5, digits("123 124 134 235 245 345"), 3); }

Clutter w_separation_example() { return Clutter(5, digits("123 134 235 345"), 3); }

Clutter e_separation_example() { return Clutter(5, digits("123 124 134 235 245 345 125 135 145"), 3); }

std::vector<VertexSet> dunce_hat_triangles() {
  return digits("124 127 128 134 135 136 156 178 235 237 238 245 348 367 456 468 678");
}

Clutter dunce_hat_clutter() {
  const VertexSet all = VertexSet::first(8);
  std::vector<VertexSet> removed;
  for (VertexSet f : dunce_hat_triangles()) removed.push_back(all - f);
  std::vector<VertexSet> circuits;
  for_each_k_subset(all, 5, [&](VertexSet s) {
    if (std::find(removed.begin(), removed.end(), s) == removed.end()) circuits.push_back(s);
  });
  return Clutter(8, std::move(circuits), 5);
}

std::vector<VertexSet> dunce_hat_printed_order() {
  return digits(
      "1237 1234 1235 1236 1467 1468 1246 1245 1247 1256 1257 1267 1346 1345 1347 1367 1356 1357 1457 1567 "
      "3567 2356 2578 2357 2345 2347 2346 2367 2457 2456 3457 3467 4567");
}

std::vector<std::string> fixture_names() {
  return {"figure1", "figure2-c", "figure2-d", "w-separation", "e-separation", "dunce-hat"};
}

Clutter fixture(std::string_view name) {
  if (name == "figure1") return figure1_clutter();
  if (name == "figure2-c") return figure2_c();
  if (name == "figure2-d") return figure2_d();
  if (name == "w-separation") return w_separation_example();
  if (name == "e-separation") return e_separation_example();
  if (name == "dunce-hat") return dunce_hat_clutter();
  throw Error(ErrorCode::kInvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace chordal
