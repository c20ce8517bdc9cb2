#include "chordal/field.hpp"

#include <charconv>

#include "chordal/error.hpp"

namespace chordal {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; static_cast<long long>(q) * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec::FieldSpec(int characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field characteristic must be 0 or prime, got " + std::to_string(characteristic));
  }
}

std::string FieldSpec::name() const {
  return characteristic_ == 0 ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

FieldSpec parse_field(std::string_view text) {
  int value = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bad field '" + std::string(text) + "'");
  }
  return FieldSpec(value);
}

}  // namespace chordal
