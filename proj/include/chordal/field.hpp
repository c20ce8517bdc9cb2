#pragma once

#include <string>
#include <string_view>

namespace chordal {

/// Coefficient field: the rationals (characteristic 0) or GF(p).
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws InvalidArgument unless characteristic is 0 or a prime.
  explicit FieldSpec(int characteristic);

  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf(int p) { return FieldSpec(p); }

  int characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  int characteristic_ = 2;
};

/// Parses "0", "2", "3", ... into a field. Throws InvalidArgument.
FieldSpec parse_field(std::string_view text);

}  // namespace chordal
