#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace prefrep {

using Rational = boost::multiprecision::cpp_rational;

/// The two disjoint value domains: exact rationals and uninterpreted constants.
enum class Domain { kRational, kConstant };

std::string_view to_string(Domain d);

/// Built-in comparison symbols.
enum class CmpOp { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view to_string(CmpOp op);
bool is_order_op(CmpOp op);
CmpOp negate(CmpOp op);

/// A database value: either an exact rational or a named constant.
///
/// Constants are equal iff their names are equal. Rationals order naturally;
/// constants only support = and !=. The total order used for canonical
/// iteration places every rational before every constant.
class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Value(long long n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static Value constant(std::string name);
  static Value rational(const Rational& r) { return Value(r); }
  static Value rational(long long num, long long den = 1);

  /// Parses "12", "-3", "2.75", "1/3". Throws ArgumentError on anything else.
  static Value parse_number(std::string_view text);

  Domain domain() const { return v_.index() == 0 ? Domain::kRational : Domain::kConstant; }
  bool is_rational() const { return v_.index() == 0; }
  bool is_constant() const { return v_.index() == 1; }

  const Rational& as_rational() const;
  const std::string& as_constant() const;

  /// Canonical text: "p" or "p/q" for rationals, the bare name for constants
  /// when it is a plain identifier, otherwise the single-quoted name.
  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct Name {
    std::string text;
    bool operator==(const Name&) const = default;
  };
  explicit Value(Name n) : v_(std::move(n)) {}

  std::variant<Rational, Name> v_;
};

/// Evaluates `a op b`. Throws TypeError when the domains differ or when an
/// order comparison is applied to constants.
bool compare(const Value& a, CmpOp op, const Value& b);

/// True when `text` is a bare identifier ([A-Za-z_][A-Za-z0-9_]*).
bool is_identifier(std::string_view text);

}  // namespace prefrep
