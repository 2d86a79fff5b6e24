#include "prefrep/value.hpp"

#include <cctype>

#include "prefrep/error.hpp"

namespace prefrep {

std::string_view to_string(Domain d) { return d == Domain::kRational ? "rational" : "constant"; }

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::kEq: return "=";
    case CmpOp::kNe: return "!=";
    case CmpOp::kLt: return "<";
    case CmpOp::kLe: return "<=";
    case CmpOp::kGt: return ">";
    case CmpOp::kGe: return ">=";
  }
  return "?";
}

bool is_order_op(CmpOp op) { return op != CmpOp::kEq && op != CmpOp::kNe; }

CmpOp negate(CmpOp op) {
  switch (op) {
    case CmpOp::kEq: return CmpOp::kNe;
    case CmpOp::kNe: return CmpOp::kEq;
    case CmpOp::kLt: return CmpOp::kGe;
    case CmpOp::kLe: return CmpOp::kGt;
    case CmpOp::kGt: return CmpOp::kLe;
    case CmpOp::kGe: return CmpOp::kLt;
  }
  return op;
}

Value Value::constant(std::string name) { return Value(Name{std::move(name)}); }

Value Value::rational(long long num, long long den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  return Value(Rational(num, den));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

boost::multiprecision::cpp_int parse_int(std::string_view digits) {
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Value Value::parse_number(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ArgumentError("malformed rational '" + std::string(text) + "'");
    }
    auto d = parse_int(den);
    if (d == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
    r = Rational(parse_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ArgumentError("malformed decimal '" + std::string(text) + "'");
    }
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    boost::multiprecision::cpp_int w = whole.empty() ? 0 : parse_int(whole);
    r = Rational(w * scale + parse_int(frac), scale);
  } else {
    if (!all_digits(s)) throw ArgumentError("malformed number '" + std::string(text) + "'");
    r = Rational(parse_int(s));
  }
  return Value(negative ? Rational(-r) : r);
}

const Rational& Value::as_rational() const {
  if (!is_rational()) throw TypeError("value " + to_string() + " is not a rational");
  return std::get<0>(v_);
}

const std::string& Value::as_constant() const {
  if (!is_constant()) throw TypeError("value " + to_string() + " is not a constant");
  return std::get<1>(v_).text;
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto c0 = static_cast<unsigned char>(text.front());
  if (!std::isalpha(c0) && c0 != '_') return false;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

std::string Value::to_string() const {
  if (is_rational()) {
    const auto& r = std::get<0>(v_);
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
  }
  const auto& name = std::get<1>(v_).text;
  if (is_identifier(name)) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
  if (a.is_rational()) {
    const auto& x = std::get<0>(a.v_);
    const auto& y = std::get<0>(b.v_);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return std::get<1>(a.v_).text <=> std::get<1>(b.v_).text;
}

bool compare(const Value& a, CmpOp op, const Value& b) {
  if (a.domain() != b.domain()) {
    throw TypeError("cannot compare " + a.to_string() + " " + std::string(to_string(op)) + " " +
                    b.to_string() + ": values come from different domains");
  }
  if (a.is_constant() && is_order_op(op)) {
    throw TypeError("order comparison " + std::string(to_string(op)) + " is undefined on constants");
  }
  auto c = a <=> b;
  switch (op) {
    case CmpOp::kEq: return c == 0;
    case CmpOp::kNe: return c != 0;
    case CmpOp::kLt: return c < 0;
    case CmpOp::kLe: return c <= 0;
    case CmpOp::kGt: return c > 0;
    case CmpOp::kGe: return c >= 0;
  }
  return false;
}

}  // namespace prefrep
