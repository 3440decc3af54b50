#include "whirl/triadic.hpp"

#include <charconv>

#include "whirl/checked.hpp"
#include "whirl/error.hpp"

namespace whirl {

TriadicRational TriadicRational::make(std::int64_t numerator, int exponent) {
  if (exponent < 0 || exponent > checked::kMaxExponent) {
    throw RangeError("triadic exponent out of range: " + std::to_string(exponent));
  }
  if (numerator < 0 || numerator > checked::pow3(exponent)) {
    throw RangeError("triadic numerator out of range: " + std::to_string(numerator) + "/3^" +
                     std::to_string(exponent));
  }
  while (exponent > 0 && numerator % 3 == 0) {
    numerator /= 3;
    --exponent;
  }
  if (numerator == 0) exponent = 0;
  return {numerator, exponent};
}

std::int64_t TriadicRational::scaled_to(int level) const {
  if (level < exponent_) throw RangeError("cannot scale triadic to a coarser level");
  return checked::mul(numerator_, checked::pow3(level - exponent_));
}

std::strong_ordering operator<=>(const TriadicRational& a, const TriadicRational& b) {
  const int level = std::max(a.exponent_, b.exponent_);
  return a.scaled_to(level) <=> b.scaled_to(level);
}

std::string to_label(const TriadicRational& t) {
  return std::to_string(t.numerator()) + "/" + std::to_string(checked::pow3(t.exponent()));
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed number in label '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

TriadicRational parse_triadic(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("expected p/q, got '" + std::string(text) + "'");
  const std::int64_t p = parse_int(text.substr(0, slash), text);
  std::int64_t q = parse_int(text.substr(slash + 1), text);
  int e = 0;
  while (q > 1 && q % 3 == 0) {
    q /= 3;
    ++e;
  }
  if (q != 1) throw ParseError("denominator is not a power of three in '" + std::string(text) + "'");
  try {
    return TriadicRational::make(p, e);
  } catch (const RangeError& err) {
    throw ParseError(err.what());
  }
}

std::ostream& operator<<(std::ostream& os, const TriadicRational& t) { return os << to_label(t); }

}  // namespace whirl
