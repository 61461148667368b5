#include "hirz/divisor.hpp"

#include <cctype>
#include <optional>

namespace hirz {

SurfaceContext::SurfaceContext(Int e) : e_(e) {
  if (e < 0) throw std::invalid_argument("Hirzebruch invariant e must be nonnegative, got " + std::to_string(e));
}

DivisorClass operator+(DivisorClass x, DivisorClass y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
DivisorClass operator-(DivisorClass x, DivisorClass y) { return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)}; }
DivisorClass operator-(DivisorClass x) { return {checked_sub(0, x.a), checked_sub(0, x.b)}; }
DivisorClass operator*(Int n, DivisorClass x) { return {checked_mul(n, x.a), checked_mul(n, x.b)}; }

Int intersect(const SurfaceContext& ctx, DivisorClass x, DivisorClass y) {
  Int cc = checked_mul(checked_mul(x.a, y.a), -ctx.e());
  return checked_add(cc, checked_add(checked_mul(x.a, y.b), checked_mul(y.a, x.b)));
}

DivisorClass canonical_class(const SurfaceContext& ctx) { return {-2, -(ctx.e() + 2)}; }

bool is_nef(const SurfaceContext& ctx, DivisorClass d) { return d.a >= 0 && d.b >= ctx.e() * d.a; }
bool is_ample(const SurfaceContext& ctx, DivisorClass d) { return d.a > 0 && d.b > ctx.e() * d.a; }
bool is_psef(const SurfaceContext&, DivisorClass d) { return d.a >= 0 && d.b >= 0; }
bool is_big(const SurfaceContext&, DivisorClass d) { return d.a > 0 && d.b > 0; }

namespace {

class ClassParser {
 public:
  explicit ClassParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  DivisorClass parse() {
    if (s_.empty()) throw DivisorParseError("empty divisor class");
    if (s_ == "0") return {};
    std::optional<Int> a, b;
    bool first = true;
    while (pos_ < s_.size()) {
      std::size_t start = pos_;
      Int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail(start, "expected '+' or '-'");
      }
      Int coeff = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) coeff = digits();
      if (pos_ >= s_.size()) fail(start, "term without 'C' or 'F'");
      char gen = s_[pos_];
      if (gen != 'C' && gen != 'F') fail(pos_, "expected 'C' or 'F'");
      ++pos_;
      auto& slot = gen == 'C' ? a : b;
      if (slot) fail(start, std::string("repeated term '") + gen + "'");
      slot = checked_mul(sign, coeff);
      first = false;
    }
    return {a.value_or(0), b.value_or(0)};
  }

 private:
  Int digits() {
    Int v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      try {
        v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
      } catch (const std::overflow_error&) {
        fail(start, "coefficient out of range");
      }
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& why) const {
    std::string tok = at < s_.size() ? s_.substr(at, std::min<std::size_t>(s_.size() - at, 8)) : "<end>";
    throw DivisorParseError("cannot parse divisor class \"" + s_ + "\": " + why + " at '" + tok + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string term(Int coeff, char gen, bool leading) {
  std::string out;
  if (coeff < 0)
    out += '-';
  else if (!leading)
    out += '+';
  Int mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) out += std::to_string(mag);
  out += gen;
  return out;
}

}  // namespace

DivisorClass parse_class(std::string_view text) { return ClassParser(text).parse(); }

std::string format_class(DivisorClass d) {
  if (d.a == 0 && d.b == 0) return "0";
  std::string out;
  if (d.a != 0) out += term(d.a, 'C', true);
  if (d.b != 0) out += term(d.b, 'F', out.empty());
  return out;
}

}  // namespace hirz
