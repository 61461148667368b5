#include "hirz/splitting.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace hirz::p1 {

SplittingType::SplittingType(std::initializer_list<Int> degrees)
    : SplittingType(std::span<const Int>(degrees.begin(), degrees.size())) {}

SplittingType::SplittingType(std::span<const Int> degrees) {
  std::vector<Run> runs;
  runs.reserve(degrees.size());
  for (Int d : degrees) runs.push_back({d, 1});
  *this = from_runs(std::move(runs));
}

SplittingType SplittingType::from_runs(std::vector<Run> runs) {
  std::map<Int, Int> merged;
  for (const Run& r : runs) {
    if (r.multiplicity < 0) throw std::invalid_argument("negative multiplicity in splitting type");
    if (r.multiplicity == 0) continue;
    auto& slot = merged[r.degree];
    slot = checked_add(slot, r.multiplicity);
  }
  SplittingType out;
  out.runs_.reserve(merged.size());
  for (auto [d, m] : merged) out.runs_.push_back({d, m});
  return out;
}

SplittingType SplittingType::balanced(Int degree, Int rank) { return from_runs({{degree, rank}}); }

Int SplittingType::rank() const {
  Int r = 0;
  for (const Run& run : runs_) r = checked_add(r, run.multiplicity);
  return r;
}

Int SplittingType::min_degree() const {
  if (runs_.empty()) throw std::logic_error("min_degree of the zero bundle");
  return runs_.front().degree;
}

Int SplittingType::max_degree() const {
  if (runs_.empty()) throw std::logic_error("max_degree of the zero bundle");
  return runs_.back().degree;
}

std::vector<Int> SplittingType::degrees(Int max_rank) const {
  if (rank() > max_rank) throw std::length_error("splitting type of rank " + std::to_string(rank()) + " is too large to expand");
  std::vector<Int> out;
  for (const Run& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.degree);
  return out;
}

Int h0(const SplittingType& s) {
  Int total = 0;
  for (const auto& r : s.runs())
    if (r.degree >= 0) total = checked_add(total, checked_mul(r.multiplicity, checked_add(r.degree, 1)));
  return total;
}

Int h1(const SplittingType& s) {
  Int total = 0;
  for (const auto& r : s.runs())
    if (r.degree <= -2) total = checked_add(total, checked_mul(r.multiplicity, checked_sub(-1, r.degree)));
  return total;
}

SplittingType twist(const SplittingType& s, Int d) {
  std::vector<SplittingType::Run> runs = s.runs();
  for (auto& r : runs) r.degree = checked_add(r.degree, d);
  return SplittingType::from_runs(std::move(runs));
}

namespace {

// Coefficient of t^m in prod_i (1 - t x^{d_i})^{-1}, one dense row per j <= m.
// Row j covers degrees j*lo .. j*hi.
SplittingType sym_power_dense(const SplittingType& s, Int m) {
  const Int lo = s.min_degree();
  const Int width = checked_sub(s.max_degree(), lo);
  const Int cells = checked_mul(checked_add(m, 1), checked_add(checked_mul(m, width), 1));
  if (cells > (Int{1} << 28)) throw std::length_error("symmetric power S^" + std::to_string(m) + " is too large to expand");

  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m + 1));
  for (Int j = 0; j <= m; ++j) rows[j].assign(static_cast<std::size_t>(j * width + 1), 0);
  rows[0][0] = 1;

  auto unit_factor = [&](Int d) {
    const Int shift = d - lo;
    for (Int j = 1; j <= m; ++j) {
      const auto& prev = rows[j - 1];
      auto& cur = rows[j];
      for (std::size_t i = 0; i < prev.size(); ++i)
        if (prev[i] != 0) cur[i + shift] = checked_add(cur[i + shift], prev[i]);
    }
  };

  // A run of multiplicity r contributes (1 - t x^d)^{-r}. Apply it factor by
  // factor when r is small, otherwise convolve with the binomial series.
  for (const auto& run : s.runs()) {
    const Int shift = run.degree - lo;
    if (run.multiplicity <= m) {
      for (Int k = 0; k < run.multiplicity; ++k) unit_factor(run.degree);
      continue;
    }
    std::vector<std::vector<Int>> next(rows.size());
    for (Int j = 0; j <= m; ++j) next[j].assign(rows[j].size(), 0);
    for (Int j = 0; j <= m; ++j) {
      for (Int k = 0; k <= j; ++k) {
        const Int c = binomial(run.multiplicity + k - 1, k);
        const auto& src = rows[j - k];
        for (std::size_t i = 0; i < src.size(); ++i)
          if (src[i] != 0) {
            auto& dst = next[j][i + k * shift];
            dst = checked_add(dst, checked_mul(c, src[i]));
          }
      }
    }
    rows = std::move(next);
  }

  std::vector<SplittingType::Run> runs;
  const auto& top = rows[m];
  for (std::size_t i = 0; i < top.size(); ++i)
    if (top[i] != 0) runs.push_back({static_cast<Int>(i) + m * lo, top[i]});
  return SplittingType::from_runs(std::move(runs));
}

}  // namespace

SplittingType sym_power(const SplittingType& s, Int m) {
  if (m < 0) throw std::invalid_argument("symmetric power exponent must be nonnegative, got " + std::to_string(m));
  if (m == 0) return SplittingType{0};
  if (s.empty()) return {};
  if (s.is_balanced()) {
    const auto& r = s.runs().front();
    return SplittingType::balanced(checked_mul(m, r.degree), binomial(checked_sub(checked_add(r.multiplicity, m), 1), m));
  }
  return sym_power_dense(s, m);
}

SplittingType frobenius_pullback(const SplittingType& s, Int q) {
  if (q < 2) throw std::invalid_argument("Frobenius power q must be >= 2, got " + std::to_string(q));
  if (!is_prime_power(q)) throw std::invalid_argument("Frobenius power q must be a prime power, got " + std::to_string(q));
  std::vector<SplittingType::Run> runs = s.runs();
  for (auto& r : runs) r.degree = checked_mul(r.degree, q);
  return SplittingType::from_runs(std::move(runs));
}

bool is_nef_split(const SplittingType& s) { return s.empty() || s.min_degree() >= 0; }

SplittingType classify_extension(Int sub_deg, Int quot_deg, bool nonsplit) {
  if (!nonsplit) return {sub_deg, quot_deg};
  const Int gap = checked_sub(sub_deg, quot_deg);
  if (h1(SplittingType{gap}) == 0) return {sub_deg, quot_deg};
  if (gap == -2) return {sub_deg + 1, quot_deg - 1};
  throw AmbiguousExtension("ambiguous splitting type: a nonsplit extension of O(" + std::to_string(quot_deg) + ") by O(" +
                           std::to_string(sub_deg) + ") is not determined by nonsplitness alone");
}

std::string format_split(const SplittingType& s) {
  std::string out = "[";
  bool first = true;
  for (Int d : s.degrees()) {
    if (!first) out += ',';
    out += std::to_string(d);
    first = false;
  }
  return out + "]";
}

std::string format_split_compact(const SplittingType& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& r : s.runs()) {
    if (!first) out += ',';
    out += std::to_string(r.degree);
    if (r.multiplicity != 1) out += "^" + std::to_string(r.multiplicity);
    first = false;
  }
  return out + "]";
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

Int parse_int(std::string_view tok, std::string_view context) {
  Int v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("cannot parse " + std::string(context) + ": bad integer '" + std::string(tok) + "'");
  return v;
}

}  // namespace

SplittingType parse_split(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("cannot parse splitting type \"" + std::string(text) + "\": expected [d1,d2,...]");
  std::string_view body(s.data() + 1, s.size() - 2);
  std::vector<Int> degrees;
  if (body.empty()) return {};
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    degrees.push_back(parse_int(body.substr(start, comma - start), "splitting type"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SplittingType(degrees);
}

Int DegreeForm::eval(Int beta, Int l) const { return checked_add(c0, checked_add(checked_mul(cb, beta), checked_mul(cl, l))); }

DegreeForm operator+(const DegreeForm& x, const DegreeForm& y) {
  return {checked_add(x.c0, y.c0), checked_add(x.cb, y.cb), checked_add(x.cl, y.cl)};
}
DegreeForm operator-(const DegreeForm& x, const DegreeForm& y) {
  return {checked_sub(x.c0, y.c0), checked_sub(x.cb, y.cb), checked_sub(x.cl, y.cl)};
}
DegreeForm operator*(Int k, const DegreeForm& x) { return {checked_mul(k, x.c0), checked_mul(k, x.cb), checked_mul(k, x.cl)}; }

// On beta >= 1, l >= 0 the form is maximized along beta, l -> infinity unless
// both slopes are <= 0, in which case the corner (1, 0) is the maximum.
bool form_is_negative_on_region(const DegreeForm& d) { return d.cl <= 0 && d.cb <= 0 && d.c0 + d.cb < 0; }

std::optional<std::pair<Int, Int>> nonnegative_witness(const DegreeForm& d) {
  const Int corner = checked_add(d.c0, d.cb);
  if (corner >= 0) return std::pair<Int, Int>{1, 0};
  auto ceil_div = [](Int num, Int den) { return (num + den - 1) / den; };
  if (d.cb > 0) return std::pair<Int, Int>{std::max<Int>(1, ceil_div(-d.c0, d.cb)), 0};
  if (d.cl > 0) return std::pair<Int, Int>{1, ceil_div(-corner, d.cl)};
  return std::nullopt;
}

std::string format_form(const DegreeForm& d) {
  return std::to_string(d.c0) + " + " + std::to_string(d.cb) + "*b + " + std::to_string(d.cl) + "*l";
}

std::string pretty_form(const DegreeForm& d) {
  std::string out;
  auto put = [&](Int c, const char* var) {
    if (c == 0) return;
    Int mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || *var == '\0') out += std::to_string(mag);
    out += var;
  };
  put(d.cb, "b");
  put(d.cl, "l");
  put(d.c0, "");
  return out.empty() ? "0" : out;
}

DegreeForm parse_form(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("cannot parse degree form: empty text");
  DegreeForm out;
  bool seen0 = false, seenb = false, seenl = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    // a term runs to the next '+' or '-' that is not a sign of a coefficient
    std::size_t end = pos + 1;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '*' && s[end - 1] != '+' && s[end - 1] != '-'))
      ++end;
    std::string tok = s.substr(pos, end - pos);
    pos = end;
    Int sign = 1;
    std::size_t i = 0;
    while (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) {
      if (tok[i] == '-') sign = -sign;
      ++i;
    }
    std::string body = tok.substr(i);
    char var = body.empty() ? '\0' : body.back();
    if (var == 'b' || var == 'l') {
      body.pop_back();
      if (!body.empty() && body.back() == '*') body.pop_back();
      Int c = body.empty() ? 1 : parse_int(body, "degree form");
      bool& seen = var == 'b' ? seenb : seenl;
      if (seen) throw std::invalid_argument("cannot parse degree form \"" + s + "\": repeated term '" + var + "'");
      seen = true;
      (var == 'b' ? out.cb : out.cl) = checked_mul(sign, c);
    } else {
      if (seen0) throw std::invalid_argument("cannot parse degree form \"" + s + "\": repeated constant term");
      seen0 = true;
      out.c0 = checked_mul(sign, parse_int(body, "degree form"));
    }
  }
  return out;
}

}  // namespace hirz::p1
