#include "cyclotome/literal.hpp"

#include <charconv>
#include <string>

#include "cyclotome/errors.hpp"

namespace cyclotome {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n') out += c;
  return out;
}

std::int64_t to_int(std::string_view s, std::string_view whole) {
  std::int64_t x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
  return x;
}

std::vector<std::pair<CycVertex, std::int64_t>> parse_entries(const CycIndex& ci, std::string_view text) {
  const std::string s = strip(text);
  std::vector<std::pair<CycVertex, std::int64_t>> out;
  if (s.empty() || s == "0") return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string_view entry(s.data() + start, end - start);
    if (entry.empty()) throw ParseError("empty entry in '" + s + "'");
    std::int64_t m = 1;
    if (auto eq = entry.rfind('='); eq != std::string_view::npos) {
      m = to_int(entry.substr(eq + 1), s);
      entry = entry.substr(0, eq);
    }
    CycVertex x;
    auto colon = entry.find(':');
    if (colon != std::string_view::npos && entry.find('(') == std::string_view::npos) {
      const auto i = to_int(entry.substr(0, colon), s);
      const auto a = to_int(entry.substr(colon + 1), s);
      if (i < 1 || i > ci.rank()) throw ParseError("vertex " + std::to_string(i) + " out of range in '" + s + "'");
      x = ci.make(static_cast<int>(i - 1), static_cast<int>(a));
    } else {
      auto named = ci.parse_name(entry);
      if (!named) throw ParseError("unknown point '" + std::string(entry) + "'");
      x = *named;
    }
    out.emplace_back(x, m);
    start = end + 1;
  }
  return out;
}

}  // namespace

VVector parse_v_literal(const CycIndex& ci, std::string_view text) {
  VVector v;
  for (const auto& [x, m] : parse_entries(ci, text)) {
    if (!ci.in_sigma_hat(x)) throw ParseError(ci.name(x) + " lies on I-hat, not on sigma(I-hat)");
    v.add(x, m);
  }
  return v;
}

WVector parse_w_literal(const CycIndex& ci, std::string_view text) {
  WVector w;
  for (const auto& [x, m] : parse_entries(ci, text)) {
    if (!ci.in_hat(x)) throw ParseError(ci.name(x) + " lies on sigma(I-hat), not on I-hat");
    w.add(x, m);
  }
  return w;
}

VWPair parse_pair_literal(const CycIndex& ci, std::string_view text) {
  VWPair p;
  bool seen_v = false, seen_w = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string part = strip(text.substr(start, end - start));
    start = end + 1;
    if (part.empty()) continue;
    if (part.rfind("v=", 0) == 0 && !seen_v) {
      p.v = parse_v_literal(ci, std::string_view(part).substr(2));
      seen_v = true;
    } else if (part.rfind("w=", 0) == 0 && !seen_w) {
      p.w = parse_w_literal(ci, std::string_view(part).substr(2));
      seen_w = true;
    } else {
      throw ParseError("expected 'v=...' or 'w=...' in pair literal, got '" + part + "'");
    }
  }
  if (!seen_v && !seen_w) throw ParseError("empty pair literal");
  return p;
}

}  // namespace cyclotome
