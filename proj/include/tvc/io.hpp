#pragma once

// On-disk instance format and the solution JSON.
//
//   # comment lines start with '#'
//   n m T
//   u v k t1 t2 ... tk        (m lines, 0 <= u < v < n, 1 <= t1 < ... < tk <= T)
//
// serialize(parse(x)) is the canonical form: edges lexicographic, labels
// increasing.

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"

namespace tvc {

namespace detail {

// Whitespace/newline tokenizer that remembers the line of each token and
// drops '#' comments.
class TokenReader {
public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::string& tok, int& line) {
    while (true) {
      while (pos_ < cur_.size() && is_space(cur_[pos_])) ++pos_;
      if (pos_ < cur_.size() && cur_[pos_] != '#') break;
      if (!std::getline(in_, cur_)) return false;
      ++line_;
      pos_ = 0;
    }
    std::size_t start = pos_;
    while (pos_ < cur_.size() && !is_space(cur_[pos_])) ++pos_;
    tok = cur_.substr(start, pos_ - start);
    line = line_;
    return true;
  }

  int line() const { return line_; }

private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
  std::istream& in_;
  std::string cur_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

inline long long parse_int(TokenReader& r, const char* what) {
  std::string tok;
  int line;
  if (!r.next(tok, line)) throw parse_error(r.line() + 1, std::string("missing ") + what);
  long long value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw parse_error(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
  return value;
}

} // namespace detail

inline TemporalGraph parse_instance(std::istream& in) {
  detail::TokenReader r(in);
  long long n = detail::parse_int(r, "vertex count");
  long long m = detail::parse_int(r, "edge count");
  long long T = detail::parse_int(r, "lifetime");
  if (n < 0 || m < 0 || T < 1) throw parse_error(r.line(), "malformed header");

  std::vector<std::vector<Edge>> slots(T);
  std::vector<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    long long u = detail::parse_int(r, "endpoint u");
    long long v = detail::parse_int(r, "endpoint v");
    if (u < 0 || v >= n) throw parse_error(r.line(), "endpoint out of range");
    if (u >= v) throw parse_error(r.line(), "endpoints must satisfy u < v");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    seen.push_back(e);
    long long k = detail::parse_int(r, "label count");
    if (k < 1) throw parse_error(r.line(), "edge needs at least one label");
    long long prev = 0;
    for (long long j = 0; j < k; ++j) {
      long long t = detail::parse_int(r, "label");
      if (t < 1) throw parse_error(r.line(), "label must be >= 1");
      if (t > T) throw parse_error(r.line(), "label exceeds lifetime");
      if (t == prev) throw parse_error(r.line(), "duplicate label");
      if (t < prev) throw parse_error(r.line(), "labels must be increasing");
      prev = t;
      slots[t - 1].push_back(e);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw parse_error(r.line(), "duplicate edge");
  std::string tok;
  int line;
  if (r.next(tok, line)) throw parse_error(line, "trailing content '" + tok + "'");
  return TemporalGraph(static_cast<int>(n), static_cast<int>(T), std::move(slots));
}

inline TemporalGraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline void serialize_instance(const TemporalGraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.lifetime() << '\n';
  for (const Edge& e : g.edges()) {
    const auto& lam = g.labels(e);
    out << e.first << ' ' << e.second << ' ' << lam.size();
    for (Slot t : lam) out << ' ' << t;
    out << '\n';
  }
}

inline std::string serialize_instance(const TemporalGraph& g) {
  std::ostringstream out;
  serialize_instance(g, out);
  return out.str();
}

// {"size": N, "appearances": [[v,t], ...]} sorted by (t, v)
inline nlohmann::json solution_to_json(const TemporalVertexSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : s) arr.push_back({a.vertex, a.slot});
  return {{"size", s.size()}, {"appearances", std::move(arr)}};
}

inline TemporalVertexSet solution_from_json(const nlohmann::json& j, int n, int lifetime) {
  std::vector<VertexAppearance> items;
  for (const auto& pair : j.at("appearances"))
    items.push_back({pair.at(0).get<Vertex>(), pair.at(1).get<Slot>()});
  TemporalVertexSet s(std::move(items), n, lifetime);
  if (j.contains("size") && j.at("size").get<std::size_t>() != s.size())
    throw std::invalid_argument("solution size field disagrees with appearance list");
  return s;
}

} // namespace tvc
