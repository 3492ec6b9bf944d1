#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynmis/graph.hpp"

namespace dynmis {

enum class event_kind : std::uint8_t { insert, remove };

struct update_event {
  event_kind kind;
  vertex_id u;
  vertex_id v;

  bool operator==(const update_event&) const = default;
};

// Ordered edge-update sequence over a fixed vertex universe. Replaying the
// events from the empty graph never violates an edge precondition; the
// parser enforces this.
struct update_stream {
  std::size_t n = 0;
  std::vector<update_event> events;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline void apply_event(dynamic_graph& g, const update_event& e) {
  if (e.kind == event_kind::insert) {
    g.insert_edge(e.u, e.v);
  } else {
    g.delete_edge(e.u, e.v);
  }
}

// Replays the whole stream on a fresh graph, throwing on the first invalid
// event. Returns the final graph.
inline dynamic_graph replay_stream(const update_stream& s) {
  dynamic_graph g(s.n);
  for (const update_event& e : s.events) apply_event(g, e);
  return g;
}

namespace detail {

inline bool parse_number(std::string_view token, std::size_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// Text format, one item per line:
//   n <count>          header, required first
//   + <u> <v>          edge insertion
//   - <u> <v>          edge deletion
//   # ...              comment (ignored), blank lines ignored
// Events are validated by replay, so a stream that parses also replays.
inline update_stream parse_stream(std::string_view text) {
  update_stream s;
  bool have_header = false;
  dynamic_graph g(0);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (!have_header) {
      std::size_t n = 0;
      if (fields[0] != "n" || fields.size() != 2 ||
          !detail::parse_number(fields[1], n)) {
        throw parse_error(line_no, "expected header 'n <count>'");
      }
      s.n = n;
      g = dynamic_graph(n);
      have_header = true;
      continue;
    }
    if (fields.size() != 3 || (fields[0] != "+" && fields[0] != "-")) {
      throw parse_error(line_no, "expected '+ <u> <v>' or '- <u> <v>'");
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (!detail::parse_number(fields[1], u) ||
        !detail::parse_number(fields[2], v)) {
      throw parse_error(line_no, "malformed vertex id");
    }
    update_event e{fields[0] == "+" ? event_kind::insert : event_kind::remove,
                   static_cast<vertex_id>(u), static_cast<vertex_id>(v)};
    try {
      apply_event(g, e);
    } catch (const graph_error& err) {
      throw parse_error(line_no, err.what());
    }
    s.events.push_back(e);
  }
  if (!have_header) throw parse_error(line_no, "missing 'n <count>' header");
  return s;
}

inline std::string serialize_stream(const update_stream& s) {
  std::string out = "n " + std::to_string(s.n) + "\n";
  for (const update_event& e : s.events) {
    out += (e.kind == event_kind::insert) ? '+' : '-';
    out += ' ';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace dynmis
