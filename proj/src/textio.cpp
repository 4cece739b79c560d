#include "blowcalc/textio.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace blowcalc {

namespace {

void skip_ws(const std::string& t, std::size_t& i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

long long parse_int(const std::string& t, std::size_t& i, const char* what) {
  skip_ws(t, i);
  std::size_t start = i;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(t[start]))))
    throw ParseError(std::string("expected ") + what + " at column " + std::to_string(start + 1));
  return std::stoll(t.substr(start, i - start));
}

}  // namespace

IntSeq parse_seq(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' to open a chain");
  ++i;
  IntSeq out;
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      long long x = parse_int(text, i, "integer");
      long long reps = 1;
      skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        reps = parse_int(text, i, "repetition count");
        if (reps < 0) throw ParseError("negative repetition count");
      }
      for (long long k = 0; k < reps; ++k) out.push_back(checked_weight(x));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ']' at column " + std::to_string(i + 1));
    }
  }
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing input after chain");
  return out;
}

std::string seq_to_string(const IntSeq& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

WeightedGraph parse_graph(const std::string& text) {
  WeightedGraph g;
  std::vector<std::array<long long, 2>> pending_edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "v") {
      long long id, w;
      if (!(ls >> id >> w)) fail("expected 'v <id> <weight>'");
      if (g.has_vertex(id)) fail("duplicate vertex id " + std::to_string(id));
      g.add_vertex_with_id(id, checked_weight(w));
    } else if (kind == "e") {
      long long a, b;
      if (!(ls >> a >> b)) fail("expected 'e <id> <id>'");
      pending_edges.push_back({a, b});
    } else {
      fail("unknown directive '" + kind + "'");
    }
    std::string rest;
    if (ls >> rest) fail("trailing tokens");
  }
  for (auto [a, b] : pending_edges) {
    if (!g.has_vertex(a) || !g.has_vertex(b))
      throw ParseError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") references a missing vertex");
    g.add_edge(a, b);
  }
  return g;
}

std::string graph_to_string(const WeightedGraph& g) {
  std::ostringstream os;
  for (const auto& [v, w] : g.vertices()) os << "v " << v << ' ' << w << '\n';
  for (const auto& [a, b] : g.edges()) os << "e " << a << ' ' << b << '\n';
  return os.str();
}

ParsedInput parse_input(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '[') return parse_seq(text);
  return parse_graph(text);
}

}  // namespace blowcalc
