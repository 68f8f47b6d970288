#include "mgcage/io.hpp"

#include <fstream>
#include <sstream>

namespace mgcage {

namespace {

[[noreturn]] void syntax_error(int line_no, const std::string& what) {
  fail(errc::syntax, "line " + std::to_string(line_no) + ": " + what);
}

// Strict base-10 integer; rejects trailing junk so "12x" is a syntax error.
bool parse_int(const std::string& token, int& out) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  long value;
  try {
    value = std::stol(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  if (pos != token.size()) return false;
  if (value < INT32_MIN || value > INT32_MAX) return false;
  out = static_cast<int>(value);
  return true;
}

}  // namespace

MixedGraph parse_mg(std::istream& in) {
  MixedGraph g;
  bool seen_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string op;
    if (!(tokens >> op)) continue;
    if (op[0] == '#') continue;

    if (op == "mg") {
      if (seen_header) syntax_error(line_no, "duplicate header");
      std::string n_tok, extra;
      int n;
      if (!(tokens >> n_tok) || !parse_int(n_tok, n) || (tokens >> extra)) {
        syntax_error(line_no, "expected 'mg <n>'");
      }
      if (n < 0) syntax_error(line_no, "negative vertex count");
      g = MixedGraph(n);
      seen_header = true;
      continue;
    }

    if (op == "e" || op == "a") {
      if (!seen_header) syntax_error(line_no, "element before 'mg' header");
      std::string u_tok, v_tok, extra;
      int u, v;
      if (!(tokens >> u_tok >> v_tok) || !parse_int(u_tok, u) || !parse_int(v_tok, v) ||
          (tokens >> extra)) {
        syntax_error(line_no, "expected '" + op + " <u> <v>'");
      }
      try {
        if (op == "e") {
          g.add_edge(u, v);
        } else {
          g.add_arc(u, v);
        }
      } catch (const Error& e) {
        syntax_error(line_no, e.what());
      }
      continue;
    }

    syntax_error(line_no, "unknown directive '" + op + "'");
  }
  if (!seen_header) fail(errc::syntax, "missing 'mg <n>' header");
  return g;
}

MixedGraph parse_mg(const std::string& text) {
  std::istringstream in(text);
  return parse_mg(in);
}

MixedGraph load_mg(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::syntax, "cannot open " + path);
  return parse_mg(in);
}

std::string serialize_mg(const MixedGraph& g) {
  std::ostringstream out;
  out << "mg " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  for (auto [u, v] : g.arcs()) out << "a " << u << " " << v << "\n";
  return out.str();
}

void save_mg(const MixedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::syntax, "cannot open " + path + " for writing");
  out << serialize_mg(g);
}

std::string export_dot(const MixedGraph& g) {
  std::ostringstream out;
  out << "digraph mg {\n";
  for (int u = 0; u < g.order(); ++u) out << "  " << u << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -> " << v << " [dir=none];\n";
  for (auto [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mgcage
