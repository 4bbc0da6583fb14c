#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/embeddability.hpp"
#include "cubrecon/errors.hpp"

// Complex files:
//
//   # comment
//   ambient <n>
//   <word>          one face per line over '0', '1', '*'
//
// The reader closes the listed faces downward; the writer emits only the
// maximal faces in canonical order. In ambient 0 the single possible face
// is written as ".".
//
// Graph files:
//
//   vertices <n>
//   <u> <v>         one edge per line, 0-based

namespace cubrecon {

struct ParsedComplex {
  CubicalComplex complex;
  bool closure_added = false;  // the listed faces were not already closed
};

namespace detail {

// Content lines with comments and surrounding blanks removed, paired with
// their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.emplace_back(number, line.substr(first, last - first + 1));
  }
  return out;
}

inline std::size_t parse_header(const std::pair<std::size_t, std::string>& line, const std::string& keyword) {
  std::istringstream ss(line.second);
  std::string word;
  long long value = -1;
  std::string rest;
  if (!(ss >> word >> value) || word != keyword || value < 0 || (ss >> rest)) {
    throw InputError("line " + std::to_string(line.first) + ": expected \"" + keyword + " <n>\"");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace detail

inline ParsedComplex read_complex(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InputError("complex file is empty; expected \"ambient <n>\"");
  const std::size_t n = detail::parse_header(lines.front(), "ambient");
  if (n > CubeWord::kMaxAmbient) throw InputError("ambient dimension " + std::to_string(n) + " exceeds 64");
  std::vector<CubeWord> listed;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    const std::string word = (n == 0 && text == ".") ? std::string() : text;
    if (word.size() != n) {
      throw InputError("line " + std::to_string(number) + ": face \"" + text + "\" has length " +
                       std::to_string(text.size()) + ", expected " + std::to_string(n));
    }
    try {
      listed.push_back(CubeWord::parse(word));
    } catch (const StructuralError& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  ParsedComplex out;
  out.complex = CubicalComplex::closure(n, listed);
  std::sort(listed.begin(), listed.end());
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  out.closure_added = listed.size() != out.complex.size();
  return out;
}

inline ParsedComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  return read_complex(in);
}

inline void write_complex(std::ostream& out, const CubicalComplex& c) {
  out << "ambient " << c.ambient_dim() << '\n';
  for (const auto& f : c.maximal_faces()) out << (c.ambient_dim() == 0 ? std::string(".") : f.str()) << '\n';
}

inline std::string complex_to_string(const CubicalComplex& c) {
  std::ostringstream ss;
  write_complex(ss, c);
  return ss.str();
}

inline void write_complex_file(const std::string& path, const CubicalComplex& c) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write \"" + path + "\"");
  write_complex(out, c);
}

inline SimpleGraph read_graph(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InputError("graph file is empty; expected \"vertices <n>\"");
  const std::size_t n = detail::parse_header(lines.front(), "vertices");
  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    std::istringstream ss(text);
    long long u = -1, v = -1;
    std::string rest;
    if (!(ss >> u >> v) || (ss >> rest) || u < 0 || v < 0) {
      throw InputError("line " + std::to_string(number) + ": expected \"<u> <v>\"");
    }
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  try {
    return SimpleGraph(n, std::move(edges));
  } catch (const StructuralError& e) {
    throw InputError(std::string("invalid graph: ") + e.what());
  }
}

inline SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "vertices " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_graph_file(const std::string& path, const SimpleGraph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write \"" + path + "\"");
  write_graph(out, g);
}

}  // namespace cubrecon
