#include "ariadne/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ariadne {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 1)
    throw ValidationError("vertex indices are 1-based");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw ValidationError("duplicate vertex in set");
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
  std::sort(edges_.begin(), edges_.end());
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw RangeError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("self-loop on vertex " + std::to_string(u));
  auto& cell = adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  if (cell) return;
  cell = 1;
  adj_[static_cast<std::size_t>(v - 1) * n_ + (u - 1)] = 1;
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[static_cast<std::size_t>(v - 1) * n_ + u];
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 1; v <= n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (!seen[w] && adj_[static_cast<std::size_t>(u) * n_ + w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Matrix Graph::adjacency_matrix() const {
  Matrix a(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a(i, j) = adj_[static_cast<std::size_t>(i) * n_ + j];
  return a;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  long n = -1;
  long declared_m = 0;
  std::vector<Graph::Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(line_no, "problem line must read 'p edge n m'");
      n = parse_int(tok[2], line_no);
      declared_m = parse_int(tok[3], line_no);
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (declared_m < 0) throw ParseError(line_no, "edge count must be nonnegative");
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge line before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "edge line must read 'e u v'");
      long u = parse_int(tok[1], line_no);
      long v = parse_int(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw RangeError("line " + std::to_string(line_no) + ": vertex index outside 1.." +
                         std::to_string(n));
      if (u == v)
        throw ValidationError("line " + std::to_string(line_no) + ": self-loop on vertex " +
                              std::to_string(u));
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError(line_no, "unrecognised line type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  return Graph(static_cast<int>(n), edges);
}

std::string to_dimacs(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  out << "c";
  if (!comment.empty()) out << ' ' << comment;
  out << '\n' << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

namespace {

// Depth-first search over cliques in lexicographic order; a new best is recorded only on a
// strictly larger size, so the first maximum clique found is the lexicographically least.
struct CliqueSearch {
  const Graph& g;
  std::vector<int> current;
  std::vector<int> best;

  void expand(const std::vector<int>& candidates) {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best.size()) return;
      int v = candidates[i];
      std::vector<int> next;
      next.reserve(candidates.size() - i);
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      current.push_back(v);
      expand(next);
      current.pop_back();
    }
  }
};

}  // namespace

CliqueResult max_clique_bruteforce(const Graph& g, int cap) {
  if (g.n() > cap)
    throw OracleRefused("oracle cap is " + std::to_string(cap) + " vertices, graph has " +
                        std::to_string(g.n()));
  CliqueSearch search{g, {}, {}};
  std::vector<int> all(g.n());
  for (int v = 1; v <= g.n(); ++v) all[v - 1] = v;
  search.expand(all);
  return {static_cast<int>(search.best.size()), VertexSet(search.best)};
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

VertexSet greedy_clique_within(const Graph& g, const VertexSet& s) {
  std::vector<int> clique;
  for (int v : s) {
    bool ok = std::all_of(clique.begin(), clique.end(), [&](int u) { return g.adjacent(u, v); });
    if (ok) clique.push_back(v);
  }
  return VertexSet(std::move(clique));
}

}  // namespace ariadne
