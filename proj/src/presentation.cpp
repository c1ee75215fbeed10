#include "gentle/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace gentle {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool valid_vertex_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

bool valid_arrow_name(const std::string& s) {
  if (!valid_vertex_name(s) || s == "inf") return false;
  return std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_';
}

}  // namespace

bool Path::operator==(const Path& other) const {
  if (arrows.empty() || other.arrows.empty())
    return arrows.empty() && other.arrows.empty() && vertex == other.vertex;
  return arrows == other.arrows;
}

bool Path::operator<(const Path& other) const {
  if (arrows.size() != other.arrows.size()) return arrows.size() < other.arrows.size();
  if (arrows.empty()) return vertex < other.vertex;
  return arrows < other.arrows;
}

std::optional<int> Presentation::find_vertex(const std::string& name) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v] == name) return v;
  return std::nullopt;
}

std::optional<int> Presentation::find_arrow(const std::string& name) const {
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

std::vector<int> Presentation::arrows_into(int v) const {
  std::vector<int> out;
  for (int a : arrows_by_name_)
    if (arrows_[a].head == v) out.push_back(a);
  return out;
}

std::vector<int> Presentation::arrows_out_of(int v) const {
  std::vector<int> out;
  for (int a : arrows_by_name_)
    if (arrows_[a].tail == v) out.push_back(a);
  return out;
}

std::optional<int> Presentation::free_after(int y) const {
  for (int x : arrows_out_of(arrows_[y].head))
    if (!is_relation(x, y)) return x;
  return std::nullopt;
}

std::optional<int> Presentation::relation_after(int y) const {
  for (int x : arrows_out_of(arrows_[y].head))
    if (is_relation(x, y)) return x;
  return std::nullopt;
}

std::optional<int> Presentation::free_before(int y) const {
  for (int z : arrows_into(arrows_[y].tail))
    if (!is_relation(y, z)) return z;
  return std::nullopt;
}

std::optional<int> Presentation::relation_before(int y) const {
  for (int z : arrows_into(arrows_[y].tail))
    if (is_relation(y, z)) return z;
  return std::nullopt;
}

std::pair<std::optional<Presentation>, std::vector<Violation>> check_presentation(
    const Quiver& quiver, const std::vector<std::pair<std::string, std::string>>& relations) {
  std::vector<Violation> violations;
  Presentation pres;
  std::map<std::string, int> vindex, aindex;
  for (const auto& v : quiver.vertices) {
    if (!valid_vertex_name(v))
      violations.push_back({ErrorKind::Parse, v, "invalid vertex name '" + v + "'"});
    if (vindex.count(v)) {
      violations.push_back({ErrorKind::Parse, v, "duplicate vertex '" + v + "'"});
      continue;
    }
    vindex[v] = static_cast<int>(pres.vertices_.size());
    pres.vertices_.push_back(v);
  }
  for (const auto& a : quiver.arrows) {
    if (!valid_arrow_name(a.name))
      violations.push_back({ErrorKind::Parse, a.name, "invalid arrow name '" + a.name + "'"});
    if (aindex.count(a.name)) {
      violations.push_back({ErrorKind::Parse, a.name, "duplicate arrow '" + a.name + "'"});
      continue;
    }
    if (!vindex.count(a.tail) || !vindex.count(a.head)) {
      violations.push_back({ErrorKind::Parse, a.name, "arrow '" + a.name + "' uses an unknown vertex"});
      continue;
    }
    aindex[a.name] = static_cast<int>(pres.arrows_.size());
    pres.arrows_.push_back({a.name, vindex[a.tail], vindex[a.head]});
  }
  for (const auto& [x, y] : relations) {
    if (!aindex.count(x) || !aindex.count(y)) {
      violations.push_back({ErrorKind::Parse, x + "*" + y, "relation uses an unknown arrow"});
      continue;
    }
    int xi = aindex[x], yi = aindex[y];
    if (pres.arrows_[xi].tail != pres.arrows_[yi].head) {
      violations.push_back({ErrorKind::NonComposableRelation, x + "*" + y,
                            "relation " + x + "*" + y + " is not composable: t(" + x + ") != h(" + y + ")"});
      continue;
    }
    pres.relations_.insert({xi, yi});
  }
  pres.arrows_by_name_.resize(pres.arrows_.size());
  for (std::size_t i = 0; i < pres.arrows_.size(); ++i) pres.arrows_by_name_[i] = static_cast<int>(i);
  std::sort(pres.arrows_by_name_.begin(), pres.arrows_by_name_.end(),
            [&](int a, int b) { return pres.arrows_[a].name < pres.arrows_[b].name; });

  std::vector<int> vorder(pres.vertices_.size());
  for (std::size_t i = 0; i < vorder.size(); ++i) vorder[i] = static_cast<int>(i);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) { return pres.vertices_[a] < pres.vertices_[b]; });
  for (int v : vorder) {
    auto in = pres.arrows_into(v), out = pres.arrows_out_of(v);
    if (in.size() > 2)
      violations.push_back({ErrorKind::TooManyArrowsAtVertex, pres.vertices_[v],
                            "vertex " + pres.vertices_[v] + " has " + std::to_string(in.size()) + " incoming arrows"});
    if (out.size() > 2)
      violations.push_back({ErrorKind::TooManyArrowsAtVertex, pres.vertices_[v],
                            "vertex " + pres.vertices_[v] + " has " + std::to_string(out.size()) + " outgoing arrows"});
  }
  for (int y : pres.arrows_by_name_) {
    const std::string& yn = pres.arrows_[y].name;
    int free_after = 0, rel_after = 0, free_before = 0, rel_before = 0;
    for (int x = 0; x < pres.num_arrows(); ++x) {
      if (pres.arrows_[x].tail == pres.arrows_[y].head) (pres.is_relation(x, y) ? rel_after : free_after)++;
      if (pres.arrows_[y].tail == pres.arrows_[x].head) (pres.is_relation(y, x) ? rel_before : free_before)++;
    }
    if (free_after > 1)
      violations.push_back({ErrorKind::GentleCondition2Violated, yn,
                            "arrow " + yn + ": " + std::to_string(free_after) + " arrows x with x*" + yn + " nonzero"});
    if (free_before > 1)
      violations.push_back({ErrorKind::GentleCondition2Violated, yn,
                            "arrow " + yn + ": " + std::to_string(free_before) + " arrows z with " + yn + "*z nonzero"});
    if (rel_after > 1)
      violations.push_back({ErrorKind::GentleCondition3Violated, yn,
                            "arrow " + yn + ": " + std::to_string(rel_after) + " arrows x with x*" + yn + " a relation"});
    if (rel_before > 1)
      violations.push_back({ErrorKind::GentleCondition3Violated, yn,
                            "arrow " + yn + ": " + std::to_string(rel_before) + " arrows z with " + yn + "*z a relation"});
  }
  if (!violations.empty()) return {std::nullopt, violations};
  return {pres, violations};
}

Presentation validate_presentation(const Quiver& quiver,
                                   const std::vector<std::pair<std::string, std::string>>& relations) {
  auto [pres, violations] = check_presentation(quiver, relations);
  if (pres) return *pres;
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += std::string(error_kind_name(v.kind)) + " at " + v.location + ": " + v.message;
  }
  throw Error(violations.front().kind, msg);
}

Presentation parse_presentation(const std::string& text) {
  Quiver q;
  std::vector<std::pair<std::string, std::string>> rels;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    std::size_t sp = line.find_first_of(" \t");
    std::string kw = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (kw == "vertex") {
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) bad("expected `vertex <name>`");
      q.vertices.push_back(rest);
    } else if (kw == "arrow") {
      std::size_t colon = rest.find(':');
      std::size_t arrow = rest.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        bad("expected `arrow <name>: <tail> -> <head>`");
      std::string name = trim(rest.substr(0, colon));
      std::string tail = trim(rest.substr(colon + 1, arrow - colon - 1));
      std::string head = trim(rest.substr(arrow + 2));
      if (name.empty() || tail.empty() || head.empty()) bad("expected `arrow <name>: <tail> -> <head>`");
      q.arrows.push_back({name, tail, head});
    } else if (kw == "relation") {
      std::size_t star = rest.find('*');
      if (star == std::string::npos) bad("expected `relation <x>*<y>`");
      std::string x = trim(rest.substr(0, star)), y = trim(rest.substr(star + 1));
      if (x.empty() || y.empty() || y.find('*') != std::string::npos) bad("expected `relation <x>*<y>`");
      rels.push_back({x, y});
    } else {
      bad("unknown keyword '" + kw + "'");
    }
  }
  return validate_presentation(q, rels);
}

Presentation load_presentation(const std::string& file_path) {
  std::ifstream f(file_path);
  if (!f) fail(ErrorKind::Parse, "cannot open presentation file '" + file_path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

std::string render_presentation(const Presentation& pres) {
  std::ostringstream out;
  for (const auto& v : pres.vertices()) out << "vertex " << v << "\n";
  for (const auto& a : pres.arrows())
    out << "arrow " << a.name << ": " << pres.vertex_name(a.tail) << " -> " << pres.vertex_name(a.head) << "\n";
  for (const auto& [x, y] : pres.relations()) out << "relation " << pres.arrow_name(x) << "*" << pres.arrow_name(y) << "\n";
  return out.str();
}

int path_head(const Presentation& pres, const Path& p) {
  return p.trivial() ? p.vertex : pres.arrow(p.arrows.front()).head;
}

int path_tail(const Presentation& pres, const Path& p) {
  return p.trivial() ? p.vertex : pres.arrow(p.arrows.back()).tail;
}

Path trivial_path(int vertex) { return Path{vertex, {}}; }

Path arrow_path(const Presentation& pres, int a) { return Path{pres.arrow(a).head, {a}}; }

bool is_nonzero_path(const Presentation& pres, const std::vector<int>& arrows) {
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k) {
    if (!pres.chained(arrows[k], arrows[k + 1]) || pres.is_relation(arrows[k], arrows[k + 1])) return false;
  }
  return !arrows.empty();
}

std::optional<Path> path_in_P(const Presentation& pres, const std::vector<int>& arrows) {
  if (arrows.empty()) fail(ErrorKind::TrivialPath, "path_in_P expects a nonempty arrow sequence");
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (!pres.chained(arrows[k], arrows[k + 1]))
      fail(ErrorKind::NotChained, "arrows " + pres.arrow_name(arrows[k]) + " and " + pres.arrow_name(arrows[k + 1]) +
                                      " at positions " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                                      " do not compose");
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (pres.is_relation(arrows[k], arrows[k + 1])) return std::nullopt;
  return Path{pres.arrow(arrows.front()).head, arrows};
}

std::optional<Path> path_in_P(const Presentation& pres, const std::string& text) {
  Path p = parse_path(pres, text);
  if (p.trivial()) fail(ErrorKind::TrivialPath, "path_in_P expects a nonempty arrow sequence");
  return path_in_P(pres, p.arrows);
}

std::optional<Path> compose(const Presentation& pres, const Path& p, const Path& q) {
  if (path_tail(pres, p) != path_head(pres, q)) return std::nullopt;
  if (p.trivial()) return q;
  if (q.trivial()) return p;
  if (pres.is_relation(p.arrows.back(), q.arrows.front())) return std::nullopt;
  Path r = p;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

int first_arrow(const Path& p) {
  if (p.trivial()) fail(ErrorKind::TrivialPath, "first arrow of a trivial path");
  return p.arrows.back();
}

int last_arrow(const Path& p) {
  if (p.trivial()) fail(ErrorKind::TrivialPath, "last arrow of a trivial path");
  return p.arrows.front();
}

std::vector<Path> primitive_cycles(const Presentation& pres) {
  std::vector<Path> out;
  for (int start = 0; start < pres.num_arrows(); ++start) {
    std::vector<int> traversal{start};
    int cur = start;
    bool closed = false;
    for (int step = 0; step < pres.num_arrows(); ++step) {
      auto nx = pres.free_after(cur);
      if (!nx) break;
      if (*nx == start) {
        closed = true;
        break;
      }
      if (std::find(traversal.begin(), traversal.end(), *nx) != traversal.end()) break;
      traversal.push_back(*nx);
      cur = *nx;
    }
    if (!closed) continue;
    std::vector<int> written(traversal.rbegin(), traversal.rend());
    out.push_back(Path{pres.arrow(written.front()).head, written});
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return render_path(pres, a, PathStyle::Joined) < render_path(pres, b, PathStyle::Joined);
  });
  return out;
}

PathEnumeration enumerate_P(const Presentation& pres, int max_len) {
  PathEnumeration result;
  result.finite = primitive_cycles(pres).empty();
  std::vector<Path> layer;
  for (int a : pres.arrows_by_name()) layer.push_back(arrow_path(pres, a));
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::sort(layer.begin(), layer.end(), [&](const Path& a, const Path& b) {
      return render_path(pres, a, PathStyle::Joined) < render_path(pres, b, PathStyle::Joined);
    });
    result.paths.insert(result.paths.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const Path& p : layer) {
      auto x = pres.free_after(p.arrows.front());
      if (!x) continue;
      Path q = p;
      q.arrows.insert(q.arrows.begin(), *x);
      q.vertex = pres.arrow(*x).head;
      next.push_back(q);
    }
    layer = std::move(next);
  }
  return result;
}

std::string render_path(const Presentation& pres, const Path& p, PathStyle style) {
  if (p.trivial()) return "e_" + pres.vertex_name(p.vertex);
  std::string out;
  if (style == PathStyle::Joined) {
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
      if (k) out += "*";
      out += pres.arrow_name(p.arrows[k]);
    }
    return out;
  }
  std::size_t k = 0;
  while (k < p.arrows.size()) {
    std::size_t j = k;
    while (j < p.arrows.size() && p.arrows[j] == p.arrows[k]) ++j;
    if (!out.empty()) out += "*";
    out += pres.arrow_name(p.arrows[k]);
    if (j - k > 1) out += "^" + std::to_string(j - k);
    k = j;
  }
  return out;
}

Path parse_path(const Presentation& pres, const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) fail(ErrorKind::Parse, "empty path");
  if (text.rfind("e_", 0) == 0) {
    auto v = pres.find_vertex(text.substr(2));
    if (!v) fail(ErrorKind::Parse, "unknown vertex in trivial path '" + text + "'");
    return trivial_path(*v);
  }
  std::vector<int> arrows;
  auto add_factor = [&](const std::string& factor) {
    std::string name = factor;
    long power = 1;
    std::size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      std::string exp = factor.substr(caret + 1);
      if (exp.empty() || !std::all_of(exp.begin(), exp.end(), ::isdigit))
        fail(ErrorKind::Parse, "bad exponent in path factor '" + factor + "'");
      power = std::stol(exp);
      if (power < 1) fail(ErrorKind::Parse, "path exponent must be positive in '" + factor + "'");
    }
    auto a = pres.find_arrow(name);
    if (a) {
      for (long k = 0; k < power; ++k) arrows.push_back(*a);
      return;
    }
    std::vector<int> letters;
    for (char c : name) {
      auto b = pres.find_arrow(std::string(1, c));
      if (!b) fail(ErrorKind::Parse, "unknown arrow '" + name + "' in path '" + text + "'");
      letters.push_back(*b);
    }
    for (long k = 0; k < power; ++k) arrows.insert(arrows.end(), letters.begin(), letters.end());
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string factor = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (factor.empty()) fail(ErrorKind::Parse, "empty factor in path '" + text + "'");
    add_factor(factor);
    if (star == std::string::npos) break;
    start = star + 1;
  }
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (!pres.chained(arrows[k], arrows[k + 1]))
      fail(ErrorKind::NotChained, "arrows " + pres.arrow_name(arrows[k]) + " and " + pres.arrow_name(arrows[k + 1]) +
                                      " do not compose in '" + text + "'");
  return Path{pres.arrow(arrows.front()).head, arrows};
}

}  // namespace gentle
