#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gentle/error.hpp"

namespace gentle {

struct ArrowSpec {
  std::string name;
  std::string tail;
  std::string head;
};

// A quiver given by names; validated into a Presentation together with relations.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
};

struct Arrow {
  std::string name;
  int tail = -1;
  int head = -1;
};

// A path in written order: arrows.front() is the last arrow l(p), arrows.back() is the first
// arrow f(p) traversed. An empty arrow list is the trivial path at `vertex`.
struct Path {
  int vertex = -1;
  std::vector<int> arrows;

  bool trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path& other) const;
  bool operator<(const Path& other) const;
};

struct Violation {
  ErrorKind kind;
  std::string location;
  std::string message;
};

class Presentation {
 public:
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::set<std::pair<int, int>>& relations() const { return relations_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const std::string& arrow_name(int a) const { return arrows_.at(a).name; }

  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_arrow(const std::string& name) const;

  // (x, y) is a relation: the length-two path xy (y traversed first) lies in the ideal.
  bool is_relation(int x, int y) const { return relations_.count({x, y}) > 0; }
  bool chained(int x, int y) const { return arrows_[x].tail == arrows_[y].head; }

  std::vector<int> arrows_into(int v) const;
  std::vector<int> arrows_out_of(int v) const;

  // The arrow x with xy a nonzero path (resp. with xy a relation), if any.
  std::optional<int> free_after(int y) const;
  std::optional<int> relation_after(int y) const;
  // The arrow z with yz a nonzero path (resp. with yz a relation), if any.
  std::optional<int> free_before(int y) const;
  std::optional<int> relation_before(int y) const;

  // Arrow indices sorted by arrow name.
  const std::vector<int>& arrows_by_name() const { return arrows_by_name_; }

 private:
  friend std::pair<std::optional<Presentation>, std::vector<Violation>> check_presentation(
      const Quiver&, const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::set<std::pair<int, int>> relations_;
  std::vector<int> arrows_by_name_;
};

// Checks every gentle axiom and returns either a presentation or the full list of violations.
std::pair<std::optional<Presentation>, std::vector<Violation>> check_presentation(
    const Quiver& quiver, const std::vector<std::pair<std::string, std::string>>& relations);

// Throws an Error of the first violation kind, with all violations in the message.
Presentation validate_presentation(const Quiver& quiver,
                                   const std::vector<std::pair<std::string, std::string>>& relations);

// Line format: `vertex <name>`, `arrow <name>: <tail> -> <head>`, `relation <x>*<y>`.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& file_path);
std::string render_presentation(const Presentation& pres);

int path_head(const Presentation& pres, const Path& p);
int path_tail(const Presentation& pres, const Path& p);
Path trivial_path(int vertex);
Path arrow_path(const Presentation& pres, int a);

// Returns the path if the arrows chain and avoid every relation, std::nullopt if the product
// is zero. Throws NotChained when consecutive arrows cannot be composed.
std::optional<Path> path_in_P(const Presentation& pres, const std::vector<int>& arrows);
std::optional<Path> path_in_P(const Presentation& pres, const std::string& text);

// Product pq (q traversed first) when it is a nonzero path; vertices must match.
std::optional<Path> compose(const Presentation& pres, const Path& p, const Path& q);
bool is_nonzero_path(const Presentation& pres, const std::vector<int>& arrows);

int first_arrow(const Path& p);
int last_arrow(const Path& p);

// Every cycle without relations that is not a proper power, one entry per rotation, sorted.
std::vector<Path> primitive_cycles(const Presentation& pres);

struct PathEnumeration {
  std::vector<Path> paths;
  bool finite = false;
};
PathEnumeration enumerate_P(const Presentation& pres, int max_len);

enum class PathStyle { Compact, Joined };
// Compact renders runs as powers (x^3, a*b*a); Joined lists arrows as x*x*x. Trivial paths render
// as e_<vertex>.
std::string render_path(const Presentation& pres, const Path& p, PathStyle style = PathStyle::Compact);
// Accepts `e_<v>`, `x*y*x`, `x^3*y`, and juxtaposed single-letter names such as `xxx`.
Path parse_path(const Presentation& pres, const std::string& text);

}  // namespace gentle
