#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmb/element.hpp"

namespace wmb {

struct SyntaxError : std::runtime_error {
  int line, col;
  SyntaxError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                           msg),
        line(line),
        col(col) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite category presentation in the .cat text format. Composition is
// written multiplicatively: f * g means "f after g" and is defined exactly
// when src(f) = tgt(g).
struct CategoryPresentation {
  struct Arrow {
    std::string id, src, tgt;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  // (f, g) -> f*g, stored by arrow index; includes identity composites
  std::map<std::pair<int, int>, int> compose;
  std::map<std::string, int> identity_of;  // object -> arrow index
  std::map<int, int> inverse_of;           // arrow -> arrow index

  int arrow_index(const std::string& id) const;
  bool composable(int f, int g) const;  // src(f) == tgt(g)
  bool is_identity(int f) const;
  int identity_at(const std::string& obj) const { return identity_of.at(obj); }
  bool groupoid() const { return inverse_of.size() == arrows.size(); }
};

// Parse and fully validate; throws SyntaxError or ValidationError.
CategoryPresentation parse_presentation(const std::string& text);

std::string render_presentation(const CategoryPresentation& p);

}  // namespace wmb
