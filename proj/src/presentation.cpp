#include "wmb/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace wmb {

int CategoryPresentation::arrow_index(const std::string& id) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return int(i);
  return -1;
}

bool CategoryPresentation::composable(int f, int g) const {
  return arrows[size_t(f)].src == arrows[size_t(g)].tgt;
}

bool CategoryPresentation::is_identity(int f) const {
  for (const auto& [obj, idx] : identity_of)
    if (idx == f) return true;
  return false;
}

namespace {

struct Tok {
  std::string text;
  int col;
};

std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::string("*=:").find(line[i]) != std::string::npos) {
      toks.push_back({std::string(1, line[i]), int(start) + 1});
      ++i;
      continue;
    }
    if (line.compare(i, 2, "->") == 0) {
      toks.push_back({"->", int(start) + 1});
      i += 2;
      continue;
    }
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           std::string("*=:#").find(line[i]) == std::string::npos &&
           line.compare(i, 2, "->") != 0)
      ++i;
    toks.push_back({line.substr(start, i - start), int(start) + 1});
  }
  return toks;
}

void validate(CategoryPresentation& p) {
  // identities: one per object, right src/tgt
  for (const std::string& obj : p.objects) {
    auto it = p.identity_of.find(obj);
    if (it == p.identity_of.end())
      throw ValidationError("missing identity arrow for object " + obj);
    const auto& a = p.arrows[size_t(it->second)];
    if (a.src != obj || a.tgt != obj)
      throw ValidationError("identity of " + obj + " must be an endo-arrow at " + obj);
  }
  int n = int(p.arrows.size());
  // composites declared only on composable pairs, with matching endpoints
  for (const auto& [fg, h] : p.compose) {
    auto [f, g] = fg;
    const auto& af = p.arrows[size_t(f)];
    const auto& ag = p.arrows[size_t(g)];
    const auto& ah = p.arrows[size_t(h)];
    if (af.src != ag.tgt)
      throw ValidationError("compose " + af.id + " * " + ag.id + ": arrows not composable (src " +
                            af.src + " != tgt " + ag.tgt + ")");
    if (ah.src != ag.src || ah.tgt != af.tgt)
      throw ValidationError("compose " + af.id + " * " + ag.id + " = " + ah.id +
                            ": endpoint mismatch");
  }
  // fill identity composites, then require totality on composable pairs
  for (int f = 0; f < n; ++f) {
    const auto& af = p.arrows[size_t(f)];
    int id_tgt = p.identity_of.at(af.tgt);
    int id_src = p.identity_of.at(af.src);
    auto put = [&p](int x, int y, int z, const char* what) {
      auto [it, inserted] = p.compose.emplace(std::make_pair(x, y), z);
      if (!inserted && it->second != z)
        throw ValidationError(std::string("identity composite conflicts with table (") + what +
                              " " + p.arrows[size_t(x)].id + " * " + p.arrows[size_t(y)].id + ")");
    };
    put(id_tgt, f, f, "left unit");
    put(f, id_src, f, "right unit");
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      bool comp = p.composable(f, g);
      bool has = p.compose.count({f, g}) > 0;
      if (comp && !has)
        throw ValidationError("missing composite " + p.arrows[size_t(f)].id + " * " +
                              p.arrows[size_t(g)].id);
      if (!comp && has)
        throw ValidationError("composite declared for non-composable pair " +
                              p.arrows[size_t(f)].id + " * " + p.arrows[size_t(g)].id);
    }
  // associativity on composable triples
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      if (!p.composable(f, g)) continue;
      int fg = p.compose.at({f, g});
      for (int h = 0; h < n; ++h) {
        if (!p.composable(g, h)) continue;
        int gh = p.compose.at({g, h});
        if (p.compose.at({fg, h}) != p.compose.at({f, gh}))
          throw ValidationError("non-associative composition at (" + p.arrows[size_t(f)].id +
                                ", " + p.arrows[size_t(g)].id + ", " + p.arrows[size_t(h)].id +
                                ")");
      }
    }
  // inverse consistency
  for (const auto& [f, g] : p.inverse_of) {
    const auto& af = p.arrows[size_t(f)];
    const auto& ag = p.arrows[size_t(g)];
    if (ag.src != af.tgt || ag.tgt != af.src)
      throw ValidationError("inverse " + af.id + " = " + ag.id + ": endpoint mismatch");
    if (p.compose.at({f, g}) != p.identity_of.at(af.tgt) ||
        p.compose.at({g, f}) != p.identity_of.at(af.src))
      throw ValidationError("inverse " + af.id + " = " + ag.id + ": not a two-sided inverse");
  }
}

}  // namespace

CategoryPresentation parse_presentation(const std::string& text) {
  CategoryPresentation p;
  struct PendingCompose {
    std::string f, g, h;
    int line, col;
  };
  struct PendingInverse {
    std::string f, g;
    int line, col;
  };
  struct PendingIdentity {
    std::string obj, f;
    int line, col;
  };
  std::vector<PendingCompose> composes;
  std::vector<PendingInverse> inverses;
  std::vector<PendingIdentity> identities;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto need = [&](size_t i, const char* what) -> const Tok& {
      if (i >= toks.size())
        throw SyntaxError(lineno, int(line.size()) + 1, std::string("expected ") + what);
      return toks[i];
    };
    auto expect = [&](size_t i, const char* lit) {
      const Tok& t = need(i, lit);
      if (t.text != lit)
        throw SyntaxError(lineno, t.col, std::string("expected '") + lit + "', got '" + t.text +
                                             "'");
    };
    if (kw == "category") {
      p.name = need(1, "category name").text;
    } else if (kw == "objects") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (std::find(p.objects.begin(), p.objects.end(), toks[i].text) != p.objects.end())
          throw SyntaxError(lineno, toks[i].col, "duplicate object " + toks[i].text);
        p.objects.push_back(toks[i].text);
      }
    } else if (kw == "arrow") {
      const Tok& id = need(1, "arrow id");
      expect(2, ":");
      const Tok& src = need(3, "source object");
      expect(4, "->");
      const Tok& tgt = need(5, "target object");
      if (p.arrow_index(id.text) >= 0)
        throw SyntaxError(lineno, id.col, "duplicate arrow " + id.text);
      auto known = [&](const Tok& t) {
        if (std::find(p.objects.begin(), p.objects.end(), t.text) == p.objects.end())
          throw SyntaxError(lineno, t.col, "unknown object " + t.text);
      };
      known(src);
      known(tgt);
      p.arrows.push_back({id.text, src.text, tgt.text});
    } else if (kw == "compose") {
      const Tok& f = need(1, "arrow id");
      expect(2, "*");
      const Tok& g = need(3, "arrow id");
      expect(4, "=");
      const Tok& h = need(5, "arrow id");
      composes.push_back({f.text, g.text, h.text, lineno, f.col});
    } else if (kw == "inverse") {
      const Tok& f = need(1, "arrow id");
      expect(2, "=");
      const Tok& g = need(3, "arrow id");
      inverses.push_back({f.text, g.text, lineno, f.col});
    } else if (kw == "identity") {
      const Tok& obj = need(1, "object id");
      expect(2, "=");
      const Tok& f = need(3, "arrow id");
      identities.push_back({obj.text, f.text, lineno, f.col});
    } else {
      throw SyntaxError(lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  }
  auto arrow_or_throw = [&p](const std::string& id, int line, int col) {
    int i = p.arrow_index(id);
    if (i < 0) throw SyntaxError(line, col, "unknown arrow " + id);
    return i;
  };
  for (const auto& c : composes)
    p.compose[{arrow_or_throw(c.f, c.line, c.col), arrow_or_throw(c.g, c.line, c.col)}] =
        arrow_or_throw(c.h, c.line, c.col);
  for (const auto& iv : inverses) {
    int f = arrow_or_throw(iv.f, iv.line, iv.col);
    int g = arrow_or_throw(iv.g, iv.line, iv.col);
    p.inverse_of[f] = g;
  }
  for (const auto& idn : identities) {
    if (std::find(p.objects.begin(), p.objects.end(), idn.obj) == p.objects.end())
      throw SyntaxError(idn.line, idn.col, "unknown object " + idn.obj);
    p.identity_of[idn.obj] = arrow_or_throw(idn.f, idn.line, idn.col);
  }
  validate(p);
  return p;
}

std::string render_presentation(const CategoryPresentation& p) {
  std::ostringstream os;
  os << "category " << p.name << "\n";
  os << "objects";
  for (const auto& o : p.objects) os << " " << o;
  os << "\n";
  for (const auto& a : p.arrows) os << "arrow " << a.id << " : " << a.src << " -> " << a.tgt
                                    << "\n";
  for (const auto& [obj, f] : p.identity_of)
    os << "identity " << obj << " = " << p.arrows[size_t(f)].id << "\n";
  for (const auto& [fg, h] : p.compose) {
    auto [f, g] = fg;
    // identity composites are implied; keep the rendering minimal
    if (p.is_identity(f) || p.is_identity(g)) continue;
    os << "compose " << p.arrows[size_t(f)].id << " * " << p.arrows[size_t(g)].id << " = "
       << p.arrows[size_t(h)].id << "\n";
  }
  for (const auto& [f, g] : p.inverse_of)
    os << "inverse " << p.arrows[size_t(f)].id << " = " << p.arrows[size_t(g)].id << "\n";
  return os.str();
}

}  // namespace wmb
