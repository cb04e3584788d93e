#include "wmb/catalog.hpp"

#include <map>

namespace wmb {

namespace {

// Basis-diagonal Mult2 from a key-pair predicate: keeps the terms where the
// predicate holds, kills the rest.
Mult2 diagonal_mult2(std::function<bool(Key, Key)> keep) {
  auto act = [keep](const El2& x) {
    El2 r;
    for (const auto& [k, v] : x.c)
      if (keep(k[0], k[1])) r.add(k, v);
    return r;
  };
  return {act, act};
}

}  // namespace

Instance span_wmb(const CategoryPresentation& cat) {
  auto pc = std::make_shared<CategoryPresentation>(cat);
  int n = int(pc->arrows.size());
  std::vector<std::string> labels;
  labels.reserve(size_t(n));
  for (const auto& a : pc->arrows) labels.push_back(a.id);
  auto prod = [pc](Key i, Key j) {
    if (!pc->composable(int(i), int(j))) return El1{};
    return el1(pc->compose.at({int(i), int(j)}));
  };
  Instance w;
  w.name = pc->name;
  w.A = Algebra::dense(std::move(labels), prod);
  Algebra A = w.A;
  // Delta(a) = a (x) a
  w.tm.t1 = [A](Key a, Key b) { return tens(el1(a), A.basis_product(a, b)); };
  w.tm.t2 = [A](Key a, Key b) { return tens(A.basis_product(a, b), el1(b)); };
  w.tm.t3 = [A](Key a, Key b) { return tens(el1(a), A.basis_product(b, a)); };
  w.tm.t4 = [A](Key a, Key b) { return tens(A.basis_product(b, a), el1(b)); };
  w.counit = [](Key) { return Rat(1); };
  auto same_tgt = [pc](Key a, Key b) { return pc->arrows[size_t(a)].tgt == pc->arrows[size_t(b)].tgt; };
  auto same_src = [pc](Key a, Key b) { return pc->arrows[size_t(a)].src == pc->arrows[size_t(b)].src; };
  w.E = {diagonal_mult2(same_tgt).lft, diagonal_mult2(same_src).rgt};
  w.regular = true;
  w.group_like_l = [pc, same_tgt](Key a, Key b) -> std::optional<Key> {
    if (!same_tgt(a, b)) return std::nullopt;
    return Key(pc->identity_of.at(pc->arrows[size_t(a)].tgt));
  };
  w.group_like_r = [pc, same_src](Key a, Key b) -> std::optional<Key> {
    if (!same_src(a, b)) return std::nullopt;
    return Key(pc->identity_of.at(pc->arrows[size_t(a)].src));
  };
  w.local_decompose = [pc](Key a) {
    return el2(pc->identity_of.at(pc->arrows[size_t(a)].tgt), a);
  };
  if (pc->groupoid()) {
    Algebra alg = w.A;
    w.declared_antipode = [pc, alg](Key a) {
      return mult1_from_element(alg, el1(pc->inverse_of.at(int(a))));
    };
  }
  w.decl_left_full = true;
  w.decl_right_full = true;
  w.decl_mult_bialgebra = (pc->objects.size() == 1);
  return w;
}

Instance functional_wmb(const CategoryPresentation& cat) {
  auto pc = std::make_shared<CategoryPresentation>(cat);
  int n = int(pc->arrows.size());
  std::vector<std::string> labels;
  labels.reserve(size_t(n));
  for (const auto& a : pc->arrows) labels.push_back("d_" + a.id);
  auto prod = [](Key i, Key j) { return i == j ? el1(i) : El1{}; };
  Instance w;
  w.name = "F" + pc->name;
  w.A = Algebra::dense(std::move(labels), prod);
  // Delta(d_a) = sum_{pq=a} d_p (x) d_q; the T-maps pick out one leg
  w.tm.t1 = [pc, n](Key a, Key b) {
    El2 r;  // {c : cb = a}
    for (int c = 0; c < n; ++c)
      if (pc->composable(c, int(b)) && pc->compose.at({c, int(b)}) == int(a)) r.add({c, b}, 1);
    return r;
  };
  w.tm.t2 = [pc, n](Key a, Key b) {
    El2 r;  // {c : ac = b}
    for (int c = 0; c < n; ++c)
      if (pc->composable(int(a), c) && pc->compose.at({int(a), c}) == int(b)) r.add({a, c}, 1);
    return r;
  };
  w.tm.t3 = w.tm.t1;  // pointwise product is commutative
  w.tm.t4 = w.tm.t2;
  w.counit = [pc](Key a) { return Rat(pc->is_identity(int(a)) ? 1 : 0); };
  auto comp = [pc](Key p, Key q) { return pc->composable(int(p), int(q)); };
  w.E = diagonal_mult2(comp);
  w.regular = true;
  w.group_like_l = [pc, comp](Key p, Key q) -> std::optional<Key> {
    if (!comp(p, q)) return std::nullopt;
    return Key(pc->compose.at({int(p), int(q)}));
  };
  w.group_like_r = w.group_like_l;
  w.local_decompose = [](Key a) { return el2(a, a); };
  if (pc->groupoid()) {
    Algebra alg = w.A;
    w.declared_antipode = [pc, alg](Key a) {
      return mult1_from_element(alg, el1(pc->inverse_of.at(int(a))));
    };
  }
  w.decl_left_full = true;
  w.decl_right_full = true;
  w.decl_mult_bialgebra = (pc->objects.size() == 1);
  return w;
}

Instance from_unital_weak_bialgebra(std::string name, std::vector<std::string> labels,
                                    std::function<El1(Key, Key)> prod, std::vector<El2> delta,
                                    std::vector<Rat> eps, El1 unit) {
  Instance w;
  w.name = std::move(name);
  w.A = Algebra::dense(std::move(labels), std::move(prod));
  int n = w.A.dim();
  if (int(delta.size()) != n || int(eps.size()) != n)
    throw ValidationError("from_unital_weak_bialgebra: table sizes do not match dim");
  const Algebra& A = w.A;
  for (int i = 0; i < n; ++i) {
    if (!(A.mul(unit, el1(i)) == el1(i)) || !(A.mul(el1(i), unit) == el1(i)))
      throw ValidationError("from_unital_weak_bialgebra: declared unit is not a unit");
  }
  // Delta must be multiplicative for the T-maps to define a comultiplication
  auto delta_lin = [&A, &delta, n](const El1& x) {
    El2 r;
    for (const auto& [k, v] : x.c) {
      El2 t = delta[size_t(k[0])];
      t *= v;
      r += t;
    }
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      El2 lhs = delta_lin(A.basis_product(i, j));
      El2 rhs = A.mul2(delta[size_t(i)], delta[size_t(j)]);
      if (!(lhs == rhs))
        throw ValidationError("from_unital_weak_bialgebra: Delta is not multiplicative");
    }
  El2 E = delta_lin(unit);
  if (!(A.mul2(E, E) == E))
    throw ValidationError("from_unital_weak_bialgebra: Delta(1) is not idempotent");
  auto deltas = std::make_shared<std::vector<El2>>(std::move(delta));
  Algebra Ac = w.A;
  w.tm.t1 = [Ac, deltas](Key a, Key b) {
    return Ac.leg_mul2((*deltas)[size_t(a)], 1, el1(b), false);
  };
  w.tm.t2 = [Ac, deltas](Key a, Key b) {
    return Ac.leg_mul2((*deltas)[size_t(b)], 0, el1(a), true);
  };
  w.tm.t3 = [Ac, deltas](Key a, Key b) {
    return Ac.leg_mul2((*deltas)[size_t(a)], 1, el1(b), true);
  };
  w.tm.t4 = [Ac, deltas](Key a, Key b) {
    return Ac.leg_mul2((*deltas)[size_t(b)], 0, el1(a), false);
  };
  auto epsv = std::make_shared<std::vector<Rat>>(std::move(eps));
  w.counit = [epsv](Key a) { return (*epsv)[size_t(a)]; };
  w.E = mult2_from_element(w.A, E);
  w.regular = true;
  w.local_decompose = [unit](Key a) { return tens(unit, el1(a)); };
  return w;
}

Instance direct_sum(std::string name, const std::vector<Instance>& parts) {
  if (parts.empty()) throw ValidationError("direct_sum: at least one summand required");
  for (const auto& p : parts)
    if (!p.is_dense()) throw UnsupportedBackend("direct_sum: DenseFinite summands required");
  auto ps = std::make_shared<std::vector<Instance>>(parts);
  std::vector<Key> offset;
  std::vector<std::string> labels;
  Key off = 0;
  for (size_t j = 0; j < ps->size(); ++j) {
    offset.push_back(off);
    for (int i = 0; i < (*ps)[j].A.dim(); ++i)
      labels.push_back(std::to_string(j) + ":" + (*ps)[j].A.label(i));
    off += (*ps)[j].A.dim();
  }
  auto offs = std::make_shared<std::vector<Key>>(offset);
  Key total = off;
  auto comp_of = [offs](Key k) {
    size_t j = offs->size() - 1;
    while ((*offs)[j] > k) --j;
    return j;
  };
  auto shift1 = [](const El1& x, Key d) {
    El1 r;
    for (const auto& [k, v] : x.c) r.add({k[0] + d}, v);
    return r;
  };
  auto shift2 = [](const El2& x, Key d) {
    El2 r;
    for (const auto& [k, v] : x.c) r.add({k[0] + d, k[1] + d}, v);
    return r;
  };
  auto prod = [ps, offs, comp_of, shift1](Key a, Key b) {
    size_t ja = comp_of(a), jb = comp_of(b);
    if (ja != jb) return El1{};
    return shift1((*ps)[ja].A.basis_product(a - (*offs)[ja], b - (*offs)[jb]), (*offs)[ja]);
  };
  Instance w;
  w.name = std::move(name);
  w.A = Algebra::dense(std::move(labels), prod);
  auto tmap = [ps, offs, comp_of, shift2](int i, Key a, Key b) {
    size_t ja = comp_of(a), jb = comp_of(b);
    if (ja != jb) return El2{};
    return shift2((*ps)[ja].t(i, a - (*offs)[ja], b - (*offs)[jb]), (*offs)[ja]);
  };
  w.tm.t1 = [tmap](Key a, Key b) { return tmap(1, a, b); };
  w.tm.t2 = [tmap](Key a, Key b) { return tmap(2, a, b); };
  bool regular = true;
  for (const auto& p : *ps) regular = regular && p.regular;
  if (regular) {
    w.tm.t3 = [tmap](Key a, Key b) { return tmap(3, a, b); };
    w.tm.t4 = [tmap](Key a, Key b) { return tmap(4, a, b); };
  }
  w.regular = regular;
  w.counit = [ps, offs, comp_of](Key a) {
    size_t j = comp_of(a);
    return (*ps)[j].counit(a - (*offs)[j]);
  };
  auto eact = [ps, offs, comp_of, shift2](const El2& x, bool left) {
    El2 r;
    for (const auto& [k, v] : x.c) {
      size_t j0 = comp_of(k[0]), j1 = comp_of(k[1]);
      if (j0 != j1) continue;  // E lives in prod_j M(A_j (x) A_j)
      El2 one = el2(k[0] - (*offs)[j0], k[1] - (*offs)[j0]);
      one *= v;
      El2 img = left ? (*ps)[j0].E.lft(one) : (*ps)[j0].E.rgt(one);
      r += shift2(img, (*offs)[j0]);
    }
    return r;
  };
  w.E = {[eact](const El2& x) { return eact(x, true); },
         [eact](const El2& x) { return eact(x, false); }};
  (void)total;
  bool all_gl = true, all_s = true, all_ld = true;
  for (const auto& p : *ps) {
    all_gl = all_gl && p.group_like_l && p.group_like_r;
    all_s = all_s && bool(p.declared_antipode);
    all_ld = all_ld && bool(p.local_decompose);
  }
  if (all_ld) {
    w.local_decompose = [ps, offs, comp_of, shift2](Key a) {
      size_t j = comp_of(a);
      return shift2((*ps)[j].local_decompose(a - (*offs)[j]), (*offs)[j]);
    };
  }
  if (all_gl) {
    auto gl = [ps, offs, comp_of](Key a, Key b, bool left) -> std::optional<Key> {
      size_t ja = comp_of(a), jb = comp_of(b);
      if (ja != jb) return std::nullopt;
      auto& part = (*ps)[ja];
      auto r = left ? part.group_like_l(a - (*offs)[ja], b - (*offs)[ja])
                    : part.group_like_r(a - (*offs)[ja], b - (*offs)[ja]);
      if (!r) return std::nullopt;
      return *r + (*offs)[ja];
    };
    w.group_like_l = [gl](Key a, Key b) { return gl(a, b, true); };
    w.group_like_r = [gl](Key a, Key b) { return gl(a, b, false); };
  }
  if (all_s) {
    auto shift1c = shift1;
    w.declared_antipode = [ps, offs, comp_of, shift1c](Key a) {
      size_t j = comp_of(a);
      Mult1 sj = (*ps)[j].declared_antipode(a - (*offs)[j]);
      Key d = (*offs)[j];
      auto act = [ps, offs, comp_of, shift1c, sj, j, d](const El1& x, bool left) {
        El1 r;
        for (const auto& [k, v] : x.c) {
          if (comp_of(k[0]) != j) continue;
          El1 one = el1(k[0] - d);
          one *= v;
          r += shift1c(left ? sj.lft(one) : sj.rgt(one), d);
        }
        return r;
      };
      return Mult1{[act](const El1& x) { return act(x, true); },
                   [act](const El1& x) { return act(x, false); }};
    };
  }
  bool lf = true, rf = true, mb = true;
  for (const auto& p : *ps) {
    lf = lf && p.decl_left_full.value_or(true);
    rf = rf && p.decl_right_full.value_or(true);
    mb = mb && p.decl_mult_bialgebra.value_or(false);
  }
  w.decl_left_full = lf;
  w.decl_right_full = rf;
  w.decl_mult_bialgebra = mb;
  return w;
}

namespace {

void spot_check_fibers(const LazyGroupoidSpec& g) {
  // the fiber witnesses must agree with composition on a small window
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      Key a = g.enumerate(i), b = g.enumerate(j);
      for (Key c : g.left_fiber(a, b)) {
        if (!g.composable(c, a) || g.compose(c, a) != b)
          throw FiberNotFinite("left fiber witness fails at (" + g.label(a) + ", " + g.label(b) +
                               ")");
      }
      for (Key c : g.right_fiber(a, b)) {
        if (!g.composable(a, c) || g.compose(a, c) != b)
          throw FiberNotFinite("right fiber witness fails at (" + g.label(a) + ", " + g.label(b) +
                               ")");
      }
      if (g.composable(a, b)) {
        Key ab = g.compose(a, b);
        auto lf = g.left_fiber(b, ab);
        if (std::find(lf.begin(), lf.end(), a) == lf.end())
          throw FiberNotFinite("left fiber misses a witness at (" + g.label(a) + ", " +
                               g.label(b) + ")");
      }
    }
}

}  // namespace

Instance lazy_span(const LazyGroupoidSpec& g, std::string name) {
  auto gs = std::make_shared<LazyGroupoidSpec>(g);
  Instance w;
  w.name = std::move(name);
  auto prod = [gs](Key a, Key b) {
    if (!gs->composable(a, b)) return El1{};
    return el1(gs->compose(a, b));
  };
  w.A = Algebra::lazy(prod, gs->enumerate, gs->label);
  Algebra A = w.A;
  w.tm.t1 = [A](Key a, Key b) { return tens(el1(a), A.basis_product(a, b)); };
  w.tm.t2 = [A](Key a, Key b) { return tens(A.basis_product(a, b), el1(b)); };
  w.tm.t3 = [A](Key a, Key b) { return tens(el1(a), A.basis_product(b, a)); };
  w.tm.t4 = [A](Key a, Key b) { return tens(A.basis_product(b, a), el1(b)); };
  w.counit = [](Key) { return Rat(1); };
  auto same_tgt = [gs](Key a, Key b) { return gs->id_at_tgt(a) == gs->id_at_tgt(b); };
  auto same_src = [gs](Key a, Key b) { return gs->id_at_src(a) == gs->id_at_src(b); };
  w.E = {diagonal_mult2(same_tgt).lft, diagonal_mult2(same_src).rgt};
  w.regular = true;
  w.group_like_l = [gs, same_tgt](Key a, Key b) -> std::optional<Key> {
    if (!same_tgt(a, b)) return std::nullopt;
    return gs->id_at_tgt(a);
  };
  w.group_like_r = [gs, same_src](Key a, Key b) -> std::optional<Key> {
    if (!same_src(a, b)) return std::nullopt;
    return gs->id_at_src(a);
  };
  w.local_decompose = [gs](Key a) { return el2(gs->id_at_tgt(a), a); };
  if (gs->inverse) {
    Algebra alg = w.A;
    w.declared_antipode = [gs, alg](Key a) {
      return mult1_from_element(alg, el1(gs->inverse(a)));
    };
  }
  w.decl_left_full = true;
  w.decl_right_full = true;
  w.decl_mult_bialgebra = false;
  spot_check_fibers(*gs);
  return w;
}

Instance lazy_functional(const LazyGroupoidSpec& g, std::string name) {
  auto gs = std::make_shared<LazyGroupoidSpec>(g);
  spot_check_fibers(*gs);
  Instance w;
  w.name = std::move(name);
  auto prod = [](Key a, Key b) { return a == b ? el1(a) : El1{}; };
  w.A = Algebra::lazy(prod, gs->enumerate, [gs](Key k) { return "d_" + gs->label(k); });
  w.tm.t1 = [gs](Key a, Key b) {
    El2 r;  // {c : cb = a}
    for (Key c : gs->left_fiber(b, a)) r.add({c, b}, 1);
    return r;
  };
  w.tm.t2 = [gs](Key a, Key b) {
    El2 r;  // {c : ac = b}
    for (Key c : gs->right_fiber(a, b)) r.add({a, c}, 1);
    return r;
  };
  w.tm.t3 = w.tm.t1;
  w.tm.t4 = w.tm.t2;
  w.counit = [gs](Key a) { return Rat(gs->is_identity(a) ? 1 : 0); };
  auto comp = [gs](Key p, Key q) { return gs->composable(p, q); };
  w.E = diagonal_mult2(comp);
  w.regular = true;
  w.group_like_l = [gs](Key p, Key q) -> std::optional<Key> {
    if (!gs->composable(p, q)) return std::nullopt;
    return gs->compose(p, q);
  };
  w.group_like_r = w.group_like_l;
  w.local_decompose = [](Key a) { return el2(a, a); };
  if (gs->inverse) {
    Algebra alg = w.A;
    w.declared_antipode = [gs, alg](Key a) {
      return mult1_from_element(alg, el1(gs->inverse(a)));
    };
  }
  w.decl_left_full = true;
  w.decl_right_full = true;
  w.decl_mult_bialgebra = true;  // single object: all pairs composable
  return w;
}

namespace {

const std::map<std::string, std::string>& cat_sources() {
  static const std::map<std::string, std::string> m = {
      {"PAIR2",
       "category PAIR2\n"
       "objects 1 2\n"
       "arrow a11 : 1 -> 1\n"
       "arrow a12 : 2 -> 1\n"
       "arrow a21 : 1 -> 2\n"
       "arrow a22 : 2 -> 2\n"
       "identity 1 = a11\n"
       "identity 2 = a22\n"
       "compose a12 * a21 = a11\n"
       "compose a21 * a12 = a22\n"
       "inverse a11 = a11\n"
       "inverse a12 = a21\n"
       "inverse a21 = a12\n"
       "inverse a22 = a22\n"},
      {"IDEM2",
       "category IDEM2\n"
       "objects o\n"
       "arrow e : o -> o\n"
       "arrow x : o -> o\n"
       "identity o = e\n"
       "compose x * x = x\n"},
      {"C2",
       "category C2\n"
       "objects o\n"
       "arrow e : o -> o\n"
       "arrow g : o -> o\n"
       "identity o = e\n"
       "compose g * g = e\n"
       "inverse e = e\n"
       "inverse g = g\n"},
      {"CYC3MON",
       "category CYC3MON\n"
       "objects o\n"
       "arrow e : o -> o\n"
       "arrow x : o -> o\n"
       "arrow y : o -> o\n"
       "identity o = e\n"
       "compose x * x = y\n"
       "compose x * y = x\n"
       "compose y * x = x\n"
       "compose y * y = y\n"},
  };
  return m;
}

LazyGroupoidSpec z_group_spec() {
  LazyGroupoidSpec g;
  g.enumerate = [](std::int64_t i) {
    return i % 2 == 0 ? -Key(i / 2) : Key(i / 2 + 1);  // 0, 1, -1, 2, -2, ...
  };
  g.label = [](Key k) { return std::to_string(k); };
  g.composable = [](Key, Key) { return true; };
  g.compose = [](Key a, Key b) { return a + b; };
  g.inverse = [](Key a) { return -a; };
  g.is_identity = [](Key a) { return a == 0; };
  g.id_at_tgt = [](Key) { return Key(0); };
  g.id_at_src = [](Key) { return Key(0); };
  g.left_fiber = [](Key a, Key b) { return std::vector<Key>{b - a}; };
  g.right_fiber = [](Key a, Key b) { return std::vector<Key>{b - a}; };
  return g;
}

LazyGroupoidSpec suminf_c2_spec() {
  // arrows 2k (identity) and 2k+1 (flip) in component k
  LazyGroupoidSpec g;
  g.enumerate = [](std::int64_t i) { return Key(i); };
  g.label = [](Key k) { return (k % 2 == 0 ? "e" : "g") + std::to_string(k / 2); };
  g.composable = [](Key a, Key b) { return a / 2 == b / 2; };
  g.compose = [](Key a, Key b) { return (a / 2) * 2 + ((a % 2) ^ (b % 2)); };
  g.inverse = [](Key a) { return a; };
  g.is_identity = [](Key a) { return a % 2 == 0; };
  g.id_at_tgt = [](Key a) { return (a / 2) * 2; };
  g.id_at_src = [](Key a) { return (a / 2) * 2; };
  g.left_fiber = [](Key a, Key b) {
    if (a / 2 != b / 2) return std::vector<Key>{};
    return std::vector<Key>{(a / 2) * 2 + ((a % 2) ^ (b % 2))};
  };
  g.right_fiber = [](Key a, Key b) {
    if (a / 2 != b / 2) return std::vector<Key>{};
    return std::vector<Key>{(a / 2) * 2 + ((a % 2) ^ (b % 2))};
  };
  return g;
}

}  // namespace

const std::string& catalog_cat_source(const std::string& name) {
  auto it = cat_sources().find(name);
  if (it == cat_sources().end()) throw std::invalid_argument("no .cat source for " + name);
  return it->second;
}

std::vector<std::string> catalog_names() {
  return {"PAIR2", "IDEM2", "C2", "CYC3MON", "FPAIR2", "ZFUN", "SUMC2PAIR2", "SUMINF_C2"};
}

Instance catalog(const std::string& name) {
  if (name == "PAIR2" || name == "IDEM2" || name == "C2" || name == "CYC3MON")
    return span_wmb(parse_presentation(catalog_cat_source(name)));
  if (name == "FPAIR2") return functional_wmb(parse_presentation(catalog_cat_source("PAIR2")));
  if (name == "ZFUN") return lazy_functional(z_group_spec(), "ZFUN");
  if (name == "SUMC2PAIR2") return direct_sum("SUMC2PAIR2", {catalog("C2"), catalog("PAIR2")});
  if (name == "SUMINF_C2") return lazy_span(suminf_c2_spec(), "SUMINF_C2");
  throw std::invalid_argument("unknown catalog instance " + name);
}

}  // namespace wmb
