#include "hopfalg/groupoid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace hopfalg {

int FinGroupoid::compose(int a, int b) const {
  auto it = comp.find({a, b});
  if (it == comp.end()) throw std::invalid_argument("groupoid " + name + ": " + arrows[a] + " and " + arrows[b] +
                                                    " are not composable");
  return it->second;
}

Report verify_groupoid(const FinGroupoid& g) {
  Report r("groupoid " + g.name);
  const int no = g.n_objects(), na = g.n_arrows();
  bool shapes = static_cast<int>(g.src.size()) == na && static_cast<int>(g.tgt.size()) == na &&
                static_cast<int>(g.inv.size()) == na && static_cast<int>(g.id.size()) == no;
  r.add("table sizes", shapes, "src/tgt/inv/id tables do not match the object and arrow counts");
  if (!shapes) return r;
  std::string w;
  for (int a = 0; a < na && w.empty(); ++a)
    if (g.src[a] < 0 || g.src[a] >= no || g.tgt[a] < 0 || g.tgt[a] >= no || g.inv[a] < 0 || g.inv[a] >= na)
      w = "at " + g.arrows[a];
  for (int x = 0; x < no && w.empty(); ++x)
    if (g.id[x] < 0 || g.id[x] >= na) w = "identity of " + g.objects[x];
  for (const auto& [k, c] : g.comp)
    if (w.empty() && (k.first < 0 || k.first >= na || k.second < 0 || k.second >= na || c < 0 || c >= na))
      w = "composition entry out of range";
  r.add("indices in range", w.empty(), w);
  if (!w.empty()) return r;

  std::string wt, wc;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      bool composable = g.tgt[a] == g.src[b];
      auto it = g.comp.find({a, b});
      if (composable != (it != g.comp.end()) && wt.empty())
        wt = "(" + g.arrows[a] + ", " + g.arrows[b] + ")";
      if (it != g.comp.end() && composable && wc.empty() &&
          (g.src[it->second] != g.src[a] || g.tgt[it->second] != g.tgt[b]))
        wc = "(" + g.arrows[a] + ", " + g.arrows[b] + ")";
    }
  r.add("composition defined exactly on composable pairs", wt.empty(), wt);
  r.add("composite has the right endpoints", wc.empty(), wc);
  if (!wt.empty() || !wc.empty()) return r;

  std::string wi;
  for (int x = 0; x < no && wi.empty(); ++x)
    if (g.src[g.id[x]] != x || g.tgt[g.id[x]] != x) wi = "identity of " + g.objects[x];
  for (int a = 0; a < na && wi.empty(); ++a)
    if (g.compose(g.id[g.src[a]], a) != a || g.compose(a, g.id[g.tgt[a]]) != a) wi = "at " + g.arrows[a];
  r.add("identities", wi.empty(), wi);

  std::string wa;
  for (const auto& [ab, c] : g.comp)
    for (int d = 0; d < na && wa.empty(); ++d) {
      if (g.tgt[ab.second] != g.src[d]) continue;
      if (g.compose(c, d) != g.compose(ab.first, g.compose(ab.second, d)))
        wa = "(" + g.arrows[ab.first] + ", " + g.arrows[ab.second] + ", " + g.arrows[d] + ")";
    }
  r.add("associativity", wa.empty(), wa);

  std::string wv;
  if (wi.empty())
    for (int a = 0; a < na && wv.empty(); ++a) {
      int b = g.inv[a];
      if (g.src[b] != g.tgt[a] || g.tgt[b] != g.src[a] || g.compose(a, b) != g.id[g.src[a]] ||
          g.compose(b, a) != g.id[g.tgt[a]])
        wv = "at " + g.arrows[a];
    }
  r.add("inverses", wi.empty() && wv.empty(), wv.empty() ? "identities are broken" : wv);
  return r;
}

void require_groupoid(const FinGroupoid& g) {
  Report r = verify_groupoid(g);
  if (const Check* c = r.first_failure())
    throw std::invalid_argument("groupoid " + g.name + ": " + c->name + (c->witness.empty() ? "" : " " + c->witness));
}

FinGroupoid discrete_groupoid(int n) {
  if (n < 1) throw std::invalid_argument("discrete groupoid needs at least one object");
  FinGroupoid g;
  g.name = "discrete(" + std::to_string(n) + ")";
  for (int x = 0; x < n; ++x) {
    g.objects.push_back(std::to_string(x + 1));
    g.arrows.push_back("id" + std::to_string(x + 1));
    g.src.push_back(x);
    g.tgt.push_back(x);
    g.inv.push_back(x);
    g.id.push_back(x);
    g.comp[{x, x}] = x;
  }
  return g;
}

FinGroupoid point_groupoid() {
  FinGroupoid g = discrete_groupoid(1);
  g.name = "point";
  return g;
}

FinGroupoid pair_groupoid(int n) {
  if (n < 1) throw std::invalid_argument("pair groupoid needs at least one object");
  FinGroupoid g;
  g.name = "pair(" + std::to_string(n) + ")";
  for (int x = 0; x < n; ++x) g.objects.push_back(std::to_string(x + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.arrows.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      g.src.push_back(i);
      g.tgt.push_back(j);
      g.inv.push_back(j * n + i);
      for (int k = 0; k < n; ++k) g.comp[{i * n + j, j * n + k}] = i * n + k;
    }
  for (int x = 0; x < n; ++x) g.id.push_back(x * n + x);
  return g;
}

namespace {

int find_identity(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  throw std::invalid_argument("group table has no identity element");
}

void check_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
}

int inverse_in(const std::vector<std::vector<int>>& table, int e, int g) {
  for (int h = 0; h < static_cast<int>(table.size()); ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  throw std::invalid_argument("group table: element without inverse");
}

}  // namespace

FinGroupoid group_groupoid(const std::vector<std::vector<int>>& table, std::vector<std::string> names,
                           std::string name) {
  check_table(table);
  const int n = static_cast<int>(table.size());
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (static_cast<int>(names.size()) != n) throw std::invalid_argument("group: name count does not match table");
  const int e = find_identity(table);
  FinGroupoid g;
  g.name = std::move(name);
  g.objects = {"*"};
  g.arrows = std::move(names);
  g.id = {e};
  for (int a = 0; a < n; ++a) {
    g.src.push_back(0);
    g.tgt.push_back(0);
    g.inv.push_back(inverse_in(table, e, a));
    for (int b = 0; b < n; ++b) g.comp[{a, b}] = table[a][b];
  }
  require_groupoid(g);
  return g;
}

FinGroupoid cyclic_groupoid(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs positive order");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return group_groupoid(t, {}, "Z/" + std::to_string(n));
}

FinGroupoid symmetric3_groupoid() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return group_groupoid(t, names, "S3");
}

FinGroupoid action_groupoid(const std::vector<std::vector<int>>& table, const std::vector<std::vector<int>>& act,
                            std::string name) {
  check_table(table);
  const int n = static_cast<int>(table.size());
  if (static_cast<int>(act.size()) != n || act[0].empty())
    throw std::invalid_argument("action table needs one row per group element");
  const int nx = static_cast<int>(act[0].size());
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != nx) throw std::invalid_argument("action table rows differ in length");
    for (int v : row)
      if (v < 0 || v >= nx) throw std::invalid_argument("action table entry out of range");
  }
  const int e = find_identity(table);
  FinGroupoid g;
  g.name = std::move(name);
  for (int x = 0; x < nx; ++x) g.objects.push_back(std::to_string(x + 1));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < nx; ++x) {
      g.arrows.push_back("(" + std::to_string(a) + "," + std::to_string(x + 1) + ")");
      g.src.push_back(x);
      g.tgt.push_back(act[a][x]);
      g.inv.push_back(inverse_in(table, e, a) * nx + act[a][x]);
      for (int b = 0; b < n; ++b) g.comp[{a * nx + x, b * nx + act[a][x]}] = table[b][a] * nx + x;
    }
  for (int x = 0; x < nx; ++x) g.id.push_back(e * nx + x);
  require_groupoid(g);
  return g;
}

Report verify_functor(const GroupoidFunctor& f) {
  Report r("functor " + f.src->name + " -> " + f.dst->name);
  const auto& G = *f.src;
  const auto& D = *f.dst;
  bool shapes = static_cast<int>(f.obj.size()) == G.n_objects() && static_cast<int>(f.arr.size()) == G.n_arrows();
  for (int v : f.obj) shapes = shapes && v >= 0 && v < D.n_objects();
  for (int v : f.arr) shapes = shapes && v >= 0 && v < D.n_arrows();
  r.add("maps are total and in range", shapes, "object or arrow map has the wrong size");
  if (!shapes) return r;
  std::string we, wi, wc;
  for (int a = 0; a < G.n_arrows() && we.empty(); ++a)
    if (D.src[f.arr[a]] != f.obj[G.src[a]] || D.tgt[f.arr[a]] != f.obj[G.tgt[a]]) we = "at " + G.arrows[a];
  for (int x = 0; x < G.n_objects() && wi.empty(); ++x)
    if (f.arr[G.id[x]] != D.id[f.obj[x]]) wi = "at " + G.objects[x];
  if (we.empty())
    for (const auto& [ab, c] : G.comp)
      if (wc.empty() && f.arr[c] != D.compose(f.arr[ab.first], f.arr[ab.second]))
        wc = "(" + G.arrows[ab.first] + ", " + G.arrows[ab.second] + ")";
  r.add("preserves endpoints", we.empty(), we);
  r.add("preserves identities", wi.empty(), wi);
  r.add("preserves composition", we.empty() && wc.empty(), wc);
  return r;
}

Report verify_action(const GroupoidAction& a) {
  const auto& G = *a.groupoid;
  Report r("action of " + G.name);
  const int np = static_cast<int>(a.points.size());
  std::string wr;
  if (static_cast<int>(a.anchor.size()) != np) wr = "anchor has the wrong size";
  for (int n = 0; n < np && wr.empty(); ++n)
    if (a.anchor[n] < 0 || a.anchor[n] >= G.n_objects()) wr = "anchor of " + a.points[n];
  for (const auto& [gn, m] : a.act)
    if (wr.empty() && (gn.first < 0 || gn.first >= G.n_arrows() || gn.second < 0 || gn.second >= np || m < 0 || m >= np))
      wr = "action entry out of range";
  r.add("tables in range", wr.empty(), wr);
  if (!wr.empty()) return r;
  std::string wd, wt;
  for (int g = 0; g < G.n_arrows(); ++g)
    for (int n = 0; n < np; ++n) {
      bool want = G.src[g] == a.anchor[n];
      auto it = a.act.find({g, n});
      if (want != (it != a.act.end()) && wd.empty()) wd = "(" + G.arrows[g] + ", " + a.points[n] + ")";
      if (it != a.act.end() && want && wt.empty() && a.anchor[it->second] != G.tgt[g])
        wt = "(" + G.arrows[g] + ", " + a.points[n] + ")";
    }
  r.add("defined exactly when the anchor matches the source", wd.empty(), wd);
  r.add("anchor(g n) = tgt(g)", wt.empty(), wt);
  if (!wd.empty() || !wt.empty()) return r;
  std::string wi, wc;
  for (int n = 0; n < np && wi.empty(); ++n)
    if (a.act.at({G.id[a.anchor[n]], n}) != n) wi = "at " + a.points[n];
  for (const auto& [gn, m] : a.act)
    for (int h = 0; h < G.n_arrows() && wc.empty(); ++h) {
      if (G.src[h] != G.tgt[gn.first]) continue;
      if (a.act.at({h, m}) != a.act.at({G.compose(gn.first, h), gn.second}))
        wc = "(" + G.arrows[h] + ", " + G.arrows[gn.first] + ", " + a.points[gn.second] + ")";
    }
  r.add("identities act trivially", wi.empty(), wi);
  r.add("compatible with composition", wc.empty(), wc);
  return r;
}

GroupoidAction objects_action(const FinGroupoid& g) {
  GroupoidAction a;
  a.groupoid = &g;
  a.points = g.objects;
  a.anchor.resize(g.n_objects());
  std::iota(a.anchor.begin(), a.anchor.end(), 0);
  for (int h = 0; h < g.n_arrows(); ++h) a.act[{h, g.src[h]}] = g.tgt[h];
  return a;
}

GroupoidAction arrows_action(const FinGroupoid& g) {
  GroupoidAction a;
  a.groupoid = &g;
  a.points = g.arrows;
  a.anchor = g.tgt;
  for (const auto& [xh, c] : g.comp) a.act[{xh.second, xh.first}] = c;
  return a;
}

FinGroupoid translation_groupoid(const GroupoidAction& a) {
  const auto& G = *a.groupoid;
  FinGroupoid t;
  t.name = G.name + " x| points";
  t.objects = a.points;
  std::map<std::pair<int, int>, int> index;
  for (const auto& [gn, m] : a.act) {
    index[gn] = t.n_arrows();
    t.arrows.push_back("(" + G.arrows[gn.first] + "," + a.points[gn.second] + ")");
    t.src.push_back(gn.second);
    t.tgt.push_back(m);
  }
  t.inv.resize(t.n_arrows());
  for (const auto& [gn, k] : index) {
    int m = a.act.at(gn);
    t.inv[k] = index.at({G.inv[gn.first], m});
    for (int h = 0; h < G.n_arrows(); ++h)
      if (G.src[h] == G.tgt[gn.first]) t.comp[{k, index.at({h, m})}] = index.at({G.compose(gn.first, h), gn.second});
  }
  for (int n = 0; n < static_cast<int>(a.points.size()); ++n) t.id.push_back(index.at({G.id[a.anchor[n]], n}));
  return t;
}

std::vector<std::vector<int>> orbits(const FinGroupoid& g) {
  std::vector<int> parent(g.n_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < g.n_arrows(); ++a) {
    int u = find(g.src[a]), v = find(g.tgt[a]);
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < g.n_objects(); ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [k, v] : groups) out.push_back(std::move(v));
  return out;
}

std::vector<std::vector<int>> action_orbits(const GroupoidAction& a) { return orbits(translation_groupoid(a)); }

template <class S> HopfPtr<S> dualize(const FinGroupoid& g, const Field& f) {
  require_groupoid(g);
  const int no = g.n_objects(), na = g.n_arrows();
  const S one = ScalarIO<S>::from_int(1, f);
  auto A = share(FinAlgebra<S>::diagonal(no, "k^" + std::to_string(no)));
  auto H = share(FinAlgebra<S>::diagonal(na, "k^" + std::to_string(na)));
  Mat<S> s = Mat<S>::Zero(na, no), t = Mat<S>::Zero(na, no), eps = Mat<S>::Zero(no, na), anti = Mat<S>::Zero(na, na);
  Mat<S> delta = Mat<S>::Zero(static_cast<Eigen::Index>(na) * na, na);
  for (int a = 0; a < na; ++a) {
    s(a, g.src[a]) = one;
    t(a, g.tgt[a]) = one;
    anti(g.inv[a], a) = one;
  }
  for (int x = 0; x < no; ++x) eps(x, g.id[x]) = one;
  for (const auto& [ab, c] : g.comp) delta(static_cast<Eigen::Index>(ab.first) * na + ab.second, c) = one;
  return make_hopf_plain<S>("O(" + g.name + ")", A, H, s, t, delta, eps, anti, g.arrows);
}

template <class S>
HopfMorphism<S> dualize_functor(const GroupoidFunctor& fun, const HopfPtr<S>& dual_src, const HopfPtr<S>& dual_dst,
                                const Field& f) {
  Report r = verify_functor(fun);
  if (const Check* c = r.first_failure()) throw std::invalid_argument("not a functor: " + c->name + " " + c->witness);
  const S one = ScalarIO<S>::from_int(1, f);
  Mat<S> p0 = Mat<S>::Zero(fun.src->n_objects(), fun.dst->n_objects());
  Mat<S> p1 = Mat<S>::Zero(fun.src->n_arrows(), fun.dst->n_arrows());
  for (int x = 0; x < fun.src->n_objects(); ++x) p0(x, fun.obj[x]) = one;
  for (int a = 0; a < fun.src->n_arrows(); ++a) p1(a, fun.arr[a]) = one;
  return make_morphism<S>(dual_dst, dual_src, p0, p1);
}

template <class S>
LeftComoduleAlgebra<S> action_to_comodule_algebra(const GroupoidAction& a, const HopfPtr<S>& dual, const Field& f) {
  Report r = verify_action(a);
  if (const Check* c = r.first_failure()) throw std::invalid_argument("not an action: " + c->name + " " + c->witness);
  const auto& G = *a.groupoid;
  const int np = static_cast<int>(a.points.size());
  const int na = G.n_arrows();
  require_dims(dual->dimH() == na && dual->dimA() == G.n_objects(), "action: dual has the wrong dimensions");
  const S one = ScalarIO<S>::from_int(1, f);
  auto R = share(FinAlgebra<S>::diagonal(np, "k^" + std::to_string(np)));
  Mat<S> sigma = Mat<S>::Zero(np, G.n_objects());
  for (int n = 0; n < np; ++n) sigma(n, a.anchor[n]) = one;
  Mat<S> plain = Mat<S>::Zero(static_cast<Eigen::Index>(na) * np, np);
  for (const auto& [gn, m] : a.act) plain(static_cast<Eigen::Index>(gn.first) * np + m, gn.second) = one;
  return make_left_comodule_algebra_plain<S>("O(" + G.name + " points)", dual, R, sigma, plain);
}

#define HOPFALG_INSTANTIATE(S)                                                                                   \
  template HopfPtr<S> dualize<S>(const FinGroupoid&, const Field&);                                              \
  template HopfMorphism<S> dualize_functor<S>(const GroupoidFunctor&, const HopfPtr<S>&, const HopfPtr<S>&,      \
                                              const Field&);                                                     \
  template LeftComoduleAlgebra<S> action_to_comodule_algebra<S>(const GroupoidAction&, const HopfPtr<S>&,        \
                                                                const Field&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
