#include "hopfalg/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace hopfalg {

namespace fs = std::filesystem;

ParseError::ParseError(std::string f, int l, int c, const std::string& msg)
    : std::runtime_error(f + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
      file(std::move(f)),
      line(l),
      column(c) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

namespace {

struct Tok {
  std::string text;
  int col = 1;
};

struct Line {
  int no = 0;
  std::vector<Tok> toks;
  std::size_t size() const { return toks.size(); }
  const std::string& operator[](std::size_t i) const { return toks[i].text; }
};

class Lexer {
 public:
  Lexer(const std::string& text, std::string file, std::string base_dir)
      : file_(std::move(file)), base_(std::move(base_dir)) {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      Line l{no, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
        if (j > i) l.toks.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
      }
      if (!l.toks.empty()) lines_.push_back(std::move(l));
    }
    eof_line_ = no + 1;
  }

  const std::string& base() const { return base_; }
  bool done() const { return pos_ >= lines_.size(); }
  const Line& next(const std::string& what) {
    if (done()) throw ParseError(file_, eof_line_, 1, "unexpected end of input in " + what);
    return lines_[pos_++];
  }

  [[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) const {
    int col = 1;
    if (tok < l.size()) col = l.toks[tok].col;
    else if (!l.toks.empty()) col = l.toks.back().col + static_cast<int>(l.toks.back().text.size());
    throw ParseError(file_, l.no, col, msg);
  }

  void arity(const Line& l, std::size_t lo, std::size_t hi) const {
    if (l.size() < lo) fail(l, l.size(), "'" + l[0] + "' expects " + std::to_string(lo - 1) + " argument(s)");
    if (l.size() > hi) fail(l, hi, "unexpected token '" + l[hi] + "'");
  }

  int integer(const Line& l, std::size_t i, long lo, long hi) const {
    if (i >= l.size()) fail(l, i, "missing integer");
    const std::string& t = l[i];
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty()) fail(l, i, "expected an integer, got '" + t + "'");
    if (v < lo || v > hi)
      fail(l, i, "value " + t + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
  }

  template <class S> S scalar(const Line& l, std::size_t i, const Field& f) const {
    try {
      return ScalarIO<S>::parse(l[i], f);
    } catch (const std::exception& e) {
      fail(l, i, "bad scalar '" + l[i] + "': " + e.what());
    }
  }

  static std::string rest(const Line& l, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < l.size(); ++i) out += (i > from ? " " : "") + l[i];
    return out;
  }

 private:
  std::string file_, base_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  int eof_line_ = 1;
};

template <class S> struct NamedMatrix {
  Mat<S> m;
  Line at;
};

template <class S> NamedMatrix<S> read_matrix(Lexer& lx, const Line& head, const Field& f) {
  lx.arity(head, 4, 5);
  const int r = lx.integer(head, 2, 0, 1 << 20), c = lx.integer(head, 3, 0, 1 << 20);
  Mat<S> m = Mat<S>::Zero(r, c);
  if (head.size() == 5) {
    if (head[4] != "sparse") lx.fail(head, 4, "expected 'sparse'");
    std::set<std::pair<int, int>> seen;
    for (;;) {
      const Line& l = lx.next("matrix " + head[1]);
      if (l[0] == "end") {
        lx.arity(l, 1, 1);
        break;
      }
      lx.arity(l, 3, 3);
      const int i = lx.integer(l, 0, 0, r - 1), j = lx.integer(l, 1, 0, c - 1);
      if (!seen.insert({i, j}).second) lx.fail(l, 0, "duplicate entry");
      m(i, j) = lx.scalar<S>(l, 2, f);
    }
  } else {
    for (int i = 0; i < r; ++i) {
      const Line& l = lx.next("matrix " + head[1]);
      if (static_cast<int>(l.size()) != c)
        lx.fail(l, std::min<std::size_t>(l.size(), c),
                "row " + std::to_string(i) + " of " + head[1] + " needs " + std::to_string(c) + " entries");
      for (int j = 0; j < c; ++j) m(i, j) = lx.scalar<S>(l, j, f);
    }
  }
  return {m, head};
}

bool is_corpus_ref(const std::string& ref) { return ref.rfind("corpus:", 0) == 0; }

std::string cache_key(const std::string& path) {
  std::error_code ec;
  auto p = fs::weakly_canonical(fs::path(path), ec);
  return ec ? path : p.string();
}

}  // namespace

template <class S> struct Loader<S>::Impl {
  Loader& L;
  Lexer& lx;

  const Field& f() const { return L.f_; }

  std::string resolve(const std::string& ref) const {
    fs::path p(ref);
    if (p.is_relative()) p = fs::path(lx.base()) / p;
    return p.lexically_normal().string();
  }

  template <class F> auto guard(const Line& at, std::size_t tok, F&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const ParseError&) {
      throw;
    } catch (const PreconditionError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      lx.fail(at, tok, e.what());
    }
  }

  void end_of_document(const char* what) {
    if (!lx.done()) {
      const Line& l = lx.next(what);
      lx.fail(l, 0, std::string("trailing content after the ") + what + " block");
    }
  }

  const Line& header(const char* kind) {
    const Line& h = lx.next(kind);
    if (h[0] != kind) lx.fail(h, 0, std::string("expected '") + kind + " NAME'");
    return h;
  }

  // Reads statements until "end" (required when nested) or the end of input.
  template <class F> void statements(bool nested, const std::string& what, F&& on) {
    for (;;) {
      if (!nested && lx.done()) return;
      const Line& l = lx.next(what);
      if (l[0] == "end") {
        lx.arity(l, 1, 1);
        return;
      }
      on(l);
    }
  }

  AlgPtr<S> algebra_ref(const Line& l) {
    if (l.size() == 1) {
      const Line& h = header("algebra");
      return algebra_block(h, true);
    }
    lx.arity(l, 2, 2);
    const std::string& ref = l[1];
    if (is_corpus_ref(ref)) {
      auto dot = ref.rfind('.');
      if (dot == std::string::npos || (ref.substr(dot) != ".A" && ref.substr(dot) != ".H"))
        lx.fail(l, 1, "corpus algebra refs look like corpus:NAME.A or corpus:NAME.H");
      auto h = hopf_named(l, ref.substr(7, dot - 7));
      return ref.substr(dot) == ".A" ? h->A : h->H;
    }
    const std::string path = resolve(ref);
    const std::string key = cache_key(path);
    if (auto it = L.algebras_.find(key); it != L.algebras_.end()) return it->second;
    auto a = guard(l, 1, [&] { return L.algebra(path); });
    L.algebras_[key] = a;
    return a;
  }

  HopfPtr<S> hopf_named(const Line& l, const std::string& name) {
    const std::string key = "corpus:" + name;
    if (auto it = L.hopfs_.find(key); it != L.hopfs_.end()) return it->second;
    auto h = guard(l, 1, [&] { return corpus_hopf<S>(name, f()); });
    L.hopfs_[key] = h;
    return h;
  }

  HopfPtr<S> hopf_ref(const Line& l) {
    if (l.size() == 1) {
      const Line& h = header("hopf");
      return hopf_block(h, true);
    }
    lx.arity(l, 2, 2);
    const std::string& ref = l[1];
    if (is_corpus_ref(ref)) return hopf_named(l, ref.substr(7));
    const std::string path = resolve(ref);
    const std::string key = cache_key(path);
    if (auto it = L.hopfs_.find(key); it != L.hopfs_.end()) return it->second;
    auto h = guard(l, 1, [&] { return L.hopf(path); });
    L.hopfs_[key] = h;
    return h;
  }

  AlgPtr<S> algebra_block(const Line& head, bool nested) {
    const std::string name = Lexer::rest(head, 1);
    int dim = -1;
    std::vector<std::tuple<int, int, int, S>> c;
    std::optional<Vec<S>> unit;
    std::vector<Line> cl;
    std::set<std::tuple<int, int, int>> seen;
    statements(nested, "algebra " + name, [&](const Line& l) {
      if (l[0] == "dim") {
        lx.arity(l, 2, 2);
        if (dim >= 0) lx.fail(l, 0, "dim given twice");
        dim = lx.integer(l, 1, 1, 1 << 16);
      } else if (l[0] == "c") {
        if (dim < 0) lx.fail(l, 0, "'c' before 'dim'");
        lx.arity(l, 5, 5);
        const int i = lx.integer(l, 1, 0, dim - 1), j = lx.integer(l, 2, 0, dim - 1), k = lx.integer(l, 3, 0, dim - 1);
        if (!seen.insert({i, j, k}).second) lx.fail(l, 1, "structure constant given twice");
        c.emplace_back(i, j, k, lx.scalar<S>(l, 4, f()));
      } else if (l[0] == "unit") {
        if (dim < 0) lx.fail(l, 0, "'unit' before 'dim'");
        if (unit) lx.fail(l, 0, "unit given twice");
        if (static_cast<int>(l.size()) != dim + 1) lx.fail(l, std::min<std::size_t>(l.size(), dim + 1),
                                                           "unit needs " + std::to_string(dim) + " entries");
        Vec<S> u(dim);
        for (int i = 0; i < dim; ++i) u(i) = lx.scalar<S>(l, i + 1, f());
        unit = u;
      } else {
        lx.fail(l, 0, "unknown statement '" + l[0] + "' in algebra block");
      }
    });
    if (dim < 0) lx.fail(head, 0, "algebra " + name + ": missing dim");
    if (!unit) lx.fail(head, 0, "algebra " + name + ": missing unit");
    return share(FinAlgebra<S>::from_constants(dim, c, *unit, name));
  }

  void add_matrix(std::map<std::string, NamedMatrix<S>>& out, const Line& l, const std::set<std::string>& allowed,
                  const std::string& block) {
    if (l.size() < 2) lx.fail(l, 1, "matrix needs a name");
    if (!allowed.count(l[1])) lx.fail(l, 1, "unexpected matrix '" + l[1] + "' in " + block + " block");
    if (out.count(l[1])) lx.fail(l, 1, "matrix " + l[1] + " given twice");
    out.emplace(l[1], read_matrix<S>(lx, l, f()));
  }

  const Mat<S>& need(const std::map<std::string, NamedMatrix<S>>& ms, const std::string& key, const Line& head,
                     int rows, int cols) {
    auto it = ms.find(key);
    if (it == ms.end()) lx.fail(head, 0, Lexer::rest(head, 0) + ": missing matrix " + key);
    const Mat<S>& m = it->second.m;
    if (m.rows() != rows || m.cols() != cols)
      lx.fail(it->second.at, 2,
              "matrix " + key + " must be " + std::to_string(rows) + " x " + std::to_string(cols));
    return m;
  }

  HopfPtr<S> hopf_block(const Line& head, bool nested) {
    const std::string name = Lexer::rest(head, 1);
    AlgPtr<S> A, H;
    std::vector<std::string> labels;
    bool require_flat = true;
    std::map<std::string, NamedMatrix<S>> ms;
    const std::set<std::string> allowed = {"s", "t", "comult", "counit", "antipode"};
    statements(nested, "hopf " + name, [&](const Line& l) {
      if (l[0] == "base" || l[0] == "total") {
        auto& slot = l[0] == "base" ? A : H;
        if (slot) lx.fail(l, 0, l[0] + " given twice");
        slot = algebra_ref(l);
      } else if (l[0] == "labels") {
        labels.assign(l.size() - 1, "");
        for (std::size_t i = 1; i < l.size(); ++i) labels[i - 1] = l[i];
      } else if (l[0] == "flat") {
        lx.arity(l, 2, 2);
        if (l[1] != "required" && l[1] != "unchecked") lx.fail(l, 1, "expected 'required' or 'unchecked'");
        require_flat = l[1] == "required";
      } else if (l[0] == "matrix") {
        add_matrix(ms, l, allowed, "hopf");
      } else {
        lx.fail(l, 0, "unknown statement '" + l[0] + "' in hopf block");
      }
    });
    if (!A) lx.fail(head, 0, "hopf " + name + ": missing base");
    if (!H) lx.fail(head, 0, "hopf " + name + ": missing total");
    const int a = A->dim(), h = H->dim();
    const Mat<S>& s = need(ms, "s", head, h, a);
    const Mat<S>& t = need(ms, "t", head, h, a);
    const Mat<S>& d = need(ms, "comult", head, h * h, h);
    const Mat<S>& e = need(ms, "counit", head, a, h);
    const Mat<S>& anti = need(ms, "antipode", head, h, h);
    if (!labels.empty() && static_cast<int>(labels.size()) != h)
      lx.fail(head, 0, "hopf " + name + ": " + std::to_string(h) + " labels expected");
    return guard(head, 1, [&] { return make_hopf_plain<S>(name, A, H, s, t, d, e, anti, labels, require_flat); });
  }

  HopfMorphism<S> morphism_block(const Line& head) {
    const std::string name = Lexer::rest(head, 1);
    HopfPtr<S> src, dst;
    std::map<std::string, NamedMatrix<S>> ms;
    statements(false, "morphism " + name, [&](const Line& l) {
      if (l[0] == "source" || l[0] == "target") {
        auto& slot = l[0] == "source" ? src : dst;
        if (slot) lx.fail(l, 0, l[0] + " given twice");
        slot = hopf_ref(l);
      } else if (l[0] == "matrix") {
        add_matrix(ms, l, {"phi0", "phi1"}, "morphism");
      } else {
        lx.fail(l, 0, "unknown statement '" + l[0] + "' in morphism block");
      }
    });
    if (!src) lx.fail(head, 0, "morphism " + name + ": missing source");
    if (!dst) lx.fail(head, 0, "morphism " + name + ": missing target");
    const Mat<S>& p0 = need(ms, "phi0", head, dst->dimA(), src->dimA());
    const Mat<S>& p1 = need(ms, "phi1", head, dst->dimH(), src->dimH());
    return guard(head, 1, [&] { return make_morphism<S>(src, dst, p0, p1); });
  }

  Comodule<S> comodule_block(const Line& head) {
    const std::string name = Lexer::rest(head, 1);
    HopfPtr<S> h;
    Side side = Side::right;
    int dim = -1;
    std::map<std::string, NamedMatrix<S>> ms;
    std::set<std::string> allowed = {"coaction"};
    statements(false, "comodule " + name, [&](const Line& l) {
      if (l[0] == "over") {
        if (h) lx.fail(l, 0, "over given twice");
        h = hopf_ref(l);
        for (int i = 0; i < h->dimA(); ++i) allowed.insert("act" + std::to_string(i));
      } else if (l[0] == "side") {
        lx.arity(l, 2, 2);
        if (l[1] != "left" && l[1] != "right") lx.fail(l, 1, "expected 'left' or 'right'");
        side = l[1] == "left" ? Side::left : Side::right;
      } else if (l[0] == "dim") {
        lx.arity(l, 2, 2);
        dim = lx.integer(l, 1, 1, 1 << 16);
      } else if (l[0] == "matrix") {
        if (!h) lx.fail(l, 0, "'over' must come before the matrices");
        add_matrix(ms, l, allowed, "comodule");
      } else {
        lx.fail(l, 0, "unknown statement '" + l[0] + "' in comodule block");
      }
    });
    if (!h) lx.fail(head, 0, "comodule " + name + ": missing over");
    if (dim < 0) lx.fail(head, 0, "comodule " + name + ": missing dim");
    FinModule<S> carrier{h->A, dim, {}};
    for (int i = 0; i < h->dimA(); ++i) carrier.act.push_back(need(ms, "act" + std::to_string(i), head, dim, dim));
    const Mat<S>& co = need(ms, "coaction", head, dim * h->dimH(), dim);
    return guard(head, 1, [&] { return make_comodule_plain<S>(name, h, side, carrier, co); });
  }

  BicomoduleAlgebra<S> bundle_block(const Line& head) {
    const std::string name = Lexer::rest(head, 1);
    HopfPtr<S> H, K;
    AlgPtr<S> P;
    std::map<std::string, NamedMatrix<S>> ms;
    statements(false, "bundle " + name, [&](const Line& l) {
      if (l[0] == "left" || l[0] == "right") {
        auto& slot = l[0] == "left" ? H : K;
        if (slot) lx.fail(l, 0, l[0] + " given twice");
        slot = hopf_ref(l);
      } else if (l[0] == "carrier") {
        if (P) lx.fail(l, 0, "carrier given twice");
        P = algebra_ref(l);
      } else if (l[0] == "matrix") {
        add_matrix(ms, l, {"alpha", "beta", "lambda", "rho"}, "bundle");
      } else {
        lx.fail(l, 0, "unknown statement '" + l[0] + "' in bundle block");
      }
    });
    if (!H) lx.fail(head, 0, "bundle " + name + ": missing left");
    if (!K) lx.fail(head, 0, "bundle " + name + ": missing right");
    if (!P) lx.fail(head, 0, "bundle " + name + ": missing carrier");
    const int p = P->dim();
    const Mat<S>& al = need(ms, "alpha", head, p, H->dimA());
    const Mat<S>& be = need(ms, "beta", head, p, K->dimA());
    const Mat<S>& la = need(ms, "lambda", head, H->dimH() * p, p);
    const Mat<S>& rh = need(ms, "rho", head, p * K->dimH(), p);
    return guard(head, 1, [&] { return make_bicomodule_algebra_plain<S>(name, H, K, P, al, be, la, rh); });
  }

  FinGroupoid groupoid_block(const Line& head) {
    FinGroupoid g;
    g.name = Lexer::rest(head, 1);
    std::map<std::string, int> obj, arr;
    std::map<int, int> inv;
    auto find = [&](const std::map<std::string, int>& m, const Line& l, std::size_t i, const char* what) {
      auto it = m.find(l[i]);
      if (it == m.end()) lx.fail(l, i, std::string("unknown ") + what + " '" + l[i] + "'");
      return it->second;
    };
    statements(false, "groupoid " + g.name, [&](const Line& l) {
      if (l[0] == "objects") {
        if (!g.objects.empty()) lx.fail(l, 0, "objects given twice");
        for (std::size_t i = 1; i < l.size(); ++i) {
          if (!obj.emplace(l[i], static_cast<int>(i - 1)).second) lx.fail(l, i, "duplicate object");
          g.objects.push_back(l[i]);
        }
      } else if (l[0] == "arrow") {
        lx.arity(l, 4, 4);
        if (!arr.emplace(l[1], g.n_arrows()).second) lx.fail(l, 1, "duplicate arrow");
        g.arrows.push_back(l[1]);
        g.src.push_back(find(obj, l, 2, "object"));
        g.tgt.push_back(find(obj, l, 3, "object"));
      } else if (l[0] == "comp") {
        lx.arity(l, 4, 4);
        const int a = find(arr, l, 1, "arrow"), b = find(arr, l, 2, "arrow"), c = find(arr, l, 3, "arrow");
        if (!g.comp.emplace(std::make_pair(a, b), c).second) lx.fail(l, 1, "composite given twice");
      } else if (l[0] == "inv") {
        lx.arity(l, 3, 3);
        const int a = find(arr, l, 1, "arrow"), b = find(arr, l, 2, "arrow");
        if (!inv.emplace(a, b).second) lx.fail(l, 1, "inverse given twice");
      } else {
        lx.fail(l, 0, "unknown statement '" + l[0] + "' in groupoid block");
      }
    });
    if (g.objects.empty()) lx.fail(head, 0, "groupoid " + g.name + ": missing objects");
    // Identities are the idempotent loops; inverses default to the unique two-sided inverse.
    g.id.assign(g.n_objects(), -1);
    for (int a = 0; a < g.n_arrows(); ++a) {
      auto it = g.comp.find({a, a});
      if (g.src[a] == g.tgt[a] && it != g.comp.end() && it->second == a) g.id[g.src[a]] = a;
    }
    for (int x = 0; x < g.n_objects(); ++x)
      if (g.id[x] < 0) lx.fail(head, 0, "groupoid " + g.name + ": no identity at " + g.objects[x]);
    g.inv.assign(g.n_arrows(), -1);
    for (int a = 0; a < g.n_arrows(); ++a) {
      if (auto it = inv.find(a); it != inv.end()) {
        g.inv[a] = it->second;
        continue;
      }
      for (int b = 0; b < g.n_arrows() && g.inv[a] < 0; ++b) {
        auto ab = g.comp.find({a, b}), ba = g.comp.find({b, a});
        if (ab != g.comp.end() && ba != g.comp.end() && ab->second == g.id[g.src[a]] && ba->second == g.id[g.tgt[a]])
          g.inv[a] = b;
      }
      if (g.inv[a] < 0) lx.fail(head, 0, "groupoid " + g.name + ": " + g.arrows[a] + " has no inverse");
    }
    guard(head, 1, [&] {
      require_groupoid(g);
      return 0;
    });
    return g;
  }
};

namespace {

std::string dir_of(const std::string& path) {
  auto d = fs::path(path).parent_path();
  return d.empty() ? "." : d.string();
}

}  // namespace

template <class S> FinGroupoid Loader<S>::groupoid_text(const std::string& text, const std::string& file, const std::string& base) {
  Lexer lx(text, file, base);
  Impl im{*this, lx};
  auto g = im.groupoid_block(im.header("groupoid"));
  im.end_of_document("groupoid");
  return g;
}

template <class S> AlgPtr<S> Loader<S>::algebra_text(const std::string& text, const std::string& file, const std::string& base) {
  Lexer lx(text, file, base);
  Impl im{*this, lx};
  auto a = im.algebra_block(im.header("algebra"), false);
  im.end_of_document("algebra");
  return a;
}

template <class S> HopfPtr<S> Loader<S>::hopf_text(const std::string& text, const std::string& file, const std::string& base) {
  Lexer lx(text, file, base);
  Impl im{*this, lx};
  auto h = im.hopf_block(im.header("hopf"), false);
  im.end_of_document("hopf");
  return h;
}

template <class S>
HopfMorphism<S> Loader<S>::morphism_text(const std::string& text, const std::string& file, const std::string& base) {
  Lexer lx(text, file, base);
  Impl im{*this, lx};
  auto m = im.morphism_block(im.header("morphism"));
  im.end_of_document("morphism");
  return m;
}

template <class S>
Comodule<S> Loader<S>::comodule_text(const std::string& text, const std::string& file, const std::string& base) {
  Lexer lx(text, file, base);
  Impl im{*this, lx};
  auto m = im.comodule_block(im.header("comodule"));
  im.end_of_document("comodule");
  return m;
}

template <class S>
BicomoduleAlgebra<S> Loader<S>::bundle_text(const std::string& text, const std::string& file, const std::string& base) {
  Lexer lx(text, file, base);
  Impl im{*this, lx};
  auto p = im.bundle_block(im.header("bundle"));
  im.end_of_document("bundle");
  return p;
}

template <class S> FinGroupoid Loader<S>::groupoid(const std::string& path) {
  if (is_corpus_ref(path)) return corpus_groupoid(path.substr(7));
  return groupoid_text(read_file(path), path, dir_of(path));
}

template <class S> AlgPtr<S> Loader<S>::algebra(const std::string& path) {
  return algebra_text(read_file(path), path, dir_of(path));
}

template <class S> HopfPtr<S> Loader<S>::hopf(const std::string& path) {
  if (is_corpus_ref(path)) return corpus_hopf<S>(path.substr(7), f_);
  return hopf_text(read_file(path), path, dir_of(path));
}

template <class S> HopfMorphism<S> Loader<S>::morphism(const std::string& path) {
  if (is_corpus_ref(path)) return corpus_morphism<S>(path.substr(7), f_);
  return morphism_text(read_file(path), path, dir_of(path));
}

template <class S> Comodule<S> Loader<S>::comodule(const std::string& path) {
  return comodule_text(read_file(path), path, dir_of(path));
}

template <class S> BicomoduleAlgebra<S> Loader<S>::bundle(const std::string& path) {
  if (is_corpus_ref(path)) return corpus_bundle<S>(path.substr(7), f_);
  return bundle_text(read_file(path), path, dir_of(path));
}

// Writers.

namespace {

std::string word(std::string s) {
  for (char& c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '_';
  return s.empty() ? "_" : s;
}

std::string title(std::string s) {
  for (char& c : s)
    if (c == '#' || c == '\n') c = '_';
  return s;
}

template <class S> void put_matrix(std::ostream& os, const std::string& name, const Mat<S>& m) {
  long nz = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) nz += !m(i, j).is_zero();
  const long cells = static_cast<long>(m.rows() * m.cols());
  if (cells > 16 && 3 * nz < cells) {
    os << "matrix " << name << " " << m.rows() << " " << m.cols() << " sparse\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) os << i << " " << j << " " << m(i, j).str() << "\n";
    os << "end\n";
    return;
  }
  os << "matrix " << name << " " << m.rows() << " " << m.cols() << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "\n";
  }
}

template <class S> void put_algebra(std::ostream& os, const FinAlgebra<S>& a) {
  os << "algebra " << title(a.name()) << "\n" << "dim " << a.dim() << "\n";
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        S v = a.c(i, j, k);
        if (!v.is_zero()) os << "c " << i << " " << j << " " << k << " " << v.str() << "\n";
      }
  os << "unit";
  for (int i = 0; i < a.dim(); ++i) os << " " << a.one()(i).str();
  os << "\nend\n";
}

template <class S> void put_hopf(std::ostream& os, const HopfAlgebroid<S>& h) {
  os << "hopf " << title(h.name) << "\n";
  if (!h.labels.empty()) {
    os << "labels";
    for (const auto& l : h.labels) os << " " << word(l);
    os << "\n";
  }
  os << "flat " << (h.s_flat && h.t_flat ? "required" : "unchecked") << "\n";
  os << "base\n";
  put_algebra(os, *h.A);
  os << "total\n";
  put_algebra(os, *h.H);
  put_matrix<S>(os, "s", h.s.matrix);
  put_matrix<S>(os, "t", h.t.matrix);
  put_matrix<S>(os, "comult", Mat<S>(h.hh->step(1).sect * h.comult));
  put_matrix<S>(os, "counit", h.counit);
  put_matrix<S>(os, "antipode", h.antipode);
  os << "end\n";
}

template <class S> void put_hopf_ref(std::ostream& os, const char* key, const HopfAlgebroid<S>& h, const std::string& ref) {
  if (!ref.empty()) {
    os << key << " " << word(ref) << "\n";
    return;
  }
  os << key << "\n";
  put_hopf(os, h);
}

}  // namespace

std::string write_groupoid(const FinGroupoid& g) {
  std::ostringstream os;
  os << "groupoid " << title(g.name) << "\nobjects";
  for (const auto& o : g.objects) os << " " << word(o);
  os << "\n";
  for (int a = 0; a < g.n_arrows(); ++a)
    os << "arrow " << word(g.arrows[a]) << " " << word(g.objects[g.src[a]]) << " " << word(g.objects[g.tgt[a]]) << "\n";
  for (const auto& [ab, c] : g.comp)
    os << "comp " << word(g.arrows[ab.first]) << " " << word(g.arrows[ab.second]) << " " << word(g.arrows[c]) << "\n";
  for (int a = 0; a < g.n_arrows(); ++a) os << "inv " << word(g.arrows[a]) << " " << word(g.arrows[g.inv[a]]) << "\n";
  os << "end\n";
  return os.str();
}

template <class S> std::string write_algebra(const FinAlgebra<S>& a) {
  std::ostringstream os;
  put_algebra(os, a);
  return os.str();
}

template <class S> std::string write_hopf(const HopfAlgebroid<S>& h) {
  std::ostringstream os;
  put_hopf(os, h);
  return os.str();
}

template <class S>
std::string write_morphism(const HopfMorphism<S>& m, const std::string& source_ref, const std::string& target_ref) {
  std::ostringstream os;
  os << "morphism " << title(m.src->name + " -> " + m.dst->name) << "\n";
  put_hopf_ref(os, "source", *m.src, source_ref);
  put_hopf_ref(os, "target", *m.dst, target_ref);
  put_matrix<S>(os, "phi0", m.phi0.matrix);
  put_matrix<S>(os, "phi1", m.phi1.matrix);
  os << "end\n";
  return os.str();
}

template <class S> std::string write_comodule(const Comodule<S>& m, const std::string& over_ref) {
  std::ostringstream os;
  os << "comodule " << title(m.name) << "\n";
  put_hopf_ref(os, "over", *m.h, over_ref);
  os << "side " << (m.side == Side::left ? "left" : "right") << "\n" << "dim " << m.dim() << "\n";
  for (std::size_t i = 0; i < m.carrier.act.size(); ++i) put_matrix<S>(os, "act" + std::to_string(i), m.carrier.act[i]);
  put_matrix<S>(os, "coaction", Mat<S>(m.target->step(1).sect * m.coaction));
  os << "end\n";
  return os.str();
}

template <class S>
std::string write_bundle(const BicomoduleAlgebra<S>& p, const std::string& left_ref, const std::string& right_ref) {
  std::ostringstream os;
  os << "bundle " << title(p.name) << "\n";
  put_hopf_ref(os, "left", *p.H, left_ref);
  put_hopf_ref(os, "right", *p.K, right_ref);
  os << "carrier\n";
  put_algebra(os, *p.P);
  put_matrix<S>(os, "alpha", p.alpha.matrix);
  put_matrix<S>(os, "beta", p.beta.matrix);
  put_matrix<S>(os, "lambda", Mat<S>(p.ltarget->step(1).sect * p.lambda));
  put_matrix<S>(os, "rho", Mat<S>(p.rtarget->step(1).sect * p.rho));
  os << "end\n";
  return os.str();
}

#define HOPFALG_INSTANTIATE(S)                                                                          \
  template class Loader<S>;                                                                             \
  template std::string write_algebra<S>(const FinAlgebra<S>&);                                          \
  template std::string write_hopf<S>(const HopfAlgebroid<S>&);                                          \
  template std::string write_morphism<S>(const HopfMorphism<S>&, const std::string&, const std::string&); \
  template std::string write_comodule<S>(const Comodule<S>&, const std::string&);                       \
  template std::string write_bundle<S>(const BicomoduleAlgebra<S>&, const std::string&, const std::string&);

HOPFALG_INSTANTIATE(Rational)
HOPFALG_INSTANTIATE(Fp)

}  // namespace hopfalg
