// One line per acceptance criterion; exit status 0 when all pass.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>

#include "hopfalg/suites.hpp"

using namespace hopfalg;
using Q = Rational;

namespace {

struct Line {
  int id;
  std::string what;
  bool ok;
  std::string detail;
};

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name + (c->witness.empty() ? "" : " [" + c->witness + "]") : "";
}

// can^-1 of U(H) by solving can x = u (x) 1 column by column, against the closed form.
bool closed_form_by_solving(const HopfPtr<Q>& h) {
  auto b = unit_bundle(h);
  Mat<Q> closed = unit_can_inverse_closed_form(h);
  const auto& cod = *b->can_l.cod;
  for (int c = 0; c < cod.dim(); ++c) {
    Mat<Q> rhs = unit_vector<Q>(cod.dim(), c);
    auto sol = solve<Q>(b->can_l.matrix, rhs);
    if (!sol.consistent || sol.kernel.cols() != 0 || !same_matrix(sol.particular, Mat<Q>(closed * rhs))) return false;
  }
  return true;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, out};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main() {
  Field q;
  std::map<std::string, Report> by;
  for (auto& r : run_corpus<Q>(q)) by.emplace(r.suite, std::move(r));

  auto suite_line = [&](int id, const std::string& what, const std::string& suite) {
    const Report& r = by.at(suite);
    return Line{id, what, r.ok(), r.ok() ? std::to_string(r.checks.size()) + " checks" : first_failure(r)};
  };

  std::vector<Line> lines;
  {
    Line l = suite_line(1, "Hopf axioms on corpus duals and constructor outputs, under 10 s", "hopf-axioms");
    const double s = by.at("hopf-axioms").seconds;
    l.ok = l.ok && s < 10.0;
    l.detail += ", " + std::to_string(s) + " s";
    lines.push_back(l);
  }
  lines.push_back(suite_line(2, "translation identities for U(C2), U(PR2), TRIV(INCL), SQRT2", "translation-identities"));
  {
    Line l = suite_line(3, "unit-bundle inverse canonical map equals the closed form (C2, PR2)", "unit-closed-form");
    const bool oracle = closed_form_by_solving(corpus_hopf<Q>("C2", q)) && closed_form_by_solving(corpus_hopf<Q>("PR2", q));
    l.ok = l.ok && oracle;
    if (!oracle) l.detail = "solving can disagrees with the closed form";
    lines.push_back(l);
  }
  lines.push_back(suite_line(4, "trivialization round trip for TRIV(INCL) and U(C2)", "trivialization"));
  lines.push_back(suite_line(5, "weak-equivalence trichotomy: INCL positive, collapse negative, rank 1 < 2", "weak-equivalence"));
  lines.push_back(suite_line(6, "unitors, associator, TRIV(INCL)^co [] TRIV(INCL) = U(PT) of dim 1", "bicategory"));
  lines.push_back(suite_line(7, "invertibility witnesses and triangle identity", "invertibility"));
  lines.push_back(suite_line(8, "Morita witness for TRIV(INCL) and SQRT2", "morita"));
  lines.push_back(suite_line(9, "zig-zag completion for INCL, INCL", "zigzag"));
  lines.push_back(suite_line(10, "coinvariant quotient: kappa omega = id, can inverse, containment", "coinvariant-quotient"));
  lines.push_back(suite_line(11, "reconstruction round trip for U(C2), TRIV(INCL), SQRT2", "reconstruction"));
  {
    const std::string cmd = std::string("\"") + HOPFALG_CLI_PATH + "\" corpus run-all --field q --format json";
    auto a = capture(cmd), b = capture(cmd);
    const bool ok = a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second;
    lines.push_back({12, "two corpus run-all JSON outputs are byte-identical", ok,
                     std::to_string(a.second.size()) + " bytes, exit " + std::to_string(a.first) + "/" +
                         std::to_string(b.first)});
  }

  bool all = true;
  for (const auto& l : lines) {
    all = all && l.ok;
    std::cout << "criterion " << (l.id < 10 ? " " : "") << l.id << ": " << (l.ok ? "PASS" : "FAIL") << "  " << l.what
              << "  (" << l.detail << ")\n";
  }
  return all ? 0 : 1;
}
