#include "hopfalg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <json.hpp>

#include "hopfalg/io.hpp"
#include "hopfalg/suites.hpp"

namespace hopfalg {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string field;
  std::string format = "text";
  bool verbose = false;
  bool timings = false;
  std::string command;  // e.g. "verify hopf"
  std::vector<std::string> files;
  std::string side = "b";
  std::vector<std::string> probes;
  std::string out;
};

struct Outcome {
  std::vector<Report> suites;
  Json fields = Json::object();
};

template <class F> Report timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Chirality chirality(const std::string& side) {
  if (side == "l") return Chirality::left;
  if (side == "r") return Chirality::right;
  return Chirality::both;
}

template <class S> BundlePtr<S> principal_somewhere(const BicomoduleAlgebra<S>& p) {
  for (auto c : {Chirality::both, Chirality::left, Chirality::right}) {
    auto pc = verify_principal(p, c);
    if (pc.bundle) return pc.bundle;
  }
  throw PreconditionError("bicomodule algebra " + p.name + " is not principal on either side");
}

// Fixture file names for the corpus entries.
std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (c == '(') s += '_';
    else if (c != ')') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

template <class S> std::pair<std::string, std::string> bundle_refs(const std::string& name) {
  if (name == "TRIV(INCL)") return {"pr2.halg", "pt.halg"};
  if (name == "TRIV(COLLAPSE)") return {"pt.halg", "d2.halg"};
  if (name == "SQRT2" || name == "SPLIT") return {"c2.halg", "c2.halg"};
  const std::string g = file_stem(name.substr(2, name.size() - 3)) + ".halg";
  return {g, g};
}

template <class S> Outcome corpus_export(const std::string& dir, const Field& f) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Report r("export");
  Loader<S> ld(f);
  auto put = [&](const std::string& file, const std::string& text, auto reread) {
    const std::string path = (fs::path(dir) / file).string();
    write_file(path, text);
    bool same = false;
    std::string why;
    try {
      same = reread(path) == text;
      if (!same) why = "re-written text differs";
    } catch (const std::exception& e) {
      why = e.what();
    }
    r.add(file + " round trips", same, why);
  };
  for (const auto& name : corpus_groupoid_names()) {
    const std::string stem = file_stem(name);
    put(stem + ".gpd", write_groupoid(corpus_groupoid(name)),
        [&](const std::string& p) { return write_groupoid(ld.groupoid(p)); });
    put(stem + ".halg", write_hopf(*corpus_hopf<S>(name, f)),
        [&](const std::string& p) { return write_hopf(*ld.hopf(p)); });
  }
  const std::map<std::string, std::pair<std::string, std::string>> mrefs = {{"INCL", {"pr2.halg", "pt.halg"}},
                                                                            {"COLLAPSE", {"pt.halg", "d2.halg"}}};
  for (const auto& name : corpus_morphism_names()) {
    const auto& [a, b] = mrefs.at(name);
    put(file_stem(name) + ".hmor", write_morphism(corpus_morphism<S>(name, f), a, b),
        [&, a = a, b = b](const std::string& p) { return write_morphism(ld.morphism(p), a, b); });
  }
  for (const auto& name : corpus_bundle_names()) {
    const auto [a, b] = bundle_refs<S>(name);
    put(file_stem(name) + ".bnd", write_bundle(corpus_bundle<S>(name, f), a, b),
        [&](const std::string& p) { return write_bundle(ld.bundle(p), a, b); });
  }
  auto incl_co = opposite_algebra(corpus_bundle<S>("TRIV(INCL)", f));
  put("triv_incl_co.bnd", write_bundle(incl_co, "pt.halg", "pr2.halg"),
      [&](const std::string& p) { return write_bundle(ld.bundle(p), "pt.halg", "pr2.halg"); });
  auto pr2 = corpus_hopf<S>("PR2", f);
  put("pr2_regular.cmd", write_comodule(regular_comodule(pr2), "pr2.halg"),
      [&](const std::string& p) { return write_comodule(ld.comodule(p), "pr2.halg"); });
  put("pr2_identity.cmd", write_comodule(identity_comodule(pr2), "pr2.halg"),
      [&](const std::string& p) { return write_comodule(ld.comodule(p), "pr2.halg"); });
  Outcome o;
  o.fields["files"] = static_cast<int>(r.checks.size());
  o.suites.push_back(std::move(r));
  return o;
}

template <class S> Outcome execute(const Options& o, const Field& f) {
  Loader<S> ld(f);
  Outcome out;
  const auto& cmd = o.command;
  auto file = [&](std::size_t i) { return o.files.at(i); };

  if (cmd == "verify hopf") {
    auto h = ld.hopf(file(0));
    out.fields["name"] = h->name;
    out.fields["dim_base"] = h->dimA();
    out.fields["dim_total"] = h->dimH();
    out.suites.push_back(timed([&] { return verify_hopf_algebroid(*h); }));
  } else if (cmd == "verify bundle") {
    auto p = ld.bundle(file(0));
    out.fields["name"] = p.name;
    out.fields["dim"] = p.dim();
    out.suites.push_back(timed([&] { return verify_bicomodule_algebra(p); }));
    PrincipalCheck<S> pc;
    out.suites.push_back(timed([&] {
      pc = verify_principal(p, chirality(o.side));
      pc.report.suite = "principal (" + o.side + ")";
      return pc.report;
    }));
    out.fields["principal"] = pc.bundle != nullptr;
  } else if (cmd == "verify identities") {
    auto b = principal_somewhere(ld.bundle(file(0)));
    out.fields["left"] = b->left;
    out.fields["right"] = b->right;
    out.suites.push_back(timed([&] { return verify_translation_identities(*b); }));
  } else if (cmd == "compose") {
    auto p = ld.bundle(file(0));
    auto q = ld.bundle(file(1));
    auto pb = require_principal(p, Chirality::left), qb = require_principal(q, Chirality::left);
    BundlePtr<S> c;
    out.suites.push_back(timed([&] {
      c = compose_bundles(*pb, *qb);
      Report r = verify_bicomodule_algebra(c->p);
      r.suite = "composite";
      return r;
    }));
    const Chirality want = verify_principal(p, Chirality::both).bundle && verify_principal(q, Chirality::both).bundle
                               ? Chirality::both
                               : Chirality::left;
    auto pc = verify_principal(c->p, want);
    pc.report.suite = "composite principal";
    out.suites.push_back(pc.report);
    out.fields["dim"] = c->dim();
    out.fields["bibundle"] = want == Chirality::both && pc.bundle != nullptr;
    if (!o.out.empty()) write_file(o.out, write_bundle(c->p));
  } else if (cmd == "weakequiv") {
    auto m = ld.morphism(file(0));
    Verdict v;
    out.suites.push_back(timed([&] {
      v = weak_equivalence_test(m).verdict;
      v.report.suite = "weak equivalence";
      return v.report;
    }));
    out.fields["verdict"] = v.weak ? "weak_equivalence" : "not_weak_equivalence";
    out.fields["Phi_rank"] = v.phi_rank;
    out.fields["Phi_domain_rank"] = v.phi_domain_rank;
    out.fields["Phi_rank_k"] = v.phi_rank_k;
    out.fields["Phi_domain_rank_k"] = v.phi_domain_rank_k;
    out.fields["Phi_bijective"] = v.phi_bijective;
    out.fields["alpha_faithfully_flat"] = v.alpha_flat;
    out.fields["bibundle"] = v.bibundle;
    out.fields["adjunction"] = v.adjunction;
    out.fields["coherent"] = v.coherent;
  } else if (cmd == "zigzag") {
    auto m1 = ld.morphism(file(0));
    auto m2 = ld.morphism(file(1));
    std::optional<Zigzag<S>> z;
    out.suites.push_back(timed([&] {
      z = zigzag_complete(m1, m2);
      Report r = z->report;
      r.suite = "zigzag";
      return r;
    }));
    out.fields["apex_base"] = z->apex.total->dimA();
    out.fields["apex_total"] = z->apex.total->dimH();
    out.fields["zeta1_weak"] = z->zeta1_test.verdict.weak;
    out.fields["zeta2_weak"] = z->zeta2_test.verdict.weak;
  } else if (cmd == "morita") {
    auto p = require_principal(ld.bundle(file(0)), Chirality::both);
    std::vector<Comodule<S>> probes;
    for (const auto& path : o.probes) probes.push_back(ld.comodule(path));
    out.suites.push_back(timed([&] {
      Report r = morita_witness(p, probes);
      r.suite = "morita";
      return r;
    }));
  } else if (cmd == "reconstruct") {
    auto p = ld.bundle(file(0));
    std::optional<Reconstruction<S>> rec;
    out.suites.push_back(timed([&] {
      rec = reconstruct_bundle(p, f);
      Report r = rec->report;
      r.suite = "reconstruction";
      return r;
    }));
    out.fields["isomorphic"] = rec->iso.has_value();
    if (!o.out.empty()) write_file(o.out, write_bundle(rec->bundle->p));
  } else if (cmd == "corpus run-all") {
    out.suites = run_corpus<S>(f);
  } else if (cmd == "corpus export") {
    return corpus_export<S>(file(0), f);
  } else if (cmd == "dualize") {
    auto g = ld.groupoid(file(0));
    out.suites.push_back(timed([&] { return verify_groupoid(g); }));
    auto h = dualize<S>(g, f);
    out.suites.push_back(timed([&] { return verify_hopf_algebroid(*h); }));
    out.fields["dim_base"] = h->dimA();
    out.fields["dim_total"] = h->dimH();
    if (!o.out.empty()) write_file(o.out, write_hopf(*h));
  } else {
    throw std::invalid_argument("unknown command " + cmd);
  }
  return out;
}

int failures(const std::vector<Report>& rs) {
  int n = 0;
  for (const auto& r : rs) n += r.failures();
  return n;
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

Json header(const Options& o, const std::string& field) {
  std::string line = o.command;
  for (const auto& f : o.files) line += " " + f;
  for (const auto& p : o.probes) line += " --probe " + p;
  if (o.command == "verify bundle") line += " --side " + o.side;
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = line;
  j["field"] = field;
  return j;
}

void render_json(std::ostream& os, const Options& o, const std::string& field, const Outcome& out) {
  Json j = header(o, field);
  for (const auto& [k, v] : out.fields.items()) j[k] = v;
  const int nf = failures(out.suites);
  j["status"] = nf == 0 ? "pass" : "fail";
  j["failures"] = nf;
  Json suites = Json::array();
  for (const auto& r : out.suites) {
    Json s;
    s["suite"] = r.suite;
    s["status"] = r.ok() ? "pass" : "fail";
    s["failures"] = r.failures();
    if (o.timings) s["seconds"] = seconds(r.seconds);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json cj;
      cj["name"] = c.name;
      cj["status"] = status_name(c.status);
      if (!c.witness.empty()) cj["witness"] = c.witness;
      checks.push_back(std::move(cj));
    }
    s["checks"] = std::move(checks);
    suites.push_back(std::move(s));
  }
  j["suites"] = std::move(suites);
  os << j.dump(2) << "\n";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(std::ostream& os, const Options& o, const std::string& field, const Outcome& out) {
  Json h = header(o, field);
  os << h["schema"].get<std::string>() << "  " << h["command"].get<std::string>() << "  (field "
     << field << ")\n";
  for (const auto& [k, v] : out.fields.items()) os << k << ": " << scalar_text(v) << "\n";
  for (const auto& r : out.suites) {
    os << "suite " << r.suite << ": " << (r.ok() ? "pass" : "fail") << ", " << r.checks.size() << " checks";
    if (r.failures()) os << ", " << r.failures() << " failed";
    if (o.timings) os << ", " << seconds(r.seconds) << " s";
    os << "\n";
    for (const auto& c : r.checks) {
      if (!o.verbose && c.status != Status::fail) continue;
      os << "  " << std::left << std::setw(5) << status_name(c.status) << c.name;
      if (!c.witness.empty()) os << "  [" << c.witness << "]";
      os << "\n";
    }
  }
  const int nf = failures(out.suites);
  os << "status: " << (nf == 0 ? "pass" : "fail") << " (" << nf << " failures)\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  const char* env = std::getenv("HOPFALG_FIELD");
  o.field = env && *env ? env : "q";

  CLI::App app{"Exact verification of finite commutative Hopf algebroids, bundles and Morita equivalences",
               "hopfalg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", o.field, "q or fp:<prime> (default: $HOPFALG_FIELD or q)");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verbose", o.verbose, "list every check, not only failures");
  app.add_flag("--timings", o.timings, "include per-suite timings (output is then not reproducible)");

  auto* verify = app.add_subcommand("verify", "verify one object")->require_subcommand(1);
  auto* vh = verify->add_subcommand("hopf", "Hopf algebroid axioms");
  vh->add_option("file", o.files, ".halg file or corpus:NAME")->required()->expected(1);
  auto* vb = verify->add_subcommand("bundle", "bicomodule algebra laws and principality");
  vb->add_option("file", o.files, ".bnd file or corpus:NAME")->required()->expected(1);
  vb->add_option("--side", o.side, "l, r or b")->check(CLI::IsMember({"l", "r", "b"}));
  auto* vi = verify->add_subcommand("identities", "translation-map identities");
  vi->add_option("file", o.files, ".bnd file or corpus:NAME")->required()->expected(1);

  auto* co = app.add_subcommand("compose", "cotensor composite of two left bundles");
  co->add_option("files", o.files, "two .bnd files")->required()->expected(2);
  co->add_option("-o,--out", o.out, "write the composite as a .bnd file");
  auto* we = app.add_subcommand("weakequiv", "weak-equivalence test of a morphism");
  we->add_option("file", o.files, ".hmor file or corpus:NAME")->required()->expected(1);
  auto* zz = app.add_subcommand("zigzag", "complete a cospan of weak equivalences");
  zz->add_option("files", o.files, "two .hmor files")->required()->expected(2);
  auto* mo = app.add_subcommand("morita", "Morita-equivalence witness of a bibundle");
  mo->add_option("file", o.files, ".bnd file or corpus:NAME")->required()->expected(1);
  mo->add_option("--probe", o.probes, "extra probe comodules (.cmd)");
  auto* re = app.add_subcommand("reconstruct", "rebuild a bibundle from its comodule equivalence");
  re->add_option("file", o.files, ".bnd file or corpus:NAME")->required()->expected(1);
  re->add_option("-o,--out", o.out, "write the reconstructed bundle as a .bnd file");
  auto* cp = app.add_subcommand("corpus", "shipped examples")->require_subcommand(1);
  cp->add_subcommand("run-all", "every corpus suite");
  auto* ex = cp->add_subcommand("export", "write the corpus as fixture files");
  ex->add_option("dir", o.files, "target directory")->required()->expected(1);
  auto* du = app.add_subcommand("dualize", "dual Hopf algebroid of a groupoid");
  du->add_option("file", o.files, ".gpd file or corpus:NAME")->required()->expected(1);
  du->add_option("-o,--out", o.out, "write the dual as a .halg file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : app.get_subcommands()) {
    o.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) o.command += " " + inner->get_name();
  }

  Field f;
  try {
    f = Field::parse(o.field);
  } catch (const std::exception& e) {
    err << "error: bad --field '" << o.field << "': " << e.what() << "\n";
    return 2;
  }

  Outcome res;
  try {
    res = f.rational() ? execute<Rational>(o, f) : execute<Fp>(o, f);
  } catch (const std::exception& e) {
    // Parse errors, unreadable files, refused preconditions and malformed structures.
    err << "error: " << e.what() << "\n";
    if (o.format == "json") {
      Json j = header(o, f.name());
      j["status"] = "error";
      j["error"] = e.what();
      out << j.dump(2) << "\n";
    }
    return 2;
  }

  if (o.format == "json") render_json(out, o, f.name(), res);
  else render_text(out, o, f.name(), res);
  return failures(res.suites) == 0 ? 0 : 1;
}

}  // namespace hopfalg
