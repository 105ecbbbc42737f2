#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "contactlie/catalog.hpp"
#include "contactlie/construct.hpp"
#include "contactlie/contact.hpp"
#include "contactlie/io.hpp"
#include "contactlie/obstruct.hpp"
#include "contactlie/parse.hpp"
#include "contactlie/suite.hpp"

using namespace contactlie;

namespace {

struct Options {
  std::string file;
  std::vector<std::string> forms;
  std::string mode;
  std::string s;
  std::string params;
  std::string filter;
  std::string output;
  std::string id;
  unsigned threads = 0;
  bool json = false;
  bool print_polynomial = false;
  bool base = false;
};

std::string join_dims(const std::vector<Subspace>& series) {
  std::string s;
  for (const auto& sub : series) s += (s.empty() ? "" : " > ") + std::to_string(sub.dim());
  return s;
}

std::string span_text(const LieAlgebra& L, const Subspace& S) {
  if (S.dim() == 0) return "0";
  std::string s = "span(";
  for (std::size_t i = 0; i < S.dim(); ++i) s += (i ? ", " : "") + format_vector(L, S.basis()[i]);
  return s + ")";
}

std::string format_frac(const LieAlgebra& L, const FracVector& v) {
  FracVector n = v.normalized();
  std::string s = format_vector(L, n.numerator);
  if (!n.is_polynomial()) s = "(" + s + ") / (" + n.denominator.to_string() + ")";
  return s;
}

Record rec(const std::string& subject, std::string check, Status s) {
  Record r;
  r.subject = subject;
  r.check = std::move(check);
  r.status = s;
  return r;
}

LieFile load(const Options& o) {
  LieFile f = read_lie_file(o.file);
  if (!o.params.empty()) {
    auto a = parse_assignment(o.params);
    for (auto& form : f.forms) form = substitute(form, a);
    f.algebra = substitute(f.algebra, a);
  }
  return f;
}

std::string subject_of(const Options& o, const LieFile& f) { return f.name.empty() ? o.file : f.name; }

// Structural summary: each item a separate info record.
void structure_records(Report& rep, const std::string& subj, const LieAlgebra& L) {
  Record r = rec(subj, "structure", Status::Info);
  r.with("dim", std::to_string(L.dim()));
  if (!L.params().empty()) {
    std::string ps;
    for (const auto& p : L.params()) ps += (ps.empty() ? "" : " ") + p;
    r.with("params", ps);
  }
  try {
    r.with("center", span_text(L, center(L)));
    r.with("derived-series", join_dims(derived_series(L)));
    r.with("lower-central-series", join_dims(lower_central_series(L)));
    r.with("solvable", is_solvable(L)).with("nilpotent", is_nilpotent(L));
  } catch (const RankInstability& ex) {
    r.with("note", std::string(ex.what()));
  }
  r.with("unimodular", is_unimodular(L));
  rep.add(std::move(r));
}

void form_record(Report& rep, const std::string& subj, const LieAlgebra& L, const Vector& form, Status if_ok,
                 Status if_not) {
  const std::string text = format_covector(L, form);
  if (L.dim() % 2 == 1) {
    auto v = is_contact_form(L, form);
    Record r = rec(subj, "contact-form", v.is_contact ? if_ok : if_not);
    r.with("form", text).with("contact", v.is_contact).with("top", v.top.to_string());
    if (!L.params().empty()) r.with("nonvanishing-on-locus", v.nonvanishing_on_locus);
    if (v.reeb) r.with("reeb", format_frac(L, *v.reeb));
    rep.add(std::move(r));
  } else {
    auto v = is_exact_symplectic(L, form);
    Record r = rec(subj, "frobenius-form", v.nondegenerate ? if_ok : if_not);
    r.with("form", text).with("frobenius", v.nondegenerate).with("top", v.top.to_string());
    if (v.nondegenerate) r.with("liouville", format_frac(L, liouville_vector(L, form)));
    rep.add(std::move(r));
  }
}

Report cmd_check(const Options& o) {
  Report rep;
  LieFile f = load(o);
  const LieAlgebra& L = f.algebra;
  const std::string subj = subject_of(o, f);
  auto jac = jacobi_check(L);
  Record j = rec(subj, "jacobi", jac.ok ? Status::Pass : Status::Fail);
  if (!jac.ok)
    j.with("triple", "(" + L.labels()[jac.i] + "," + L.labels()[jac.j] + "," + L.labels()[jac.k] + ")")
        .with("residual", format_vector(L, jac.residual));
  rep.add(std::move(j));
  if (!jac.ok) return rep;
  structure_records(rep, subj, L);
  // Forms stated in the file are claims; --form ones are queries.
  for (const auto& form : f.forms) form_record(rep, subj, L, form, Status::Pass, Status::Fail);
  for (const auto& text : o.forms) form_record(rep, subj, L, parse_covector(L, text), Status::Info, Status::Info);
  return rep;
}

Report cmd_exists(const Options& o) {
  Report rep;
  LieFile f = load(o);
  const LieAlgebra& L = f.algebra;
  const std::string subj = subject_of(o, f);
  std::string mode = o.mode.empty() ? (L.dim() % 2 ? "contact" : "frobenius") : o.mode;
  if (mode != "contact" && mode != "frobenius") throw ParseError("--mode must be contact or frobenius");
  if ((mode == "contact") != (L.dim() % 2 == 1))
    throw PreconditionError(mode + " mode needs " + (mode == "contact" ? "odd" : "even") + " dimension, got " +
                            std::to_string(L.dim()));
  ExistenceOptions opts{f.samples};
  auto v = mode == "contact" ? contact_exists(L, opts) : frobenius_exists(L, opts);
  Record r = rec(subj, "existence", Status::Pass);
  r.with("mode", mode).with("exists", v.exists);
  if (o.print_polynomial) r.with("polynomial", v.polynomial.to_string());
  r.with("polynomial-zero", v.polynomial.is_zero());
  if (v.witness) {
    if (!v.sample.empty()) r.with("sample", format_assignment(v.sample));
    r.with("witness", format_covector(L, *v.witness)).with("witness-top", v.witness_value.to_string());
  }
  rep.add(std::move(r));
  if (!v.exists && L.params().empty()) {
    std::vector<Obstruction> obs;
    if (L.dim() % 2 == 1) obs.push_back(center_obstruction(L).verdict);
    obs.push_back(codim1_abelian_obstruction(L).verdict);
    if (L.dim() >= 2) obs.push_back(rank_one_bracket_detect(L).verdict);
    try {
      obs.push_back(codim1_derived_criteria(L).verdict);
    } catch (const PreconditionError&) {
    }
    for (const auto& ob : obs)
      if ((mode == "contact" && ob.no_contact) || (mode == "frobenius" && ob.no_frobenius))
        rep.add(rec(subj, "obstruction: " + ob.name, Status::Info).with("detail", ob.detail));
  }
  return rep;
}

Report cmd_contactize(const Options& o, std::string& emitted) {
  Report rep;
  LieFile f = read_lie_file(o.file);
  const LieAlgebra& H = f.algebra;
  const std::string subj = subject_of(o, f);
  const auto& b = f.extension;
  if (!b.alpha) throw PreconditionError("extension block needs 'extend alpha'");
  ExtensionData d = ExtensionData::zero(H.dim());
  if (b.psi) d.psi = *b.psi;
  if (b.f) d.f = *b.f;

  auto cc = check_extension_cocycle(H, d);
  Record c = rec(subj, "cocycle", cc.ok() ? Status::Pass : Status::Fail);
  c.with("f-closed", cc.f_closed).with("psi-identity", cc.psi_identity);
  rep.add(std::move(c));
  if (!cc.ok()) {
    const auto& [i, j] = cc.f_closed ? cc.psi_pair : cc.f_pair;
    rep.error = "extension data is not a cocycle: fails on [" + H.labels()[i] + "," + H.labels()[j] + "]";
    return rep;
  }
  auto base = is_exact_symplectic(H, *b.alpha);
  rep.add(rec(subj, "base-exact-symplectic", base.nondegenerate ? Status::Pass : Status::Fail)
              .with("alpha", format_covector(H, *b.alpha))
              .with("top", base.top.to_string()));
  if (!base.nondegenerate) {
    rep.error = "d alpha is degenerate on the base";
    return rep;
  }

  Scalar s_sym = Scalar::variable("s");
  Scalar locus = contactization_condition(H, *b.alpha, d, s_sym);
  Scalar s = !o.s.empty() ? parse_scalar(o.s, nullptr) : b.s ? *b.s : s_sym;
  rep.add(rec(subj, "admissibility", Status::Info).with("locus", locus.to_string() + " != 0").with("s", s.to_string()));

  Scalar at_s = contactization_condition(H, *b.alpha, d, s);
  if (at_s.is_zero()) {
    rep.error = "inadmissible s = " + s.to_string() + " (locus: " + locus.to_string() + " != 0)";
    return rep;
  }
  auto out = contactize(H, *b.alpha, d, s);
  Record v = rec(subj, "contact-form", out.verdict.is_contact ? Status::Pass : Status::Fail);
  v.with("eta", format_covector(out.algebra, out.eta))
      .with("top", out.verdict.top.to_string())
      .with("pullback-matches", out.pullback_matches)
      .with("jacobi", jacobi_check(out.algebra).ok);
  rep.add(std::move(v));
  emitted = write_lie(out.algebra, f.name.empty() ? "" : f.name + "-contactized", {out.eta});
  return rep;
}

Report cmd_catalog_list(const Options& o) {
  Report rep;
  for (const auto* e : list(parse_filter(o.filter))) {
    Record r = rec(e->id, "entry", Status::Info);
    r.with("dim", std::to_string(e->algebra.dim())).with("family", e->family).with("title", e->title);
    r.with("contact", to_string(e->contact)).with("frobenius", to_string(e->frobenius));
    std::string flags;
    if (e->solvable) flags += "solvable ";
    if (e->nilpotent) flags += "nilpotent ";
    if (e->nondecomposable) flags += "nondecomposable ";
    if (e->parameterized()) flags += "parameterized ";
    if (!flags.empty()) flags.pop_back();
    r.with("flags", flags);
    rep.add(std::move(r));
  }
  return rep;
}

std::string cmd_catalog_export(const Options& o) {
  const CatalogEntry& e = get(o.id);
  if (o.base) {
    if (!e.extension) throw PreconditionError("entry '" + e.id + "' has no extension recipe");
    const auto& r = *e.extension;
    ExtensionBlock b;
    b.psi = r.data.psi;
    b.f = r.data.f;
    b.alpha = r.alpha;
    if (r.s.is_rational()) b.s = r.s;
    return write_lie(r.base, e.id + ".base") + write_extension_block(r.base, b);
  }
  std::vector<Vector> forms = e.contact_forms;
  if (e.frobenius_form) forms.push_back(*e.frobenius_form);
  return write_lie(e.algebra, e.id, forms, e.samples);
}

void emit(const Report& rep, bool json) { std::cout << (json ? rep.to_json() : rep.to_text()); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact and Frobenius structures on Lie algebras given by structure constants"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Jacobi, structure summary and contact verdicts for forms");
  check->add_option("file", o.file, "algebra file")->required();
  check->add_option("--form", o.forms, "1-form such as 'e1* + (1-p) e3*' (repeatable)");
  check->add_option("--params", o.params, "parameter values, e.g. p=1,q=2");
  check->add_flag("--json", o.json, "machine-readable output");

  auto* exists = app.add_subcommand("exists", "decide existence of a contact or Frobenius form");
  exists->add_option("file", o.file, "algebra file")->required();
  exists->add_option("--mode", o.mode, "contact or frobenius (default by parity)");
  exists->add_option("--params", o.params, "parameter values, e.g. p=1,q=2");
  exists->add_flag("--print-polynomial", o.print_polynomial, "include the generic polynomial");
  exists->add_flag("--json", o.json, "machine-readable output");

  auto* contactize_cmd = app.add_subcommand("contactize", "build the contact extension from an extension block");
  contactize_cmd->add_option("file", o.file, "algebra file with an extension block")->required();
  contactize_cmd->add_option("--s", o.s, "value of s (default: the file's, else symbolic)");
  contactize_cmd->add_option("--output", o.output, "write the constructed algebra here instead of stdout");
  contactize_cmd->add_flag("--json", o.json, "machine-readable output");

  auto* suite = app.add_subcommand("suite", "golden checks and cross-checks over the catalog");
  suite->add_option("--filter", o.filter, "catalog filter, e.g. solvable,dim=5");
  suite->add_option("--threads", o.threads, "worker threads (default: all cores)");
  suite->add_flag("--json", o.json, "machine-readable output");

  auto* cat = app.add_subcommand("catalog", "built-in algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  cat_list->add_option("--filter", o.filter, "e.g. solvable,dim=5");
  cat_list->add_flag("--json", o.json, "machine-readable output");
  auto* cat_export = cat->add_subcommand("export", "print an entry in the algebra file format");
  cat_export->add_option("id", o.id, "entry identifier")->required();
  cat_export->add_flag("--base", o.base, "print the base of the entry's extension recipe with its extend block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  Report rep;
  std::string emitted;
  try {
    if (*check) rep = cmd_check(o);
    else if (*exists) rep = cmd_exists(o);
    else if (*contactize_cmd) rep = cmd_contactize(o, emitted);
    else if (*suite) rep = run_suite(parse_filter(o.filter), o.threads);
    else if (*cat_list) rep = cmd_catalog_list(o);
    else if (*cat_export) {
      std::cout << cmd_catalog_export(o);
      return 0;
    }
  } catch (const Error& e) {
    rep.error = e.what();
    rep.command = echo;
    emit(rep, o.json);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  rep.command = echo;
  if (!emitted.empty() && rep.error.empty()) {
    if (!o.output.empty()) {
      std::ofstream out(o.output);
      if (!out) {
        rep.error = "cannot write '" + o.output + "'";
      } else {
        out << emitted;
        rep.add(rec(rep.records.empty() ? o.file : rep.records.front().subject, "output", Status::Info)
                    .with("written", o.output));
      }
    } else if (o.json) {
      rep.add(rec(rep.records.front().subject, "output", Status::Info).with("algebra", emitted));
    }
  }
  emit(rep, o.json);
  if (!emitted.empty() && o.output.empty() && !o.json && rep.error.empty()) std::cout << emitted;
  if (!rep.error.empty()) std::cerr << "error: " << rep.error << "\n";
  return rep.exit_code();
}
