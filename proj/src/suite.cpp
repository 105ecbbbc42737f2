#include "contactlie/suite.hpp"

#include <atomic>
#include <thread>

#include "contactlie/contact.hpp"
#include "contactlie/io.hpp"
#include "contactlie/obstruct.hpp"

namespace contactlie {

namespace {

std::string format_reeb(const LieAlgebra& L, const FracVector& r) {
  FracVector n = r.normalized();
  std::string s = format_vector(L, n.numerator);
  if (!n.is_polynomial()) s = "(" + s + ") / (" + n.denominator.to_string() + ")";
  return s;
}

std::string format_constraints(const LieAlgebra& L) {
  std::string s;
  for (const auto& c : L.constraints()) s += (s.empty() ? "" : ", ") + c.to_string();
  return s.empty() ? "none" : s;
}

Record record(const CatalogEntry& e, std::string check, Status s) {
  Record r;
  r.subject = e.id;
  r.check = std::move(check);
  r.status = s;
  return r;
}

void form_checks(const CatalogEntry& e, std::vector<Record>& out) {
  for (const auto& form : e.contact_forms) {
    const std::string text = format_covector(e.algebra, form);
    for (const auto& pt : e.evaluation_points()) {
      LieAlgebra L = substitute(e.algebra, pt);
      Vector eta = substitute(form, pt);
      auto v = is_contact_form(L, eta);
      Record r = record(e, "contact-form", v.is_contact ? Status::Pass : Status::Fail);
      r.with("form", text).with("sample", format_assignment(pt)).with("top", v.top.to_string());
      if (v.is_contact) {
        r.with("reeb", format_reeb(L, *v.reeb));
        auto kr = kernel_radical_check(L, eta);
        r.with("kernel-radical", kr.ok());
        if (!kr.ok()) r.status = Status::Fail;
      }
      out.push_back(std::move(r));
    }
    if (!e.parameterized()) continue;
    try {
      auto v = is_contact_form(e.algebra, form);
      Record r = record(e, "constraint-sufficiency", v.nonvanishing_on_locus ? Status::Pass : Status::Finding);
      r.with("form", text).with("top", v.top.to_string()).with("constraints", format_constraints(e.algebra));
      if (!v.nonvanishing_on_locus) r.with("note", "constraints do not keep the top coefficient nonzero");
      out.push_back(std::move(r));
    } catch (const RankInstability& ex) {
      out.push_back(record(e, "constraint-sufficiency", Status::Info).with("form", text).with("note", ex.what()));
    }
  }
  if (e.contact_forms.empty()) return;
  const Vector& form = e.contact_forms.front();
  for (const auto& x : e.excluded) {
    LieAlgebra L = substitute(without_constraints(e.algebra), x.point);
    auto v = is_contact_form(L, substitute(form, x.point));
    Record r = record(e, "excluded-locus", v.is_contact ? Status::Finding : Status::Pass);
    r.with("form", format_covector(e.algebra, form))
        .with("sample", format_assignment(x.point))
        .with("constraint", x.constraint.to_string())
        .with("top", v.top.to_string());
    r.with("note", v.is_contact ? "form stays contact on this excluded locus" : "form degenerates");
    out.push_back(std::move(r));
  }
}

void frobenius_checks(const CatalogEntry& e, std::vector<Record>& out) {
  if (e.frobenius_form) {
    auto v = is_exact_symplectic(e.algebra, *e.frobenius_form);
    out.push_back(record(e, "frobenius-form", v.nondegenerate ? Status::Pass : Status::Fail)
                      .with("form", format_covector(e.algebra, *e.frobenius_form))
                      .with("top", v.top.to_string()));
    if (e.liouville && v.nondegenerate) {
      auto x0 = liouville_vector(e.algebra, *e.frobenius_form).normalized();
      bool ok = x0.is_polynomial() && x0.numerator == *e.liouville;
      out.push_back(record(e, "liouville", ok ? Status::Pass : Status::Fail)
                        .with("expected", format_vector(e.algebra, *e.liouville))
                        .with("computed", format_reeb(e.algebra, x0)));
    }
  }
  if (e.frobenius == Claim::Absent) {
    bool zero = frobenius_polynomial(e.algebra).is_zero();
    out.push_back(record(e, "frobenius-absent", zero ? Status::Pass : Status::Fail).with("polynomial-zero", zero));
  }
}

void extension_checks(const CatalogEntry& e, std::vector<Record>& out) {
  if (!e.extension) return;
  const auto& r = *e.extension;
  LieAlgebra rebuilt = rebuild_from_extension(r);
  bool same = rebuilt.dim() == e.algebra.dim();
  for (std::size_t i = 0; same && i < rebuilt.dim(); ++i)
    for (std::size_t j = 0; same && j < rebuilt.dim(); ++j) same = rebuilt.basis_bracket(i, j) == e.algebra.basis_bracket(i, j);
  out.push_back(record(e, "extension-rebuild", same ? Status::Pass : Status::Fail));

  auto c = contactize(r.base, r.alpha, r.data, r.s);
  Vector mapped(c.eta.size());
  for (std::size_t i = 0; i < r.order.size(); ++i) mapped[r.order[i]] = c.eta[i];
  bool ok = c.verdict.is_contact && c.pullback_matches;
  Record rec = record(e, "contactization", ok ? Status::Pass : Status::Fail);
  rec.with("condition", c.condition.to_string()).with("eta", format_covector(e.algebra, mapped));
  out.push_back(std::move(rec));
}

} // namespace

std::vector<Record> golden_checks(const CatalogEntry& e) {
  std::vector<Record> out;
  auto jac = jacobi_check(e.algebra);
  Record j = record(e, "jacobi", jac.ok ? Status::Pass : Status::Fail);
  if (!jac.ok)
    j.with("triple", "(" + e.algebra.labels()[jac.i] + "," + e.algebra.labels()[jac.j] + "," + e.algebra.labels()[jac.k] + ")");
  out.push_back(std::move(j));
  if (!jac.ok) return out;

  for (const auto& pt : e.evaluation_points()) {
    LieAlgebra L = substitute(e.algebra, pt);
    bool solv = is_solvable(L), nil = is_nilpotent(L);
    Record r = record(e, "flags", solv == e.solvable && nil == e.nilpotent ? Status::Pass : Status::Fail);
    if (!pt.empty()) r.with("sample", format_assignment(pt));
    r.with("solvable", solv).with("nilpotent", nil);
    out.push_back(std::move(r));
  }

  form_checks(e, out);
  if (e.contact == Claim::Absent) {
    bool zero = contact_polynomial(e.algebra).is_zero();
    out.push_back(record(e, "contact-absent", zero ? Status::Pass : Status::Fail).with("polynomial-zero", zero));
  } else if (e.contact == Claim::Exists && e.contact_forms.empty()) {
    auto v = contact_exists(e.algebra, {e.samples});
    Record r = record(e, "contact-exists", v.exists ? Status::Pass : Status::Fail);
    if (v.witness) r.with("witness", format_covector(e.algebra, *v.witness));
    out.push_back(std::move(r));
  }
  frobenius_checks(e, out);
  extension_checks(e, out);
  return out;
}

std::vector<Record> cross_checks(const CatalogEntry& e) {
  std::vector<Record> out;
  for (const auto& pt : e.evaluation_points()) {
    LieAlgebra L = substitute(e.algebra, pt);
    const std::string sample = format_assignment(pt);
    auto tag = [&](Record r) {
      if (!pt.empty()) r.fields.insert(r.fields.begin(), {"sample", sample});
      out.push_back(std::move(r));
    };

    auto bw = orthogonal_contact_cross_check(L);
    Record r = record(e, "orthogonal-contact", bw.ok() ? Status::Pass : Status::Fail);
    r.with("orthogonal", bw.orthogonal).with("contact", bw.contact).with("tripwire", bw.tripwire);
    if (bw.decomposition_checked)
      r.with("kernel-is-line", bw.kernel_is_line).with("kernel-image-direct", bw.kernel_image_direct).with("perfect", bw.perfect);
    tag(std::move(r));

    std::vector<Obstruction> obs;
    if (L.dim() % 2 == 1) obs.push_back(center_obstruction(L).verdict);
    obs.push_back(codim1_abelian_obstruction(L).verdict);
    if (L.dim() >= 2) obs.push_back(rank_one_bracket_detect(L).verdict);
    try {
      obs.push_back(codim1_derived_criteria(L).verdict);
    } catch (const PreconditionError&) {
    }
    for (const auto& o : obs) {
      const std::string check = "obstruction: " + o.name;
      if (!o.no_contact && !o.no_frobenius) {
        tag(record(e, check, Status::Info).with("asserts", "nothing").with("detail", o.detail));
        continue;
      }
      auto c = confirm(L, o);
      bool against_claim = (o.no_contact && e.contact == Claim::Exists) || (o.no_frobenius && e.frobenius == Claim::Exists);
      Record rec = record(e, check, c.agrees() && !against_claim ? Status::Pass : Status::Fail);
      rec.with("asserts", o.no_contact ? "no contact form" : "no Frobenius form").with("detail", o.detail);
      rec.with("polynomial-zero", c.agrees());
      if (against_claim) rec.with("note", "contradicts the entry's existence claim");
      tag(std::move(rec));
    }

    if (L.dim() == 5 && e.solvable && e.nondecomposable) {
      try {
        auto d = dim5_decision(L, true);
        Record dr = record(e, "dim5-decision", d.agrees() ? Status::Pass : Status::Fail);
        dr.with("rule", d.rule).with("predicted", to_string(d.predicted)).with("contact", d.contact_exists);
        tag(std::move(dr));
      } catch (const PreconditionError& ex) {
        tag(record(e, "dim5-decision", Status::Info).with("skipped", ex.what()));
      }
    }
  }
  return out;
}

Report run_suite(const CatalogFilter& filter, unsigned threads) {
  auto entries = list(filter);
  std::vector<std::vector<Record>> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        results[i] = golden_checks(*entries[i]);
        auto more = cross_checks(*entries[i]);
        results[i].insert(results[i].end(), more.begin(), more.end());
      } catch (const std::exception& ex) {
        Record r;
        r.subject = entries[i]->id;
        r.check = "exception";
        r.status = Status::Fail;
        r.with("what", ex.what());
        results[i].push_back(std::move(r));
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Report rep;
  rep.command = "suite";
  for (auto& rs : results) rep.append(std::move(rs));
  return rep;
}

} // namespace contactlie
