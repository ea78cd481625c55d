// Command line driver: loads structure documents, runs verifiers and
// constructions, and prints deterministic reports. Exit codes: 0 when every
// check passes, 1 when a mathematical check fails, 2 for unusable input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hopfpi/builtins.hpp"
#include "hopfpi/coinduction.hpp"
#include "hopfpi/induction.hpp"
#include "hopfpi/structure_file.hpp"
#include "hopfpi/subquotients.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace hopfpi;

/// Command line misuse that CLI11 cannot catch (bad name cross-references,
/// wrong preset parameters, ...). Mapped to exit code 2 like load errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out;
  std::string report = "text";
  std::int64_t seed_cap = 1'000'000;
  int threads = 1;
};

template <class MapT>
const typename MapT::mapped_type& entry(const MapT& m, const std::string& name,
                                        const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) {
    throw ReferenceError(std::string(kind) + " \"" + name + "\" is not in the document");
  }
  return it->second;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw StructureError("cannot write \"" + path + "\"");
  f << text;
}

/// Artifact sink: stdout unless --out names a file.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_file(opt.out, text);
  }
}

void write_witness(const Options& opt, const Json& doc) {
  if (!opt.out.empty()) write_file(opt.out, doc.dump(2) + "\n");
}

/// Renders the reports (and free-form notes) and turns them into the exit
/// code. Reports carry no timing or host information, so repeated runs
/// print identical bytes.
int finish(const Options& opt, const std::vector<Report>& reports,
           const std::vector<std::string>& notes = {}) {
  bool ok = true;
  for (const Report& r : reports) ok = ok && r.ok();
  if (opt.report == "json") {
    Json doc;
    doc["ok"] = ok;
    Json rs = Json::array();
    for (const Report& r : reports) {
      Json jr;
      jr["title"] = r.title();
      jr["ok"] = r.ok();
      Json cs = Json::array();
      for (const Check& c : r.checks()) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        cs.push_back(std::move(jc));
      }
      jr["checks"] = std::move(cs);
      rs.push_back(std::move(jr));
    }
    doc["reports"] = std::move(rs);
    if (!notes.empty()) doc["notes"] = notes;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const Report& r : reports) std::cout << r.to_text();
    for (const std::string& n : notes) std::cout << n << "\n";
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

Report titled(const std::string& title, const Report& body) {
  Report r(title);
  r.merge(body);
  return r;
}

FieldSpec field_arg(const std::string& s) {
  if (s == "rationals" || s == "Q") return FieldSpec::rationals();
  std::int64_t p = 0;
  try {
    p = std::stoll(s);
  } catch (const std::exception&) {
    throw UsageError("--field must be \"rationals\", \"Q\" or a prime, got \"" + s + "\"");
  }
  try {
    return FieldSpec::prime_field(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

void want_params(const std::vector<std::int64_t>& v, std::size_t n, const char* use) {
  if (v.size() != n) throw UsageError(std::string("expected parameters: ") + use);
}

std::string dim_note(const std::string& label, const GroupTable& pi, int a, int d) {
  return "dim " + label + "(" + pi.name(a) + ") = " + std::to_string(d);
}

/// Identity-component coaction axioms, checkable before any induction:
/// coassociativity against Delta_{1,1} and the counit triangle.
Report base_coaction_report(const std::string& title, const PiCoalgebra& c, const Matrix& rho) {
  Report r(title);
  const int dv = rho.cols();
  const int e = c.group->identity();
  const int d1 = c.dims[e];
  r.add("coassoc_square",
        mul_kron_left_id(dv, c.Delta(e, e), rho) == mul_kron_right_id(rho, d1, rho));
  r.add("counit_triangle",
        mul_kron_left_id(dv, c.counit, rho) == Matrix::identity(rho.field(), dv));
  return r;
}

/// The stored convolution inverse really inverts the section:
/// mul (g (x) ginv) Delta^C = unit counit^C componentwise, both orders.
Report stored_inverse_report(const std::string& title, const HopfPiCoalgebra& h,
                             const PiCoalgebra& c, const SectionFamily& sec) {
  Report r(title);
  const GroupTable& pi = *h.coalg.group;
  for (int a = 0; a < pi.order(); ++a) {
    const int ai = pi.inv(a);
    const Matrix rhs = h.unit[a] * c.counit;
    r.add(check_label("stored_inverse_left", {pi.name(a)}),
          h.mul[a] * kron(sec.g[a], sec.ginv[a]) * c.Delta(a, ai) == rhs);
    r.add(check_label("stored_inverse_right", {pi.name(a)}),
          h.mul[a] * kron(sec.ginv[a], sec.g[a]) * c.Delta(ai, a) == rhs);
  }
  return r;
}

Json family_witness(const MatrixFamily& fam, const GroupTable& pi) {
  Json obj = Json::object();
  for (int a = 0; a < pi.order(); ++a) obj[pi.name(a)] = matrix_json(fam[a]);
  return obj;
}

Json comodule_witness(const char* kind, const std::string& name,
                      const std::vector<Subspace>& spaces, const PiComodule& m) {
  const GroupTable& pi = *m.over->group;
  Json doc;
  doc["kind"] = kind;
  doc["comodule"] = name;
  Json dims = Json::object();
  Json sp = Json::object();
  for (int a = 0; a < pi.order(); ++a) {
    dims[pi.name(a)] = spaces[a].dim();
    sp[pi.name(a)] = matrix_json(spaces[a].basis_columns());
  }
  doc["dims"] = std::move(dims);
  doc["spaces"] = std::move(sp);
  Json co = Json::object();
  for (int a = 0; a < pi.order(); ++a) {
    for (int b = 0; b < pi.order(); ++b) {
      co[pi.name(a) + "," + pi.name(b)] = matrix_json(m.Theta(a, b));
    }
  }
  doc["coaction"] = std::move(co);
  return doc;
}

/// Resolves a comodule entry down to its pair and ambient family.
struct ComoduleSite {
  const StructureFile::ComoduleEntry* com;
  const StructureFile::PairEntry* pe;
  const HopfPiCoalgebra* h;
};

ComoduleSite comodule_site(const StructureFile& s, const std::string& name) {
  const auto& com = entry(s.comodules, name, "comodule");
  const auto& pe = entry(s.pairs, com.pair, "pair");
  const auto& h = entry(s.hopfs, pe.hopf, "hopf");
  return {&com, &pe, &h};
}

int cmd_verify(const Options& opt, const std::string& path) {
  if (!opt.out.empty()) throw UsageError("verify produces no artifact; drop --out");
  const StructureFile s = load_structure(path);
  std::vector<Report> reports;

  for (const auto& [name, h] : s.hopfs) {
    Report r("hopf " + name);
    r.merge(verify_pi_coalgebra(h.coalg));
    r.merge(verify_hopf(h));
    r.merge(verify_lemma34(h));
    reports.push_back(std::move(r));
  }
  for (const auto& [name, pe] : s.pairs) {
    const auto& h = entry(s.hopfs, pe.hopf, "hopf");
    Report r("pair " + name);
    r.merge(verify_L_identities(h, pe.pair));
    if (pe.pair.omega) r.merge(check_coisotropic(h, pe.pair));
    if (!pe.quotient.empty()) {
      r.merge(check_subcoalgebra_pair(h, entry(s.hopfs, pe.quotient, "hopf"), pe.pair.sigma));
    }
    reports.push_back(std::move(r));
  }
  for (const auto& [name, com] : s.comodules) {
    const auto& pe = entry(s.pairs, com.pair, "pair");
    reports.push_back(base_coaction_report("comodule " + name, pe.pair.c, com.matrix));
  }
  for (const auto& [name, ce] : s.coideals) {
    const auto& h = entry(s.hopfs, ce.hopf, "hopf");
    reports.push_back(
        titled("coideal " + name, check_pi_coideal(h.coalg, ce.spans)));
  }
  for (const auto& [name, se] : s.sections) {
    const auto& pe = entry(s.pairs, se.pair, "pair");
    const auto& h = entry(s.hopfs, pe.hopf, "hopf");
    Report r("section " + name);
    if (!pe.quotient.empty()) {
      r.merge(check_section_subcoalgebra(h, entry(s.hopfs, pe.quotient, "hopf"), pe.pair.sigma,
                                         se.family.g));
    } else {
      r.merge(check_section_coisotropic(h, pe.pair, se.family.g));
    }
    r.merge(stored_inverse_report("", h, pe.pair.c, se.family));
    reports.push_back(std::move(r));
  }
  for (const auto& [name, ce] : s.cosections) {
    const auto& h = entry(s.hopfs, ce.hopf, "hopf");
    reports.push_back(titled("cosection " + name, check_cosection(h, ce.maps)));
  }
  return finish(opt, reports);
}

int cmd_quotient(const Options& opt, const std::string& path, const std::string& hopf_name,
                 const std::string& coideal_name) {
  const StructureFile s = load_structure(path);
  const auto& h = entry(s.hopfs, hopf_name, "hopf");
  const auto& ce = entry(s.coideals, coideal_name, "coideal");
  if (ce.hopf != hopf_name) {
    throw UsageError("coideal \"" + coideal_name + "\" belongs to hopf \"" + ce.hopf + "\"");
  }
  const GroupTable& pi = *h.coalg.group;

  Report r("quotient by " + coideal_name);
  r.merge(check_pi_coideal(h.coalg, ce.spans));
  if (!r.ok()) return finish(opt, {r});

  StructureFile doc;
  doc.field = s.field;
  doc.group = s.group;
  doc.hopfs[hopf_name] = h;
  doc.coideals[coideal_name] = ce;

  std::vector<std::string> notes;
  SubgroupPair pair;
  // A Hopf coideal gives a quotient with products and a left action; a
  // one-sided family still quotients, but only as a coalgebra pair.
  if (check_hopf_pi_coideal(h, ce.spans).ok()) {
    HopfPiCoalgebra q;
    pair = coisotropic_from_quotient(h, ce.spans, &q);
    r.merge(verify_hopf(q));
    r.merge(check_coisotropic(h, pair));
    doc.hopfs[coideal_name + "_quotient"] = std::move(q);
    doc.pairs[coideal_name + "_pair"] = {hopf_name, coideal_name + "_quotient", pair};
  } else {
    pair = quotient_pair(h, ce.spans);
    r.merge(verify_pi_coalgebra(pair.c));
    r.merge(verify_L_identities(h, pair));
    doc.pairs[coideal_name + "_pair"] = {hopf_name, "", pair};
    notes.push_back("pair carries no action (the family is not a Hopf coideal)");
  }
  for (int a = 0; a < pi.order(); ++a) notes.push_back(dim_note("C", pi, a, pair.c.dims[a]));
  if (!opt.out.empty()) write_file(opt.out, emit_structure(doc));
  return finish(opt, {r}, notes);
}

int cmd_induce(const Options& opt, const std::string& path, const std::string& name) {
  const StructureFile s = load_structure(path);
  const ComoduleSite site = comodule_site(s, name);
  const InducedComodule ind = induce(*site.h, site.pe->pair, site.com->matrix);
  const GroupTable& pi = *site.h->coalg.group;
  std::vector<std::string> notes;
  for (int a = 0; a < pi.order(); ++a) notes.push_back(dim_note("Ind", pi, a, ind.dim(a)));
  write_witness(opt, comodule_witness("induced", name, ind.spaces, ind.comodule));
  return finish(opt, {titled("induce " + name, ind.checks)}, notes);
}

int cmd_coinduce(const Options& opt, const std::string& path, const std::string& name) {
  const StructureFile s = load_structure(path);
  const ComoduleSite site = comodule_site(s, name);
  const CoinducedComodule w = coinduce(*site.h, site.pe->pair, site.com->matrix);
  Report r = titled("coinduce " + name, w.checks);
  r.merge(verify_basis_independence(*site.h, w));
  const GroupTable& pi = *site.h->coalg.group;
  std::vector<std::string> notes;
  for (int a = 0; a < pi.order(); ++a) notes.push_back(dim_note("Coind", pi, a, w.dim(a)));
  write_witness(opt, comodule_witness("coinduced", name, w.spaces, w.comodule));
  return finish(opt, {std::move(r)}, notes);
}

int cmd_simplicity(const Options& opt, const std::string& path, const std::string& name,
                   bool coinduced) {
  const StructureFile s = load_structure(path);
  const ComoduleSite site = comodule_site(s, name);
  const GroupTable& pi = *site.h->coalg.group;

  Report r;
  PiComodule m;
  std::string label;
  if (coinduced) {
    const CoinducedComodule w = coinduce(*site.h, site.pe->pair, site.com->matrix);
    r = titled("coinduce " + name, w.checks);
    m = w.comodule;
    label = "Coind(" + name + ")";
  } else {
    const InducedComodule ind = induce(*site.h, site.pe->pair, site.com->matrix);
    r = titled("induce " + name, ind.checks);
    m = ind.comodule;
    label = "Ind(" + name + ")";
  }

  SimplicityOptions sopt;
  sopt.seed_cap = opt.seed_cap;
  sopt.threads = opt.threads;
  const SimplicityVerdict v = is_simple(m, sopt);

  std::vector<std::string> notes;
  for (int a = 0; a < pi.order(); ++a) notes.push_back(dim_note(label, pi, a, m.dims[a]));
  notes.push_back(label + ": " + v.describe(pi));

  if (!opt.out.empty()) {
    Json doc;
    doc["kind"] = "simplicity";
    doc["comodule"] = name;
    doc["construction"] = coinduced ? "coinduced" : "induced";
    doc["verdict"] = v.describe(pi);
    doc["simple"] = v.simple;
    doc["exact"] = v.exact;
    if (!v.simple) {
      doc["witness_component"] = pi.name(v.witness_component);
      doc["witness_seed"] = matrix_json(v.witness_seed);
      Json fam = Json::object();
      for (int a = 0; a < pi.order(); ++a) {
        fam[pi.name(a)] = matrix_json(v.witness[a].basis_columns());
      }
      doc["witness_family"] = std::move(fam);
    }
    write_file(opt.out, doc.dump(2) + "\n");
  }
  return finish(opt, {std::move(r)}, notes);
}

/// Shared tail of the three factorization commands.
int coset_finish(const Options& opt, std::vector<Report> reports, const CosetWitness& w,
                 const GroupTable& pi, const char* kind) {
  reports.push_back(titled("factorization", w.checks));
  std::vector<std::string> notes;
  for (int a = 0; a < pi.order(); ++a) notes.push_back(dim_note("B", pi, a, w.space.dim(a)));
  if (!opt.out.empty()) {
    Json doc;
    doc["kind"] = kind;
    doc["a"] = family_witness(w.a, pi);
    doc["ainv"] = family_witness(w.ainv, pi);
    write_file(opt.out, doc.dump(2) + "\n");
  }
  return finish(opt, reports, notes);
}

int cmd_iso_cb(const Options& opt, const std::string& path, const std::string& pair_name,
               const std::string& sec_name) {
  const StructureFile s = load_structure(path);
  const auto& pe = entry(s.pairs, pair_name, "pair");
  if (pe.quotient.empty()) {
    throw UsageError("pair \"" + pair_name +
                     "\" presents its quotient inline; iso-cb needs a named hopf "
                     "presentation (try iso-cg)");
  }
  const auto& h = entry(s.hopfs, pe.hopf, "hopf");
  const auto& c = entry(s.hopfs, pe.quotient, "hopf");
  const auto& se = entry(s.sections, sec_name, "section");
  if (se.pair != pair_name) {
    throw UsageError("section \"" + sec_name + "\" belongs to pair \"" + se.pair + "\"");
  }
  std::vector<Report> reports;
  reports.push_back(
      titled("section identities", verify_section_identities(h, c, pe.pair.sigma, se.family)));
  const CosetWitness w = iso_CB(h, c, pe.pair.sigma, se.family);
  return coset_finish(opt, std::move(reports), w, *h.coalg.group, "coinvariant-factorization");
}

int cmd_iso_cg(const Options& opt, const std::string& path, const std::string& pair_name,
               const std::string& sec_name) {
  const StructureFile s = load_structure(path);
  const auto& pe = entry(s.pairs, pair_name, "pair");
  const auto& h = entry(s.hopfs, pe.hopf, "hopf");
  const auto& se = entry(s.sections, sec_name, "section");
  if (se.pair != pair_name) {
    throw UsageError("section \"" + sec_name + "\" belongs to pair \"" + se.pair + "\"");
  }
  std::vector<Report> reports;
  reports.push_back(
      titled("section conditions", check_section_coisotropic(h, pe.pair, se.family.g)));
  const CosetWitness w = iso_CG(h, pe.pair, se.family);
  return coset_finish(opt, std::move(reports), w, *h.coalg.group, "pair-factorization");
}

int cmd_iso_vb(const Options& opt, const std::string& path, const std::string& com_name,
               const std::string& sec_name, const std::string& eta_name) {
  const StructureFile s = load_structure(path);
  const ComoduleSite site = comodule_site(s, com_name);
  const auto& se = entry(s.sections, sec_name, "section");
  if (se.pair != site.com->pair) {
    throw UsageError("section \"" + sec_name + "\" belongs to pair \"" + se.pair + "\"");
  }
  const auto& ce = entry(s.cosections, eta_name, "cosection");
  if (ce.hopf != site.pe->hopf) {
    throw UsageError("cosection \"" + eta_name + "\" belongs to hopf \"" + ce.hopf + "\"");
  }
  const HopfPiCoalgebra& h = *site.h;
  const GroupTable& pi = *h.coalg.group;

  std::vector<Report> reports;
  reports.push_back(titled("cosection", check_cosection(h, ce.maps)));
  const InducedComodule ind = induce(h, site.pe->pair, site.com->matrix);
  reports.push_back(titled("induce " + com_name, ind.checks));
  const VBWitness w = iso_VB(h, site.pe->pair, se.family, ce.maps, ind);
  reports.push_back(titled("factorization", w.checks));

  std::vector<std::string> notes;
  for (int a = 0; a < pi.order(); ++a) notes.push_back(dim_note("B", pi, a, w.space.dim(a)));
  if (!opt.out.empty()) {
    Json doc;
    doc["kind"] = "induced-factorization";
    doc["comodule"] = com_name;
    doc["q"] = family_witness(w.q, pi);
    doc["qinv"] = family_witness(w.qinv, pi);
    write_file(opt.out, doc.dump(2) + "\n");
  }
  return finish(opt, reports, notes);
}

Matrix load_matrix_file(const std::string& path, FieldSpec f, int rows, int cols) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructureError("cannot open \"" + path + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  Json j;
  try {
    j = Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  return matrix_from_json(j, f, rows, cols, "matrix file");
}

int cmd_equiv(const Options& opt, const std::string& path, const std::string& name_a,
              const std::string& name_b, const std::string& f1_path, bool coinduced) {
  const StructureFile s = load_structure(path);
  const ComoduleSite a = comodule_site(s, name_a);
  const ComoduleSite b = comodule_site(s, name_b);
  if (a.com->pair != b.com->pair) {
    throw UsageError("comodules \"" + name_a + "\" and \"" + name_b +
                     "\" live over different pairs");
  }
  const Matrix f1 = load_matrix_file(f1_path, s.field, b.com->matrix.cols(),
                                     a.com->matrix.cols());

  std::vector<Report> reports;
  EquivalenceWitness wit;
  if (coinduced) {
    const CoinducedComodule v = coinduce(*a.h, a.pe->pair, a.com->matrix);
    const CoinducedComodule w = coinduce(*b.h, b.pe->pair, b.com->matrix);
    reports.push_back(titled("coinduce " + name_a, v.checks));
    reports.push_back(titled("coinduce " + name_b, w.checks));
    wit = coind_equivalence(f1, v, w);
  } else {
    const InducedComodule v = induce(*a.h, a.pe->pair, a.com->matrix);
    const InducedComodule w = induce(*b.h, b.pe->pair, b.com->matrix);
    reports.push_back(titled("induce " + name_a, v.checks));
    reports.push_back(titled("induce " + name_b, w.checks));
    wit = induced_equivalence(f1, v, w);
  }
  reports.push_back(titled("equivalence", wit.checks));

  std::vector<std::string> notes;
  notes.push_back(wit.ok ? "intertwiner accepted" : "intertwiner refused");
  if (!opt.out.empty()) {
    Json doc;
    doc["kind"] = "equivalence";
    doc["ok"] = wit.ok;
    doc["residual"] = matrix_json(wit.residual);
    if (wit.ok) doc["maps"] = family_witness(wit.maps, *a.h->coalg.group);
    write_file(opt.out, doc.dump(2) + "\n");
  }
  return finish(opt, reports, notes);
}

int cmd_direct_sum(const Options& opt, const std::string& path, const std::string& name_v,
                   const std::string& name_w, const std::string& name_vw, bool coinduced) {
  const StructureFile s = load_structure(path);
  const ComoduleSite v = comodule_site(s, name_v);
  const ComoduleSite w = comodule_site(s, name_w);
  const ComoduleSite vw = comodule_site(s, name_vw);
  if (v.com->pair != w.com->pair || v.com->pair != vw.com->pair) {
    throw UsageError("direct-sum needs all three comodules over one pair");
  }
  const GroupTable& pi = *v.h->coalg.group;

  std::vector<Report> reports;
  std::vector<int> dv, dw, dvw;
  MatrixFamily theta;
  Report sum_checks;
  if (coinduced) {
    const CoinducedComodule cv = coinduce(*v.h, v.pe->pair, v.com->matrix);
    const CoinducedComodule cw = coinduce(*w.h, w.pe->pair, w.com->matrix);
    const CoinducedComodule cvw = coinduce(*vw.h, vw.pe->pair, vw.com->matrix);
    reports.push_back(titled("coinduce " + name_v, cv.checks));
    reports.push_back(titled("coinduce " + name_w, cw.checks));
    reports.push_back(titled("coinduce " + name_vw, cvw.checks));
    const DirectSumWitness dsw = coind_direct_sum_iso(cv, cw, cvw);
    sum_checks = dsw.checks;
    theta = dsw.theta;
    dv = cv.comodule.dims;
    dw = cw.comodule.dims;
    dvw = cvw.comodule.dims;
  } else {
    const InducedComodule iv = induce(*v.h, v.pe->pair, v.com->matrix);
    const InducedComodule iw = induce(*w.h, w.pe->pair, w.com->matrix);
    const InducedComodule ivw = induce(*vw.h, vw.pe->pair, vw.com->matrix);
    reports.push_back(titled("induce " + name_v, iv.checks));
    reports.push_back(titled("induce " + name_w, iw.checks));
    reports.push_back(titled("induce " + name_vw, ivw.checks));
    const DirectSumWitness dsw = induce_direct_sum_iso(iv, iw, ivw);
    sum_checks = dsw.checks;
    theta = dsw.theta;
    dv = iv.comodule.dims;
    dw = iw.comodule.dims;
    dvw = ivw.comodule.dims;
  }
  reports.push_back(titled("direct sum", sum_checks));

  std::vector<std::string> notes;
  for (int a = 0; a < pi.order(); ++a) {
    notes.push_back("dim(" + pi.name(a) + "): " + std::to_string(dv[a]) + " + " +
                    std::to_string(dw[a]) + " vs " + std::to_string(dvw[a]));
  }
  if (!opt.out.empty()) {
    Json doc;
    doc["kind"] = "direct-sum";
    doc["theta"] = family_witness(theta, pi);
    write_file(opt.out, doc.dump(2) + "\n");
  }
  return finish(opt, reports, notes);
}

MirrorBundle mirror_arg(const std::string& kind, const std::vector<std::int64_t>& params,
                        FieldSpec f) {
  if (kind == "group") {
    want_params(params, 1, "group N");
    return group_algebra_family(static_cast<int>(params[0]), f);
  }
  if (kind == "taft") {
    want_params(params, 3, "taft N P Q");
    return taft_mirror(static_cast<int>(params[0]), params[1], params[2]);
  }
  throw UsageError("mirror kinds: group, taft");
}

int cmd_mirror(const Options& opt, const std::string& kind,
               const std::vector<std::int64_t>& params, FieldSpec f) {
  const MirrorBundle mb = mirror_arg(kind, params, f);
  const GroupTable& pi = *mb.hopf.coalg.group;

  std::vector<Report> reports;
  reports.push_back(titled("input algebra", verify_classical_hopf(mb.base)));
  reports.push_back(titled("group action", verify_action(mb.base, mb.action)));
  Report r("mirror family");
  r.merge(verify_pi_coalgebra(mb.hopf.coalg));
  r.merge(verify_hopf(mb.hopf));
  r.merge(verify_lemma34(mb.hopf));
  reports.push_back(std::move(r));

  std::vector<std::string> notes;
  for (int a = 0; a < pi.order(); ++a) notes.push_back(dim_note("H", pi, a, mb.hopf.dim(a)));
  if (!opt.out.empty()) {
    StructureFile doc;
    doc.field = mb.hopf.field();
    doc.group = mb.hopf.coalg.group;
    doc.hopfs["mirror"] = mb.hopf;
    doc.cosections["eta"] = {"mirror", mirror_cosection(mb)};
    write_file(opt.out, emit_structure(doc));
  }
  return finish(opt, reports, notes);
}

StructureFile example_doc(const std::string& kind, const std::vector<std::int64_t>& params,
                          FieldSpec f) {
  StructureFile doc;
  doc.field = f;
  if (kind == "trivial") {
    want_params(params, 0, "trivial");
    HopfPiCoalgebra h = trivial_pi(f);
    doc.group = h.coalg.group;
    doc.hopfs["trivial"] = std::move(h);
    return doc;
  }
  if (kind == "group" || kind == "taft") {
    const MirrorBundle mb = mirror_arg(kind, params, f);
    doc.field = mb.hopf.field();
    doc.group = mb.hopf.coalg.group;
    doc.cosections["eta"] = {kind, mirror_cosection(mb)};
    doc.hopfs[kind] = mb.hopf;
    return doc;
  }
  if (kind == "group-pair") {
    want_params(params, 2, "group-pair N M");
    const int n = static_cast<int>(params[0]);
    const int d = static_cast<int>(params[1]);
    GroupQuotientBundle b = group_algebra_pair(n, d, f);
    doc.group = b.hopf.coalg.group;
    doc.cosections["eta"] = {"H", mirror_cosection(group_algebra_family(n, f))};
    doc.hopfs["H"] = b.hopf;
    doc.hopfs["C"] = b.sub;
    doc.pairs["pair"] = {"H", "C", b.pair};
    doc.sections["coset"] = {"pair", b.section};
    // Line comodules with group-like coactions; v0 is the trivial one.
    const int d1 = b.sub.coalg.dims[0];
    Matrix v0(doc.field, d1, 1);
    v0.set_int(0, 0, 1);
    doc.comodules["v0"] = {"pair", v0};
    if (d >= 2) {
      Matrix v1(doc.field, d1, 1);
      v1.set_int(1, 0, 1);
      doc.comodules["v1"] = {"pair", v1};
      // Block coaction e_j -> e_j (x) v^j, the direct sum of v0 and v1.
      Matrix v01(doc.field, 2 * d1, 2);
      v01.set_int(0, 0, 1);
      v01.set_int(d1 + 1, 1, 1);
      doc.comodules["v0v1"] = {"pair", v01};
    }
    return doc;
  }
  if (kind == "taft-quotient") {
    want_params(params, 3, "taft-quotient N P Q");
    TaftQuotientBundle b = taft_quotient_bundle(static_cast<int>(params[0]),
                                                static_cast<int>(params[1]),
                                                static_cast<int>(params[2]));
    doc.field = b.hopf.field();
    doc.group = b.hopf.coalg.group;
    doc.hopfs["taft"] = b.hopf;
    doc.coideals["xideal"] = {"taft", b.coideal};
    doc.comodules["trivial"] = {"pair", b.quotient.onto[0] * b.hopf.unit[0]};
    doc.pairs["pair"] = {"taft", "", std::move(b.pair)};
    return doc;
  }
  if (kind == "taft-isolated") {
    want_params(params, 3, "taft-isolated N P Q");
    TaftIsolatedBundle b = taft_isolated_bundle(static_cast<int>(params[0]),
                                                static_cast<int>(params[1]),
                                                static_cast<int>(params[2]));
    doc.field = b.hopf.field();
    doc.group = b.hopf.coalg.group;
    doc.hopfs["taft"] = b.hopf;
    doc.hopfs["xpart"] = b.subhopf;
    doc.coideals["gideal"] = {"taft", b.ideal};
    doc.comodules["trivial"] = {"pair", b.subhopf.unit[0]};
    doc.pairs["pair"] = {"taft", "xpart", std::move(b.pair)};
    return doc;
  }
  throw UsageError(
      "example kinds: trivial, group, taft, group-pair, taft-quotient, taft-isolated");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for group-graded Hopf structure families"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--out", opt.out, "write the produced document or witness to this file");
  app.add_option("--report", opt.report, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed-cap", opt.seed_cap, "seed budget for the subcomodule search");
  app.add_option("--threads", opt.threads, "worker threads for the subcomodule search")
      ->check(CLI::Range(1, 64));

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string path, arg1, arg2, arg3;
  bool coinduced = false;
  std::string kind, field_str = "rationals";
  std::vector<std::int64_t> params;

  CLI::App* verify = sub("verify", "check every entry of a document against its axioms");
  verify->add_option("file", path)->required();

  CLI::App* quotient = sub("quotient", "divide a family by a coideal and report the pair");
  quotient->add_option("file", path)->required();
  quotient->add_option("hopf", arg1)->required();
  quotient->add_option("coideal", arg2)->required();

  CLI::App* induce_cmd = sub("induce", "induce a comodule from its base coaction");
  induce_cmd->add_option("file", path)->required();
  induce_cmd->add_option("comodule", arg1)->required();

  CLI::App* coinduce_cmd =
      sub("coinduce", "coinduce a comodule and check basis independence");
  coinduce_cmd->add_option("file", path)->required();
  coinduce_cmd->add_option("comodule", arg1)->required();

  CLI::App* simplicity = sub("simplicity", "search an induced comodule for subcomodules");
  simplicity->add_option("file", path)->required();
  simplicity->add_option("comodule", arg1)->required();
  simplicity->add_flag("--coinduced", coinduced, "analyze the coinduced comodule instead");

  CLI::App* iso_cb = sub("iso-cb", "factor a family through named-quotient coinvariants");
  iso_cb->add_option("file", path)->required();
  iso_cb->add_option("pair", arg1)->required();
  iso_cb->add_option("section", arg2)->required();

  CLI::App* iso_cg = sub("iso-cg", "factor a family through pair coinvariants");
  iso_cg->add_option("file", path)->required();
  iso_cg->add_option("pair", arg1)->required();
  iso_cg->add_option("section", arg2)->required();

  CLI::App* iso_vb = sub("iso-vb", "factor an induced comodule through coinvariants");
  iso_vb->add_option("file", path)->required();
  iso_vb->add_option("comodule", arg1)->required();
  iso_vb->add_option("section", arg2)->required();
  iso_vb->add_option("cosection", arg3)->required();

  CLI::App* equiv = sub("equiv", "extend a base intertwiner to the (co)induced comodules");
  equiv->add_option("file", path)->required();
  equiv->add_option("from", arg1)->required();
  equiv->add_option("to", arg2)->required();
  equiv->add_option("f1", arg3, "JSON file holding the base matrix")->required();
  equiv->add_flag("--coinduced", coinduced, "use coinduction instead of induction");

  CLI::App* direct_sum =
      sub("direct-sum", "compare (co)induction of a sum with the sum of (co)inductions");
  direct_sum->add_option("file", path)->required();
  direct_sum->add_option("left", arg1)->required();
  direct_sum->add_option("right", arg2)->required();
  direct_sum->add_option("sum", arg3)->required();
  direct_sum->add_flag("--coinduced", coinduced, "use coinduction instead of induction");

  CLI::App* mirror = sub("mirror", "build a family from a Hopf algebra with a group action");
  mirror->add_option("kind", kind, "group | taft")->required();
  mirror->add_option("params", params, "numeric parameters of the kind");
  mirror->add_option("--field", field_str, "coefficient field: rationals | Q | a prime");

  CLI::App* example = sub("example", "emit a built-in structure document");
  example->add_option("kind", kind,
                      "trivial | group | taft | group-pair | taft-quotient | taft-isolated")
      ->required();
  example->add_option("params", params, "numeric parameters of the kind");
  example->add_option("--field", field_str, "coefficient field: rationals | Q | a prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, path);
    if (quotient->parsed()) return cmd_quotient(opt, path, arg1, arg2);
    if (induce_cmd->parsed()) return cmd_induce(opt, path, arg1);
    if (coinduce_cmd->parsed()) return cmd_coinduce(opt, path, arg1);
    if (simplicity->parsed()) return cmd_simplicity(opt, path, arg1, coinduced);
    if (iso_cb->parsed()) return cmd_iso_cb(opt, path, arg1, arg2);
    if (iso_cg->parsed()) return cmd_iso_cg(opt, path, arg1, arg2);
    if (iso_vb->parsed()) return cmd_iso_vb(opt, path, arg1, arg2, arg3);
    if (equiv->parsed()) return cmd_equiv(opt, path, arg1, arg2, arg3, coinduced);
    if (direct_sum->parsed()) return cmd_direct_sum(opt, path, arg1, arg2, arg3, coinduced);
    const auto forbid_taft_field = [&](const CLI::App* cmd) {
      if (cmd->count("--field") > 0 && kind.rfind("taft", 0) == 0) {
        throw UsageError("taft presets fix the field to GF(P); drop --field");
      }
    };
    if (mirror->parsed()) {
      forbid_taft_field(mirror);
      return cmd_mirror(opt, kind, params, field_arg(field_str));
    }
    if (example->parsed()) {
      forbid_taft_field(example);
      const std::string text = emit_structure(example_doc(kind, params, field_arg(field_str)));
      emit(opt, text);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
