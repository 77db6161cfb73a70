// nc: command line front end for the ncalg library.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or engine error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ncalg/acceptance.hpp"
#include "ncalg/catalog.hpp"
#include "ncalg/error.hpp"
#include "ncalg/idealtools.hpp"
#include "ncalg/qtorus.hpp"

using namespace ncalg;

namespace {

struct Config {
  std::string algebra, element, expr, poisson, degeneration, type, id, out, order, method = "auto";
  std::string mode = "graded", potential, gens;
  std::vector<std::string> params;
  std::vector<int> criteria;
  int bound = 0, margin = 2, trials = 5, max_degree = 4;
  std::uint64_t seed = 0;
  bool json = false, certificate = false, quantum = false, classical = false, as_printed = false;
  bool manifest = false, timings = false;
};

// Report under construction: text lines and the JSON object side by side.
struct Report {
  Json j = Json::object();
  std::vector<std::string> text;
  bool pass = true;

  void line(const std::string& s) { text.push_back(s); }
  void check(bool ok, const std::string& s) {
    pass = pass && ok;
    text.push_back(std::string(ok ? "PASS " : "FAIL ") + s);
  }
  int emit(const Config& c) {
    j["pass"] = pass;
    if (c.json)
      std::cout << j.dump(2) << "\n";
    else
      for (auto& s : text) std::cout << s << "\n";
    return pass ? 0 : 1;
  }
};

Bindings parse_params(const std::vector<std::string>& ps) {
  Bindings b;
  for (auto& p : ps) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::InvalidArgument, "--param expects name=value, got '" + p + "'");
    b[p.substr(0, eq)] = Scalar::parse(p.substr(eq + 1));
  }
  return b;
}

MonomialOrder parse_order(const std::string& s, const Alphabet& gens) {
  std::vector<int> prec;
  std::stringstream in(s);
  std::string name;
  while (std::getline(in, name, '>')) {
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) throw Error(ErrorKind::InvalidArgument, "--order: unknown generator " + name);
    prec.push_back(int(it - gens.begin()));
  }
  if (prec.size() != gens.size())
    throw Error(ErrorKind::InvalidArgument, "--order must rank every generator");
  return MonomialOrder(prec);
}

AlgebraPreset load_algebra(const Config& c, Report& r) {
  if (c.algebra.empty()) throw Error(ErrorKind::InvalidArgument, "--algebra is required");
  AlgebraPreset p = algebra_preset(c.algebra, parse_params(c.params));
  if (!c.order.empty()) p.order = parse_order(c.order, p.rels.gens);
  r.j["algebra"] = p.id;
  r.j["anchors"] = p.anchors;
  r.j["assumptions"] = p.assumptions;
  r.j["order"] = p.order.str(p.rels.gens);
  r.j["bindings"] = bindings_json(p.rels.params);
  if (!p.warnings.empty()) r.j["warnings"] = p.warnings;
  r.line("algebra " + p.id + "  [" + [&] {
           std::string s;
           for (auto& a : p.anchors) s += (s.empty() ? "" : ", ") + a;
           return s;
         }() + "]");
  for (auto& w : p.warnings) r.line("warning: " + w);
  return p;
}

void put_assumptions(Report& r, const RewriteSystem& rs) {
  Json a = r.j["assumptions"].is_array() ? r.j["assumptions"] : Json::array();
  for (auto& s : rs.assumptions()) {
    a.push_back(s);
    r.line("assumption: " + s);
  }
  r.j["assumptions"] = a;
}

// ---------------------------------------------------------------- commands

int cmd_check_central(const Config& c) {
  Report r;
  auto p = load_algebra(c, r);
  NcPoly z;
  if (!c.expr.empty()) {
    z = NcPoly::parse(p.rels.gens, c.expr);
    r.j["element"] = "expr";
  } else {
    if (c.element.empty()) throw Error(ErrorKind::InvalidArgument, "--element or --expr is required");
    auto& cand = p.candidate(c.element);
    z = cand.element;
    r.j["element"] = cand.name;
    r.j["element_anchor"] = cand.anchor;
    r.j["as_printed"] = cand.as_printed;
    if (!cand.note.empty()) r.j["note"] = cand.note;
  }
  r.j["element_text"] = z.str();
  int bound = c.bound ? c.bound : z.degree() + 1;
  bool done = false;
  if (c.method == "rewrite" || c.method == "auto") {
    auto rs = orient(p.rels, p.order);
    auto rep = confluence_check(rs, std::max(6, z.degree() + 2));
    put_assumptions(r, rs);
    if (rep.status == ConfluenceReport::Status::Confluent) {
      bool ok = central_by_rewrite(rs, z);
      r.j["method"] = "rewrite";
      r.j["confluence"] = confluence_json(rep);
      r.check(ok, r.j["element"].get<std::string>() + " central by rewriting (symbolic)");
      done = true;
    } else if (c.method == "rewrite") {
      throw Error(ErrorKind::NotConfluent, "rewriting system is not confluent at bound " +
                                               std::to_string(rep.bound));
    } else {
      r.line("not confluent; falling back to the ideal method with margin " + std::to_string(c.margin));
      r.j["fallback"] = "not confluent";
    }
  }
  if (!done) {
    if (c.method != "ideal" && c.method != "auto")
      throw Error(ErrorKind::InvalidArgument, "--method must be rewrite, ideal or auto");
    auto rep = central_by_ideal(p.rels, z, bound, c.margin, c.trials, c.seed);
    r.j["method"] = "ideal";
    r.j["report"] = central_json(rep);
    for (auto& t : rep.trials) {
      std::string s = "trial seed " + std::to_string(t.seed) + ":";
      for (bool b : t.commutes) s += b ? " yes" : " no";
      if (!t.error.empty()) s += " (" + t.error + ")";
      r.line(s);
    }
    r.check(rep.central, r.j["element"].get<std::string>() + ": " + rep.verdict + " (bound " +
                             std::to_string(bound) + ", margin " + std::to_string(c.margin) + ")");
    if (c.certificate && rep.central) {
      // certificates at the first specialisation (symbolic when trials were not drawn)
      RelationSet rels = rep.trials.empty() ? p.rels : p.rels.specialized(rep.trials.front().bindings);
      NcPoly zz = rep.trials.empty() ? z : z.map_coeffs([&](const Scalar& s) {
        return specialize(s, rep.trials.front().bindings);
      });
      Json certs = Json::array();
      for (int i = 0; i < int(rels.gens.size()); ++i) {
        auto m = contains(rels, commutator(zz, NcPoly::gen(rels.gens, i)), bound, c.margin, true);
        Json terms = Json::array();
        for (auto& t : m.certificate)
          terms.push_back({{"coeff", t.coeff.str()},
                           {"left", NcPoly::word(rels.gens, t.left).str()},
                           {"relation", t.relation + 1},
                           {"right", NcPoly::word(rels.gens, t.right).str()}});
        bool verified = m.found && expand_certificate(rels, m.certificate) ==
                                       commutator(zz, NcPoly::gen(rels.gens, i));
        certs.push_back({{"generator", rels.gens[std::size_t(i)]}, {"verified", verified}, {"terms", terms}});
        r.check(verified, "certificate for [z, " + rels.gens[std::size_t(i)] + "] expands back (" +
                              std::to_string(m.certificate.size()) + " terms)");
      }
      r.j["certificates"] = certs;
    }
  }
  return r.emit(c);
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

int cmd_hilbert(const Config& c) {
  Report r;
  auto p = load_algebra(c, r);
  std::vector<std::size_t> d;
  if (c.mode == "graded")
    d = graded_dims(p.rels, c.max_degree);
  else if (c.mode == "filtered")
    d = filtered_dims(p.rels, c.max_degree, c.margin);
  else
    throw Error(ErrorKind::InvalidArgument, "--mode must be graded or filtered");
  r.j["mode"] = c.mode;
  r.j["max_degree"] = c.max_degree;
  if (c.mode == "filtered") r.j["margin"] = c.margin;
  r.j["dims"] = d;
  bool phs = true;
  for (std::size_t k = 0; k < d.size(); ++k) phs = phs && d[k] == (k + 1) * (k + 2) / 2;
  r.j["matches_polynomial_ring"] = phs;
  r.line(c.mode + " dims " + dims_str(d));
  r.line(std::string("matches 1/(1-t)^3: ") + (phs ? "yes" : "no"));
  return r.emit(c);
}

int cmd_confluence(const Config& c) {
  Report r;
  auto p = load_algebra(c, r);
  auto rs = orient(p.rels, p.order);
  put_assumptions(r, rs);
  auto rep = confluence_check(rs, c.bound ? c.bound : 6);
  r.j["confluence"] = confluence_json(rep);
  Json rules = Json::array();
  for (auto& rule : rs.rules()) {
    auto lead = NcPoly::word(p.rels.gens, rule.lead).str();
    rules.push_back({{"lead", lead}, {"tail", rule.tail.str()}});
    r.line("rule " + lead + " -> " + rule.tail.str());
  }
  r.j["rules"] = rules;
  r.check(rep.status == ConfluenceReport::Status::Confluent,
          "confluence at bound " + std::to_string(rep.bound) + ": " + rep.status_name());
  return r.emit(c);
}

int cmd_derive_relations(const Config& c) {
  Report r;
  CyclicPotential phi;
  std::vector<NcPoly> stored;
  if (!c.potential.empty()) {
    Alphabet g = c.gens.empty() ? default_alphabet('X') : [&] {
      Alphabet a;
      std::stringstream in(c.gens);
      std::string s;
      while (std::getline(in, s, ',')) a.push_back(s);
      return a;
    }();
    phi = cyclic_reduce(NcPoly::parse(g, c.potential));
  } else {
    auto p = load_algebra(c, r);
    if (!p.potential) throw Error(ErrorKind::InvalidArgument, p.id + " has no potential");
    phi = *p.potential;
    stored = p.rels.rels;
  }
  r.j["potential"] = phi.str();
  r.line("potential " + phi.str());
  Json rels = Json::array();
  for (int j = 0; j < int(phi.gens().size()); ++j) {
    NcPoly d = cyclic_derivative(phi, j);
    Json e = {{"generator", phi.gens()[std::size_t(j)]}, {"derivative", d.str()}};
    std::string s = "d/d" + phi.gens()[std::size_t(j)] + ": " + d.str();
    if (!stored.empty()) {
      bool hit = false;
      for (std::size_t k = 0; k < stored.size() && !hit; ++k)
        if (auto u = proportional(d, stored[k])) {
          e["relation"] = k + 1;
          e["unit"] = u->str();
          hit = true;
        }
      r.check(hit, s);
    } else {
      r.line(s);
    }
    rels.push_back(e);
  }
  r.j["relations"] = rels;
  return r.emit(c);
}

int cmd_find_potential(const Config& c) {
  Report r;
  auto p = load_algebra(c, r);
  auto res = find_potential(p.rels);
  if (!res) {
    r.check(false, "no potential found");
    return r.emit(c);
  }
  r.j["potential"] = res->phi.str();
  Json l = Json::array();
  for (std::size_t j = 0; j < res->lambda.size(); ++j)
    l.push_back({{"generator", p.rels.gens[j]},
                 {"relation", res->relation[j] + 1},
                 {"lambda", res->lambda[j].str()}});
  r.j["derivatives"] = l;
  r.line("potential " + res->phi.str());
  for (auto& e : l)
    r.line("d/d" + e["generator"].get<std::string>() + " = " + e["lambda"].get<std::string>() +
           " * relation " + std::to_string(e["relation"].get<int>()));
  if (p.potential) {
    bool same = proportional(res->phi.as_poly(), p.potential->as_poly()).has_value();
    r.check(same, "agrees with the stored potential up to a unit");
  } else {
    r.check(true, "potential found");
  }
  return r.emit(c);
}

int cmd_verify_shear(const Config& c) {
  Report r;
  if (c.type.empty()) throw Error(ErrorKind::InvalidArgument, "--type is required");
  auto d = painleve_from_name(c.type);
  ShearOptions opt = c.as_printed ? ShearOptions::as_printed() : ShearOptions{};
  std::vector<bool> modes;
  if (c.quantum || !c.classical) modes.push_back(true);
  if (c.classical) modes.push_back(false);
  Json reps = Json::array();
  for (bool q : modes) {
    auto rep = verify_painleve(d, q, opt);
    reps.push_back(shear_report_json(rep));
    for (auto& ch : rep.checks)
      r.check(ch.pass, std::string(q ? "quantum " : "classical ") + ch.name +
                           (ch.residual.empty() ? "" : "  residual " + ch.residual));
    for (auto& n : rep.notes) r.line("note: " + n);
  }
  r.j["type"] = painleve_name(d);
  r.j["as_printed"] = c.as_printed;
  r.j["anchors"] = {"painleve-cubics", "omega-map", "epsilon-map"};
  r.j["reports"] = reps;
  return r.emit(c);
}

int cmd_semiclassical(const Config& c) {
  Report r;
  auto p = load_algebra(c, r);
  auto rs = orient(p.semiclassical_relations(), p.order);
  put_assumptions(r, rs);
  std::vector<std::string> vars;
  for (auto s : p.rels.gens) {
    s[0] = char(std::tolower(static_cast<unsigned char>(s[0])));
    vars.push_back(s);
  }
  BracketTable t = classical_limit(rs, vars, p.classical_q);
  r.j["limit_variable"] = p.classical_q;
  r.j["table"] = bracket_table_json(t);
  r.line("{" + vars[0] + "," + vars[1] + "} = " + t.get(0, 1).str());
  r.line("{" + vars[1] + "," + vars[2] + "} = " + t.get(1, 2).str());
  r.line("{" + vars[2] + "," + vars[0] + "} = " + t.get(2, 0).str());
  auto bc = bracket_checks(t);
  r.check(bc.pass, "limit bracket satisfies Jacobi");
  if (!p.classical.empty()) {
    auto target = poisson_preset(p.classical);
    BracketTable nt = nambu_table(target.structure);
    BracketTable renamed(vars);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) renamed.set(i, j, nt.get(i, j).renamed(vars));
    auto s = sign_relation(t, renamed);
    r.j["classical"] = target.id;
    r.j["expected_sign"] = p.classical_sign;
    r.j["sign"] = s ? Json(*s) : Json();
    r.check(s && *s == p.classical_sign,
            "equals the nambu table of " + target.id + " times " + std::to_string(p.classical_sign));
  }
  return r.emit(c);
}

int cmd_degenerate(const Config& c) {
  Report r;
  if (c.degeneration.empty()) throw Error(ErrorKind::InvalidArgument, "--degeneration is required");
  auto d = degeneration_preset(c.degeneration);
  auto src = poisson_preset(d.source);
  auto tgt = poisson_preset(d.target);
  LimitReport lr;
  auto lim = scale_limit(src.structure, d.rescaling, &lr);
  r.j["degeneration"] = degeneration_preset_json(d);
  r.j["anchors"] = d.anchors;
  r.j["limit"] = lim.phi.str();
  r.j["steps"] = lr.steps;
  r.line(d.source + " -> " + lim.phi.str());
  for (auto& s : lr.steps) r.line("  " + s);
  r.check(lim.phi == tgt.structure.phi, "limit equals " + tgt.id);
  auto t = scale_limit(nambu_table(src.structure), d.rescaling);
  r.j["table"] = bracket_table_json(t);
  if (tgt.printed_table) r.check(t == *tgt.printed_table, "bracket table equals the stated table");
  return r.emit(c);
}

int cmd_poisson_check(const Config& c) {
  Report r;
  if (c.poisson.empty()) throw Error(ErrorKind::InvalidArgument, "--poisson is required");
  auto p = poisson_preset(c.poisson, parse_params(c.params));
  r.j["poisson"] = p.id;
  r.j["anchors"] = p.anchors;
  r.j["phi"] = p.structure.phi.str();
  auto rep = poisson_checks(p.structure);
  r.j["report"] = poisson_report_json(rep);
  r.line("phi = " + p.structure.phi.str());
  for (auto& ch : rep.checks) r.check(ch.pass, ch.name + (ch.detail.empty() ? "" : "  " + ch.detail));
  if (p.printed_table) r.check(*p.printed_table == nambu_table(p.structure), "stated bracket table is the nambu table");
  return r.emit(c);
}

int cmd_preset_dump(const Config& c) {
  Json j;
  if (c.manifest) {
    j = presets_manifest();
  } else {
    if (c.id.empty()) throw Error(ErrorKind::InvalidArgument, "--id or --manifest is required");
    bool found = false;
    try {
      j = algebra_preset_json(algebra_preset(c.id, parse_params(c.params)));
      found = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownPreset) throw;
    }
    if (!found) {
      try {
        j = poisson_preset_json(poisson_preset(c.id, parse_params(c.params)));
        found = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnknownPreset) throw;
      }
    }
    if (!found) j = degeneration_preset_json(degeneration_preset(c.id));
  }
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + c.out);
    f << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_report_all(const Config& c) {
  auto rs = run_acceptance(c.criteria, [&](const CriterionResult& r) {
    if (c.json) return;
    std::cout << (r.pass ? "PASS " : "FAIL ") << (r.number < 10 ? " " : "") << r.number << " " << r.title;
    if (c.timings) std::cout << " (" << r.seconds << " s)";
    std::cout << "\n";
    for (auto& d : r.details) std::cout << "        " << d << "\n";
    std::cout.flush();
  });
  bool all = true;
  for (auto& r : rs) all = all && r.pass;
  if (c.json) std::cout << acceptance_json(rs).dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of quantised monodromy algebras and their Poisson limits"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_flag("--json", c.json, "machine-readable output");
    s->add_option("--param", c.params, "parameter binding name=value (repeatable)");
  };
  auto algebra = [&](CLI::App* s) {
    common(s);
    s->add_option("--algebra", c.algebra, "algebra preset id, e.g. uz:PVI");
    s->add_option("--order", c.order, "generator precedence, e.g. X3>X2>X1");
  };
  auto ideal = [&](CLI::App* s) {
    s->add_option("--bound", c.bound, "degree bound")->check(CLI::Range(2, 12));
    s->add_option("--margin", c.margin, "extra degrees for the ideal window")->check(CLI::Range(0, 6));
    s->add_option("--trials", c.trials, "random specialisations")->check(CLI::Range(1, 100));
    s->add_option("--seed", c.seed, "seed for specialisations");
  };

  auto* cc = app.add_subcommand("check-central", "test whether an element is central");
  algebra(cc);
  ideal(cc);
  cc->add_option("--element", c.element, "central candidate name of the preset");
  cc->add_option("--expr", c.expr, "element given as a polynomial");
  cc->add_option("--method", c.method, "rewrite, ideal or auto")
      ->check(CLI::IsMember({"rewrite", "ideal", "auto"}));
  cc->add_flag("--certificate", c.certificate, "record membership certificates");

  auto* hb = app.add_subcommand("hilbert", "graded or filtered quotient dimensions");
  algebra(hb);
  hb->add_option("--max-degree", c.max_degree)->check(CLI::Range(0, 8));
  hb->add_option("--mode", c.mode)->check(CLI::IsMember({"graded", "filtered"}));
  hb->add_option("--margin", c.margin)->check(CLI::Range(0, 6));

  auto* cf = app.add_subcommand("confluence", "orient relations and check overlaps");
  algebra(cf);
  cf->add_option("--bound", c.bound)->check(CLI::Range(3, 12));

  auto* dr = app.add_subcommand("derive-relations", "cyclic derivatives of a potential");
  algebra(dr);
  dr->add_option("--potential", c.potential, "potential given as a polynomial");
  dr->add_option("--gens", c.gens, "comma separated generators for --potential");

  auto* fp = app.add_subcommand("find-potential", "solve for a potential of the relations");
  algebra(fp);

  auto* vs = app.add_subcommand("verify-shear", "shear coordinate realisation of a Painleve type");
  common(vs);
  vs->add_option("--type", c.type, "PVI, PV, PVdeg, PIV, PIII_D6, PIII_D7, PIII_D8, PII_JM, PII_FN, PI");
  vs->add_flag("--quantum", c.quantum);
  vs->add_flag("--classical", c.classical);
  vs->add_flag("--as-printed", c.as_printed, "use the printed data without corrections");

  auto* sc = app.add_subcommand("semiclassical", "q -> 1 limit of the commutators");
  algebra(sc);

  auto* dg = app.add_subcommand("degenerate", "eps -> 0 limit of a rescaled Poisson structure");
  common(dg);
  dg->add_option("--degeneration", c.degeneration, "degeneration preset id");

  auto* pc = app.add_subcommand("poisson-check", "Jacobi, Casimir and unimodularity checks");
  common(pc);
  pc->add_option("--poisson", c.poisson, "Poisson preset id");

  auto* pd = app.add_subcommand("preset-dump", "print a preset or the manifest as JSON");
  common(pd);
  pd->add_option("--id", c.id);
  pd->add_flag("--manifest", c.manifest);
  pd->add_option("--out", c.out, "write to a file");

  auto* ra = app.add_subcommand("report-all", "run the acceptance suite");
  common(ra);
  ra->add_option("--criteria", c.criteria, "subset of criteria")->delimiter(',');
  ra->add_flag("--timings", c.timings, "print wall times (text mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cc) return cmd_check_central(c);
    if (*hb) return cmd_hilbert(c);
    if (*cf) return cmd_confluence(c);
    if (*dr) return cmd_derive_relations(c);
    if (*fp) return cmd_find_potential(c);
    if (*vs) return cmd_verify_shear(c);
    if (*sc) return cmd_semiclassical(c);
    if (*dg) return cmd_degenerate(c);
    if (*pc) return cmd_poisson_check(c);
    if (*pd) return cmd_preset_dump(c);
    if (*ra) return cmd_report_all(c);
  } catch (const Error& e) {
    std::cerr << "nc: " << e.what() << "\n";
    if (c.json) std::cout << Json{{"error", error_name(e.kind())}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nc: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
