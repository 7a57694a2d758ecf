#include "gforms/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gforms/error.hpp"
#include "json_io.hpp"

namespace gforms::cli {

namespace {

json result(const std::string& command) { return json{{"schema", schema_name(command + "-result")}}; }

json read_job(const std::string& source, std::istream& in) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(source);
    if (!f) throw InputError("cannot open job file '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  json job;
  try {
    job = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("job is not valid JSON: ") + e.what());
  }
  if (!job.is_object()) throw InputError("job must be a JSON object");
  return job;
}

void check_schema(const json& job, const std::string& command) {
  if (!job.contains("schema")) return;
  const auto& s = job["schema"];
  if (!s.is_string() || s.get<std::string>().rfind(kSchemaPrefix, 0) != 0)
    throw InputError("unrecognized schema; expected a \"gforms/...\" document");
  if (job.contains("command") && job["command"] != command)
    throw InputError("job is for command " + job["command"].dump() + ", not \"" + command + "\"");
}

BasedRootDatum datum_of(const json& job) {
  if (job.contains("root_datum")) return root_datum_from(job["root_datum"]);
  return root_datum_from(job);
}

// ---------------------------------------------------------------------------

json cmd_dual(const json& job) {
  const auto rd = datum_of(job);
  const auto d = dual(rd);
  json r = result("dual");
  r["root_datum"] = to_json(d);
  r["involution"] = dual(d).equivalent(rd);
  return r;
}

json cmd_pi1(const json& job) {
  const auto g = fundamental_group(datum_of(job).datum);
  json r = result("pi1");
  r["invariant_factors"] = to_json(IntVector(g.invariant_factors));
  r["free_rank"] = g.free_rank;
  return r;
}

json cmd_outer(const json& job) {
  const auto out = outer_automorphisms(datum_of(job));
  json elements = json::array();
  for (const auto& e : out.elements) elements.push_back(json{{"permutation", e.permutation}, {"matrix", to_json(e.matrix)}});
  json r = result("outer");
  r["order"] = out.order();
  r["elements"] = std::move(elements);
  r["group"] = group_table(out.group);
  return r;
}

json cmd_classify(const json& job) {
  const FiniteGroup gamma = group_from(require(job, "gamma"));
  FiniteGroup out;
  if (job.contains("out")) {
    out = group_from(job["out"]);
  } else {
    out = outer_automorphisms(datum_of(job)).group;
  }
  const auto classes = classify_quasisplit(gamma, out);
  json list = json::array();
  for (const auto& c : classes)
    list.push_back(json{{"representative", c.representative}, {"size", c.members.size()}, {"members", c.members}});
  json r = result("classify-quasisplit");
  r["gamma"] = group_table(gamma);
  r["out"] = group_table(out);
  r["count"] = classes.size();
  r["classes"] = std::move(list);
  return r;
}

json cmd_coinvariants(const json& job) {
  const auto brd = datum_of(job);
  const FiniteGroup gamma = group_from(require(job, "gamma"));
  std::vector<std::size_t> rho;
  for (const auto& x : require(job, "rho")) rho.push_back(index_from(x, "rho"));
  const int height = job.contains("height") ? static_cast<int>(int64_from(job["height"], "height")) : 4;
  const auto data = quasisplit_cocharacter_data(brd, gamma, rho, height);
  json orbits = json::array();
  for (const auto& o : data.orbits) {
    json cw = json::array(), pr = json::array();
    for (const auto& v : o.coweights) cw.push_back(to_json(v));
    for (const auto& v : o.pairings) pr.push_back(to_json(v));
    orbits.push_back(json{{"coweights", std::move(cw)}, {"pairings", std::move(pr)}});
  }
  json r = result("coinvariants");
  r["rank"] = brd.rank();
  r["coinvariants"] = to_json(data.coinvariants.group);
  r["fixed_rank"] = data.fixed_rank;
  r["moved_rank"] = data.moved_rank;
  r["height"] = height;
  r["orbits"] = std::move(orbits);
  return r;
}

json cmd_h1(const json& job) {
  const GGroup a = ggroup_from(job);
  const std::uint64_t budget = job.contains("budget") ? static_cast<std::uint64_t>(index_from(job["budget"], "budget"))
                                                      : 10'000'000;
  const auto h1 = h1_nonabelian(a, budget);
  json r = result("h1");
  r["h0"] = h0(a);
  r["cocycle_count"] = h1.cocycles.size();
  r["class_count"] = h1.class_count;
  r["representatives"] = h1.representatives();
  return r;
}

json h2_summary(const H2Group& h) {
  json reps = json::array();
  for (const auto& z : h.representatives()) reps.push_back(to_json(z));
  return json{{"group", to_json(h.group())}, {"order", to_json(h.group().torsion_order())}, {"representatives", std::move(reps)}};
}

json cmd_h2(const json& job) {
  const GModule m = module_from(job.contains("module") ? job["module"] : job);
  const auto h = h2_bar(m);
  json r = result("h2");
  r["module"] = to_json(m);
  r.update(h2_summary(h));
  if (job.contains("cocycle")) {
    const auto z = cochain2_from(m, job["cocycle"]);
    r["cocycle"] = to_json(z);
    r["class"] = to_json(h.class_of(z));
    r["trivial"] = h.is_trivial_class(z);
  }
  if (job.contains("p_orders")) {
    std::vector<std::int64_t> p;
    for (const auto& x : job["p_orders"]) p.push_back(int64_from(x, "p_orders"));
    const HomModule hom(p, m);
    const auto hh = h2_bar(hom.module());
    json transported = json::array();
    for (const auto& z : hh.representatives()) {
      json classes = json::array();
      for (const auto& mu : h2_transport(hom, z)) classes.push_back(to_json(h.class_of(mu)));
      transported.push_back(std::move(classes));
    }
    json t = h2_summary(hh);
    t["p_orders"] = p;
    t["transported_classes"] = std::move(transported);
    r["hom"] = std::move(t);
  }
  return r;
}

GGroup ggroup_part(const FiniteGroup& gamma, const json& j) {
  FiniteGroup g = group_from(require(j, "group"));
  if (!j.contains("action")) return GGroup::trivial_action(gamma, std::move(g));
  std::vector<std::vector<std::size_t>> action;
  for (const auto& p : j["action"]) {
    std::vector<std::size_t> perm;
    for (const auto& x : p) perm.push_back(index_from(x, "action"));
    action.push_back(std::move(perm));
  }
  return GGroup(gamma, std::move(g), std::move(action));
}

json cmd_boundary(const json& job) {
  const FiniteGroup gamma = group_from(require(job, "gamma"));
  CentralExtension ext{ggroup_part(gamma, require(job, "z")), ggroup_part(gamma, require(job, "b")),
                       ggroup_part(gamma, require(job, "c")), {}, {}};
  for (const auto& x : require(job, "inclusion")) ext.inclusion.push_back(index_from(x, "inclusion"));
  for (const auto& x : require(job, "projection")) ext.projection.push_back(index_from(x, "projection"));
  ext.validate();
  std::vector<std::size_t> c;
  for (const auto& x : require(job, "cocycle")) c.push_back(index_from(x, "cocycle"));
  if (c.size() != gamma.order()) throw InputError("cocycle needs one value per element of Gamma");
  for (auto x : c)
    if (x >= ext.c.group().order()) throw InputError("cocycle value out of range");
  if (!is_one_cocycle(ext.c, c)) throw DomainError("cocycle is not a 1-cocycle with values in C");

  const auto delta = boundary_map(ext, c);
  std::vector<Elem> index;
  const GModule zm = module_from_abelian(ext.z, &index);
  Cochain2 z;
  for (auto x : delta) z.push_back(index[x]);
  const auto h2 = h2_bar(zm);

  // Class-level lift: some B-valued 1-cocycle projecting into the class of c.
  const auto hc = h1_nonabelian(ext.c);
  const auto class_of_c = [&](const std::vector<std::size_t>& f) {
    const auto it = std::lower_bound(hc.cocycles.begin(), hc.cocycles.end(), f);
    return hc.class_of[static_cast<std::size_t>(it - hc.cocycles.begin())];
  };
  const auto target = class_of_c(c);
  std::optional<std::vector<std::size_t>> lift;
  for (const auto& bt : h1_nonabelian(ext.b).cocycles) {
    std::vector<std::size_t> image(bt.size());
    for (std::size_t s = 0; s < bt.size(); ++s) image[s] = ext.projection[bt[s]];
    if (class_of_c(image) == target) {
      lift = bt;
      break;
    }
  }

  json r = result("boundary");
  r["cocycle"] = c;
  r["boundary"] = delta;
  r["h2"] = to_json(h2.group());
  r["class"] = to_json(h2.class_of(z));
  r["trivial"] = h2.is_trivial_class(z);
  r["lift"] = lift ? json(*lift) : json(nullptr);
  return r;
}

json cmd_hilbert(const json& job) {
  const Rational a = rational_from(require(job, "a"), "a");
  const Rational b = rational_from(require(job, "b"), "b");
  json r = result("hilbert");
  r["a"] = to_json(a);
  r["b"] = to_json(b);
  if (job.contains("place")) {
    const auto& p = job["place"];
    const Place v = p.is_string() ? Place::parse(p.get<std::string>()) : Place::finite(integer_from(p, "place"));
    r["place"] = v.to_string();
    r["symbol"] = hilbert_symbol(a, b, v);
    return r;
  }
  json symbols = json::object();
  int product = 1;
  for (const auto& v : relevant_places(a, b)) {
    const int s = hilbert_symbol(a, b, v);
    symbols[v.to_string()] = s;
    product *= s;
  }
  r["symbols"] = std::move(symbols);
  r["product"] = product;
  return r;
}

json cmd_brauer(const json& job) {
  json r = result("brauer-class");
  if (job.contains("invariants")) {
    std::map<Place, Rational> inv;
    for (const auto& [k, v] : job["invariants"].items()) inv[Place::parse(k)] = rational_from(v, "invariants");
    const BrauerClass c(std::move(inv));
    r["brauer_class"] = to_json(c);
    return r;
  }
  const Rational a = rational_from(require(job, "a"), "a");
  const Rational b = rational_from(require(job, "b"), "b");
  r["a"] = to_json(a);
  r["b"] = to_json(b);
  r["brauer_class"] = to_json(brauer_class_quaternion(a, b));
  return r;
}

json algebra_element(const AlgebraElement& x) {
  json a = json::array();
  for (const auto& q : x.coords) a.push_back(to_json(q));
  return a;
}

json cmd_crossed_product(const json& job) {
  std::optional<GaloisExtension> ext;
  FieldCochain2 zeta;
  if (job.contains("extension")) {
    ext.emplace(extension_from(job["extension"]));
    if (job.contains("cocycle")) {
      zeta = field_cochain2_from(*ext, job["cocycle"]);
    } else if (job.contains("c")) {
      const CyclicNormClasses nc(*ext);
      zeta = nc.cocycle_from_element(element_from(ext->field(), job["c"], "c"));
    } else {
      zeta = trivial_cochain(*ext);
    }
  } else {
    auto field = std::make_shared<const GaloisField>(GaloisField::quadratic(integer_from(require(job, "d"), "d")));
    ext.emplace(field);
    const CyclicNormClasses nc(*ext);
    zeta = nc.cocycle_from_element(field->from_rational(rational_from(require(job, "c"), "c")));
  }
  Triple t;
  if (!is_two_cocycle(*ext, zeta, &t))
    throw DomainError("not a 2-cocycle: identity fails at (a, b, c) = (" + std::to_string(t.a) + ", " +
                      std::to_string(t.b) + ", " + std::to_string(t.c) + ")");
  const auto a = CrossedProductAlgebra::build(*ext, zeta);
  const auto report = central_simple_report(a);
  json r = result("crossed-product");
  r["extension"] = to_json(a.extension());
  r["cocycle"] = to_json(a.cocycle());
  r["dimension"] = a.dimension();
  r["center_dimension"] = report.center_dimension;
  r["base_degree"] = report.base_degree;
  r["trace_form_determinant"] = to_json(report.trace_form_determinant);
  r["central_simple"] = report.central_simple();
  if (a.extension().is_full() && a.extension().field().kind() == GaloisField::Kind::quadratic) {
    const auto s = split_quaternion(a);
    r["quaternion"] = json{{"d", to_json(s.d)}, {"c", to_json(s.c)}, {"split", s.split},
                           {"brauer_class", to_json(brauer_class_quaternion(Rational(s.d), s.c))}};
    if (s.zero_divisor)
      r["quaternion"]["zero_divisor"] = json::array({algebra_element(s.zero_divisor->first), algebra_element(s.zero_divisor->second)});
  }
  if (job.value("structure_constants", false)) {
    json sc = json::array();
    for (const auto& v : a.structure_constants()) sc.push_back(algebra_element(AlgebraElement{v}));
    r["structure_constants"] = std::move(sc);
  }
  return r;
}

json cmd_descend(const json& job) {
  const GaloisExtension ext = extension_from(require(job, "extension"));
  const auto& k = ext.field();
  SemilinearDatum d{ext, index_from(require(job, "dim"), "dim"), {}, {}};
  d.zeta = job.contains("cocycle") ? field_cochain2_from(ext, job["cocycle"]) : trivial_cochain(ext);
  if (job.contains("maps")) {
    const auto& maps = job["maps"];
    if (!maps.is_array() || maps.size() != ext.group().order())
      throw InputError("maps needs one matrix per element of Gamma");
    for (const auto& m : maps) {
      auto x = field_matrix_from(k, m, "maps");
      if (x.rows != d.dim || x.cols != d.dim) throw InputError("maps must be dim x dim");
      d.maps.push_back(std::move(x));
    }
  } else {
    d.maps = trivial_datum(ext, d.dim).maps;
  }
  if (auto v = validate_datum(d))
    throw DomainError("invalid descent datum: " + v->what + " at (a, b) = (" + std::to_string(v->a) + ", " +
                      std::to_string(v->b) + ")");
  const AModule m = to_module(d);
  const auto back = from_module(m);
  json r = result("descend");
  r["extension"] = to_json(ext);
  r["cocycle"] = to_json(d.zeta);
  r["dim"] = d.dim;
  json maps = json::array();
  for (const auto& x : d.maps) maps.push_back(to_json(x));
  r["maps"] = std::move(maps);
  r["valid"] = true;
  r["module_dimension"] = m.dimension;
  r["algebra_dimension"] = m.algebra->dimension();
  r["roundtrip"] = same_datum(back, d);
  if (d.zeta == trivial_cochain(ext)) {
    const auto fs = fixed_space(d);
    r["fixed_space"] = json{{"k_dimension", fs.k_dimension}, {"basis", to_json(fs.basis)}};
  }
  return r;
}

json cmd_inner_invariant(const json& job) {
  const auto brd = datum_of(job);
  std::vector<QuaternionAssignment> assignments;
  if (job.contains("assignments")) {
    for (const auto& a : job["assignments"]) {
      QuaternionAssignment q;
      if (a.contains("d")) q.d = integer_from(a["d"], "assignments.d");
      if (a.contains("c")) q.c = rational_from(a["c"], "assignments.c");
      assignments.push_back(q);
    }
  }
  const auto inv = build_inner_invariant(brd.datum, assignments);
  json elements = json::array();
  for (std::size_t i = 0; i < inv.elements.size(); ++i) {
    elements.push_back(json{{"alpha", to_json(inv.elements[i])},
                            {"c", to_json(inv.c[i])},
                            {"brauer_class", to_json(inv.classes[i])},
                            {"cocycle", to_json(inv.algebras[i].cocycle())}});
  }
  json r = result("inner-invariant");
  r["pi1"] = to_json(inv.pi1);
  r["d"] = to_json(inv.d);
  r["elements"] = std::move(elements);
  r["homomorphism"] = true;
  return r;
}

// ---------------------------------------------------------------------------

struct Command {
  std::string name;
  std::string help;
  std::function<json(const json&)> handler;
  std::function<void(CLI::App&, json&)> flags;
};

void root_datum_flags(CLI::App& app, json& job) {
  app.add_option_function<std::string>("--type", [&job](const std::string& s) { job["type"] = s; },
                                       "Cartan type, components joined by '+' (A2, A1+T1)");
  app.add_option_function<std::string>("--isogeny", [&job](const std::string& s) { job["isogeny"] = s; },
                                       "sc or adjoint");
}

std::vector<Command> commands() {
  std::vector<Command> cmds;
  cmds.push_back({"dual", "Langlands dual root datum", cmd_dual, root_datum_flags});
  cmds.push_back({"pi1", "fundamental group X^v / coroot lattice", cmd_pi1, root_datum_flags});
  cmds.push_back({"outer", "outer automorphisms of a based root datum", cmd_outer, root_datum_flags});
  cmds.push_back({"classify-quasisplit", "homomorphisms Gamma -> Out up to conjugacy", cmd_classify,
                  [](CLI::App& app, json& job) {
                    root_datum_flags(app, job);
                    app.add_option_function<std::size_t>(
                        "--gamma-cyclic", [&job](std::size_t n) { job["gamma"] = json{{"cyclic", n}}; }, "Gamma = Z/n");
                  }});
  cmds.push_back({"coinvariants", "coinvariants and coweight orbits for a quasi-split twist", cmd_coinvariants,
                  [](CLI::App& app, json& job) {
                    root_datum_flags(app, job);
                    app.add_option_function<std::size_t>(
                        "--gamma-cyclic", [&job](std::size_t n) { job["gamma"] = json{{"cyclic", n}}; }, "Gamma = Z/n");
                    app.add_option_function<std::vector<std::size_t>>(
                           "--rho", [&job](const std::vector<std::size_t>& v) { job["rho"] = v; },
                           "Out element index for each element of Gamma")
                        ->delimiter(',');
                    app.add_option_function<int>("--height", [&job](int h) { job["height"] = h; },
                                                 "bound on simple-root pairings");
                  }});
  cmds.push_back({"h1", "nonabelian H^1 by enumeration", cmd_h1, nullptr});
  cmds.push_back({"h2", "H^2 of a finite module by the bar complex", cmd_h2, [](CLI::App& app, json& job) {
                    app.add_option_function<std::size_t>(
                        "--gamma-cyclic", [&job](std::size_t n) { job["gamma"] = json{{"cyclic", n}}; }, "Gamma = Z/n");
                    app.add_option_function<std::int64_t>(
                        "--modulus", [&job](std::int64_t m) { job["moduli"] = json::array({m}); },
                        "M = Z/m with trivial action");
                  }});
  cmds.push_back({"boundary", "connecting map H^1(C) -> H^2(Z) of a central extension", cmd_boundary, nullptr});
  cmds.push_back({"hilbert", "quadratic Hilbert symbol over Q", cmd_hilbert, [](CLI::App& app, json& job) {
                    app.add_option_function<std::string>("-a", [&job](const std::string& s) { job["a"] = s; }, "a");
                    app.add_option_function<std::string>("-b", [&job](const std::string& s) { job["b"] = s; }, "b");
                    app.add_option_function<std::string>("-p,--place", [&job](const std::string& s) { job["place"] = s; },
                                                         "prime or inf; all relevant places when omitted");
                  }});
  cmds.push_back({"brauer-class", "local invariants of the quaternion algebra (a, b)", cmd_brauer,
                  [](CLI::App& app, json& job) {
                    app.add_option_function<std::string>("-a", [&job](const std::string& s) { job["a"] = s; }, "a");
                    app.add_option_function<std::string>("-b", [&job](const std::string& s) { job["b"] = s; }, "b");
                  }});
  cmds.push_back({"crossed-product", "crossed-product algebra of a 2-cocycle", cmd_crossed_product,
                  [](CLI::App& app, json& job) {
                    app.add_option_function<std::string>("--d", [&job](const std::string& s) { job["d"] = s; },
                                                         "K = Q(sqrt d)");
                    app.add_option_function<std::string>("--c", [&job](const std::string& s) { job["c"] = s; },
                                                         "cocycle value zeta(sigma, sigma)");
                    app.add_flag_function("--structure-constants",
                                          [&job](std::int64_t) { job["structure_constants"] = true; },
                                          "include the multiplication table");
                  }});
  cmds.push_back({"descend", "descent datum to module and back, with fixed points", cmd_descend, nullptr});
  cmds.push_back({"inner-invariant", "Brauer-valued invariant on pi_1 from quaternion data", cmd_inner_invariant,
                  [](CLI::App& app, json& job) {
                    root_datum_flags(app, job);
                    app.add_option_function<std::string>("--d", [&job](const std::string& s) { job["d"] = s; },
                                                         "common quadratic field Q(sqrt d)");
                    app.add_option_function<std::vector<std::string>>(
                        "--c", [&job](const std::vector<std::string>& v) { job["c"] = v; },
                        "quaternion entry per generator of pi_1");
                  }});
  return cmds;
}

// The inner-invariant flags carry d and c separately.
void fold_assignment_flags(json& job) {
  if (!job.contains("c") || job.contains("assignments")) return;
  json list = json::array();
  for (const auto& c : job["c"]) list.push_back(json{{"d", job.value("d", json("-1"))}, {"c", c}});
  job["assignments"] = std::move(list);
  job.erase("c");
}

json error_object(const char* kind, const std::string& message) {
  return json{{"schema", schema_name("error")}, {"error", json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact classification of forms of reductive groups", "gforms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gforms 0.1.0");

  const auto cmds = commands();
  std::map<std::string, json> flag_jobs;
  std::map<std::string, std::string> job_sources;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--job", job_sources[c.name], "job document (file path, or - for stdin)");
    flag_jobs[c.name] = json::object();
    if (c.flags) c.flags(*sub, flag_jobs[c.name]);
    subs.emplace_back(sub, &c);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    std::ostringstream help, dummy;
    app.exit(e, help, dummy);
    out << help.str();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg, help;
    app.exit(e, help, msg);
    err << msg.str();
    out << error_object("input", e.what()).dump(2) << "\n";
    return kInputError;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    try {
      json job = json::object();
      if (!job_sources[cmd->name].empty()) job = read_job(job_sources[cmd->name], in);
      check_schema(job, cmd->name);
      job.update(flag_jobs[cmd->name]);
      if (cmd->name == "inner-invariant") fold_assignment_flags(job);
      out << cmd->handler(job).dump(2) << "\n";
      return kOk;
    } catch (const DomainError& e) {
      out << error_object("domain", e.what()).dump(2) << "\n";
      return kDomainError;
    } catch (const InputError& e) {
      err << "gforms " << cmd->name << ": " << e.what() << "\n";
      out << error_object("input", e.what()).dump(2) << "\n";
      return kInputError;
    } catch (const json::exception& e) {
      err << "gforms " << cmd->name << ": " << e.what() << "\n";
      out << error_object("input", e.what()).dump(2) << "\n";
      return kInputError;
    }
  }
  return kInputError;
}

}  // namespace gforms::cli
