#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "mla/automorphism.hpp"
#include "mla/cohomology.hpp"
#include "mla/extension.hpp"
#include "mla/io.hpp"
#include "mla/structure.hpp"
#include "mla/wells.hpp"

#ifndef MLA_DEFAULT_CATALOG_DIR
#define MLA_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace mla::cli {
namespace {

using ojson = nlohmann::ordered_json;

class InputError : public MlaError {
 public:
  using MlaError::MlaError;
};

// ---- text rendering ----

std::string scalar(const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool all_scalars(const ojson& a) {
  return std::all_of(a.begin(), a.end(), [](const ojson& x) { return x.is_primitive(); });
}

void render(const ojson& v, int indent, const std::string& key, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    out += pad + key + ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render(it.value(), indent + 1, it.key(), out);
  } else if (v.is_array() && all_scalars(v)) {
    std::vector<std::string> items;
    for (const auto& x : v) items.push_back(scalar(x));
    out += fmt::format("{}{}: [{}]\n", pad, key, fmt::join(items, ", "));
  } else if (v.is_array()) {
    out += pad + key + ":\n";
    const bool matrix = std::all_of(v.begin(), v.end(), [](const ojson& r) { return r.is_array() && all_scalars(r); });
    for (const auto& item : v) {
      if (matrix) {
        std::vector<std::string> cells;
        for (const auto& x : item) cells.push_back(scalar(x));
        out += fmt::format("{}  {}\n", pad, fmt::join(cells, " "));
      } else if (item.is_object()) {
        bool first = true;
        for (auto it = item.begin(); it != item.end(); ++it) {
          std::string line;
          render(it.value(), indent + 2, it.key(), line);
          if (first) line.replace(static_cast<std::size_t>(indent) * 2 + 2, 2, "- ");
          first = false;
          out += line;
        }
      } else {
        render(item, indent + 1, "-", out);
      }
    }
  } else {
    out += fmt::format("{}{}: {}\n", pad, key, scalar(v));
  }
}

ojson violations_json(const ValidityReport& r) {
  ojson out = ojson::array();
  for (const auto& rule : r.rules()) {
    ojson entry;
    entry["rule"] = rule;
    entry["count"] = r.count(rule);
    ojson w = ojson::array();
    for (const auto& v : r.violations())
      if (v.rule == rule) w.push_back(v.witness);
    entry["witnesses"] = w;
    out.push_back(entry);
  }
  return out;
}

ojson matrix_json(const std::vector<Elem>& flat, int n) {
  ojson m = ojson::array();
  for (int r = 0; r < n; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < n; ++c) row.push_back(flat[static_cast<std::size_t>(r * n + c)]);
    m.push_back(row);
  }
  return m;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string structure_name(const std::vector<long long>& factors) {
  if (factors.empty()) return "trivial";
  std::vector<std::string> parts;
  for (auto d : factors) parts.push_back(fmt::format("Z/{}", d));
  return fmt::format("{}", fmt::join(parts, " x "));
}

// ---- inputs ----

struct Options {
  std::string algebra;
  std::string ideal;
  bool central = false;
  std::string alpha = "id", eta = "id";
  std::string gamma = "induced";
  std::string k_arg, h_arg;
  std::string method = "automatic";
  std::uint64_t seed = 0;
  int cap_aut = AutLimits{}.max_order;
  std::uint64_t cap_cocycle = CohomologyLimits{}.max_list;
  bool json = false;
  bool timing = false;
};

AlgebraPtr load_algebra(const std::string& arg, bool verify_star = true) {
  const auto file = load_algebra_file(resolve_algebra_path(arg));
  auto a = to_algebra(file);
  if (verify_star) {
    auto r = verify_mla(*a);
    if (!r.ok()) throw InvalidAlgebra(arg + " violates the star axioms: " + r.summary(), r);
  }
  return a;
}

CenterExtension load_extension(const Options& o, Report& rep) {
  if (o.ideal.empty()) throw InputError("--ideal is required");
  auto g = load_algebra(o.algebra);
  const auto ideal = parse_index_list(o.ideal);
  rep.inputs["algebra"] = o.algebra;
  rep.inputs["ideal"] = ideal;
  rep.inputs["central_required"] = o.central;
  rep.inputs["seed"] = o.seed;
  auto ext = build_extension(g, ideal, o.central ? ExtensionKind::central : ExtensionKind::center);
  return with_seed(ext, o.seed);
}

ojson names_of(const MultLieAlgebra& a, const std::vector<Elem>& xs) {
  ojson out = ojson::array();
  for (Elem x : xs) out.push_back(a.element_name(x));
  return out;
}

void describe_extension(const CenterExtension& ext, Report& rep) {
  auto& e = rep.add("extension");
  e["kind"] = to_string(ext.kind);
  e["order_G"] = ext.G->order();
  e["order_H"] = ext.Hsub->order();
  e["order_K"] = ext.K->order();
  e["H"] = ext.H.members;
  e["H_names"] = names_of(*ext.G, ext.H.members);
  e["transversal"] = ext.transversal;
  e["K_mul"] = matrix_json(std::vector<Elem>(ext.K->mul_table().begin(), ext.K->mul_table().end()), ext.K->order());
  e["K_star"] = matrix_json(std::vector<Elem>(ext.K->star_table().begin(), ext.K->star_table().end()), ext.K->order());
}

void describe_triple(const CocycleTriple& c, ojson& e) {
  e["f"] = matrix_json(c.f, c.K->order());
  e["h"] = matrix_json(c.h, c.K->order());
  ojson g = ojson::array();
  for (const auto& m : c.gamma) g.push_back(m);
  e["gamma"] = g;
}

CohomologyMethod parse_method(const std::string& m) {
  if (m == "automatic") return CohomologyMethod::automatic;
  if (m == "search") return CohomologyMethod::search;
  if (m == "linear") return CohomologyMethod::linear;
  throw InputError("--method must be automatic, search or linear");
}

std::vector<Endomap> parse_gamma(const std::string& arg, const MultLieAlgebra& k, const MultLieAlgebra& h) {
  if (arg == "trivial" || arg == "induced") return trivial_gamma(k.order(), h.order());
  ojson j;
  try {
    j = ojson::parse(arg);
  } catch (const ojson::parse_error&) {
    throw InputError("--gamma must be 'trivial' or a JSON list of |K| image lists");
  }
  if (!j.is_array() || static_cast<int>(j.size()) != k.order())
    throw InputError(fmt::format("--gamma must list {} endomaps", k.order()));
  std::vector<Endomap> out;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != h.order())
      throw InputError(fmt::format("each --gamma entry must list {} images", h.order()));
    Endomap m;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= h.order())
        throw InputError("--gamma entries must be indices of H");
      m.push_back(v.get<Elem>());
    }
    out.push_back(std::move(m));
  }
  return out;
}

// ---- commands ----

int cmd_verify(const Options& o, Report& rep) {
  rep.inputs["algebra"] = o.algebra;
  const auto file = load_algebra_file(resolve_algebra_path(o.algebra));
  auto& g = rep.add("group");
  g["order"] = file.order;
  auto group = verify_group(file.mul, file.order, file.identity);
  g["status"] = group.ok() ? "ok" : "invalid";
  if (!group.ok()) {
    g["violations"] = violations_json(group);
    return kInvalidAlgebra;
  }
  auto a = to_algebra(file);
  auto r = verify_mla(*a);
  auto& ax = rep.add("axioms");
  ax["status"] = r.ok() ? "ok" : "invalid";
  ax["abelian"] = yes_no(a->is_abelian());
  ax["trivial_star"] = yes_no(a->has_trivial_star());
  ax["center"] = center(a).members;
  ax["lie_center"] = lie_center(a).members;
  if (!r.ok()) ax["violations"] = violations_json(r);
  return r.ok() ? kOk : kInvalidAlgebra;
}

int cmd_extension(const Options& o, Report& rep) {
  const auto ext = load_extension(o, rep);
  describe_extension(ext, rep);
  const auto c = induced_triple(ext);
  auto& t = rep.add("cocycle");
  describe_triple(c, t);
  const auto direct = validate_cocycle(c, ValidationMode::direct);
  const auto recon = validate_cocycle(c, ValidationMode::reconstruct);
  auto& v = rep.add("validation");
  v["direct"] = direct.ok() ? "ok" : "invalid";
  v["reconstruct"] = recon.ok() ? "ok" : "invalid";
  v["agree"] = yes_no(direct.ok() == recon.ok());
  if (!direct.ok()) v["direct_violations"] = violations_json(direct);
  if (!recon.ok()) v["reconstruct_violations"] = violations_json(recon);
  auto split = is_split(ext);
  auto& s = rep.add("split");
  s["split"] = yes_no(split.has_value());
  if (split) s["section"] = split->map;
  // An induced triple always passes; anything else contradicts the construction.
  return direct.ok() && recon.ok() ? kOk : kRedAlert;
}

int cmd_cohomology(const Options& o, Report& rep) {
  CohomologyLimits limits;
  limits.max_list = o.cap_cocycle;
  const auto method = parse_method(o.method);
  rep.inputs["method"] = o.method;
  AlgebraPtr k, h;
  std::vector<Endomap> gamma;
  std::optional<CocycleTriple> induced;
  if (!o.algebra.empty()) {
    if (!o.k_arg.empty() || !o.h_arg.empty()) throw InputError("give either an algebra with --ideal or --K/--H");
    const auto ext = load_extension(o, rep);
    k = ext.K;
    h = ext.Hsub;
    induced = induced_triple(ext);
    gamma = o.gamma == "induced" ? induced->gamma : parse_gamma(o.gamma, *k, *h);
  } else {
    if (o.k_arg.empty() || o.h_arg.empty()) throw InputError("--K and --H are required without an algebra");
    k = load_algebra(o.k_arg);
    h = load_algebra(o.h_arg);
    rep.inputs["K"] = o.k_arg;
    rep.inputs["H"] = o.h_arg;
    if (!h->is_abelian() || !h->has_trivial_star())
      throw StructuralError("H must be abelian with trivial star");
    gamma = parse_gamma(o.gamma, *k, *h);
  }
  rep.inputs["gamma"] = o.gamma;
  const auto z1 = enumerate_Z1(k, h, gamma);
  const auto group = compute_H2(k, h, gamma, limits, method);
  auto& c = rep.add("cohomology");
  c["method"] = to_string(group.method);
  c["order_K"] = k->order();
  c["order_H"] = h->order();
  c["z1_order"] = z1.size();
  c["z2_order"] = group.z2_order;
  c["b2_order"] = group.b2_order;
  c["h2_order"] = group.h2_order;
  c["invariant_factors"] = group.invariant_factors;
  c["structure"] = structure_name(group.invariant_factors);
  if (induced && induced->gamma == gamma) {
    auto& e = rep.add("extension class");
    const auto lambda = is_coboundary(*induced, method, limits);
    e["trivial"] = yes_no(lambda.has_value());
    if (lambda) e["lambda"] = *lambda;
  }
  return kOk;
}

int cmd_inducible(const Options& o, Report& rep) {
  const auto ext = load_extension(o, rep);
  const CompatiblePair pair{parse_perm(o.alpha, ext.Hsub->order()), parse_perm(o.eta, ext.K->order())};
  rep.inputs["alpha"] = pair.alpha;
  rep.inputs["eta"] = pair.eta;
  if (!is_mla_hom(*ext.Hsub, *ext.Hsub, pair.alpha))
    throw InputError("--alpha is not an automorphism of H");
  if (!is_mla_hom(*ext.K, *ext.K, pair.eta)) throw InputError("--eta is not an automorphism of K");
  const auto c = induced_triple(ext);
  const auto res = decide_inducible(pair, ext, c);
  auto& p = rep.add("inducibility");
  p["status"] = to_string(res.status);
  if (res.witness) p["witness_x"] = *res.witness;
  if (res.phi) p["phi"] = *res.phi;
  if (res.lambda) p["lambda"] = *res.lambda;
  p["search_nodes"] = res.nodes_visited;
  if (res.status == Inducibility::not_compatible) return kOk;
  const auto w = wells_obstruction(pair, c);
  auto& ob = rep.add("obstruction");
  describe_triple(w.s_triple, ob);
  ob["class_trivial"] = yes_no(w.class_trivial);
  if (w.witness_lambda) ob["witness_lambda"] = *w.witness_lambda;
  const bool agree = w.class_trivial == (res.status == Inducibility::inducible);
  ob["agrees_with_search"] = yes_no(agree);
  return agree ? kOk : kRedAlert;
}

int cmd_wells(const Options& o, Report& rep) {
  const auto ext = load_extension(o, rep);
  AutLimits limits{o.cap_aut};
  describe_extension(ext, rep);
  const auto report = verify_wells_sequence(ext, limits);
  auto& w = rep.add("wells");
  w["exact"] = yes_no(report.exact());
  w["red_alerts"] = report.red_alerts;
  ojson seqs = ojson::array();
  for (const auto& s : report.sequences) {
    ojson e;
    e["sequence"] = s.name;
    e["exact"] = yes_no(s.exact);
    if (!s.failures.empty()) e["failures"] = s.failures;
    seqs.push_back(e);
  }
  w["sequences"] = seqs;
  auto& sizes = rep.add("orders");
  sizes["Z1"] = report.z1;
  sizes["Aut_H(G)"] = report.aut_h;
  sizes["Aut^H(G)"] = report.aut_pointwise;
  sizes["Aut^{H,K}(G)"] = report.aut_hk;
  sizes["Aut_H^K(G)"] = report.aut_setwise_k;
  sizes["C^L"] = report.cl;
  sizes["ker(chi)"] = report.ker_chi;
  sizes["image(Pi)"] = report.image_pi;
  sizes["C1^L"] = report.c1;
  sizes["ker(chi1)"] = report.ker_chi1;
  sizes["C2^L"] = report.c2;
  sizes["ker(chi2)"] = report.ker_chi2;

  const auto iso = z1_aut_isomorphism(ext, limits);
  auto& l = rep.add("Z1 isomorphism");
  l["Z1"] = iso.z1.size();
  l["Aut^{H,K}(G)"] = iso.target.size();
  l["bijective"] = yes_no(iso.bijective);
  l["homomorphism"] = yes_no(iso.homomorphism);
  l["roundtrip"] = yes_no(iso.roundtrip);

  auto& s = rep.add("splitting");
  bool sections_ok = true;
  if (!is_split(ext)) {
    s["split"] = "no";
  } else {
    s["split"] = "yes";
    const auto sec = split_sections(ext, limits);
    ojson checks = ojson::array();
    for (const auto& chk : sec.checks) {
      ojson e;
      e["section"] = chk.name;
      e["domain"] = chk.domain;
      e["ok"] = yes_no(chk.ok);
      if (!chk.failures.empty()) e["failures"] = chk.failures;
      checks.push_back(e);
    }
    s["sections"] = checks;
    sections_ok = sec.ok();
  }
  return report.exact() && iso.ok() && sections_ok ? kOk : kRedAlert;
}

int cmd_aut(const Options& o, Report& rep) {
  auto g = load_algebra(o.algebra);
  rep.inputs["algebra"] = o.algebra;
  const auto aut = enumerate_aut(g, AutLimits{o.cap_aut});
  auto& a = rep.add("automorphisms");
  a["order"] = aut.size();
  if (aut.size() <= 48) {
    ojson els = ojson::array();
    for (const auto& p : aut.elements) els.push_back(p);
    a["elements"] = els;
  }
  if (!o.ideal.empty()) {
    const auto h = make_subset(g, parse_index_list(o.ideal));
    rep.inputs["ideal"] = h.members;
    if (auto why = ideal_violation(*g, h.members))
      throw StructuralError("H is not an ideal: " + *why);
    auto& f = rep.add("flavors");
    for (auto flavor : {AutFlavor::setwise, AutFlavor::pointwise, AutFlavor::pointwise_k_trivial,
                        AutFlavor::setwise_k_trivial})
      f[to_string(flavor)] = filter_aut(aut, flavor, h).size();
  }
  return kOk;
}

}  // namespace

// ---- Report ----

ojson& Report::add(const std::string& name) {
  ojson f = ojson::object();
  f["finding"] = name;
  findings.push_back(f);
  return findings.back();
}

std::string Report::text() const {
  std::string out = "command: " + command + "\n";
  if (!inputs.empty()) render(inputs, 0, "inputs", out);
  for (const auto& f : findings) {
    out += "\n[" + f.at("finding").get<std::string>() + "]\n";
    for (auto it = f.begin(); it != f.end(); ++it)
      if (it.key() != "finding") render(it.value(), 0, it.key(), out);
  }
  if (timing_ms) out += fmt::format("\ntiming_ms: {:.3f}\n", *timing_ms);
  return out;
}

std::string Report::json() const {
  ojson doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["findings"] = findings;
  if (timing_ms) doc["timing_ms"] = *timing_ms;
  return doc.dump(2) + "\n";
}

// ---- parsing ----

Perm parse_perm(const std::string& raw, int n) {
  const std::string text = std::regex_replace(raw, std::regex("^\\s+|\\s+$"), "");
  if (text.empty() || text == "id" || text == "identity") return identity_map(n);
  Perm p = identity_map(n);
  auto number = [&](const std::string& tok) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v >= n)
      throw InputError(fmt::format("'{}' is not an element index below {}", tok, n));
    return static_cast<Elem>(v);
  };
  auto tokens = [](const std::string& s) {
    std::vector<std::string> out;
    std::regex sep("[\\s,]+");
    for (std::sregex_token_iterator it(s.begin(), s.end(), sep, -1), end; it != end; ++it)
      if (!it->str().empty()) out.push_back(it->str());
    return out;
  };
  if (text.find('(') != std::string::npos) {
    std::set<Elem> used;
    std::regex cycle("\\(([^()]*)\\)");
    std::string rest = std::regex_replace(text, cycle, "");
    if (rest.find_first_not_of(" \t") != std::string::npos)
      throw InputError(fmt::format("cannot read '{}' as cycle notation", raw));
    for (std::sregex_iterator it(text.begin(), text.end(), cycle), end; it != end; ++it) {
      std::vector<Elem> c;
      for (const auto& tok : tokens((*it)[1].str())) c.push_back(number(tok));
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!used.insert(c[i]).second) throw InputError("cycles must be disjoint");
        p[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return p;
  }
  std::string inner = text;
  if (inner.front() == '[' && inner.back() == ']') inner = inner.substr(1, inner.size() - 2);
  const auto toks = tokens(inner);
  if (static_cast<int>(toks.size()) != n)
    throw InputError(fmt::format("an image list needs {} entries, got {}", n, toks.size()));
  for (int i = 0; i < n; ++i) p[i] = number(toks[i]);
  if (!is_bijection(p, n)) throw InputError(fmt::format("'{}' is not a permutation", raw));
  return p;
}

std::vector<Elem> parse_index_list(const std::string& raw) {
  std::string text = std::regex_replace(raw, std::regex("[{}\\[\\]]"), "");
  std::vector<Elem> out;
  std::regex sep("[\\s,]+");
  for (std::sregex_token_iterator it(text.begin(), text.end(), sep, -1), end; it != end; ++it) {
    const std::string tok = it->str();
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw InputError(fmt::format("'{}' is not an element index", tok));
    out.push_back(v);
  }
  return out;
}

std::string catalog_dir() {
  if (const char* env = std::getenv("MLA_CATALOG"); env && *env) return env;
  return MLA_DEFAULT_CATALOG_DIR;
}

std::string resolve_algebra_path(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(arg)) return arg;
  const fs::path candidate = fs::path(catalog_dir()) / (arg + ".json");
  if (fs::is_regular_file(candidate)) return candidate.string();
  throw ParseError(fmt::format("'{}' is neither a file nor an entry of the catalog at {}", arg,
                               catalog_dir()));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite multiplicative Lie algebras: extensions, cohomology and automorphisms", "mla"};
  app.require_subcommand(1);
  Options o;
  std::string command;

  auto common = [&](CLI::App* sub, bool needs_algebra) {
    if (needs_algebra) sub->add_option("algebra", o.algebra, "algebra file or catalog name")->required();
    sub->add_flag("--json", o.json, "emit the report as JSON");
    sub->add_flag("--timing", o.timing, "append wall time to the report");
  };
  auto ext_opts = [&](CLI::App* sub) {
    sub->add_option("--ideal", o.ideal, "indices of H, e.g. 0,1");
    sub->add_flag("--central", o.central, "require H inside the Lie center");
    sub->add_option("--seed", o.seed, "transversal seed (0 = coset minima)");
  };

  auto* verify = app.add_subcommand("verify", "check the group and star axioms");
  common(verify, true);

  auto* extension = app.add_subcommand("extension", "build a center extension and its cocycle triple");
  common(extension, true);
  ext_opts(extension);

  auto* cohomology = app.add_subcommand("cohomology", "second cohomology group");
  cohomology->add_option("algebra", o.algebra, "algebra file or catalog name (with --ideal)");
  cohomology->add_flag("--json", o.json, "emit the report as JSON");
  cohomology->add_flag("--timing", o.timing, "append wall time to the report");
  ext_opts(cohomology);
  cohomology->add_option("--K", o.k_arg, "quotient algebra");
  cohomology->add_option("--H", o.h_arg, "abelian kernel algebra");
  cohomology->add_option("--gamma", o.gamma, "'trivial', 'induced' or a JSON list of image lists");
  cohomology->add_option("--cap-cocycle", o.cap_cocycle, "largest cocycle list to materialize");
  cohomology->add_option("--method", o.method, "automatic, search or linear");

  auto* inducible = app.add_subcommand("inducible", "decide whether (alpha, eta) lifts to G");
  common(inducible, true);
  ext_opts(inducible);
  inducible->add_option("--alpha", o.alpha, "automorphism of H (cycles or image list)");
  inducible->add_option("--eta", o.eta, "automorphism of K (cycles or image list)");

  auto* wells = app.add_subcommand("wells", "check the exact sequences on an extension");
  common(wells, true);
  ext_opts(wells);
  wells->add_option("--cap-aut", o.cap_aut, "largest algebra whose automorphisms are enumerated");

  auto* aut = app.add_subcommand("aut", "automorphism group and its flavors");
  common(aut, true);
  aut->add_option("--ideal", o.ideal, "indices of H for the flavored subgroups");
  aut->add_option("--cap-aut", o.cap_aut, "largest algebra whose automorphisms are enumerated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::map<CLI::App*, std::pair<std::string, std::function<int(const Options&, Report&)>>> table = {
      {verify, {"verify", cmd_verify}},          {extension, {"extension", cmd_extension}},
      {cohomology, {"cohomology", cmd_cohomology}}, {inducible, {"inducible", cmd_inducible}},
      {wells, {"wells", cmd_wells}},             {aut, {"aut", cmd_aut}},
  };
  CLI::App* chosen = app.get_subcommands().front();
  const auto& [name, fn] = table.at(chosen);
  Report rep;
  rep.command = name;
  int code = kOk;
  try {
    const auto start = std::chrono::steady_clock::now();
    code = fn(o, rep);
    if (o.timing)
      rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const InvariantViolation& e) {
    err << "red alert: " << e.what() << "\n";
    return kRedAlert;
  } catch (const InvalidAlgebra& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidAlgebra;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const MlaError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  out << (o.json ? rep.json() : rep.text());
  return code;
}

}  // namespace mla::cli
