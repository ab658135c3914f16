#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "branchdec/classify.hpp"
#include "branchdec/tensor.hpp"

using namespace branchdec;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Usage = 2, Unknown = 3, Dominance = 4 };

struct Options {
  std::string pair, algebra, params, a, a1, a2, criterion = "iii", suite = "all", config, format = "json";
  bool dot = false;
  size_t rank_bound = 0;
  int jobs = 1;
};

RatVec parse_vec(const std::string& s, const RootDatum& d) {
  RatVec v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    v.push_back(parse_rat(tok));
  }
  if (v.size() != d.dim)
    throw StructuralError(d.label + " takes " + std::to_string(d.dim) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

ojson vec_json(const RatVec& v) {
  auto j = ojson::array();
  for (auto& x : v) j.push_back(rat_str(x));
  return j;
}

ojson params_json(const Params& p) {
  ojson j = ojson::object();
  for (auto& [k, v] : p) j[k] = v;
  return j;
}

ojson header() {
  ojson j;
  j["schema"] = "branchdec/1";
  return j;
}

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

size_t effective_rank_bound(const Options& o, size_t from_config) {
  if (std::getenv("BRANCHDEC_RANK_BOUND")) return configured_rank_bound();
  size_t b = o.rank_bound ? o.rank_bound : from_config;
  if (b < 2) throw StructuralError("rank bound must be at least 2");
  return b;
}

int cmd_decide(const Options& o) {
  auto p = symmetric_pair(o.pair, parse_params(o.params));
  RatVec a = require_dominant(p.datum, parse_vec(o.a, p.datum));
  Verdict v = o.criterion == "cone" ? decide_ii_cone(p, a) : o.criterion == "prime" ? decide_ii_prime(p, a) : decide_iii(p, a);
  ojson j = header();
  j["pair_id"] = p.pair_id;
  j["params"] = params_json(p.params);
  j["label"] = p.label();
  j["a"] = vec_json(a);
  j["criterion"] = o.criterion;
  auto vj = verdict_json(v);
  for (auto& [k, x] : vj.items()) j[k] = x;
  j["certificate_verified"] = verify_verdict(p, a, v);
  emit(j);
  return Ok;
}

int cmd_enumerate(const Options& o) {
  auto d = root_datum(o.algebra, parse_params(o.params));
  auto cs = enumerate_classes(d, effective_rank_bound(o, 8));
  if (o.format == "dot") {
    std::cout << export_dot(cs, default_marks(d, cs));
    return Ok;
  }
  if (o.format == "tsv") {
    for (auto& c : cs)
      std::cout << c.pattern.str() << "\t" << vec_str(c.witness) << "\t" << (is_borel(d, c.witness) ? "borel" : "-")
                << "\t" << holo_str(holomorphic_class(d, c.witness)) << "\n";
    return Ok;
  }
  ojson j = header();
  j["algebra"] = d.algebra_id;
  j["params"] = params_json(d.rank_params);
  j["label"] = d.label;
  j["count"] = cs.size();
  auto arr = ojson::array();
  for (auto& c : cs)
    arr.push_back({{"pattern", c.pattern.str()},
                   {"witness", vec_json(c.witness)},
                   {"borel", is_borel(d, c.witness)},
                   {"holomorphic", holo_str(holomorphic_class(d, c.witness))}});
  j["classes"] = arr;
  emit(j);
  return Ok;
}

int cmd_classify(const Options& o) {
  auto p = symmetric_pair(o.pair, parse_params(o.params));
  auto cs = enumerate_classes(p.datum, effective_rank_bound(o, 8));
  if (o.dot || o.format == "dot") {
    auto marks = default_marks(p.datum, cs);
    for (size_t i = 0; i < cs.size(); ++i) marks[i].decomposable = decide_iii(p, cs[i].witness).decomposable;
    std::cout << export_dot(cs, marks);
    return Ok;
  }
  if (o.format == "tsv") {
    for (auto& c : cs)
      std::cout << c.pattern.str() << "\t" << vec_str(c.witness) << "\t"
                << (decide_iii(p, c.witness).decomposable ? "decomposable" : "-") << "\n";
    return Ok;
  }
  ojson j = header();
  j["pair_id"] = p.pair_id;
  j["params"] = params_json(p.params);
  j["label"] = p.label();
  j["count"] = cs.size();
  auto arr = ojson::array();
  size_t dec = 0;
  for (auto& c : cs) {
    auto v = decide_iii(p, c.witness);
    dec += v.decomposable;
    ojson e;
    e["pattern"] = c.pattern.str();
    e["witness"] = vec_json(c.witness);
    auto vj = verdict_json(v);
    for (auto& [k, x] : vj.items()) e[k] = x;
    e["table_verdict"] = theorem_verdict(p, c.witness);
    arr.push_back(e);
  }
  j["decomposable"] = dec;
  j["classes"] = arr;
  emit(j);
  return Ok;
}

int cmd_verify(const Options& o) {
  InstanceConfig cfg;
  if (!o.config.empty()) cfg = load_instance_config(o.config);
  else cfg.instances = default_instances();
  size_t bound = effective_rank_bound(o, cfg.rank_bound);
  bool tables = o.suite == "tables" || o.suite == "all";
  bool figures = o.suite == "figures" || o.suite == "all";
  bool appendix = o.suite == "appendix-b" || o.suite == "all";

  std::vector<SymmetricPair> pairs;
  std::vector<std::string> skipped;
  if (tables || appendix)
    for (auto& in : cfg.instances) {
      auto p = symmetric_pair(in.pair_id, in.params);
      if (p.datum.total_rank() > bound) skipped.push_back(p.label());
      else pairs.push_back(std::move(p));
    }

  bool pass = true;
  ojson j = header();
  j["suite"] = o.suite;
  j["rank_bound"] = bound;
  std::ostringstream tsv;
  if (tables) {
    auto arr = ojson::array();
    for (auto& p : pairs) {
      auto r = verify_pair(p);
      pass = pass && r.pass();
      arr.push_back(report_json(r));
      tsv << report_tsv(r) << "\n";
    }
    j["tables"] = arr;
    j["skipped"] = skipped;
  }
  if (figures) {
    auto arr = ojson::array();
    for (auto& f : reproduce_figures()) {
      pass = pass && f.pass;
      arr.push_back(figure_json(f));
      tsv << f.name << "\t" << f.nodes << "\t" << f.got.size() << "\t" << (f.pass ? "pass" : "fail") << "\n";
    }
    j["figures"] = arr;
  }
  if (appendix) {
    auto arr = ojson::array();
    for (auto& e : verify_appendix_b(pairs)) {
      pass = pass && e.pass;
      arr.push_back(appendix_b_json(e));
      std::string id = e.pair_id + (e.params.empty() ? "" : "[" + params_str(e.params) + "]");
      tsv << id << "\t" << appendix_b_str(e.listed) << "\t" << (e.dominant ? "dominant" : "-") << "\t"
          << (e.pass ? "pass" : "fail") << "\n";
    }
    j["appendix_b"] = arr;
  }
  j["pass"] = pass;
  if (o.format == "tsv") std::cout << tsv.str();
  else emit(j);
  return pass ? Ok : Mismatch;
}

int cmd_tensor(const Options& o) {
  auto d = root_datum(o.algebra, parse_params(o.params));
  RatVec a1 = parse_vec(o.a1, d), a2 = parse_vec(o.a2, d);
  auto t = tensor_instance(d, a1, a2);
  auto v = tensor_decide(t);
  ojson j = header();
  j["algebra"] = d.algebra_id;
  j["params"] = params_json(d.rank_params);
  j["label"] = d.label;
  j["a1"] = vec_json(t.a1);
  j["a2"] = vec_json(canonical(d, a2));
  j["a2_chamber"] = vec_json(t.a2);
  auto vj = verdict_json(v);
  for (auto& [k, x] : vj.items()) j[k] = x;
  j["holomorphic_characterization"] = tensor_characterize(t);
  emit(j);
  return Ok;
}

int cmd_export(const Options& o) {
  InstanceConfig cfg;
  if (!o.config.empty()) cfg = load_instance_config(o.config);
  else cfg.instances = default_instances();
  ojson j = header();
  auto arr = ojson::array();
  for (auto& in : cfg.instances) {
    auto p = symmetric_pair(in.pair_id, in.params);
    ojson e;
    e["pair_id"] = p.pair_id;
    e["params"] = params_json(p.params);
    e["label"] = p.label();
    e["algebra"] = p.datum.algebra_id;
    e["rank"] = p.datum.total_rank();
    e["provenance"] = provenance_str(p.provenance);
    e["sigma_is_theta"] = p.sigma_is_theta;
    e["hermitian"] = p.datum.hermitian.has_value();
    e["holomorphic_type"] = is_holomorphic_type(p);
    e["split"] = filter_split(p).has_value();
    e["tables"] = p.tables;
    e["appendix_b"] = appendix_b_str(p.appendix_b);
    if (!p.assoc_label.empty()) e["associated"] = p.assoc_label;
    arr.push_back(e);
  }
  j["pairs"] = arr;
  emit(j);
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete decomposability of A_q(lambda) along symmetric pairs"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_bound = [&](CLI::App* s) {
    s->add_option("--rank-bound", o.rank_bound, "largest rank to enumerate")->check(CLI::Range(size_t(2), size_t(64)));
  };

  auto* decide = app.add_subcommand("decide", "decide one (pair, q)");
  decide->add_option("--pair", o.pair, "pair id")->required();
  decide->add_option("--params", o.params, "m=..,n=..");
  decide->add_option("--a", o.a, "comma separated rationals")->required();
  decide->add_option("--criterion", o.criterion, "iii, cone or prime")->check(CLI::IsMember({"iii", "cone", "prime"}));

  auto* enumerate = app.add_subcommand("enumerate", "list the classes of theta-stable parabolics");
  enumerate->add_option("--algebra", o.algebra, "algebra id")->required();
  enumerate->add_option("--params", o.params, "m=..,n=..");
  add_format(enumerate, {"json", "tsv", "dot"});
  add_bound(enumerate);

  auto* classify = app.add_subcommand("classify", "decide every class for a pair");
  classify->add_option("--pair", o.pair, "pair id")->required();
  classify->add_option("--params", o.params, "m=..,n=..");
  classify->add_flag("--dot", o.dot, "emit the marked Hasse diagram");
  add_format(classify, {"json", "tsv", "dot"});
  add_bound(classify);

  auto* verify = app.add_subcommand("verify", "compare the criterion against the tables");
  verify->add_option("--suite", o.suite, "tables, figures, appendix-b or all")
      ->check(CLI::IsMember({"tables", "figures", "appendix-b", "all"}));
  verify->add_option("--config", o.config, "instance list")->check(CLI::ExistingFile);
  verify->add_option("--jobs", o.jobs, "worker count")->check(CLI::PositiveNumber);
  add_format(verify, {"json", "tsv"});
  add_bound(verify);

  auto* tensor = app.add_subcommand("tensor", "tensor product of two A_q(lambda)");
  tensor->add_option("--algebra", o.algebra, "algebra id")->required();
  tensor->add_option("--params", o.params, "m=..,n=..");
  tensor->add_option("--a1", o.a1, "first factor, dominant")->required();
  tensor->add_option("--a2", o.a2, "second factor, dominant")->required();

  auto* exportc = app.add_subcommand("export-catalog", "dump the pair catalog");
  exportc->add_option("--config", o.config, "instance list")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : Usage;
  }

  try {
    if (*decide) return cmd_decide(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*classify) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*tensor) return cmd_tensor(o);
    if (*exportc) return cmd_export(o);
  } catch (const UnknownPair& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Unknown;
  } catch (const UnsupportedAlgebra& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Unknown;
  } catch (const DominanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Dominance;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}
