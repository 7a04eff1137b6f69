#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fiedler/classify.hpp"
#include "fiedler/cli.hpp"
#include "fiedler/cycle_inverse.hpp"
#include "fiedler/densela.hpp"
#include "fiedler/generate.hpp"
#include "fiedler/spectral.hpp"
#include "fiedler/transform.hpp"
#include "fiedler/tree_inverse.hpp"

namespace fiedler::cli {

namespace {

constexpr double kTreeCheckTol = 1e-8;
constexpr double kCycleResidualTol = 1e-9;

struct Context {
  std::ostream& out;
  std::ostream& err;
  int index_base = 1;  // for labels in error witnesses

  Json labels(std::span<const std::size_t> vs) const {
    Json arr = Json::array();
    for (std::size_t v : vs) arr.push_back(v + static_cast<std::size_t>(index_base));
    return arr;
  }
};

GraphDocument load_graph(Context& ctx, const std::string& path) {
  GraphDocument doc = parse_graph_document(read_json_file(path));
  ctx.index_base = doc.index_base;
  return doc;
}

WeightAssignment require_weights(const GraphDocument& doc) {
  if (!doc.weights) throw Error(ErrorKind::Parse, "field 'weights': this command needs a weighted graph");
  return WeightAssignment(*doc.weights);
}

WeightedLaplacian build_laplacian(const GraphDocument& doc, const WeightAssignment& w) {
  switch (doc.kind) {
    case GraphKind::Tree: return laplacian(Tree(doc.n, doc.edges), w);
    case GraphKind::Cycle: return laplacian(Cycle(doc.n), w);
    case GraphKind::Complete: break;
  }
  return laplacian(Graph::complete(doc.n), w);
}

Json weight_map(const GraphDocument& doc, const WeightAssignment& w) {
  Json m = Json::object();
  for (std::size_t e = 0; e < doc.edges.size(); ++e) m[doc.edge_key(doc.edges[e])] = w[e];
  return m;
}

double eigen_residual(const WeightedLaplacian& lap, std::span<const double> x, double lam) {
  const auto ax = lap.matrix().apply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(ax[i] - lam * x[i]));
  return r / norm_inf(x);
}

Json char_set_json(const Context& ctx, const CharacteristicSet& cs) {
  Json j = Json::object();
  j["kind"] = cs.kind == CharacteristicSet::Kind::TypeI ? "TypeI" : "TypeII";
  j["vertices"] = ctx.labels(cs.vertices);
  return j;
}

Json cycle_verdict_json(const Context& ctx, const CycleVerdict& v) {
  Json j = Json::object();
  j["periodic"] = v.periodic;
  j["balanced"] = v.balanced;
  if (v.periodic) {
    j["peaks"] = ctx.labels(std::vector<std::size_t>{v.p, v.p_prime});
    j["valleys"] = ctx.labels(std::vector<std::size_t>{v.q, v.q_prime});
    j["positive"] = ctx.labels(v.positive);
    j["negative"] = ctx.labels(v.negative);
    j["zero"] = ctx.labels(v.zero);
  }
  if (!v.reason.empty()) {
    j["reason"] = v.reason;
    j["witness"] = ctx.labels(v.witness);
  }
  return j;
}

Json check(const std::string& name, bool pass, Json value, Json expected) {
  Json c = Json::object();
  c["name"] = name;
  c["pass"] = pass;
  c["value"] = std::move(value);
  c["expected"] = std::move(expected);
  return c;
}

// ---------------------------------------------------------------- classify

int cmd_classify(Context& ctx, const std::string& graph_path, const std::string& vector_path, double zero_tol) {
  const GraphDocument doc = load_graph(ctx, graph_path);
  const auto x = parse_vector(read_json_file(vector_path), doc.n);
  Json out = Json::object();
  int code = 0;
  switch (doc.kind) {
    case GraphKind::Tree: {
      const Tree tree(doc.n, doc.edges);
      const auto verdict = classify_tree_vector(tree, x, {zero_tol});
      if (const auto* t1 = std::get_if<TypeIVerdict>(&verdict)) {
        out["kind"] = "TypeI";
        out["char_set"] = ctx.labels(std::vector<std::size_t>{t1->char_vertex});
        Json branches = Json::array();
        const auto bs = branches_at(tree, t1->char_vertex);
        for (std::size_t k = 0; k < bs.size(); ++k) {
          Json b = Json::object();
          b["branch"] = k + static_cast<std::size_t>(doc.index_base);
          b["vertices"] = ctx.labels(bs[k].interior());
          b["sign"] = std::string(to_string(t1->branch_signs[k]));
          branches.push_back(std::move(b));
        }
        out["branches"] = std::move(branches);
      } else if (const auto* t2 = std::get_if<TypeIIVerdict>(&verdict)) {
        out["kind"] = "TypeII";
        out["char_set"] = ctx.labels(std::vector<std::size_t>{std::min(t2->negative_end, t2->positive_end),
                                                               std::max(t2->negative_end, t2->positive_end)});
        out["negative_end"] = t2->negative_end + static_cast<std::size_t>(doc.index_base);
        out["positive_end"] = t2->positive_end + static_cast<std::size_t>(doc.index_base);
      } else {
        const auto& rej = std::get<Rejection>(verdict);
        out["kind"] = "Rejected";
        out["reason"] = rej.reason;
        out["witness"] = ctx.labels(rej.witness);
        code = 3;
      }
      break;
    }
    case GraphKind::Cycle: {
      const auto v = classify_cycle_vector(Cycle(doc.n), x, {zero_tol});
      out = cycle_verdict_json(ctx, v);
      out["kind"] = "cycle";
      if (!v.periodic || !v.balanced) code = 3;
      break;
    }
    case GraphKind::Complete: {
      const bool ok = classify_complete_vector(doc.n, x);
      out["kind"] = "complete";
      out["admissible"] = ok;
      if (!ok) {
        out["reason"] = "vector must be nonzero with entries summing to zero";
        code = 3;
      }
      break;
    }
  }
  ctx.out << dump_canonical(out);
  return code;
}

// ----------------------------------------------------------------- inverse

struct InverseFlags {
  double lambda = 1.0;
  std::vector<std::string> mu;
  std::vector<std::string> filler;
  double zero_fill = 1.0;
  std::optional<double> h;
  bool verify = false;
};

std::pair<std::size_t, std::string> split_branch_arg(const std::string& arg, int base, const char* flag) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0)
    throw Error(ErrorKind::InvalidParameter, std::string(flag) + " expects branch=value, got \"" + arg + "\"");
  std::size_t used = 0;
  long long k = -1;
  try {
    k = std::stoll(arg.substr(0, eq), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != eq || k < base)
    throw Error(ErrorKind::InvalidParameter, std::string(flag) + ": bad branch number in \"" + arg + "\"");
  return {static_cast<std::size_t>(k - base), arg.substr(eq + 1)};
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw Error(ErrorKind::InvalidParameter, what + ": \"" + text + "\" is not a number");
  return v;
}

// "(1,2)", "[1,2]" and "1,2" are inline lists; anything else names a JSON file.
std::vector<double> parse_filler(const std::string& text) {
  std::string body = text;
  const bool inline_list = !body.empty() && (body.front() == '(' || body.front() == '[' ||
                                              std::isdigit(static_cast<unsigned char>(body.front())) ||
                                              body.front() == '-' || body.front() == '+' || body.front() == '.');
  if (!inline_list) {
    const Json j = read_json_file(text);
    if (!j.is_array()) throw Error(ErrorKind::Parse, text + ": filler must be a JSON array");
    std::vector<double> out;
    for (const auto& v : j) {
      if (!v.is_number()) throw Error(ErrorKind::Parse, text + ": filler entries must be numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }
  if (body.front() == '(' || body.front() == '[') {
    const char closing = body.front() == '(' ? ')' : ']';
    if (body.back() != closing) throw Error(ErrorKind::InvalidParameter, "filler list \"" + text + "\" is not closed");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, "filler"));
  if (out.empty()) throw Error(ErrorKind::InvalidParameter, "filler list is empty");
  return out;
}

Json verify_tree(const Context& ctx, const Tree& tree, std::span<const double> x, const TreeInverseResult& res,
                 bool& all_pass) {
  const WeightedLaplacian lap = laplacian(tree, res.weights);
  const double lam = res.achieved_lambda;
  const double resid = eigen_residual(lap, x, lam);
  Json checks = Json::array();
  Json report = Json::object();
  checks.push_back(check("eigen_residual", resid <= kTreeCheckTol, resid, kTreeCheckTol));
  report["residual"] = resid;
  try {
    const FiedlerData fd = fiedler::fiedler(lap);
    report["lambda2"] = fd.lambda2;
    report["multiplicity"] = fd.multiplicity;
    checks.push_back(check("lambda2", std::abs(fd.lambda2 - lam) <= kTreeCheckTol * lam, fd.lambda2, lam));
    checks.push_back(check("multiplicity", fd.multiplicity == res.predicted_multiplicity, fd.multiplicity,
                           res.predicted_multiplicity));
    Json located;
    bool same = false;
    try {
      const auto cs = locate_characteristic_set(tree, fd);
      located = char_set_json(ctx, cs);
      same = cs.kind == res.char_set.kind && cs.vertices == res.char_set.vertices;
    } catch (const Error& e) {
      located = std::string(e.what());
    }
    checks.push_back(check("characteristic_set", same, located, char_set_json(ctx, res.char_set)));
  } catch (const Error& e) {
    checks.push_back(check("spectrum", false, std::string(e.what()), "lambda2 resolvable"));
  }
  report["checks"] = checks;
  for (const auto& c : checks) all_pass = all_pass && c["pass"].get<bool>();
  return report;
}

Json verify_cycle(const Context& ctx, const Cycle& cycle, std::span<const double> x, const CycleInverseResult& res,
                  bool& all_pass) {
  const WeightedLaplacian lap = laplacian(cycle, res.weights);
  const double lam = res.achieved_lambda;
  const double resid = eigen_residual(lap, x, lam);
  const auto dec = eigh(lap.matrix());
  const auto cluster = eigenvalue_cluster(dec, lam);
  const std::size_t index = cluster.empty() ? 0 : cluster.front() + 1;
  const auto verdict = classify_cycle_vector(cycle, x);

  Json checks = Json::array();
  checks.push_back(check("eigen_residual", resid <= kCycleResidualTol, resid, kCycleResidualTol));
  checks.push_back(check("lambda_index", index == 2 || index == 3, index, Json::array({2, 3})));
  checks.push_back(check("periodic_balanced", verdict.periodic && verdict.balanced,
                         cycle_verdict_json(ctx, verdict), "periodic and balanced"));

  Json report = Json::object();
  report["lambda2"] = dec.values.at(1);
  report["lambda3"] = dec.values.size() > 2 ? Json(dec.values[2]) : Json();
  report["landed_index"] = index;
  report["residual"] = resid;
  report["checks"] = checks;
  for (const auto& c : checks) all_pass = all_pass && c["pass"].get<bool>();
  return report;
}

int cmd_inverse(Context& ctx, const std::string& graph_path, const std::string& vector_path, const InverseFlags& f) {
  const GraphDocument doc = load_graph(ctx, graph_path);
  const auto x = parse_vector(read_json_file(vector_path), doc.n);
  if (!(f.lambda > 0.0) || !std::isfinite(f.lambda))
    throw Error(ErrorKind::InvalidParameter, "--lambda must be positive");
  if (doc.kind != GraphKind::Tree && (!f.mu.empty() || !f.filler.empty()))
    throw Error(ErrorKind::InvalidParameter, "--mu and --filler only apply to trees");
  if (doc.kind != GraphKind::Cycle && f.h) throw Error(ErrorKind::InvalidParameter, "--shift only applies to cycles");

  Json out = Json::object();
  bool all_pass = true;
  switch (doc.kind) {
    case GraphKind::Tree: {
      const Tree tree(doc.n, doc.edges);
      TypeIOptions opts;
      for (const auto& arg : f.mu) {
        const auto [k, v] = split_branch_arg(arg, doc.index_base, "--mu");
        opts.mu[k] = parse_number(v, "--mu");
      }
      for (const auto& arg : f.filler) {
        const auto [k, v] = split_branch_arg(arg, doc.index_base, "--filler");
        opts.filler[k] = parse_filler(v);
      }
      const TreeInverseResult res = general_lambda_rescale(tree_inverse(tree, x, opts), f.lambda);
      out["kind"] = "tree";
      out["lambda"] = res.achieved_lambda;
      out["char_set"] = char_set_json(ctx, res.char_set);
      out["predicted_multiplicity"] = res.predicted_multiplicity;
      out["weights"] = weight_map(doc, res.weights);
      Json free = Json::array();
      for (const auto& bp : res.free_branch_params) {
        Json b = Json::object();
        b["branch"] = bp.branch + static_cast<std::size_t>(doc.index_base);
        b["mu"] = bp.mu;
        b["filler"] = bp.filler;
        free.push_back(std::move(b));
      }
      out["zero_branches"] = std::move(free);
      if (f.verify) out["verification"] = verify_tree(ctx, tree, x, res, all_pass);
      break;
    }
    case GraphKind::Cycle: {
      const Cycle cycle(doc.n);
      const CycleInverseResult res = cycle_inverse(cycle, x, f.lambda, f.zero_fill, f.h);
      out["kind"] = "cycle";
      out["lambda"] = res.achieved_lambda;
      out["weights"] = weight_map(doc, res.weights);
      out["h"] = res.h;
      out["rotation"] = res.rotation + static_cast<std::size_t>(doc.index_base);
      out["interval"] = res.interval ? Json::array({res.interval->lo, res.interval->hi}) : Json();
      out["landed_index"] = res.landed_index;
      out["residual"] = res.residual;
      if (f.verify) out["verification"] = verify_cycle(ctx, cycle, x, res, all_pass);
      break;
    }
    case GraphKind::Complete: {
      if (!classify_complete_vector(doc.n, x))
        throw Error(ErrorKind::NotFiedlerLike, "vector must be nonzero with entries summing to zero");
      // Equal weights c give the spectrum {0, c n, ..., c n}.
      const WeightAssignment w(std::vector<double>(doc.edges.size(), f.lambda / static_cast<double>(doc.n)));
      out["kind"] = "complete";
      out["lambda"] = f.lambda;
      out["weights"] = weight_map(doc, w);
      if (f.verify) {
        const WeightedLaplacian lap = laplacian(Graph::complete(doc.n), w);
        const FiedlerData fd = fiedler::fiedler(lap);
        const double resid = eigen_residual(lap, x, f.lambda);
        Json checks = Json::array();
        checks.push_back(check("lambda2", std::abs(fd.lambda2 - f.lambda) <= kTreeCheckTol * f.lambda, fd.lambda2,
                               f.lambda));
        checks.push_back(check("eigen_residual", resid <= kTreeCheckTol, resid, kTreeCheckTol));
        for (const auto& c : checks) all_pass = all_pass && c["pass"].get<bool>();
        Json report = Json::object();
        report["lambda2"] = fd.lambda2;
        report["multiplicity"] = fd.multiplicity;
        report["residual"] = resid;
        report["checks"] = checks;
        out["verification"] = report;
      }
      break;
    }
  }
  if (f.verify) out["verified"] = all_pass;
  ctx.out << dump_canonical(out);
  return all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- forward

int cmd_forward(Context& ctx, const std::string& graph_path) {
  const GraphDocument doc = load_graph(ctx, graph_path);
  const WeightAssignment w = require_weights(doc);
  const WeightedLaplacian lap = build_laplacian(doc, w);
  const FiedlerData fd = fiedler::fiedler(lap);

  Json out = Json::object();
  out["kind"] = doc.kind == GraphKind::Tree ? "tree" : doc.kind == GraphKind::Cycle ? "cycle" : "complete";
  out["lambda2"] = fd.lambda2;
  out["multiplicity"] = fd.multiplicity;
  out["spectrum"] = fd.spectrum.values;
  out["fiedler_basis"] = fd.basis;

  if (doc.kind == GraphKind::Tree) {
    try {
      out["char_set"] = char_set_json(ctx, locate_characteristic_set(Tree(doc.n, doc.edges), fd));
    } catch (const Error& e) {
      out["char_set"] = Json();
      out["char_set_error"] = std::string(e.what());
    }
  } else if (doc.kind == GraphKind::Cycle && doc.n >= 3) {
    const Cycle cycle(doc.n);
    std::vector<std::size_t> idx = eigenvalue_cluster(fd.spectrum, fd.spectrum.values[1]);
    if (doc.n > 2)
      for (std::size_t k : eigenvalue_cluster(fd.spectrum, fd.spectrum.values[2])) idx.push_back(k);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Json vecs = Json::array();
    for (std::size_t k : idx) {
      if (k < 1 || k > 2) continue;
      const auto& v = fd.spectrum.vectors[k];
      Json e = cycle_verdict_json(ctx, classify_cycle_vector(cycle, v, {kZeroTol}));
      e["index"] = k + 1;
      e["value"] = fd.spectrum.values[k];
      e["vector"] = v;
      vecs.push_back(std::move(e));
    }
    out["eigenvectors"] = std::move(vecs);
  }
  ctx.out << dump_canonical(out);
  return 0;
}

// --------------------------------------------------------------- transform

int cmd_transform(Context& ctx, const std::string& graph_path, bool do_contract) {
  const GraphDocument doc = load_graph(ctx, graph_path);
  if (doc.kind != GraphKind::Tree) throw Error(ErrorKind::InvalidParameter, "transforms apply to weighted trees");
  const WeightedTree wt(Tree(doc.n, doc.edges), require_weights(doc));
  const TransformResult res = do_contract ? contract(wt) : subdivide(wt);

  GraphDocument out_doc;
  out_doc.kind = GraphKind::Tree;
  out_doc.n = res.result.tree().n();
  out_doc.edges.assign(res.result.tree().edges().begin(), res.result.tree().edges().end());
  const auto wv = res.result.weights().values();
  out_doc.weights = std::vector<double>(wv.begin(), wv.end());
  out_doc.index_base = doc.index_base;
  if (doc.labels) {
    std::vector<std::string> labels(out_doc.n);
    for (std::size_t v = 0; v < doc.n; ++v)
      if (res.label_map[v] != npos) labels[res.label_map[v]] = (*doc.labels)[v];
    if (!do_contract) labels[res.special] = std::to_string(out_doc.label(res.special));
    out_doc.labels = std::move(labels);
  }

  Json out = to_json(out_doc);
  Json map = Json::object();
  for (std::size_t v = 0; v < doc.n; ++v)
    map[std::to_string(doc.label(v))] = res.label_map[v] == npos ? Json() : Json(out_doc.label(res.label_map[v]));
  out["label_map"] = std::move(map);
  out["lambda2"] = res.result.lambda2();
  out["char_set"] = char_set_json(ctx, res.result.char_set());
  if (do_contract) {
    const Edge& e = out_doc.edges[res.special];
    out["merged_edge"] = Json::array({out_doc.label(e.u), out_doc.label(e.v)});
  } else {
    out["new_vertex"] = out_doc.label(res.special);
  }
  ctx.out << dump_canonical(out);
  return 0;
}

// ---------------------------------------------------------------- generate

Rng generator_rng(Context& ctx, std::optional<std::uint64_t> seed) {
  const std::uint64_t s = seed ? *seed : seed_from_env(std::nullopt);
  ctx.err << "seed " << s << "\n";
  return Rng(s);
}

int cmd_generate_graph(Context& ctx, GraphKind kind, std::size_t n, bool weighted, int base,
                       std::optional<std::uint64_t> seed) {
  if (kind == GraphKind::Tree && n < 1) throw Error(ErrorKind::InvalidParameter, "--n must be at least 1");
  if (kind == GraphKind::Cycle && n < 3) throw Error(ErrorKind::InvalidParameter, "--n must be at least 3");
  Rng rng = generator_rng(ctx, seed);
  GraphDocument doc;
  doc.kind = kind;
  doc.n = n;
  doc.index_base = base;
  if (kind == GraphKind::Tree) {
    const Tree t = random_tree(n, rng);
    doc.edges.assign(t.edges().begin(), t.edges().end());
  } else {
    const Cycle c(n);
    doc.edges.assign(c.graph().edges().begin(), c.graph().edges().end());
  }
  if (weighted) {
    const WeightAssignment w = random_weights(doc.edges.size(), rng);
    doc.weights = std::vector<double>(w.values().begin(), w.values().end());
  }
  ctx.out << dump_canonical(to_json(doc));
  return 0;
}

int cmd_generate_vector(Context& ctx, const std::string& graph_path, const std::string& type,
                        std::optional<int> zeros, std::optional<std::uint64_t> seed) {
  const GraphDocument doc = load_graph(ctx, graph_path);
  Rng rng = generator_rng(ctx, seed);
  std::vector<double> x;
  switch (doc.kind) {
    case GraphKind::Tree: {
      if (doc.n < 2) throw Error(ErrorKind::InvalidParameter, "a Fiedler-like vector needs at least two vertices");
      if (zeros) throw Error(ErrorKind::InvalidParameter, "--zeros only applies to cycles");
      FiedlerType t = std::uniform_int_distribution<int>(0, 1)(rng) ? FiedlerType::TypeI : FiedlerType::TypeII;
      if (type == "1" || type == "I") t = FiedlerType::TypeI;
      else if (type == "2" || type == "II") t = FiedlerType::TypeII;
      else if (!type.empty()) throw Error(ErrorKind::InvalidParameter, "--type must be 1 or 2");
      if (t == FiedlerType::TypeI && doc.n < 3)
        throw Error(ErrorKind::InvalidParameter, "a vector with a zero entry needs at least three vertices");
      x = random_fiedler_like(Tree(doc.n, doc.edges), t, rng);
      break;
    }
    case GraphKind::Cycle:
      if (!type.empty()) throw Error(ErrorKind::InvalidParameter, "--type only applies to trees");
      if (zeros && (*zeros < 0 || *zeros > 2)) throw Error(ErrorKind::InvalidParameter, "--zeros must be 0, 1 or 2");
      if (zeros && doc.n < static_cast<std::size_t>(*zeros) + 2)
        throw Error(ErrorKind::InvalidParameter, "cycle too short for that many zeros");
      x = random_periodic_balanced(doc.n, rng, zeros);
      break;
    case GraphKind::Complete: {
      if (doc.n < 2) throw Error(ErrorKind::InvalidParameter, "need at least two vertices");
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      x.resize(doc.n);
      double s = 0.0;
      for (double& v : x) s += (v = u(rng));
      for (double& v : x) v -= s / static_cast<double>(doc.n);
      break;
    }
  }
  ctx.out << dump_canonical(Json(x));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiedler vectors of weighted trees and cycles: classify, invert, verify, transform."};
  app.name("fiedler");
  app.require_subcommand(1);
  app.set_version_flag("--version", "fiedler 0.1.0");

  std::string graph_path;
  std::string vector_path;

  auto* classify = app.add_subcommand("classify", "Decide whether a vector can be realized on the graph");
  double zero_tol = 0.0;
  classify->add_option("graph", graph_path, "Graph document (JSON, - for stdin)")->required();
  classify->add_option("vector", vector_path, "Vector (JSON array)")->required();
  classify->add_option("--zero-tol", zero_tol, "Relative tolerance for zero entries (default: exact)")
      ->check(CLI::NonNegativeNumber);

  auto* inverse = app.add_subcommand("inverse", "Construct weights making the vector a Fiedler vector");
  InverseFlags flags;
  double h_value = 0.0;
  inverse->add_option("graph", graph_path, "Graph document (JSON, - for stdin)")->required();
  inverse->add_option("vector", vector_path, "Vector (JSON array)")->required();
  inverse->add_option("--lambda", flags.lambda, "Target eigenvalue")->capture_default_str();
  inverse->add_option("--mu", flags.mu, "Perron value of a zero branch, as branch=value (trees)");
  inverse->add_option("--filler", flags.filler,
                      "Increasing vector on a zero branch, as branch=(a,b,...) or branch=file.json (trees)");
  inverse->add_option("--zero-fill", flags.zero_fill, "Weight for 0/0 plateau edges (cycles)")
      ->capture_default_str();
  auto* h_opt = inverse->add_option("--shift", h_value, "Shift h to use instead of the midpoint (cycles)");
  inverse->add_flag("--verify", flags.verify, "Recompute the spectrum and report every check");

  auto* forward = app.add_subcommand("forward", "Spectral data of a weighted graph");
  forward->add_option("graph", graph_path, "Weighted graph document (JSON, - for stdin)")->required();

  auto* transform = app.add_subcommand("transform", "Characteristic contraction or subdivision of a weighted tree");
  transform->add_option("graph", graph_path, "Weighted tree document (JSON, - for stdin)")->required();
  auto* contract_flag = transform->add_flag("--contract", "Remove a degree-2 characteristic vertex");
  auto* subdivide_flag = transform->add_flag("--subdivide", "Split the characteristic edge");
  contract_flag->excludes(subdivide_flag);

  auto* generate = app.add_subcommand("generate", "Random test data (seeded by --seed or FIEDLER_SEED)");
  generate->require_subcommand(1);
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  bool weighted = false;
  int base = 1;
  std::string type;
  std::optional<int> zeros;
  auto add_graph_gen = [&](const char* name, const char* desc) {
    auto* sub = generate->add_subcommand(name, desc);
    sub->add_option("--n", n, "Number of vertices")->required();
    sub->add_flag("--weighted", weighted, "Attach random weights in [1/4, 4]");
    sub->add_option("--index-base", base, "Label offset in the output")->check(CLI::IsMember({0, 1}));
    sub->add_option("--seed", seed, "Seed (overrides FIEDLER_SEED)");
    return sub;
  };
  auto* gen_tree = add_graph_gen("tree", "Uniform random labelled tree");
  auto* gen_cycle = add_graph_gen("cycle", "Cycle, optionally weighted");
  auto* gen_vector = generate->add_subcommand("vector", "Random admissible vector for a graph");
  gen_vector->add_option("graph", graph_path, "Graph document (JSON, - for stdin)")->required();
  gen_vector->add_option("--type", type, "Tree vectors: 1 (zero entry) or 2 (sign-change edge)");
  gen_vector->add_option("--zeros", zeros, "Cycle vectors: number of zero entries (0-2)");
  gen_vector->add_option("--seed", seed, "Seed (overrides FIEDLER_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Context ctx{out, err};
  try {
    if (*classify) return cmd_classify(ctx, graph_path, vector_path, zero_tol);
    if (*inverse) {
      if (*h_opt) flags.h = h_value;
      return cmd_inverse(ctx, graph_path, vector_path, flags);
    }
    if (*forward) return cmd_forward(ctx, graph_path);
    if (*transform) {
      if (!*contract_flag && !*subdivide_flag)
        throw Error(ErrorKind::InvalidParameter, "transform needs --contract or --subdivide");
      return cmd_transform(ctx, graph_path, static_cast<bool>(*contract_flag));
    }
    if (*gen_tree) return cmd_generate_graph(ctx, GraphKind::Tree, n, weighted, base, seed);
    if (*gen_cycle) return cmd_generate_graph(ctx, GraphKind::Cycle, n, weighted, base, seed);
    if (*gen_vector) return cmd_generate_vector(ctx, graph_path, type, zeros, seed);
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    err << "error: " << e.what() << "\n";
    if (code == 3) {
      Json j = Json::object();
      j["error"] = std::string(to_string(e.kind()));
      j["message"] = e.what();
      j["witness"] = ctx.labels(e.witness());
      out << dump_canonical(j);
    }
    return code;
  }
  return 2;
}

}  // namespace fiedler::cli
