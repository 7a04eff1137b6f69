#include "fiedler/classify.hpp"

#include <cmath>
#include <optional>

#include "fiedler/densela.hpp"
#include "fiedler/error.hpp"

namespace fiedler {

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "unknown";
}

namespace {

struct Prepared {
  std::vector<double> values;  // small entries flushed to 0 in tolerant mode
  double tie_tol = 0.0;        // differences at most this count as equal
  double sum_tol = 0.0;
  std::optional<std::string> problem;
};

Prepared prepare(std::span<const double> x, std::size_t n, const ClassifyOptions& opts) {
  if (x.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "vector has " + std::to_string(x.size()) + " entries for " + std::to_string(n) + " vertices");
  if (!(opts.zero_tol >= 0.0)) throw Error(ErrorKind::InvalidParameter, "zero tolerance must be nonnegative");
  Prepared out;
  out.values.assign(x.begin(), x.end());
  for (double v : x)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "vector has non-finite entries");
  const double scale = norm_inf(x);
  out.tie_tol = opts.zero_tol * scale;
  out.sum_tol = std::max(kSumTol, opts.zero_tol) * norm_1(x);
  for (double& v : out.values)
    if (std::abs(v) <= out.tie_tol) v = 0.0;
  if (scale == 0.0)
    out.problem = "vector is zero";
  else if (std::abs(sum(x)) > out.sum_tol)
    out.problem = "entries do not sum to zero";
  return out;
}

Sign sign_of(double v) { return v > 0.0 ? Sign::Positive : (v < 0.0 ? Sign::Negative : Sign::Zero); }

// Walks the part of the tree reached from `start` without passing `from` and
// checks that every step away from `from` moves in direction `dir` (+1 up, -1
// down) or, for dir == 0, that every value is zero. Returns the first bad step.
std::optional<std::pair<Vertex, Vertex>> check_monotone(const Tree& tree, const std::vector<double>& x, Vertex from,
                                                        Vertex start, int dir) {
  std::vector<std::pair<Vertex, Vertex>> stack{{from, start}};
  while (!stack.empty()) {
    const auto [parent, v] = stack.back();
    stack.pop_back();
    const double step = x[v] - x[parent];
    const bool ok = dir == 0 ? x[v] == 0.0 : (dir > 0 ? step > 0.0 : step < 0.0);
    if (!ok) return std::pair{parent, v};
    for (const auto& nb : tree.neighbors(v))
      if (nb.vertex != parent) stack.emplace_back(v, nb.vertex);
  }
  return std::nullopt;
}

FiedlerLikeVerdict classify_type1(const Tree& tree, const std::vector<double>& x) {
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < tree.n(); ++v) {
    if (x[v] != 0.0) continue;
    for (const auto& nb : tree.neighbors(v))
      if (x[nb.vertex] != 0.0) {
        candidates.push_back(v);
        break;
      }
  }
  if (candidates.size() != 1)
    return Rejection{"expected exactly one zero entry adjacent to a nonzero entry, found " +
                         std::to_string(candidates.size()),
                     candidates};
  TypeIVerdict verdict{candidates.front(), {}};
  for (const auto& nb : tree.neighbors(verdict.char_vertex)) {
    const Sign s = sign_of(x[nb.vertex]);
    const int dir = s == Sign::Positive ? 1 : (s == Sign::Negative ? -1 : 0);
    if (const auto bad = check_monotone(tree, x, verdict.char_vertex, nb.vertex, dir))
      return Rejection{dir == 0 ? "branch at the characteristic vertex is neither monotone nor constantly zero"
                                : "values are not strictly monotone along a path from the characteristic vertex",
                       {bad->first, bad->second}};
    verdict.branch_signs.push_back(s);
  }
  return verdict;
}

FiedlerLikeVerdict classify_type2(const Tree& tree, const std::vector<double>& x) {
  std::vector<Vertex> changes;
  for (const auto& e : tree.edges())
    if ((x[e.u] < 0.0) != (x[e.v] < 0.0)) {
      changes.push_back(e.u);
      changes.push_back(e.v);
    }
  if (changes.size() != 2)
    return Rejection{"expected exactly one sign-change edge, found " + std::to_string(changes.size() / 2), changes};
  const Vertex p = x[changes[0]] < 0.0 ? changes[0] : changes[1];
  const Vertex q = p == changes[0] ? changes[1] : changes[0];
  for (const auto& nb : tree.neighbors(p)) {
    if (nb.vertex == q) continue;
    if (const auto bad = check_monotone(tree, x, p, nb.vertex, -1))
      return Rejection{"values are not strictly decreasing away from the sign-change edge",
                       {bad->first, bad->second}};
  }
  for (const auto& nb : tree.neighbors(q)) {
    if (nb.vertex == p) continue;
    if (const auto bad = check_monotone(tree, x, q, nb.vertex, 1))
      return Rejection{"values are not strictly increasing away from the sign-change edge",
                       {bad->first, bad->second}};
  }
  return TypeIIVerdict{p, q};
}

}  // namespace

FiedlerLikeVerdict classify_tree_vector(const Tree& tree, std::span<const double> x, ClassifyOptions opts) {
  const Prepared prep = prepare(x, tree.n(), opts);
  if (prep.problem) return Rejection{*prep.problem, {}};
  for (double v : prep.values)
    if (v == 0.0) return classify_type1(tree, prep.values);
  return classify_type2(tree, prep.values);
}

double cyclic_sum(std::span<const double> x, Vertex from, Vertex to) {
  const std::size_t n = x.size();
  double acc = 0.0;
  for (Vertex i = from;; i = (i + 1) % n) {
    acc += x[i];
    if (i == to) break;
  }
  return acc;
}

namespace {

// One sign class as a single arc of the cycle, in forward order. Empty when the
// class is empty or not contiguous.
std::vector<Vertex> arc_of(const std::vector<double>& x, Sign s, bool& contiguous) {
  const std::size_t n = x.size();
  std::vector<Vertex> starts;
  std::size_t count = 0;
  for (Vertex i = 0; i < n; ++i) {
    if (sign_of(x[i]) != s) continue;
    ++count;
    if (sign_of(x[(i + n - 1) % n]) != s) starts.push_back(i);
  }
  contiguous = count > 0 && starts.size() == 1;
  if (!contiguous) return {};
  std::vector<Vertex> arc;
  for (Vertex i = starts.front(); arc.size() < count; i = (i + 1) % n) arc.push_back(i);
  return arc;
}

// Strictly up, at most two equal extreme values, strictly down. Values are
// negated first for the negative arc. Returns the position of the first
// extreme value, whether there is a plateau, and a failure index otherwise.
struct Shape {
  bool ok = false;
  std::size_t top = 0;
  bool plateau = false;
  std::size_t fail = 0;
};

Shape unimodal(const std::vector<double>& a, double tie_tol) {
  const std::size_t k = a.size();
  std::size_t i = 0;
  while (i + 1 < k && a[i + 1] - a[i] > tie_tol) ++i;
  Shape s;
  s.top = i;
  if (i + 1 < k && std::abs(a[i + 1] - a[i]) <= tie_tol) {
    s.plateau = true;
    ++i;
  }
  while (i + 1 < k && a[i] - a[i + 1] > tie_tol) ++i;
  s.ok = i + 1 == k;
  s.fail = i + 1;
  return s;
}

}  // namespace

CycleVerdict classify_cycle_vector(const Cycle& cycle, std::span<const double> x, ClassifyOptions opts) {
  const std::size_t n = cycle.n();
  const Prepared prep = prepare(x, n, opts);
  const auto& v = prep.values;
  CycleVerdict out;
  for (Vertex i = 0; i < n; ++i)
    if (v[i] == 0.0) out.zero.push_back(i);
  if (prep.problem) {
    out.reason = *prep.problem;
    return out;
  }

  auto reject = [&](std::string reason, std::vector<Vertex> witness) {
    out.reason = std::move(reason);
    out.witness = std::move(witness);
    return out;
  };

  if (out.zero.size() > 2) return reject("more than two zero entries", out.zero);
  for (Vertex z : out.zero)
    if (v[cycle.next(z)] == 0.0) return reject("two adjacent zero entries", {z, cycle.next(z)});
  bool pos_ok = false;
  bool neg_ok = false;
  out.positive = arc_of(v, Sign::Positive, pos_ok);
  out.negative = arc_of(v, Sign::Negative, neg_ok);
  if (!pos_ok) return reject("positive entries do not form a path", {});
  if (!neg_ok) return reject("negative entries do not form a path", {});

  std::vector<double> up;
  for (Vertex i : out.positive) up.push_back(v[i]);
  const Shape top = unimodal(up, prep.tie_tol);
  if (!top.ok) return reject("positive path is not increasing, then flat for at most two, then decreasing",
                             {out.positive[top.fail - 1], out.positive[top.fail]});
  std::vector<double> down;
  for (Vertex i : out.negative) down.push_back(-v[i]);
  const Shape bottom = unimodal(down, prep.tie_tol);
  if (!bottom.ok) return reject("negative path is not decreasing, then flat for at most two, then increasing",
                                {out.negative[bottom.fail - 1], out.negative[bottom.fail]});
  out.periodic = true;

  out.p = out.positive[top.top];
  out.p_prime = top.plateau ? out.positive[top.top + 1] : out.p;
  out.q = out.negative[bottom.top];
  out.q_prime = bottom.plateau ? out.negative[bottom.top + 1] : out.q;

  const double left = cyclic_sum(x, cycle.next(out.p), out.q);         // (p, q]
  const double right = cyclic_sum(x, out.p_prime, cycle.prev(out.q_prime));  // [p', q')
  if (out.two_peaks() && out.two_valleys()) {
    out.balanced = std::abs(left) <= prep.sum_tol && std::abs(right) <= prep.sum_tol;
    if (!out.balanced) return reject("two peaks and two valleys but the interval sums are not both zero",
                                     {out.p, out.q});
  } else {
    const double slack = opts.zero_tol > 0.0 ? prep.sum_tol : 0.0;
    out.balanced = left < slack && right > -slack;
    if (!out.balanced)
      return reject(left >= slack ? "sum over (p, q] is not negative" : "sum over [p', q') is not positive",
                    {out.p, out.q});
  }
  return out;
}

bool classify_complete_vector(std::size_t n, std::span<const double> x) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "complete graph needs at least two vertices");
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length does not match the graph");
  for (double v : x)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "vector has non-finite entries");
  return norm_inf(x) > 0.0 && std::abs(sum(x)) <= kSumTol * norm_1(x);
}

}  // namespace fiedler
