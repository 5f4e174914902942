#include <algorithm>
#include <random>

#include "intck/models.hh"

namespace intck {

namespace {

uint64_t rand_below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

std::vector<uint32_t> upward_closed_sets(const std::vector<uint32_t>& leq) {
  size_t n = leq.size();
  std::vector<uint32_t> out;
  uint32_t all = (1u << n) - 1;
  for (uint32_t x = 0; x <= all; ++x) {
    uint32_t closure = 0;
    for (size_t w = 0; w < n; ++w)
      if (x >> w & 1) closure |= leq[w];
    if (!(closure & ~x)) out.push_back(x);
    if (x == all) break;
  }
  return out;
}

std::vector<std::string> world_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

// Monotone (upward-closed) valuation masks in increasing order.
std::vector<uint32_t> monotone_masks(const std::vector<uint32_t>& leq) {
  return upward_closed_sets(leq);
}

// Lexicographic comparison of a model against its image under the world swap
// 0<->1; used to drop one of each isomorphic pair in the two-world sweep.
bool swap_canonical(const Model& m) {
  auto swap_mask = [](uint32_t x) {
    return (x & ~3u) | ((x & 1u) << 1) | ((x >> 1) & 1u);
  };
  if (swap_mask(m.leq[0]) != m.leq[1] || swap_mask(m.leq[1]) != m.leq[0])
    return true;  // order not symmetric; no automorphism to canonicalize by
  std::vector<Model::Triple> swapped;
  for (const auto& t : m.sel) swapped.push_back({1 - t.from, swap_mask(t.set), 1 - t.to});
  std::sort(swapped.begin(), swapped.end());
  if (swapped != m.sel) return m.sel < swapped;
  for (const auto& [atom, mask] : m.val) {
    uint32_t sw = swap_mask(mask);
    if (sw != mask) return mask < sw;
  }
  return true;
}

bool run_exhaustive(int n, const EnumerateParams& params, long& left,
                    const std::function<bool(const Model&)>& sink) {
  std::vector<std::vector<uint32_t>> orders;
  if (n == 1) {
    orders = {{1u}};
  } else {
    orders = {{0b01u, 0b10u}, {0b11u, 0b10u}, {0b11u, 0b11u}};  // discrete, chain, equivalent
  }
  struct OrderState {
    std::vector<uint32_t> leq;
    std::vector<Model::Triple> candidates;
    std::vector<uint32_t> vals;
    uint64_t rlimit = 0;
  };
  std::vector<OrderState> states;
  uint64_t max_rlimit = 0;
  for (const auto& leq : orders) {
    OrderState st;
    st.leq = leq;
    for (int w = 0; w < n; ++w)
      for (uint32_t x : upward_closed_sets(leq))
        for (int v = 0; v < n; ++v) st.candidates.push_back({w, x, v});
    st.vals = monotone_masks(leq);
    st.rlimit = 1ull << st.candidates.size();
    max_rlimit = std::max(max_rlimit, st.rlimit);
    states.push_back(std::move(st));
  }
  size_t nvars = params.vars.size();

  // Selection masks sweep outermost and the orders round-robin inside, so a
  // small budget still sees sparse selections of every order shape.
  for (uint64_t rmask = 0; rmask < max_rlimit; ++rmask) {
    for (const auto& st : states) {
      if (rmask >= st.rlimit) continue;
      Model base;
      base.worlds = world_names(n);
      base.leq = st.leq;
      for (size_t i = 0; i < st.candidates.size(); ++i)
        if (rmask >> i & 1) base.sel.push_back(st.candidates[i]);
      std::sort(base.sel.begin(), base.sel.end());
      if (!validate(base, params.cls).ok()) continue;

      std::vector<size_t> choice(nvars, 0);
      for (;;) {
        Model m = base;
        for (size_t i = 0; i < nvars; ++i) m.val.emplace_back(params.vars[i], st.vals[choice[i]]);
        std::sort(m.val.begin(), m.val.end());
        if (n != 2 || swap_canonical(m)) {
          if (left <= 0) return false;
          --left;
          if (!sink(m)) return false;
        }
        size_t i = 0;
        while (i < nvars && ++choice[i] == st.vals.size()) choice[i++] = 0;
        if (i == nvars) break;
      }
    }
  }
  return true;
}

Model random_model(int n, const EnumerateParams& params, std::mt19937_64& rng) {
  Model m;
  m.worlds = world_names(n);
  m.leq.assign(n, 0);
  for (int w = 0; w < n; ++w) m.leq[w] |= 1u << w;
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      if (w != v && rand_below(rng, 3) == 0) m.leq[w] |= 1u << v;
  for (int k = 0; k < n; ++k)
    for (int w = 0; w < n; ++w)
      if (m.leq[w] >> k & 1) m.leq[w] |= m.leq[k];

  for (const auto& var : params.vars) {
    uint32_t mask = static_cast<uint32_t>(rand_below(rng, 1u << n));
    for (int w = 0; w < n; ++w)
      if (mask >> w & 1) mask |= m.leq[w];
    m.val.emplace_back(var, mask);
  }
  std::sort(m.val.begin(), m.val.end());

  for (uint32_t x : upward_closed_sets(m.leq)) {
    for (int w = 0; w < n; ++w) {
      if (rand_below(rng, 2) == 0) continue;  // bias towards sparse selection
      for (int v = 0; v < n; ++v)
        if (rand_below(rng, 4) == 0) m.sel.push_back({w, x, v});
    }
  }
  std::sort(m.sel.begin(), m.sel.end());
  m.sel.erase(std::unique(m.sel.begin(), m.sel.end()), m.sel.end());
  return m;
}

}  // namespace

void enumerate_models(const EnumerateParams& params, const std::function<bool(const Model&)>& sink) {
  if (params.max_worlds < params.min_worlds) return;
  long left = params.budget;
  for (int n = std::max(1, params.min_worlds); n <= std::min(params.max_worlds, 2); ++n)
    if (!run_exhaustive(n, params, left, sink)) return;
  if (params.max_worlds < 3) return;

  std::mt19937_64 rng(params.seed);
  long attempts_left = 1000 + params.budget * 300;
  int n = std::max(3, params.min_worlds);
  while (left > 0 && attempts_left > 0) {
    --attempts_left;
    Model m = random_model(n, params, rng);
    n = n >= params.max_worlds ? std::max(3, params.min_worlds) : n + 1;
    if (!validate(m, params.cls).ok()) continue;
    --left;
    if (!sink(m)) return;
  }
}

std::vector<Model> enumerate_models(const EnumerateParams& params) {
  std::vector<Model> out;
  enumerate_models(params, [&](const Model& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<PointedModel> countermodel_search(const Formula& f, const SearchParams& params) {
  if (params.cls == ModelClass::Weiss && contains_dia_arrow(f))
    throw EvalError("diamond arrow is not part of the weiss satisfaction relation");
  EvalMode mode = params.cls == ModelClass::Chellas ? EvalMode::Int : EvalMode::Weiss;

  EnumerateParams ep;
  ep.max_worlds = params.max_worlds;
  ep.vars = atoms(f);
  ep.budget = params.budget;
  ep.seed = params.seed;
  ep.cls = params.cls;

  std::optional<PointedModel> found;
  enumerate_models(ep, [&](const Model& m) {
    uint32_t ext = extension_mask(m, mode, f);
    if (ext == m.all_mask()) return true;
    int w = 0;
    while (ext >> w & 1) ++w;
    found = PointedModel{m, m.worlds[w]};
    return false;
  });
  return found;
}

}  // namespace intck
