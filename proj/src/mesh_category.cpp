#include "quiverforge/mesh_category.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "quiverforge/error.hpp"

namespace quiverforge {

namespace {

const Field kQ = Field::rationals();

void link(Dynkin& d, int u, int v) {
  d.neighbors[u].push_back(v);
  d.neighbors[v].push_back(u);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

Dynkin make_dynkin(char kind, int n) {
  Dynkin d;
  d.kind = kind;
  d.n = n;
  bool ok = (kind == 'A' && n >= 1) || (kind == 'D' && n >= 3) || (kind == 'E' && n >= 6 && n <= 8);
  if (!ok) throw Error("unsupported Dynkin diagram " + std::string(1, kind) + std::to_string(n));
  d.neighbors.assign(n, {});
  d.color.assign(n, 0);
  d.row.assign(n, 0);
  d.phi.resize(n);
  for (int i = 0; i < n; ++i) d.phi[i] = i;
  if (kind == 'A') {
    for (int i = 0; i + 1 < n; ++i) link(d, i, i + 1);
    for (int i = 0; i < n; ++i) {
      d.color[i] = i % 2;
      d.row[i] = i;
    }
    if (n % 2 == 1)
      for (int i = 0; i < n; ++i) d.phi[i] = n - 1 - i;
  } else if (kind == 'D') {
    const int branch = n - 3;
    for (int k = 0; k < branch; ++k) link(d, k, k + 1);
    link(d, branch, n - 2);
    link(d, branch, n - 1);
    for (int k = 0; k <= branch; ++k) {
      d.color[k] = (branch - k) % 2;
      d.row[k] = 1 + branch - k;
    }
    d.color[n - 2] = d.color[n - 1] = 1;
    d.row[n - 2] = 1;
    d.row[n - 1] = 0;
    std::swap(d.phi[n - 2], d.phi[n - 1]);
  } else {
    for (int k = 0; k + 2 < n; ++k) link(d, k, k + 1);
    link(d, 2, n - 1);
    for (int k = 0; k + 1 < n; ++k) {
      d.color[k] = k % 2;
      d.row[k] = k;
    }
    d.color[n - 1] = 1;
    d.row[n - 1] = 2;
    if (n == 6) {
      std::swap(d.phi[0], d.phi[4]);
      std::swap(d.phi[1], d.phi[3]);
    }
  }
  for (auto& nb : d.neighbors) std::sort(nb.begin(), nb.end());
  return d;
}

Dynkin parse_dynkin(std::string_view name) {
  if (name.size() < 2) throw Error("unsupported Dynkin diagram '" + std::string(name) + "'");
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size())
    throw Error("unsupported Dynkin diagram '" + std::string(name) + "'");
  return make_dynkin(name[0], n);
}

std::string Dynkin::name() const { return std::string(1, kind) + std::to_string(n); }

int Dynkin::coxeter() const {
  switch (kind) {
    case 'A':
      return n + 1;
    case 'D':
      return 2 * n - 2;
    default:
      return n == 6 ? 12 : n == 7 ? 18 : 30;
  }
}

std::string vertex_to_string(const Vertex& v) {
  return "(" + std::to_string(v.p) + "," + std::to_string(v.i) + ")";
}

nlohmann::json vertex_to_json(const Vertex& v) { return nlohmann::json::array({v.p, v.i}); }

int column(const Dynkin& dyn, const Vertex& v) { return 2 * v.p + dyn.color.at(v.i); }

std::vector<Vertex> predecessors(const Dynkin& dyn, const Vertex& v) {
  std::vector<Vertex> out;
  const int shift = dyn.color.at(v.i) == 0 ? -1 : 0;
  for (int j : dyn.neighbors[v.i]) out.push_back({v.p + shift, j});
  return out;
}

std::vector<Vertex> successors(const Dynkin& dyn, const Vertex& v) {
  std::vector<Vertex> out;
  const int shift = dyn.color.at(v.i) == 0 ? 0 : 1;
  for (int j : dyn.neighbors[v.i]) out.push_back({v.p + shift, j});
  return out;
}

// ---------------------------------------------------------------------------

HomFunctor::HomFunctor(const Dynkin& dyn, Vertex x, int p_max) : dyn_(&dyn), x_(x), p_max_(p_max) {
  if (x.i < 0 || x.i >= dyn.n) throw Error("vertex " + vertex_to_string(x) + " not in Z" + dyn.name());
  if (p_max < x.p) throw Error("window ends before the source vertex");
  Node& root = nodes_[x];
  root.dim = 1;
  root.reps.push_back({x});

  const int c0 = column(dyn, x);
  for (int c = c0 + 1; c <= 2 * p_max + 1; ++c) {
    const int p = floor_div(c, 2);
    for (int i = 0; i < dyn.n; ++i) {
      if (dyn.color[i] != c - 2 * p) continue;
      const Vertex v{p, i};
      Node nd;
      for (const Vertex& e : predecessors(dyn, v)) {
        const Node* ne = node(e);
        if (!ne) continue;
        nd.blocks.emplace_back(e, nd.sdim);
        nd.sdim += ne->dim;
      }
      if (nd.sdim == 0) continue;
      nd.relations = std::make_unique<Echelon>(kQ);
      const Vertex tv = tau(v);
      if (const Node* nt = node(tv)) {
        for (std::size_t k = 0; k < nt->dim; ++k) {
          SparseVec unit{{k, Scalar::one(kQ)}};
          SparseVec rel;
          for (const auto& [e, off] : nd.blocks)
            for (const auto& [col, val] : push(unit, tv, e)) rel.emplace(off + col, val);
          if (!rel.empty()) nd.relations->insert(rel);
        }
      }
      for (std::size_t col = 0; col < nd.sdim; ++col) {
        if (nd.relations->is_pivot(col)) continue;
        std::size_t b = 0;
        while (b + 1 < nd.blocks.size() && nd.blocks[b + 1].second <= col) ++b;
        const auto& [e, off] = nd.blocks[b];
        std::vector<Vertex> rep = node(e)->reps.at(col - off);
        rep.push_back(v);
        nd.basis_of_column.emplace(col, nd.reps.size());
        nd.reps.push_back(std::move(rep));
      }
      nd.dim = nd.reps.size();
      if (nd.dim > 0) nodes_.emplace(v, std::move(nd));
    }
  }
}

const HomFunctor::Node* HomFunctor::node(const Vertex& v) const {
  auto it = nodes_.find(v);
  return it == nodes_.end() ? nullptr : &it->second;
}

std::size_t HomFunctor::dim(const Vertex& v) const {
  if (v.p > p_max_) throw Error("window too narrow: " + vertex_to_string(v) + " lies beyond slice " + std::to_string(p_max_));
  const Node* n = node(v);
  return n ? n->dim : 0;
}

const std::vector<Vertex>& HomFunctor::representative(const Vertex& v, std::size_t k) const {
  const Node* n = node(v);
  if (!n || k >= n->dim) throw Error("no basis element " + std::to_string(k) + " at " + vertex_to_string(v));
  return n->reps[k];
}

SparseVec HomFunctor::push(const SparseVec& coords, const Vertex& u, const Vertex& v) const {
  if (v.p > p_max_) throw Error("window too narrow: " + vertex_to_string(v) + " lies beyond slice " + std::to_string(p_max_));
  const Node* nv = node(v);
  if (!nv || coords.empty()) return {};
  std::size_t offset = 0;
  bool found = false;
  for (const auto& [e, off] : nv->blocks)
    if (e == u) {
      offset = off;
      found = true;
    }
  if (!found) return {};
  SparseVec s;
  for (const auto& [k, val] : coords) s.emplace(offset + k, val);
  SparseVec out;
  for (auto& [col, val] : nv->relations->reduce(std::move(s))) out.emplace(nv->basis_of_column.at(col), val);
  return out;
}

std::optional<SparseVec> HomFunctor::push_along(const SparseVec& coords, const std::vector<Vertex>& path) const {
  SparseVec cur = coords;
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (cur.empty()) return cur;
    if (path[k].p > p_max_) {
      if (slice_zero(p_max_)) return SparseVec{};
      return std::nullopt;
    }
    cur = push(cur, path[k - 1], path[k]);
  }
  return cur;
}

bool HomFunctor::slice_zero(int p) const {
  for (int i = 0; i < dyn_->n; ++i)
    if (dim({p, i}) != 0) return false;
  return true;
}

std::vector<Vertex> HomFunctor::support() const {
  std::vector<Vertex> out;
  for (const auto& [v, n] : nodes_) out.push_back(v);
  std::sort(out.begin(), out.end(), [this](const Vertex& a, const Vertex& b) {
    return std::make_pair(column(*dyn_, a), a.i) < std::make_pair(column(*dyn_, b), b.i);
  });
  return out;
}

HomResult hom_dim_universal(const Dynkin& dyn, const Vertex& x, const Vertex& y) {
  for (const Vertex& v : {x, y})
    if (v.i < 0 || v.i >= dyn.n) throw Error("vertex " + vertex_to_string(v) + " not in Z" + dyn.name());
  if (column(dyn, y) < column(dyn, x)) return {};
  HomFunctor f(dyn, x, y.p);
  HomResult r;
  r.dim = f.dim(y);
  for (std::size_t k = 0; k < r.dim; ++k) r.basis.push_back(f.representative(y, k));
  return r;
}

std::size_t knitting_hom_dim(const Dynkin& dyn, const Vertex& x, const Vertex& y) {
  for (const Vertex& v : {x, y})
    if (v.i < 0 || v.i >= dyn.n) throw Error("vertex " + vertex_to_string(v) + " not in Z" + dyn.name());
  const int cx = column(dyn, x), cy = column(dyn, y);
  if (cy < cx) return 0;
  std::map<Vertex, long> h{{x, 1}};
  auto get = [&](const Vertex& v) {
    auto it = h.find(v);
    return it == h.end() ? 0L : it->second;
  };
  for (int c = cx + 1; c <= cy; ++c) {
    const int p = floor_div(c, 2);
    for (int i = 0; i < dyn.n; ++i) {
      if (dyn.color[i] != c - 2 * p) continue;
      const Vertex v{p, i};
      long s = -get(tau(v));
      for (const Vertex& e : predecessors(dyn, v)) s += get(e);
      if (s > 0) h[v] = s;
    }
  }
  return static_cast<std::size_t>(get(y));
}

std::size_t hom_dim_checked(const Dynkin& dyn, const Vertex& x, const Vertex& y) {
  const std::size_t a = hom_dim_universal(dyn, x, y).dim;
  const std::size_t b = knitting_hom_dim(dyn, x, y);
  if (a != b)
    throw InternalError("Hom" + vertex_to_string(x) + vertex_to_string(y) + ": elimination gives " +
                        std::to_string(a) + ", knitting gives " + std::to_string(b));
  return a;
}

// ---------------------------------------------------------------------------

Vertex OrbitSpec::act(const Vertex& v, long k) const {
  int i = v.i;
  if (b % 2 != 0 && k % 2 != 0) i = dyn.phi[i];
  return {static_cast<int>(v.p - k * a), i};
}

Vertex OrbitSpec::canonical(const Vertex& v) const {
  const long q = floor_div(v.p, a);
  return act(v, q);
}

std::vector<Vertex> OrbitSpec::vertices() const {
  std::vector<Vertex> out;
  for (int p = 0; p < a; ++p)
    for (int i = 0; i < dyn.n; ++i) out.push_back({p, i});
  return out;
}

namespace {

// Parses products of "phi", "tau", "phi^k", "tau^k"; returns (tau exponent,
// phi exponent).
std::pair<long, long> parse_word(std::string_view s, std::string_view whole) {
  long a = 0, b = 0;
  std::size_t pos = 0;
  auto fail = [&]() { throw Error("cannot parse group generator '" + std::string(whole) + "'"); };
  while (pos < s.size()) {
    long* target = nullptr;
    if (s.substr(pos, 3) == "tau") {
      target = &a;
      pos += 3;
    } else if (s.substr(pos, 3) == "phi") {
      target = &b;
      pos += 3;
    } else {
      fail();
    }
    long k = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), k);
      if (ec != std::errc()) fail();
      pos = ptr - s.data();
    }
    *target += k;
    if (pos < s.size()) {
      if (s[pos] != '*') fail();
      ++pos;
      if (pos == s.size()) fail();
    }
  }
  return {a, b};
}

}  // namespace

OrbitSpec parse_orbit_spec(std::string_view diagram, std::string_view generator) {
  std::string g;
  for (char c : generator)
    if (c != ' ') g += c;
  long a = 0, b = 0;
  if (!g.empty() && g.front() == '(') {
    const auto close = g.find(')');
    if (close == std::string::npos) throw Error("cannot parse group generator '" + std::string(generator) + "'");
    auto [a0, b0] = parse_word(std::string_view(g).substr(1, close - 1), generator);
    long k = 1;
    std::string_view rest = std::string_view(g).substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '^') throw Error("cannot parse group generator '" + std::string(generator) + "'");
      auto [ptr, ec] = std::from_chars(rest.data() + 1, rest.data() + rest.size(), k);
      if (ec != std::errc() || ptr != rest.data() + rest.size())
        throw Error("cannot parse group generator '" + std::string(generator) + "'");
    }
    a = a0 * k;
    b = b0 * k;
  } else {
    std::tie(a, b) = parse_word(g, generator);
  }
  if (a < 1) throw Error("group generator must involve a positive power of tau (got '" + std::string(generator) + "')");
  OrbitSpec s{parse_dynkin(diagram), static_cast<int>(a), static_cast<int>(((b % 2) + 2) % 2)};
  return s;
}

OrbitSpec cluster_orbit_spec(int m, int e) {
  if (m < 1 || e < 1 || m * e < 3) throw Error("C_{m,e} needs m,e >= 1 and me >= 3");
  return OrbitSpec{make_dynkin('D', m * e), m, m % 2};
}

OrbitSpec g2_orbit_spec() { return OrbitSpec{make_dynkin('E', 8), 4, 0}; }

std::size_t stmod_count(std::size_t m, std::size_t e) {
  if (m * e < 2) throw Error("stmod_count needs me >= 2");
  return m * (m * e - 2);
}

// ---------------------------------------------------------------------------

OrbitCategory::OrbitCategory(OrbitSpec spec, int jobs) : spec_(std::move(spec)) {
  if (spec_.a < 1) throw Error("orbit spec: tau exponent must be positive");
  const int w0 = (3 * spec_.dyn.coxeter() + 1) / 2;
  const int cap = 16 * w0;
  const std::vector<Vertex> verts = spec_.vertices();
  std::vector<std::unique_ptr<HomFunctor>> built(verts.size());
  std::vector<int> widths(verts.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> diverged{false};

  auto work = [&]() {
    for (std::size_t k = next++; k < verts.size(); k = next++) {
      int w = w0;
      while (true) {
        auto f = std::make_unique<HomFunctor>(spec_.dyn, verts[k], verts[k].p + w);
        if (f->slice_zero(verts[k].p + w)) {
          built[k] = std::move(f);
          widths[k] = w;
          break;
        }
        if (2 * w > cap) {
          diverged = true;
          break;
        }
        w *= 2;
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(verts.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (diverged) throw Error("not Hom-finite: Hom contributions do not vanish within " + std::to_string(cap) + " slices");
  for (std::size_t k = 0; k < verts.size(); ++k) {
    window_ = std::max(window_, widths[k]);
    functors_.emplace(verts[k], std::move(built[k]));
  }
}

const HomFunctor& OrbitCategory::functor(const Vertex& x) const {
  return *functors_.at(spec_.canonical(x));
}

HomSpace OrbitCategory::hom(const Vertex& x0, const Vertex& y0) const {
  const Vertex x = spec_.canonical(x0), y = spec_.canonical(y0);
  const HomFunctor& f = functor(x);
  HomSpace h{x, y, {}, 0};
  const long a = spec_.a;
  for (long k = floor_div(y.p - x.p, a); k >= ceil_div(y.p - f.p_max(), a); --k) {
    const Vertex lift = spec_.act(y, k);
    const std::size_t d = f.dim(lift);
    if (d == 0) continue;
    h.windings.push_back({k, lift, d});
    h.total += d;
  }
  return h;
}

std::vector<Vertex> rigid_indecomposables(const OrbitCategory& c) {
  std::vector<Vertex> out;
  for (const Vertex& z : c.vertices())
    if (c.hom_dim(z, c.tau_of(z)) == 0) out.push_back(z);
  return out;
}

bool compatible(const OrbitCategory& c, const Vertex& u, const Vertex& v) {
  return c.hom_dim(u, c.tau_of(v)) == 0 && c.hom_dim(v, c.tau_of(u)) == 0;
}

std::vector<std::vector<Vertex>> cluster_tilting_objects(const OrbitCategory& c) {
  const std::vector<Vertex> rigid = rigid_indecomposables(c);
  const std::size_t n = rigid.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = compatible(c, rigid[i], rigid[j]);

  std::vector<std::vector<Vertex>> cliques;
  std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          std::vector<Vertex> s;
          for (std::size_t k : r) s.push_back(rigid[k]);
          std::sort(s.begin(), s.end());
          cliques.push_back(std::move(s));
          return;
        }
        std::size_t pivot = p.empty() ? x.front() : p.front();
        const std::vector<std::size_t> cand = p;
        for (std::size_t v : cand) {
          if (adj[pivot][v]) continue;
          std::vector<std::size_t> p2, x2;
          for (std::size_t w : p)
            if (adj[v][w]) p2.push_back(w);
          for (std::size_t w : x)
            if (adj[v][w]) x2.push_back(w);
          r.push_back(v);
          bk(r, p2, x2);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> r, all;
  for (std::size_t k = 0; k < n; ++k) all.push_back(k);
  if (n > 0) bk(r, all, {});
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

bool is_cluster_tilting(const OrbitCategory& c, const std::vector<Vertex>& t0) {
  std::vector<Vertex> t;
  for (const Vertex& v : t0) t.push_back(c.spec().canonical(v));
  for (const Vertex& u : t)
    for (const Vertex& v : t)
      if (c.hom_dim(u, c.tau_of(v)) != 0) return false;
  for (const Vertex& z : c.vertices()) {
    if (std::find(t.begin(), t.end(), z) != t.end()) continue;
    bool ext_vanishes = true;
    for (const Vertex& u : t)
      if (c.hom_dim(u, c.tau_of(z)) != 0) ext_vanishes = false;
    if (ext_vanishes) return false;
  }
  return true;
}

Graph exchange_graph(const std::vector<std::vector<Vertex>>& sets) {
  Graph g{sets.size(), {}};
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].size() != sets[j].size()) continue;
      std::size_t common = 0;
      for (const Vertex& v : sets[i])
        if (std::find(sets[j].begin(), sets[j].end(), v) != sets[j].end()) ++common;
      if (common + 1 == sets[i].size()) g.edges.emplace_back(i, j);
    }
  return g;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertices < 3 || g.edges.size() != g.vertices) return false;
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& a : adj)
    if (a.size() != 2) return false;
  std::size_t prev = 0, cur = adj[0][0], steps = 1;
  while (cur != 0) {
    const std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    ++steps;
  }
  return steps == g.vertices;
}

// ---------------------------------------------------------------------------

SparseVec EndAlgebra::product(const std::vector<std::size_t>& factors) const {
  if (factors.empty()) throw Error("empty product");
  SparseVec cur{{factors[0], Scalar::one(field)}};
  for (std::size_t k = 1; k < factors.size(); ++k) {
    SparseVec next;
    for (const auto& [a, val] : cur) axpy(next, val, mult[a][factors[k]]);
    cur = std::move(next);
  }
  return cur;
}

EndAlgebra endomorphism_algebra(const OrbitCategory& c, const std::vector<Vertex>& t0, const Field& field) {
  const OrbitSpec& spec = c.spec();
  EndAlgebra alg;
  alg.field = field;
  for (const Vertex& v : t0) alg.summands.push_back(spec.canonical(v));
  const std::size_t n = alg.summands.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (alg.summands[i] == alg.summands[j]) throw Error("endomorphism_algebra: repeated summand");

  std::map<std::tuple<std::size_t, Vertex, std::size_t>, std::size_t> lookup;
  std::vector<long> winding;
  alg.identity.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const HomFunctor& f = c.functor(alg.summands[i]);
    for (std::size_t j = 0; j < n; ++j) {
      for (const Winding& w : c.hom(alg.summands[i], alg.summands[j]).windings)
        for (std::size_t idx = 0; idx < w.dim; ++idx) {
          if (i == j && w.lift == alg.summands[i]) alg.identity[i] = alg.basis.size();
          lookup.emplace(std::make_tuple(i, w.lift, idx), alg.basis.size());
          winding.push_back(w.k);
          alg.basis.push_back({i, j, w.lift, idx, f.representative(w.lift, idx)});
        }
    }
  }

  const std::size_t dim = alg.basis.size();
  alg.mult.assign(dim, std::vector<SparseVec>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    const EndBasisElement& ea = alg.basis[a];
    const HomFunctor& f = c.functor(alg.summands[ea.from]);
    for (std::size_t b = 0; b < dim; ++b) {
      const EndBasisElement& eb = alg.basis[b];
      if (eb.from != ea.to) continue;
      std::vector<Vertex> moved;
      for (const Vertex& v : eb.path) moved.push_back(spec.act(v, winding[a]));
      auto res = f.push_along(SparseVec{{ea.index, Scalar::one(kQ)}}, moved);
      if (!res) throw InternalError("endomorphism_algebra: composition left the window");
      SparseVec out;
      for (const auto& [idx, val] : *res) {
        auto it = lookup.find(std::make_tuple(ea.from, moved.back(), idx));
        if (it == lookup.end()) throw InternalError("endomorphism_algebra: composite outside the basis");
        out.emplace(it->second, Scalar(field, val.rational()));
      }
      for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
      alg.mult[a][b] = std::move(out);
    }
  }

  // radical filtration, block by block
  std::vector<std::size_t> rad;
  for (std::size_t k = 0; k < dim; ++k)
    if (std::find(alg.identity.begin(), alg.identity.end(), k) == alg.identity.end()) rad.push_back(k);
  using BlockKey = std::pair<std::size_t, std::size_t>;
  auto block_of = [&](const SparseVec& v) {
    const auto& e = alg.basis[v.begin()->first];
    return BlockKey{e.from, e.to};
  };
  std::vector<std::map<BlockKey, Echelon>> levels;
  std::vector<std::vector<SparseVec>> gens;
  {
    std::map<BlockKey, Echelon> lvl;
    std::vector<SparseVec> g;
    for (std::size_t k : rad) {
      SparseVec u{{k, Scalar::one(field)}};
      auto [it, fresh] = lvl.try_emplace(block_of(u), field);
      if (it->second.insert(u)) g.push_back(u);
    }
    levels.push_back(std::move(lvl));
    gens.push_back(std::move(g));
  }
  while (!gens.back().empty() && levels.size() <= dim + 1) {
    std::map<BlockKey, Echelon> lvl;
    std::vector<SparseVec> g;
    for (const SparseVec& r : gens.back())
      for (std::size_t s : rad) {
        if (alg.basis[s].from != alg.basis[r.begin()->first].to) continue;
        SparseVec prod;
        for (const auto& [a, val] : r) axpy(prod, val, alg.mult[a][s]);
        if (prod.empty()) continue;
        auto [it, fresh] = lvl.try_emplace(block_of(prod), field);
        if (it->second.insert(prod)) g.push_back(prod);
      }
    levels.push_back(std::move(lvl));
    gens.push_back(std::move(g));
  }
  for (const auto& g : gens) {
    if (g.empty()) break;
    alg.rad_dims.push_back(g.size());
  }

  // Gabriel quiver and irreducible representatives
  const auto& r1 = levels[0];
  const std::map<BlockKey, Echelon> empty;
  const auto& r2 = levels.size() > 1 ? levels[1] : empty;
  for (const auto& [key, ech] : r1) {
    auto it = r2.find(key);
    Echelon span = it == r2.end() ? Echelon(field) : it->second;
    const std::size_t base = span.rank();
    for (std::size_t k : rad) {
      if (alg.basis[k].from != key.first || alg.basis[k].to != key.second) continue;
      if (span.insert(SparseVec{{k, Scalar::one(field)}})) alg.irreducibles.push_back(k);
    }
    if (span.rank() > base) alg.gabriel.push_back({key.first, key.second, span.rank() - base});
  }
  std::sort(alg.gabriel.begin(), alg.gabriel.end());
  return alg;
}

bool matches_lambda(const EndAlgebra& a, std::size_t m, std::size_t e) {
  if (a.summands.size() != m || m * e < 3) return false;
  if (a.dimension() != m * (m * e - 1)) return false;
  std::vector<std::size_t> next(m, m), arrow(m, 0);
  for (const GabrielArrow& g : a.gabriel) {
    if (g.count != 1 || next[g.from] != m) return false;
    next[g.from] = g.to;
  }
  for (std::size_t k : a.irreducibles) arrow[a.basis[k].from] = k;
  std::vector<bool> seen(m, false);
  std::size_t at = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (next[at] == m || seen[at]) return false;
    seen[at] = true;
    at = next[at];
  }
  if (at != 0) return false;
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::size_t> factors;
    std::size_t v = s;
    for (std::size_t k = 0; k + 1 < m * e; ++k) {
      factors.push_back(arrow[v]);
      v = next[v];
    }
    if (!a.product(factors).empty()) return false;
    factors.pop_back();
    if (!factors.empty() && a.product(factors).empty()) return false;
  }
  return true;
}

bool matches_g2(const EndAlgebra& a) {
  if (a.summands.size() != 2 || a.dimension() != 7 || a.gabriel.size() != 2) return false;
  std::optional<std::size_t> loop;
  bool link = false;
  for (const GabrielArrow& g : a.gabriel) {
    if (g.count != 1) return false;
    if (g.from == g.to) loop = g.from;
    else link = true;
  }
  if (!loop || !link) return false;
  std::size_t b = 0;
  for (std::size_t k : a.irreducibles)
    if (a.basis[k].from == *loop && a.basis[k].to == *loop) b = k;
  return a.product({b, b, b}).empty() && !a.product({b, b}).empty();
}

G2Data find_g2_pair(const OrbitCategory& c) {
  G2Data d;
  d.rigid = rigid_indecomposables(c);
  std::vector<std::vector<Vertex>> orbits;
  std::set<Vertex> seen;
  for (const Vertex& z : d.rigid) {
    if (seen.count(z)) continue;
    std::vector<Vertex> orb;
    for (Vertex v = z; !seen.count(v); v = c.tau_of(v)) {
      seen.insert(v);
      orb.push_back(v);
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  if (orbits.size() != 2) throw Error("expected two tau-orbits of rigid objects, found " + std::to_string(orbits.size()));
  const std::size_t e0 = c.hom_dim(orbits[0][0], orbits[0][0]);
  const std::size_t e1 = c.hom_dim(orbits[1][0], orbits[1][0]);
  if (e0 == e1) throw Error("cannot orient the rigid orbits: equal endomorphism dimensions");
  const auto& xo = e0 < e1 ? orbits[0] : orbits[1];
  const auto& yo = e0 < e1 ? orbits[1] : orbits[0];
  d.x = xo.front();
  std::vector<Vertex> partners;
  for (const Vertex& y : yo)
    if (compatible(c, d.x, y)) partners.push_back(y);
  for (const Vertex& y : partners)
    if (std::find(partners.begin(), partners.end(), c.tau_of(y)) != partners.end()) {
      d.y = y;
      return d;
    }
  throw Error("no partner Y with X+Y and X+tau Y both cluster-tilting");
}

// ---------------------------------------------------------------------------

std::pair<int, int> display_position(const Dynkin& dyn, const Vertex& v) { return {dyn.row.at(v.i), column(dyn, v)}; }

namespace {

std::string node_id(const Vertex& v) { return "\"" + std::to_string(v.p) + "," + std::to_string(v.i) + "\""; }

void emit_node(std::ostringstream& out, const Dynkin& dyn, const Vertex& v, const std::string* mark) {
  const auto [row, col] = display_position(dyn, v);
  out << "  " << node_id(v) << " [label=\"" << vertex_to_string(v) << "\", pos=\"" << col << "," << -row << "!\"";
  if (mark) out << ", xlabel=\"" << *mark << "\", style=bold";
  out << "];\n";
}

}  // namespace

std::string emit_ar_quiver_dot(const OrbitSpec& spec, const std::map<Vertex, std::string>& marks) {
  std::ostringstream out;
  std::string gen = "tau^" + std::to_string(spec.a);
  if (spec.b % 2) gen = "phi*" + gen;
  out << "digraph \"Z" << spec.dyn.name() << "/<" << gen << ">\" {\n";
  out << "  node [shape=plaintext];\n";
  for (const Vertex& v : spec.vertices()) {
    auto it = marks.find(v);
    emit_node(out, spec.dyn, v, it == marks.end() ? nullptr : &it->second);
  }
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Vertex& v : spec.vertices())
    for (const Vertex& w : successors(spec.dyn, v)) edges.emplace(v, spec.canonical(w));
  for (const auto& [u, v] : edges) out << "  " << node_id(u) << " -> " << node_id(v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_window_dot(const Dynkin& dyn, int p_min, int p_max) {
  std::ostringstream out;
  out << "digraph \"Z" << dyn.name() << "[" << p_min << "," << p_max << "]\" {\n";
  out << "  node [shape=plaintext];\n";
  for (int p = p_min; p <= p_max; ++p)
    for (int i = 0; i < dyn.n; ++i) emit_node(out, dyn, {p, i}, nullptr);
  for (int p = p_min; p <= p_max; ++p)
    for (int i = 0; i < dyn.n; ++i)
      for (const Vertex& w : successors(dyn, {p, i}))
        if (w.p <= p_max) out << "  " << node_id({p, i}) << " -> " << node_id(w) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace quiverforge
