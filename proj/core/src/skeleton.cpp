#include "nonarch/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nonarch/ext_rational.hpp"

namespace nonarch {

namespace {

struct UnionFind {
  std::vector<long> parent;
  explicit UnionFind(long n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0L);
  }
  long find(long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(long a, long b) { parent[find(a)] = find(b); }
};

bool same_graph(const SkeletonGraph& a, const SkeletonGraph& b) {
  if (a.num_vertices != b.num_vertices || a.cusps != b.cusps || a.edges.size() != b.edges.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i].u != b.edges[i].u || a.edges[i].v != b.edges[i].v ||
        a.edges[i].length != b.edges[i].length) {
      return false;
    }
  }
  return true;
}

}  // namespace

void validate_graph(const SkeletonGraph& g) {
  if (g.num_vertices < 1) throw std::invalid_argument("graph: no vertices");
  UnionFind uf(g.num_vertices);
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (e.length <= 0) throw std::invalid_argument("graph: edge lengths must be positive");
    uf.unite(e.u, e.v);
  }
  for (long c : g.cusps) {
    if (c < 0 || c >= g.num_vertices) throw std::invalid_argument("graph: cusp vertex out of range");
  }
  for (long v = 1; v < g.num_vertices; ++v) {
    if (uf.find(v) != uf.find(0)) throw std::invalid_argument("graph: not connected");
  }
}

GraphPoint canonical_point(const SkeletonGraph& g, const GraphPoint& x) {
  switch (x.kind) {
    case GraphPoint::Kind::kVertex:
      if (x.id < 0 || x.id >= g.num_vertices) throw std::invalid_argument("point: vertex out of range");
      return GraphPoint::vertex(x.id);
    case GraphPoint::Kind::kEdge: {
      if (x.id < 0 || x.id >= static_cast<long>(g.edges.size())) {
        throw std::invalid_argument("point: edge out of range");
      }
      const GraphEdge& e = g.edges[static_cast<std::size_t>(x.id)];
      if (x.offset < 0 || x.offset > e.length) throw std::invalid_argument("point: offset outside the edge");
      if (x.offset == 0) return GraphPoint::vertex(e.u);
      if (x.offset == e.length) return GraphPoint::vertex(e.v);
      return x;
    }
    case GraphPoint::Kind::kCusp:
      if (x.id < 0 || x.id >= static_cast<long>(g.cusps.size())) {
        throw std::invalid_argument("point: cusp out of range");
      }
      if (x.offset < 0) throw std::invalid_argument("point: negative cusp offset");
      if (x.offset == 0) return GraphPoint::vertex(g.cusps[static_cast<std::size_t>(x.id)]);
      return x;
  }
  throw std::logic_error("point: unknown kind");
}

std::string to_string(const GraphPoint& x) {
  switch (x.kind) {
    case GraphPoint::Kind::kVertex: return "v" + std::to_string(x.id);
    case GraphPoint::Kind::kEdge: return "e" + std::to_string(x.id) + "@" + rational_string(x.offset);
    case GraphPoint::Kind::kCusp: return "c" + std::to_string(x.id) + "@" + rational_string(x.offset);
  }
  return "?";
}

RefinementMap::RefinementMap(Refinement r) : r_(std::move(r)) {
  const SkeletonGraph& cg = r_.coarse;
  const SkeletonGraph& fg = r_.fine;
  validate_graph(cg);
  validate_graph(fg);
  if (r_.vertex_map.size() != static_cast<std::size_t>(cg.num_vertices) ||
      r_.edge_paths.size() != cg.edges.size() || r_.cusp_map.size() != cg.cusps.size()) {
    throw std::invalid_argument("refinement: map sizes do not match the coarse graph");
  }
  edge_image_.assign(fg.edges.size(), EdgeImage{});
  vertex_image_.assign(static_cast<std::size_t>(fg.num_vertices), std::nullopt);
  cusp_image_.assign(fg.cusps.size(), -1);

  for (long v = 0; v < cg.num_vertices; ++v) {
    const long w = r_.vertex_map[static_cast<std::size_t>(v)];
    if (w < 0 || w >= fg.num_vertices) throw std::invalid_argument("refinement: vertex image out of range");
    if (vertex_image_[w]) throw std::invalid_argument("refinement: vertex map not injective");
    vertex_image_[w] = GraphPoint::vertex(v);
  }
  for (std::size_t ce = 0; ce < cg.edges.size(); ++ce) {
    const auto& path = r_.edge_paths[ce];
    if (path.empty()) throw std::invalid_argument("refinement: empty edge path");
    long cur = r_.vertex_map[static_cast<std::size_t>(cg.edges[ce].u)];
    mpq_class cum = 0;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const auto [fe, dir] = path[k];
      if (fe < 0 || fe >= static_cast<long>(fg.edges.size()) || (dir != 1 && dir != -1)) {
        throw std::invalid_argument("refinement: bad path step");
      }
      const GraphEdge& e = fg.edges[static_cast<std::size_t>(fe)];
      if ((dir == 1 ? e.u : e.v) != cur) throw std::invalid_argument("refinement: path is not contiguous");
      if (edge_image_[fe].coarse_edge >= 0) throw std::invalid_argument("refinement: edge map not injective");
      edge_image_[fe] = EdgeImage{static_cast<long>(ce), cum, dir};
      cum += e.length;
      cur = dir == 1 ? e.v : e.u;
      if (k + 1 < path.size()) {
        if (vertex_image_[cur]) throw std::invalid_argument("refinement: path revisits an image vertex");
        vertex_image_[cur] = GraphPoint::on_edge(static_cast<long>(ce), cum);
      }
    }
    if (cur != r_.vertex_map[static_cast<std::size_t>(cg.edges[ce].v)]) {
      throw std::invalid_argument("refinement: path ends at the wrong vertex");
    }
    if (cum != cg.edges[ce].length) throw std::invalid_argument("refinement: path length differs from edge length");
  }
  for (std::size_t c = 0; c < cg.cusps.size(); ++c) {
    const long fc = r_.cusp_map[c];
    if (fc < 0 || fc >= static_cast<long>(fg.cusps.size())) throw std::invalid_argument("refinement: cusp image out of range");
    if (cusp_image_[fc] >= 0) throw std::invalid_argument("refinement: cusp map not injective");
    if (fg.cusps[fc] != r_.vertex_map[static_cast<std::size_t>(cg.cusps[c])]) {
      throw std::invalid_argument("refinement: cusp attached at the wrong vertex");
    }
    cusp_image_[fc] = static_cast<long>(c);
  }

  // Complement of the image: every component must be a tree meeting the
  // image in exactly one vertex.
  UnionFind uf(fg.num_vertices);
  for (std::size_t e = 0; e < fg.edges.size(); ++e) {
    if (edge_image_[e].coarse_edge < 0) {
      const long a = uf.find(fg.edges[e].u);
      const long b = uf.find(fg.edges[e].v);
      if (a == b) throw std::invalid_argument("refinement: complement contains a cycle");
      uf.unite(a, b);
    }
  }
  std::vector<long> anchor(static_cast<std::size_t>(fg.num_vertices), -1);
  for (long w = 0; w < fg.num_vertices; ++w) {
    if (!vertex_image_[w]) continue;
    long& slot = anchor[static_cast<std::size_t>(uf.find(w))];
    if (slot >= 0) throw std::invalid_argument("refinement: a complement component touches the image twice");
    slot = w;
  }
  attach_.assign(static_cast<std::size_t>(fg.num_vertices), -1);
  for (long w = 0; w < fg.num_vertices; ++w) {
    const long a = anchor[static_cast<std::size_t>(uf.find(w))];
    if (a < 0) throw std::invalid_argument("refinement: complement component detached from the image");
    attach_[w] = a;
  }
}

GraphPoint RefinementMap::retract(const GraphPoint& fine_point) const {
  const SkeletonGraph& fg = r_.fine;
  const GraphPoint x = canonical_point(fg, fine_point);
  switch (x.kind) {
    case GraphPoint::Kind::kVertex:
      return *vertex_image_[attach_[x.id]];
    case GraphPoint::Kind::kEdge: {
      const EdgeImage& im = edge_image_[x.id];
      const GraphEdge& e = fg.edges[x.id];
      if (im.coarse_edge < 0) return *vertex_image_[attach_[e.u]];
      const mpq_class pos = im.start + (im.dir == 1 ? x.offset : mpq_class(e.length - x.offset));
      return canonical_point(r_.coarse, GraphPoint::on_edge(im.coarse_edge, pos));
    }
    case GraphPoint::Kind::kCusp:
      if (cusp_image_[x.id] >= 0) return GraphPoint::on_cusp(cusp_image_[x.id], x.offset);
      return *vertex_image_[attach_[fg.cusps[x.id]]];
  }
  throw std::logic_error("retract: unknown kind");
}

GraphPoint RefinementMap::embed(const GraphPoint& coarse_point) const {
  const GraphPoint x = canonical_point(r_.coarse, coarse_point);
  switch (x.kind) {
    case GraphPoint::Kind::kVertex:
      return GraphPoint::vertex(r_.vertex_map[x.id]);
    case GraphPoint::Kind::kEdge: {
      mpq_class cum = 0;
      for (const auto& [fe, dir] : r_.edge_paths[x.id]) {
        const GraphEdge& e = r_.fine.edges[fe];
        if (x.offset < cum + e.length) {
          const mpq_class local = x.offset - cum;
          const mpq_class t = dir == 1 ? local : mpq_class(e.length - local);
          return canonical_point(r_.fine, GraphPoint::on_edge(fe, t));
        }
        cum += e.length;
      }
      throw std::logic_error("embed: offset beyond the path");
    }
    case GraphPoint::Kind::kCusp:
      return GraphPoint::on_cusp(r_.cusp_map[x.id], x.offset);
  }
  throw std::logic_error("embed: unknown kind");
}

Refinement compose(const Refinement& lower, const Refinement& upper) {
  if (!same_graph(lower.fine, upper.coarse)) throw std::invalid_argument("compose: refinements are not chained");
  Refinement out;
  out.coarse = lower.coarse;
  out.fine = upper.fine;
  for (long w : lower.vertex_map) out.vertex_map.push_back(upper.vertex_map[w]);
  for (const auto& path : lower.edge_paths) {
    std::vector<std::pair<long, int>> full;
    for (const auto& [e, dir] : path) {
      const auto& sub = upper.edge_paths[e];
      if (dir == 1) {
        full.insert(full.end(), sub.begin(), sub.end());
      } else {
        for (auto it = sub.rbegin(); it != sub.rend(); ++it) full.emplace_back(it->first, -it->second);
      }
    }
    out.edge_paths.push_back(std::move(full));
  }
  for (long c : lower.cusp_map) out.cusp_map.push_back(upper.cusp_map[c]);
  return out;
}

ComposeReport compose_check(const Refinement& fine_to_mid, const Refinement& mid_to_coarse,
                            const std::vector<GraphPoint>& samples) {
  const RefinementMap r12(fine_to_mid);
  const RefinementMap r23(mid_to_coarse);
  const RefinementMap r13(compose(mid_to_coarse, fine_to_mid));
  for (const auto& x : samples) {
    const GraphPoint mid = r12.retract(x);
    const GraphPoint direct = r13.retract(x);
    const GraphPoint chained = r23.retract(mid);
    if (!(chained == direct)) {
      return {false, x, "r23(r12(x)) = " + to_string(chained) + " but r13(x) = " + to_string(direct)};
    }
    const GraphPoint again = r13.retract(r12.embed(mid));
    if (!(again == direct)) {
      return {false, x, "r13(i12(r12(x))) = " + to_string(again) + " but r13(x) = " + to_string(direct)};
    }
  }
  return {};
}

void validate_tower(const Tower& t) {
  if (t.graphs.empty()) throw std::invalid_argument("tower: no graphs");
  if (t.steps.size() + 1 != t.graphs.size()) throw std::invalid_argument("tower: need one refinement per level step");
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (!same_graph(t.steps[i].coarse, t.graphs[i]) || !same_graph(t.steps[i].fine, t.graphs[i + 1])) {
      throw std::invalid_argument("tower: refinement " + std::to_string(i) + " does not match its levels");
    }
    RefinementMap check(t.steps[i]);
  }
}

namespace {

std::vector<RefinementMap> tower_maps(const Tower& t) {
  std::vector<RefinementMap> maps;
  for (const auto& s : t.steps) maps.emplace_back(s);
  return maps;
}

GraphPoint image_with(const std::vector<RefinementMap>& maps, GraphPoint x, std::size_t level) {
  for (std::size_t i = maps.size(); i > level; --i) x = maps[i - 1].retract(x);
  return x;
}

}  // namespace

GraphPoint tower_image(const Tower& t, const GraphPoint& x, std::size_t level) {
  if (level >= t.graphs.size()) throw std::invalid_argument("tower_image: level out of range");
  return image_with(tower_maps(t), canonical_point(t.graphs.back(), x), level);
}

std::size_t tower_separation(const Tower& t, const GraphPoint& x, const GraphPoint& y) {
  const GraphPoint cx = canonical_point(t.graphs.back(), x);
  const GraphPoint cy = canonical_point(t.graphs.back(), y);
  if (cx == cy) throw std::invalid_argument("tower_separation: points coincide");
  const auto maps = tower_maps(t);
  for (std::size_t level = 0; level < t.graphs.size(); ++level) {
    if (!(image_with(maps, cx, level) == image_with(maps, cy, level))) return level;
  }
  throw std::logic_error("tower_separation: distinct points merged at the finest level");
}

SubdivisionSet subdivision_of(const Tower& t, long edge) {
  validate_tower(t);
  const SkeletonGraph& g0 = t.graphs.front();
  if (edge < 0 || edge >= static_cast<long>(g0.edges.size())) throw std::invalid_argument("subdivision_of: edge out of range");
  SubdivisionSet out;
  out.length = g0.edges[edge].length;
  out.levels.emplace_back();
  std::optional<Refinement> acc;
  for (const auto& step : t.steps) {
    acc = acc ? compose(*acc, step) : step;
    std::vector<mpq_class> pts;
    mpq_class cum = 0;
    const auto& path = acc->edge_paths[edge];
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      cum += acc->fine.edges[path[k].first].length;
      pts.push_back(cum);
    }
    out.levels.push_back(std::move(pts));
  }
  return out;
}

OrderPoint CompletedOrder::reverse(const OrderPoint& x) const {
  switch (x.kind) {
    case OrderPoint::Kind::kZero: return {OrderPoint::Kind::kOne, 0};
    case OrderPoint::Kind::kOne: return {OrderPoint::Kind::kZero, 0};
    case OrderPoint::Kind::kInterior: break;
  }
  return {OrderPoint::Kind::kInterior, length - x.t};
}

bool CompletedOrder::less(const OrderPoint& x, const OrderPoint& y) const {
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
  return x.kind == OrderPoint::Kind::kInterior && x.t < y.t;
}

CompletedOrder subdivision_union(const SubdivisionSet& s) {
  if (s.length <= 0) throw std::invalid_argument("subdivision_union: length must be positive");
  std::set<mpq_class> merged;
  const std::vector<mpq_class>* prev = nullptr;
  for (std::size_t k = 0; k < s.levels.size(); ++k) {
    const auto& lvl = s.levels[k];
    for (std::size_t i = 0; i < lvl.size(); ++i) {
      if (lvl[i] <= 0 || lvl[i] >= s.length) throw std::invalid_argument("subdivision_union: position outside (0, L)");
      if (i > 0 && lvl[i] <= lvl[i - 1]) throw std::invalid_argument("subdivision_union: positions not increasing");
    }
    if (prev) {
      for (const auto& t : *prev) {
        if (!std::binary_search(lvl.begin(), lvl.end(), t)) {
          throw std::invalid_argument("subdivision_union: level " + std::to_string(k) + " misses " +
                                      rational_string(t));
        }
      }
    }
    merged.insert(lvl.begin(), lvl.end());
    prev = &lvl;
  }
  CompletedOrder out;
  out.length = s.length;
  out.points.push_back({OrderPoint::Kind::kZero, 0});
  for (const auto& t : merged) out.points.push_back({OrderPoint::Kind::kInterior, t});
  out.points.push_back({OrderPoint::Kind::kOne, 0});
  return out;
}

namespace {

mpq_class random_length(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 12);
  std::uniform_int_distribution<long> den(1, 4);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

mpq_class random_fraction(std::mt19937_64& rng, const mpq_class& length) {
  std::uniform_int_distribution<long> den(2, 9);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(1, d - 1);
  mpq_class t = length * mpq_class(num(rng), d);
  t.canonicalize();
  return t;
}

}  // namespace

Tower random_tower(std::uint64_t seed, int depth) {
  std::mt19937_64 rng(seed);
  auto pick = [&](long n) { return std::uniform_int_distribution<long>(0, n - 1)(rng); };
  Tower t;
  SkeletonGraph g;
  g.num_vertices = 1 + pick(4);
  for (long v = 1; v < g.num_vertices; ++v) g.edges.push_back({pick(v), v, random_length(rng)});
  const long extra = pick(3);
  for (long i = 0; i < extra; ++i) g.edges.push_back({pick(g.num_vertices), pick(g.num_vertices), random_length(rng)});
  if (g.edges.empty()) g.edges.push_back({0, 0, random_length(rng)});
  for (long i = pick(3); i > 0; --i) g.cusps.push_back(pick(g.num_vertices));
  t.graphs.push_back(g);

  for (int level = 0; level < depth; ++level) {
    const SkeletonGraph& coarse = t.graphs.back();
    SkeletonGraph fine = coarse;
    Refinement r;
    r.coarse = coarse;
    r.vertex_map.resize(static_cast<std::size_t>(coarse.num_vertices));
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0L);
    r.cusp_map.resize(coarse.cusps.size());
    std::iota(r.cusp_map.begin(), r.cusp_map.end(), 0L);
    for (std::size_t e = 0; e < coarse.edges.size(); ++e) r.edge_paths.push_back({{static_cast<long>(e), 1}});
    std::vector<long> owner(coarse.edges.size());  // fine edge -> coarse edge, -1 if hanging
    std::iota(owner.begin(), owner.end(), 0L);

    const long subdivisions = pick(4);
    for (long s = 0; s < subdivisions; ++s) {
      const long e = pick(static_cast<long>(fine.edges.size()));
      const GraphEdge old = fine.edges[e];
      const mpq_class cut = random_fraction(rng, old.length);
      const long w = fine.num_vertices++;
      const long e2 = static_cast<long>(fine.edges.size());
      fine.edges[e] = {old.u, w, cut};
      fine.edges.push_back({w, old.v, old.length - cut});
      owner.push_back(owner[e]);
      if (owner[e] >= 0) {
        auto& path = r.edge_paths[owner[e]];
        for (std::size_t k = 0; k < path.size(); ++k) {
          if (path[k].first != e) continue;
          if (path[k].second == 1) {
            path.insert(path.begin() + static_cast<std::ptrdiff_t>(k) + 1, {e2, 1});
          } else {
            path[k] = {e2, -1};
            path.insert(path.begin() + static_cast<std::ptrdiff_t>(k) + 1, {e, -1});
          }
          break;
        }
      }
    }
    const long trees = pick(3);
    for (long s = 0; s < trees; ++s) {
      long base = pick(fine.num_vertices);
      const long size = 1 + pick(3);
      for (long k = 0; k < size; ++k) {
        const long w = fine.num_vertices++;
        fine.edges.push_back({base, w, random_length(rng)});
        owner.push_back(-1);
        if (pick(2) == 0) base = w;
      }
      if (pick(2) == 0) fine.cusps.push_back(fine.num_vertices - 1);
    }
    r.fine = fine;
    t.steps.push_back(std::move(r));
    t.graphs.push_back(std::move(fine));
  }
  return t;
}

std::vector<GraphPoint> random_points(const SkeletonGraph& g, std::mt19937_64& rng, int count) {
  std::vector<GraphPoint> out;
  auto pick = [&](long n) { return std::uniform_int_distribution<long>(0, n - 1)(rng); };
  for (int i = 0; i < count; ++i) {
    const long kind = pick(g.cusps.empty() ? 2 : 3);
    if (kind == 0) {
      out.push_back(GraphPoint::vertex(pick(g.num_vertices)));
    } else if (kind == 1 && !g.edges.empty()) {
      const long e = pick(static_cast<long>(g.edges.size()));
      out.push_back(GraphPoint::on_edge(e, random_fraction(rng, g.edges[e].length)));
    } else if (!g.cusps.empty()) {
      out.push_back(GraphPoint::on_cusp(pick(static_cast<long>(g.cusps.size())), random_length(rng)));
    } else {
      out.push_back(GraphPoint::vertex(pick(g.num_vertices)));
    }
  }
  return out;
}

SkeletonGraph tate_cycle_graph(long l, const mpq_class& vq) {
  if (l < 1 || vq <= 0) throw std::invalid_argument("tate_cycle_graph: need l >= 1 and v(q) > 0");
  SkeletonGraph g;
  g.num_vertices = l;
  for (long i = 0; i < l; ++i) {
    g.edges.push_back({i, (i + 1) % l, vq});
    g.cusps.push_back(i);
  }
  return g;
}

GraphPoint rotate(const SkeletonGraph& cycle, const GraphPoint& x, long k) {
  const long l = cycle.num_vertices;
  const GraphPoint c = canonical_point(cycle, x);
  const long shifted = ((c.id + k) % l + l) % l;
  return GraphPoint{c.kind, shifted, c.offset};
}

}  // namespace nonarch
