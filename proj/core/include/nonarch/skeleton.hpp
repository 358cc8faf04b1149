#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nonarch {

struct GraphEdge {
  long u = 0;
  long v = 0;
  mpq_class length;
};

/// Finite metric graph; loops and multi-edges allowed. Each cusp is an
/// infinite half-edge attached at a vertex.
struct SkeletonGraph {
  long num_vertices = 0;
  std::vector<GraphEdge> edges;
  std::vector<long> cusps;  // attachment vertex of each cusp
};

/// Throws invalid_argument unless the graph is connected with positive lengths.
void validate_graph(const SkeletonGraph& g);

/// A point of the realization: a vertex, an interior point of an edge at
/// distance `offset` from edge.u, or a point on a cusp at distance `offset`
/// from its vertex.
struct GraphPoint {
  enum class Kind { kVertex, kEdge, kCusp };
  Kind kind = Kind::kVertex;
  long id = 0;
  mpq_class offset;

  static GraphPoint vertex(long v) { return {Kind::kVertex, v, 0}; }
  static GraphPoint on_edge(long e, const mpq_class& t) { return {Kind::kEdge, e, t}; }
  static GraphPoint on_cusp(long c, const mpq_class& t) { return {Kind::kCusp, c, t}; }

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    return a.kind == b.kind && a.id == b.id && a.offset == b.offset;
  }
};

/// Endpoints of edges and cusps become vertices; throws on out-of-range data.
GraphPoint canonical_point(const SkeletonGraph& g, const GraphPoint& x);
std::string to_string(const GraphPoint& x);

/// Embedding of `coarse` into `fine`: vertices to vertices, each edge to a
/// path of fine edges (edge id, +1 along u->v or -1), cusps to cusps.
struct Refinement {
  SkeletonGraph coarse;
  SkeletonGraph fine;
  std::vector<long> vertex_map;
  std::vector<std::vector<std::pair<long, int>>> edge_paths;
  std::vector<long> cusp_map;
};

/// Checked refinement with the lookup tables retraction needs.
class RefinementMap {
 public:
  explicit RefinementMap(Refinement r);

  const Refinement& data() const { return r_; }

  /// Nearest-point retraction of the fine graph onto the embedded coarse one.
  GraphPoint retract(const GraphPoint& fine_point) const;
  GraphPoint embed(const GraphPoint& coarse_point) const;

 private:
  struct EdgeImage {
    long coarse_edge = -1;
    mpq_class start;  // offset along the coarse edge at the traversal start
    int dir = 1;
  };

  Refinement r_;
  std::vector<EdgeImage> edge_image_;          // per fine edge
  std::vector<long> attach_;                   // per fine vertex: image vertex it retracts to
  std::vector<std::optional<GraphPoint>> vertex_image_;  // per fine vertex in the image
  std::vector<long> cusp_image_;               // per fine cusp: coarse cusp or -1
};

/// Refinement of the coarse graph of `lower` into the fine graph of `upper`,
/// where lower.fine == upper.coarse.
Refinement compose(const Refinement& lower, const Refinement& upper);

struct ComposeReport {
  bool ok = true;
  std::optional<GraphPoint> counterexample;
  std::string detail;
};

/// For x on the finest graph: the coarse map of (the middle retraction of x)
/// equals the composed retraction, and re-embedding the middle image does not
/// change the composed retraction.
ComposeReport compose_check(const Refinement& fine_to_mid, const Refinement& mid_to_coarse,
                            const std::vector<GraphPoint>& samples);

/// graphs[0] is the coarsest; steps[i] refines graphs[i] into graphs[i+1].
struct Tower {
  std::vector<SkeletonGraph> graphs;
  std::vector<Refinement> steps;
};

void validate_tower(const Tower& t);

/// Image of a finest-level point at the given level.
GraphPoint tower_image(const Tower& t, const GraphPoint& x, std::size_t level);

/// Smallest level at which the images of x and y differ.
std::size_t tower_separation(const Tower& t, const GraphPoint& x, const GraphPoint& y);

/// Interior subdivision points of a level-0 edge at every level.
struct SubdivisionSet {
  mpq_class length;
  std::vector<std::vector<mpq_class>> levels;
};

SubdivisionSet subdivision_of(const Tower& t, long edge);

/// Element of the completed order: a formal endpoint or an interior point.
struct OrderPoint {
  enum class Kind { kZero, kInterior, kOne };
  Kind kind = Kind::kInterior;
  mpq_class t;

  friend bool operator==(const OrderPoint& a, const OrderPoint& b) {
    return a.kind == b.kind && (a.kind != Kind::kInterior || a.t == b.t);
  }
};

struct CompletedOrder {
  mpq_class length;
  std::vector<OrderPoint> points;  // 0_e, interior increasing, 1_e

  /// t -> L - t, swapping 0_e and 1_e.
  OrderPoint reverse(const OrderPoint& x) const;
  /// x < y in the order.
  bool less(const OrderPoint& x, const OrderPoint& y) const;
};

/// Union of the levels (which must be nested) with formal endpoints.
CompletedOrder subdivision_union(const SubdivisionSet& s);

/// Random tower with the given number of refinement steps.
Tower random_tower(std::uint64_t seed, int depth);
std::vector<GraphPoint> random_points(const SkeletonGraph& g, std::mt19937_64& rng, int count);

/// Quotient of the Tate tree by q^{lZ}: a cycle of l vertices, edges of
/// length v(q), one cusp per vertex.
SkeletonGraph tate_cycle_graph(long l, const mpq_class& vq);
/// Translation by k steps.
GraphPoint rotate(const SkeletonGraph& cycle, const GraphPoint& x, long k);

}  // namespace nonarch
