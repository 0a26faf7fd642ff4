#include <algorithm>
#include <optional>
#include <vector>

#include "taxicab/errors.hpp"
#include "taxicab/polygonize.hpp"

namespace taxicab {
namespace {

class Lattice {
 public:
  Lattice(const ConicSpec& spec, const BoundingBox& box, int resolution)
      : spec_(spec), box_(box), res_(resolution) {
    dx_ = box.width() / (res_ - 1);
    dy_ = box.height() / (res_ - 1);
    values_.resize(static_cast<std::size_t>(res_) * res_);
    for (int j = 0; j < res_; ++j) {
      for (int i = 0; i < res_; ++i) values_[index(i, j)] = residual(spec_, node(i, j));
    }
    horizontal_edges_ = static_cast<std::size_t>(res_ - 1) * res_;
    crossings_.resize(horizontal_edges_ * 2);
  }

  Point node(int i, int j) const {
    return {i == res_ - 1 ? box_.x1 : box_.x0 + i * dx_, j == res_ - 1 ? box_.y1 : box_.y0 + j * dy_};
  }
  bool positive(int i, int j) const { return values_[index(i, j)] > 0.0; }
  double value(int i, int j) const { return values_[index(i, j)]; }

  std::size_t horizontal(int i, int j) const { return static_cast<std::size_t>(j) * (res_ - 1) + i; }
  std::size_t vertical(int i, int j) const {
    return horizontal_edges_ + static_cast<std::size_t>(j) * res_ + i;
  }

  /// Refined zero crossing on the lattice edge from node a to node b.
  const Point& crossing(std::size_t edge, int ai, int aj, int bi, int bj) {
    auto& slot = crossings_[edge];
    if (!slot) slot = refine(ai, aj, bi, bj);
    return *slot;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * res_ + i; }

  Point refine(int ai, int aj, int bi, int bj) const {
    Point inside = node(ai, aj);
    Point outside = node(bi, bj);
    if (positive(ai, aj)) std::swap(inside, outside);
    double f_in = residual(spec_, inside);
    double f_out = residual(spec_, outside);
    for (int step = 0; step < kContourMaxBisections; ++step) {
      if (std::min(-f_in, f_out) <= kContourTolerance * 1e-3) break;
      const Point mid{(inside.x + outside.x) / 2, (inside.y + outside.y) / 2};
      const double f_mid = residual(spec_, mid);
      if (f_mid > 0.0) {
        outside = mid;
        f_out = f_mid;
      } else {
        inside = mid;
        f_in = f_mid;
      }
    }
    return -f_in <= f_out ? inside : outside;
  }

  const ConicSpec& spec_;
  BoundingBox box_;
  int res_;
  double dx_ = 0.0;
  double dy_ = 0.0;
  std::vector<double> values_;
  std::size_t horizontal_edges_ = 0;
  std::vector<std::optional<Point>> crossings_;
};

}  // namespace

std::vector<Polygon> contour_sample(const ConicSpec& spec, const BoundingBox& bbox, int resolution) {
  if (resolution < 2) throw InvalidArgument("contour resolution must be >= 2");
  if (!(bbox.width() > 0.0) || !(bbox.height() > 0.0)) {
    throw InvalidArgument("contour bounding box is degenerate");
  }
  validate(spec);
  Lattice lattice(spec, bbox, resolution);

  struct Link {
    std::size_t edge;
    std::vector<std::size_t> neighbours;
  };
  std::vector<Link> links;  // in order of first appearance, row-major by cell
  std::vector<std::ptrdiff_t> slot_of;
  const std::size_t edge_count = 2 * static_cast<std::size_t>(resolution - 1) * resolution;
  slot_of.assign(edge_count, -1);
  auto slot = [&](std::size_t edge) {
    if (slot_of[edge] < 0) {
      slot_of[edge] = static_cast<std::ptrdiff_t>(links.size());
      links.push_back({edge, {}});
    }
    return static_cast<std::size_t>(slot_of[edge]);
  };
  auto connect = [&](std::size_t a, std::size_t b) {
    const std::size_t sa = slot(a);
    const std::size_t sb = slot(b);
    links[sa].neighbours.push_back(sb);
    links[sb].neighbours.push_back(sa);
  };

  // Edge endpoints, so points can be refined on demand.
  struct EdgeNodes {
    int ai, aj, bi, bj;
  };
  std::vector<EdgeNodes> nodes_of(edge_count);

  for (int j = 0; j + 1 < resolution; ++j) {
    for (int i = 0; i + 1 < resolution; ++i) {
      const bool bl = lattice.positive(i, j);
      const bool br = lattice.positive(i + 1, j);
      const bool tr = lattice.positive(i + 1, j + 1);
      const bool tl = lattice.positive(i, j + 1);
      const std::size_t bottom = lattice.horizontal(i, j);
      const std::size_t right = lattice.vertical(i + 1, j);
      const std::size_t top = lattice.horizontal(i, j + 1);
      const std::size_t left = lattice.vertical(i, j);
      nodes_of[bottom] = {i, j, i + 1, j};
      nodes_of[right] = {i + 1, j, i + 1, j + 1};
      nodes_of[top] = {i, j + 1, i + 1, j + 1};
      nodes_of[left] = {i, j, i, j + 1};

      std::vector<std::size_t> hits;
      if (bl != br) hits.push_back(bottom);
      if (br != tr) hits.push_back(right);
      if (tl != tr) hits.push_back(top);
      if (bl != tl) hits.push_back(left);
      if (hits.size() == 2) {
        connect(hits[0], hits[1]);
      } else if (hits.size() == 4) {
        const Point lo = lattice.node(i, j);
        const Point hi = lattice.node(i + 1, j + 1);
        const bool centre = residual(spec, {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}) > 0.0;
        if (centre == bl) {
          connect(bottom, right);
          connect(top, left);
        } else {
          connect(left, bottom);
          connect(right, top);
        }
      }
    }
  }

  auto point_of = [&](std::size_t link) {
    const std::size_t edge = links[link].edge;
    const auto& e = nodes_of[edge];
    return lattice.crossing(edge, e.ai, e.aj, e.bi, e.bj);
  };

  std::vector<bool> visited(links.size(), false);
  std::vector<Polygon> chains;
  auto walk = [&](std::size_t start) {
    Polygon chain{{}, false};
    std::size_t prev = links.size();
    std::size_t cur = start;
    while (true) {
      visited[cur] = true;
      chain.vertices.push_back(point_of(cur));
      std::size_t next = links.size();
      for (std::size_t nb : links[cur].neighbours) {
        if (nb != prev && !visited[nb]) {
          next = nb;
          break;
        }
      }
      if (next == links.size()) {
        for (std::size_t nb : links[cur].neighbours) {
          if (nb == start && nb != prev) chain.closed = true;
        }
        break;
      }
      prev = cur;
      cur = next;
    }
    chains.push_back(std::move(chain));
  };

  for (std::size_t s = 0; s < links.size(); ++s) {
    if (!visited[s] && links[s].neighbours.size() == 1) walk(s);
  }
  for (std::size_t s = 0; s < links.size(); ++s) {
    if (!visited[s]) walk(s);
  }
  return chains;
}

}  // namespace taxicab
