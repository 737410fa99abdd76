#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nested/error.hpp"

namespace nested {

/// Where a search through a group of concentric rings converges.
enum class SearchMode { Inward, Outward };

enum class Group { A, B };

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Points2 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

/// Two identical groups of concentric rings, centered at (-separation/2, 0)
/// (group A) and (+separation/2, 0) (group B).
template <typename Scalar>
struct Layout {
  std::vector<Scalar> radii;  ///< strictly decreasing, outermost first
  std::size_t nodes_per_ring = 1;
  Scalar separation = 0;
  SearchMode mode = SearchMode::Inward;
};

template <typename Scalar>
struct CostReport {
  Scalar intra_a = 0;
  Scalar intra_b = 0;
  Scalar inter = 0;
  Scalar total = 0;
};

template <typename Scalar>
Layout<Scalar> build_layout(std::vector<Scalar> radii, std::size_t nodes_per_ring,
                            Scalar separation, SearchMode mode) {
  if (radii.empty()) throw Error(ErrorKind::InvalidRadii, "at least one ring radius is required");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0) || !std::isfinite(radii[i]))
      throw Error(ErrorKind::InvalidRadii, "ring radii must be positive and finite");
    if (i > 0 && !(radii[i] < radii[i - 1]))
      throw Error(ErrorKind::InvalidRadii, "ring radii must be strictly decreasing");
  }
  if (nodes_per_ring == 0)
    throw Error(ErrorKind::InvalidNodeCount, "nodes_per_ring must be at least 1");
  if (!(separation >= 0) || !std::isfinite(separation))
    throw Error(ErrorKind::InvalidSeparation, "separation must be non-negative and finite");
  return Layout<Scalar>{std::move(radii), nodes_per_ring, separation, mode};
}

/// +1 for group B, -1 for group A: the direction pointing away from the
/// other group.
inline int away_sign(Group group) { return group == Group::B ? 1 : -1; }

template <typename Scalar>
Point2<Scalar> group_center(const Layout<Scalar>& layout, Group group) {
  return Point2<Scalar>(away_sign(group) * layout.separation / 2, 0);
}

/// Inward: the group center. Outward: the point of the outermost ring
/// farthest from the other group.
template <typename Scalar>
Point2<Scalar> terminal(const Layout<Scalar>& layout, Group group) {
  Point2<Scalar> t = group_center(layout, group);
  if (layout.mode == SearchMode::Outward) t.x() += away_sign(group) * layout.radii.front();
  return t;
}

/// Uniformly spaced ring nodes, one column per node. Node k of every ring
/// sits at angle pi(2k+1)/n measured from the away direction, so the two
/// groups are mirror images and a single node faces the other group.
template <typename Scalar>
Points2<Scalar> ring_nodes(const Layout<Scalar>& layout, Group group) {
  const auto n = static_cast<Eigen::Index>(layout.nodes_per_ring);
  const Point2<Scalar> center = group_center(layout, group);
  Points2<Scalar> nodes(2, n * static_cast<Eigen::Index>(layout.radii.size()));
  const Scalar pi = std::numbers::pi_v<Scalar>;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar angle = pi * Scalar(2 * k + 1) / Scalar(n);
    const Point2<Scalar> dir(away_sign(group) * std::cos(angle), std::sin(angle));
    for (std::size_t r = 0; r < layout.radii.size(); ++r)
      nodes.col(static_cast<Eigen::Index>(r) * n + k) = center + layout.radii[r] * dir;
  }
  return nodes;
}

template <typename Scalar>
Scalar intra_cost(const Layout<Scalar>& layout, Group group) {
  const Points2<Scalar> nodes = ring_nodes(layout, group);
  return (nodes.colwise() - terminal(layout, group)).colwise().norm().sum();
}

template <typename Scalar>
CostReport<Scalar> wiring_cost(const Layout<Scalar>& layout) {
  CostReport<Scalar> report;
  report.intra_a = intra_cost(layout, Group::A);
  report.intra_b = intra_cost(layout, Group::B);
  report.inter = (terminal(layout, Group::A) - terminal(layout, Group::B)).norm();
  report.total = report.intra_a + report.intra_b + report.inter;
  return report;
}

inline std::string to_string(SearchMode mode) {
  return mode == SearchMode::Inward ? "inward" : "outward";
}

}  // namespace nested
