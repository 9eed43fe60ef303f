#pragma once

namespace liyorke {

// A point of the state space [0,1) x {0,...,k-1}.  Plain interval systems use
// label 0 throughout.
struct Point {
  double coord = 0.0;
  int label = 0;
};

inline bool operator==(const Point& a, const Point& b) {
  return a.coord == b.coord && a.label == b.label;
}

// Normalized circle distance between coordinates, diameter 1/2.
inline double circle_distance(double x, double y) {
  double a = x - y;
  if (a < 0) a = -a;
  return a <= 0.5 ? a : 1.0 - a;
}

}  // namespace liyorke
