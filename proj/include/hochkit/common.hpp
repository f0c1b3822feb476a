#pragma once

#include <stdexcept>
#include <string>

namespace hochkit {

enum class ObjectKind { painted_tree, lighted_shade };

inline std::string to_string(ObjectKind k) {
  return k == ObjectKind::painted_tree ? "painted" : "shade";
}

inline ObjectKind parse_object_kind(const std::string& s) {
  if (s == "painted" || s == "painted_tree" || s == "pt") return ObjectKind::painted_tree;
  if (s == "shade" || s == "lighted_shade" || s == "ls") return ObjectKind::lighted_shade;
  throw std::invalid_argument("unknown object kind: " + s);
}

// Exhaustive routines refuse m + n above this unless the caller raises it.
inline constexpr int kDefaultMaxDim = 8;

inline void check_parameters(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  if (m == 0 && n == 0) throw std::invalid_argument("(m, n) = (0, 0) is excluded");
  if (m + n > 31) throw std::invalid_argument("m + n too large for preposet width");
}

inline void check_bound(int m, int n, int max_dim) {
  check_parameters(m, n);
  if (m + n > max_dim)
    throw std::length_error("m + n = " + std::to_string(m + n) + " exceeds enumeration bound " +
                            std::to_string(max_dim));
}

inline void check_rank(int m, int n, int rank) {
  if (rank < 0 || rank > m + n - 1)
    throw std::invalid_argument("rank " + std::to_string(rank) + " outside [0, m+n-1]");
}

// A rotation step; `move` is 1, 2 or 3 for the three move families.
template <class T>
struct Rotation {
  T target;
  int move;
};

}  // namespace hochkit
