#include "belted/canonical.hpp"

#include <cstdio>

namespace belted {

namespace {

// Least traversal string over all starting darts for one orientation.
// `forward` walks each rotation as given; otherwise it walks it backwards.
std::vector<std::uint32_t> best_code(const Polytope& p, bool forward) {
  const int n = p.vertex_count();
  const std::size_t length = 2 + 3 * static_cast<std::size_t>(n);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cur(length);
  std::vector<int> number(static_cast<std::size_t>(n));
  std::vector<int> ref(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));

  for (int start = 0; start < n; ++start) {
    for (int first : p.neighbors(start)) {
      std::fill(number.begin(), number.end(), 0);
      cur[0] = static_cast<std::uint32_t>(n);
      cur[1] = static_cast<std::uint32_t>(p.facet_count());
      std::size_t pos = 2;
      // 0: undecided (equal prefix), -1: already smaller than best.
      int state = best.empty() ? -1 : 0;
      bool abandoned = false;

      int count = 1, head = 0, tail = 0;
      number[static_cast<std::size_t>(start)] = 1;
      ref[static_cast<std::size_t>(start)] = first;
      order[static_cast<std::size_t>(tail++)] = start;
      while (head < tail && !abandoned) {
        int x = order[static_cast<std::size_t>(head++)];
        int y = ref[static_cast<std::size_t>(x)];
        for (int k = 0; k < 3; ++k) {
          if (k > 0) y = forward ? p.rotate(x, y) : p.rotate_back(x, y);
          auto& ny = number[static_cast<std::size_t>(y)];
          if (ny == 0) {
            ny = ++count;
            ref[static_cast<std::size_t>(y)] = x;
            order[static_cast<std::size_t>(tail++)] = y;
          }
          auto value = static_cast<std::uint32_t>(ny);
          if (state == 0) {
            if (value > best[pos]) {
              abandoned = true;
              break;
            }
            if (value < best[pos]) state = -1;
          }
          cur[pos++] = value;
        }
      }
      if (!abandoned && state == -1) best = cur;
    }
  }
  return best;
}

}  // namespace

std::string CanonicalCode::hex() const {
  std::string out;
  out.reserve(code.size() * 4);
  char buf[16];
  for (std::uint32_t v : code) {
    std::snprintf(buf, sizeof buf, "%04x", v);
    out += buf;
  }
  return out;
}

CanonicalCode canonical_code(const Polytope& p, bool allow_mirror) {
  CanonicalCode out;
  out.code = best_code(p, true);
  if (allow_mirror) {
    auto mirrored = best_code(p, false);
    if (mirrored < out.code) {
      out.code = std::move(mirrored);
      out.orientation_class = OrientationClass::Mirrored;
    }
  }
  return out;
}

bool is_combinatorially_chiral(const Polytope& p) { return best_code(p, true) != best_code(p, false); }

}  // namespace belted
