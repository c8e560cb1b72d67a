#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ywalls/young_wall.hpp"

namespace ywalls::test {

// Heights 12,12,12,11,10,8,7,6 with the 12s lower-topped and the 6 upper-topped.
inline YoungWallD example_wall() {
  return YoungWallD(RankD(4), {{12, Top::Lower}, {12, Top::Lower}, {12, Top::Lower}, {11, {}},
                               {10, {}}, {8, {}}, {7, {}}, {6, Top::Upper}});
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string golden(const std::string& name) {
  return read_file(std::string(YWALLS_GOLDEN_DIR) + "/" + name);
}

// Calls fn(z) for every z in [-r, r]^dim.
template <class Fn>
void for_each_in_box(int dim, Int r, Fn&& fn) {
  std::vector<Int> z(static_cast<std::size_t>(dim), -r);
  for (;;) {
    fn(z);
    std::size_t i = 0;
    while (i < z.size() && z[i] == r) z[i++] = -r;
    if (i == z.size()) return;
    ++z[i];
  }
}

}  // namespace ywalls::test
