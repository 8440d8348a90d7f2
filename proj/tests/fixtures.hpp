#pragma once

#include "robloc/graph.hpp"

namespace robloc::test {

// The 5-vertex graph of the worked single-cop example: probing C splits the
// vertices into distance classes 0,1,2,3 and the 3-class is {D,E}.
inline Graph make_g5() {
    return Graph::from_edges({{"C", "A"}, {"A", "B"}, {"B", "D"}, {"B", "E"}});
}

inline Graph make_k3() {
    return Graph::from_edges({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline Graph make_p3() {
    return Graph::from_edges({{"a", "b"}, {"b", "c"}});
}

inline Graph make_single_edge() {
    return Graph::from_edges({{"a", "b"}});
}

}  // namespace robloc::test
