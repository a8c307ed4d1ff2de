#pragma once

// Golden representation documents used by the verifier and document tests.

namespace coseg::fixtures {

// Two vertices, xy in G: disjoint segments.
inline constexpr const char* kBaseEdge = R"({
  "format": "coseg-representation",
  "version": 1,
  "n": 2,
  "graph_edges": [
    [0,1]
  ],
  "two_tree_edges": [
    {"u":0,"v":1,"fill":false}
  ],
  "segments": [
    {"vertex":0,"a":["0","0"],"b":["4","0"]},
    {"vertex":1,"a":["2","1"],"b":["2","3"]}
  ],
  "special_rays": [
    {"u":0,"v":1,"start":["1","0"],"through":["2","1"]}
  ],
  "metadata": {"seed":null,"shrink_levels":[],"max_shrink_level":0,"max_coordinate_bits":3}
}
)";

// Two vertices, xy not in G: crossing segments.
inline constexpr const char* kBaseNonEdge = R"({
  "format": "coseg-representation",
  "version": 1,
  "n": 2,
  "graph_edges": [],
  "two_tree_edges": [
    {"u":0,"v":1,"fill":true}
  ],
  "segments": [
    {"vertex":0,"a":["0","0"],"b":["4","0"]},
    {"vertex":1,"a":["2","-1"],"b":["2","1"]}
  ],
  "special_rays": [
    {"u":0,"v":1,"start":["1","0"],"through":["2","1"]}
  ],
  "metadata": {"seed":null,"shrink_levels":[],"max_shrink_level":0,"max_coordinate_bits":3}
}
)";

// G = G_T = K3: three pairwise disjoint segments.
inline constexpr const char* kTriangle = R"({
  "format": "coseg-representation",
  "version": 1,
  "n": 3,
  "graph_edges": [
    [0,1],
    [0,2],
    [1,2]
  ],
  "two_tree_edges": [
    {"u":0,"v":1,"fill":false},
    {"u":0,"v":2,"fill":false},
    {"u":1,"v":2,"fill":false}
  ],
  "segments": [
    {"vertex":0,"a":["159/128","1/4"],"b":["327/64","4"]},
    {"vertex":1,"a":["0","0"],"b":["4","0"]},
    {"vertex":2,"a":["2","1"],"b":["2","3"]}
  ],
  "special_rays": [
    {"u":0,"v":1,"start":["63061/65536","0"],"through":["327/64","4"]},
    {"u":0,"v":2,"start":["33441/8192","769/256"],"through":["2","1"]},
    {"u":1,"v":2,"start":["1","0"],"through":["2","1"]}
  ],
  "metadata": {"seed":null,"shrink_levels":[0],"max_shrink_level":0,"max_coordinate_bits":17}
}
)";

}  // namespace coseg::fixtures
