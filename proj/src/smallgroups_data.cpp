// Generated by tools/gen_smallgroups.cpp; do not edit by hand.
// Regular representations of all groups of order <= 63.

#include "mapkit/smallgroups_data.hpp"

namespace mapkit {

namespace {

const std::uint8_t bytes[] = {
0,1,0,1,2,0,1,0,3,2,2,3,0,1,2,3,1,0,1,2,3,4,0,4,5,3,1,2,0,1,2,0,5,3,4,3,4,5,0,1,2,1,2,3,4,5,6,0,1,0,3,
2,5,4,7,6,2,3,0,1,6,7,4,5,4,5,6,7,0,1,2,3,4,5,6,7,1,0,3,2,6,7,4,5,3,2,1,0,6,7,4,5,3,2,1,0,2,3,0,1,7,6,
5,4,4,5,6,7,2,3,1,0,2,3,1,0,7,6,4,5,4,5,6,7,1,0,3,2,1,2,0,4,5,3,7,8,6,3,4,5,6,7,8,0,1,2,3,4,5,6,7,8,1,
2,0,6,7,8,9,5,1,2,3,4,0,1,2,3,4,0,9,5,6,7,8,5,6,7,8,9,0,1,2,3,4,1,2,3,4,5,6,7,8,9,10,0,4,5,3,1,2,0,10,
11,9,7,8,6,7,8,6,10,11,9,1,2,0,4,5,3,7,8,6,10,11,9,4,5,3,1,2,0,4,5,3,1,2,0,11,9,10,8,6,7,6,7,8,9,10,11,
0,1,2,3,4,5,4,5,3,1,2,0,11,9,10,8,6,7,6,7,8,9,10,11,3,4,5,0,1,2,4,5,6,7,8,9,10,11,0,1,2,3,5,4,7,6,11,
10,9,8,2,3,0,1,1,2,3,4,5,6,7,8,9,10,11,12,0,8,9,10,11,12,13,7,1,2,3,4,5,6,0,1,2,3,4,5,6,0,13,7,8,9,10,
11,12,7,8,9,10,11,12,13,0,1,2,3,4,5,6,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,1,0,3,2,5,4,7,6,9,8,11,10,13,
12,15,14,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,4,5,6,7,0,1,2,3,12,13,14,15,8,9,10,11,8,9,10,11,12,13,
14,15,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,12,
13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,14,15,12,13,10,11,8,9,7,6,5,
4,3,2,1,0,4,5,6,7,0,1,2,3,13,12,15,14,9,8,11,10,8,9,10,11,12,13,14,15,2,3,0,1,6,7,4,5,9,8,11,10,13,12,
15,14,3,2,1,0,7,6,5,4,12,13,14,15,8,9,10,11,7,6,5,4,3,2,1,0,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,10,6,7,
4,5,3,2,1,0,14,15,12,13,11,10,9,8,8,9,10,11,12,13,14,15,2,3,0,1,6,7,4,5,8,9,10,11,12,13,14,15,4,5,6,7,
1,0,3,2,10,11,8,9,14,15,12,13,6,7,4,5,3,2,1,0,4,5,6,7,1,0,3,2,13,12,15,14,8,9,10,11,6,7,4,5,3,2,1,0,15,
14,13,12,10,11,8,9,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,4,5,6,7,1,0,3,2,13,12,15,14,8,9,10,11,6,7,4,
5,3,2,1,0,15,14,13,12,10,11,8,9,8,9,10,11,12,13,14,15,2,3,0,1,6,7,4,5,4,5,6,7,1,0,3,2,12,13,14,15,9,8,
11,10,6,7,4,5,3,2,1,0,15,14,13,12,10,11,8,9,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,8,9,10,11,12,13,14,
15,4,5,6,7,1,0,3,2,10,11,8,9,14,15,12,13,7,6,5,4,2,3,0,1,10,11,8,9,15,14,13,12,4,5,6,7,0,1,2,3,2,3,0,
1,7,6,5,4,12,13,14,15,8,9,10,11,10,11,8,9,15,14,13,12,5,4,7,6,1,0,3,2,8,9,10,11,12,13,14,15,1,0,3,2,5,
4,7,6,8,9,10,11,12,13,14,15,4,5,6,7,2,3,1,0,4,5,6,7,2,3,1,0,15,14,12,13,8,9,10,11,8,9,10,11,12,13,14,
15,1,0,3,2,5,4,7,6,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,0,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,
6,12,13,14,15,16,17,9,10,11,3,4,5,6,7,8,0,1,2,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,6,13,14,12,16,
17,15,10,11,9,7,8,6,1,2,0,4,5,3,1,2,0,4,5,3,7,8,6,11,9,10,14,12,13,17,15,16,3,4,5,6,7,8,0,1,2,15,16,17,
9,10,11,12,13,14,9,10,11,12,13,14,15,16,17,0,1,2,3,4,5,6,7,8,12,13,14,15,16,17,10,11,9,3,4,5,6,7,8,1,
2,0,3,4,5,6,7,8,1,2,0,17,15,16,9,10,11,12,13,14,9,10,11,12,13,14,15,16,17,0,1,2,3,4,5,6,7,8,1,2,3,4,5,
6,7,8,9,10,11,12,13,14,15,16,17,18,0,6,7,8,9,5,1,2,3,4,0,16,17,18,19,15,11,12,13,14,10,11,12,13,14,10,
16,17,18,19,15,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,17,18,19,15,6,7,8,9,5,1,2,3,4,0,6,7,8,9,5,1,2,3,
4,0,19,15,16,17,18,14,10,11,12,13,10,11,12,13,14,15,16,17,18,19,0,1,2,3,4,5,6,7,8,9,6,7,8,9,5,1,2,3,4,
0,19,15,16,17,18,14,10,11,12,13,10,11,12,13,14,15,16,17,18,19,5,6,7,8,9,0,1,2,3,4,1,2,3,4,0,9,5,6,7,8,
13,14,10,11,12,17,18,19,15,16,10,11,12,13,14,15,16,17,18,19,5,6,7,8,9,0,1,2,3,4,8,9,10,11,12,13,7,15,
16,17,18,19,20,14,1,2,3,4,5,6,0,1,2,3,4,5,6,0,11,12,13,7,8,9,10,16,17,18,19,20,14,15,7,8,9,10,11,12,13,
14,15,16,17,18,19,20,0,1,2,3,4,5,6,12,13,14,15,16,17,18,19,20,21,11,1,2,3,4,5,6,7,8,9,10,0,1,2,3,4,5,
6,7,8,9,10,0,21,11,12,13,14,15,16,17,18,19,20,11,12,13,14,15,16,17,18,19,20,21,0,1,2,3,4,5,6,7,8,9,10,
1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,0,4,5,3,1,2,0,10,11,9,7,8,6,16,17,15,13,14,12,
22,23,21,19,20,18,7,8,6,10,11,9,1,2,0,4,5,3,19,20,18,22,23,21,13,14,12,16,17,15,13,14,12,16,17,15,19,
20,18,22,23,21,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,
6,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,19,20,18,22,23,21,13,14,12,16,17,15,10,
11,9,7,8,6,4,5,3,1,2,0,7,8,6,10,11,9,1,2,0,4,5,3,22,23,21,19,20,18,16,17,15,13,14,12,4,5,3,1,2,0,10,11,
9,7,8,6,17,15,16,14,12,13,23,21,22,20,18,19,7,8,6,10,11,9,1,2,0,4,5,3,20,18,19,23,21,22,14,12,13,17,15,
16,12,13,14,15,16,17,18,19,20,21,22,23,0,1,2,3,4,5,6,7,8,9,10,11,4,5,3,1,2,0,10,11,9,7,8,6,17,15,16,14,
12,13,23,21,22,20,18,19,7,8,6,10,11,9,1,2,0,4,5,3,20,18,19,23,21,22,14,12,13,17,15,16,12,13,14,15,16,
17,18,19,20,21,22,23,3,4,5,0,1,2,9,10,11,6,7,8,4,5,3,1,2,0,10,11,9,7,8,6,17,15,16,14,12,13,23,21,22,20,
18,19,7,8,6,10,11,9,1,2,0,4,5,3,23,21,22,20,18,19,17,15,16,14,12,13,18,19,20,21,22,23,12,13,14,15,16,
17,9,10,11,6,7,8,3,4,5,0,1,2,13,14,12,16,17,15,19,20,18,22,23,21,7,8,6,10,11,9,4,5,3,1,2,0,7,8,6,10,11,
9,4,5,3,1,2,0,22,23,21,19,20,18,13,14,12,16,17,15,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,
11,9,7,8,6,7,8,6,10,11,9,4,5,3,1,2,0,20,18,19,23,21,22,17,15,16,14,12,13,18,19,20,21,22,23,15,16,17,12,
13,14,6,7,8,9,10,11,3,4,5,0,1,2,7,8,6,10,11,9,4,5,3,1,2,0,20,18,19,23,21,22,17,15,16,14,12,13,12,13,14,
15,16,17,18,19,20,21,22,23,6,7,8,9,10,11,3,4,5,0,1,2,7,8,6,10,11,9,4,5,3,1,2,0,23,21,22,20,18,19,14,12,
13,17,15,16,12,13,14,15,16,17,18,19,20,21,22,23,0,1,2,3,4,5,6,7,8,9,10,11,7,8,6,10,11,9,4,5,3,1,2,0,23,
21,22,20,18,19,14,12,13,17,15,16,12,13,14,15,16,17,18,19,20,21,22,23,3,4,5,0,1,2,9,10,11,6,7,8,16,17,
18,19,20,21,22,23,12,13,14,15,4,5,6,7,8,9,10,11,0,1,2,3,17,16,19,18,23,22,21,20,14,15,12,13,5,4,7,6,11,
10,9,8,2,3,0,1,14,15,12,13,17,16,19,18,23,22,21,20,3,2,1,0,6,7,4,5,9,8,11,10,17,16,19,18,23,22,21,20,
14,15,12,13,9,8,11,10,3,2,1,0,6,7,4,5,9,8,11,10,13,12,15,14,17,16,19,18,21,20,23,22,1,0,3,2,5,4,7,6,11,
10,8,9,14,15,13,12,23,22,20,21,19,18,16,17,5,4,7,6,0,1,2,3,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,17,18,
19,15,21,22,23,24,20,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,0,1,2,3,4,5,6,7,8,9,10,11,
12,13,14,15,16,17,18,19,20,21,22,23,24,1,2,3,4,0,14,15,16,17,18,19,20,21,22,23,24,25,13,1,2,3,4,5,6,7,
8,9,10,11,12,0,1,2,3,4,5,6,7,8,9,10,11,12,0,25,13,14,15,16,17,18,19,20,21,22,23,24,13,14,15,16,17,18,
19,20,21,22,23,24,25,0,1,2,3,4,5,6,7,8,9,10,11,12,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,
22,23,21,25,26,24,3,4,5,6,7,8,0,1,2,12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20,9,10,11,12,13,
14,15,16,17,18,19,20,21,22,23,24,25,26,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,
24,25,26,1,2,0,4,5,3,7,8,6,12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20,4,5,3,7,8,6,1,2,0,1,2,
0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,3,4,5,6,7,8,0,1,2,14,12,13,17,15,16,
11,9,10,22,23,21,25,26,24,19,20,18,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,0,1,2,3,4,5,6,
7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,1,2,0,4,5,3,7,8,6,12,13,14,15,16,17,9,10,11,
23,21,22,26,24,25,20,18,19,5,3,4,8,6,7,2,0,1,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,3,4,
5,6,7,8,1,2,0,8,9,10,11,12,13,7,1,2,3,4,5,6,0,22,23,24,25,26,27,21,15,16,17,18,19,20,14,15,16,17,18,19,
20,14,22,23,24,25,26,27,21,1,2,3,4,5,6,0,8,9,10,11,12,13,7,15,16,17,18,19,20,14,22,23,24,25,26,27,21,
8,9,10,11,12,13,7,1,2,3,4,5,6,0,8,9,10,11,12,13,7,1,2,3,4,5,6,0,27,21,22,23,24,25,26,20,14,15,16,17,18,
19,14,15,16,17,18,19,20,21,22,23,24,25,26,27,0,1,2,3,4,5,6,7,8,9,10,11,12,13,8,9,10,11,12,13,7,1,2,3,
4,5,6,0,27,21,22,23,24,25,26,20,14,15,16,17,18,19,14,15,16,17,18,19,20,21,22,23,24,25,26,27,7,8,9,10,
11,12,13,0,1,2,3,4,5,6,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,0,21,
22,23,24,20,26,27,28,29,25,16,17,18,19,15,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,
1,2,3,4,0,26,27,28,29,25,16,17,18,19,15,21,22,23,24,20,16,17,18,19,15,21,22,23,24,20,26,27,28,29,25,1,
2,3,4,0,6,7,8,9,5,11,12,13,14,10,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,24,20,21,22,23,29,25,26,27,28,19,
15,16,17,18,20,21,22,23,24,25,26,27,28,29,15,16,17,18,19,5,6,7,8,9,10,11,12,13,14,0,1,2,3,4,6,7,8,9,5,
11,12,13,14,10,1,2,3,4,0,29,25,26,27,28,19,15,16,17,18,24,20,21,22,23,15,16,17,18,19,20,21,22,23,24,25,
26,27,28,29,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,
22,23,24,25,26,27,28,29,30,0,1,0,3,2,5,4,7,6,9,8,11,10,13,12,15,14,17,16,19,18,21,20,23,22,25,24,27,26,
29,28,31,30,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,4,5,
6,7,0,1,2,3,12,13,14,15,8,9,10,11,20,21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,8,9,10,11,12,13,14,
15,0,1,2,3,4,5,6,7,24,25,26,27,28,29,30,31,16,17,18,19,20,21,22,23,16,17,18,19,20,21,22,23,24,25,26,27,
28,29,30,31,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,1,0,
3,2,5,4,7,6,9,8,11,10,13,12,15,14,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,3,2,1,0,7,6,5,4,11,
10,9,8,15,14,13,12,20,21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,5,4,7,6,1,0,3,2,13,12,15,14,9,8,11,
10,24,25,26,27,28,29,30,31,16,17,18,19,20,21,22,23,9,8,11,10,13,12,15,14,1,0,3,2,5,4,7,6,24,25,26,27,
28,29,30,31,16,17,18,19,20,21,22,23,9,8,11,10,13,12,15,14,1,0,3,2,5,4,7,6,26,27,24,25,30,31,28,29,18,
19,16,17,22,23,20,21,11,10,9,8,15,14,13,12,3,2,1,0,7,6,5,4,28,29,30,31,24,25,26,27,20,21,22,23,16,17,
18,19,13,12,15,14,9,8,11,10,5,4,7,6,1,0,3,2,8,9,10,11,12,13,14,15,0,1,2,3,4,5,6,7,25,24,27,26,29,28,31,
30,17,16,19,18,21,20,23,22,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,
14,15,12,13,17,16,19,18,21,20,23,22,25,24,27,26,29,28,31,30,3,2,1,0,7,6,5,4,11,10,9,8,15,14,13,12,20,
21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,6,7,4,5,2,3,0,1,14,15,12,13,10,11,8,9,24,25,26,27,28,29,
30,31,16,17,18,19,20,21,22,23,11,10,9,8,15,14,13,12,3,2,1,0,7,6,5,4,20,21,22,23,16,17,18,19,28,29,30,
31,24,25,26,27,5,4,7,6,1,0,3,2,13,12,15,14,9,8,11,10,22,23,20,21,18,19,16,17,30,31,28,29,26,27,24,25,
7,6,5,4,3,2,1,0,15,14,13,12,11,10,9,8,24,25,26,27,28,29,30,31,16,17,18,19,20,21,22,23,10,11,8,9,14,15,
12,13,2,3,0,1,6,7,4,5,28,29,30,31,24,25,26,27,20,21,22,23,16,17,18,19,15,14,13,12,11,10,9,8,7,6,5,4,3,
2,1,0,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,24,25,26,27,28,29,30,31,17,16,19,18,21,20,23,22,10,11,8,9,
14,15,12,13,3,2,1,0,7,6,5,4,26,27,24,25,30,31,28,29,19,18,17,16,23,22,21,20,12,13,14,15,8,9,10,11,5,4,
7,6,1,0,3,2,28,29,30,31,24,25,26,27,21,20,23,22,17,16,19,18,16,17,18,19,20,21,22,23,24,25,26,27,28,29,
30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,8,9,10,11,
12,13,14,15,1,0,3,2,5,4,7,6,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,10,11,8,9,14,15,12,13,3,2,
1,0,7,6,5,4,20,21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,8,9,
10,11,12,13,14,15,1,0,3,2,5,4,7,6,25,24,27,26,29,28,31,30,16,17,18,19,20,21,22,23,10,11,8,9,14,15,12,
13,3,2,1,0,7,6,5,4,27,26,25,24,31,30,29,28,18,19,16,17,22,23,20,21,12,13,14,15,8,9,10,11,5,4,7,6,1,0,
3,2,29,28,31,30,25,24,27,26,20,21,22,23,16,17,18,19,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,1,
0,3,2,5,4,7,6,9,8,11,10,13,12,15,14,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,25,24,27,26,29,28,31,30,16,
17,18,19,20,21,22,23,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,27,26,25,24,31,30,29,28,18,19,16,17,22,23,
20,21,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,29,28,31,30,25,24,27,26,20,21,22,23,16,17,18,19,16,17,18,
19,20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,8,9,10,11,12,13,14,15,1,
0,3,2,5,4,7,6,26,27,24,25,30,31,28,29,19,18,17,16,23,22,21,20,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,24,
25,26,27,28,29,30,31,17,16,19,18,21,20,23,22,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,30,31,28,29,26,27,
24,25,23,22,21,20,19,18,17,16,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,4,5,6,7,0,1,2,3,12,13,14,
15,8,9,10,11,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,24,25,26,27,28,29,30,31,17,16,19,18,21,20,23,22,10,
11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,26,27,24,25,30,31,28,29,19,18,17,16,23,22,21,20,12,13,14,15,8,9,10,
11,5,4,7,6,1,0,3,2,29,28,31,30,25,24,27,26,20,21,22,23,16,17,18,19,20,21,22,23,16,17,18,19,28,29,30,31,
24,25,26,27,5,4,7,6,1,0,3,2,13,12,15,14,9,8,11,10,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,24,25,26,27,28,
29,30,31,17,16,19,18,21,20,23,22,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,26,27,24,25,30,31,28,29,19,18,
17,16,23,22,21,20,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,29,28,31,30,25,24,27,26,20,21,22,23,16,17,18,
19,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,16,17,18,19,
20,21,22,23,24,25,26,27,28,29,30,31,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,18,19,16,17,22,23,20,21,26,
27,24,25,30,31,28,29,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,20,21,22,23,16,17,18,19,28,29,30,31,24,25,
26,27,13,12,15,14,9,8,11,10,4,5,6,7,0,1,2,3,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,26,27,24,25,30,31,28,
29,19,18,17,16,23,22,21,20,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,24,25,26,27,28,29,30,31,17,16,19,18,
21,20,23,22,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,31,30,29,28,27,26,25,24,22,23,20,21,18,19,16,17,20,
21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,5,4,7,6,1,0,3,2,13,12,15,14,9,8,11,10,8,9,10,11,12,13,14,
15,1,0,3,2,5,4,7,6,24,25,26,27,28,29,30,31,17,16,19,18,21,20,23,22,10,11,8,9,14,15,12,13,3,2,1,0,7,6,
5,4,26,27,24,25,30,31,28,29,19,18,17,16,23,22,21,20,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,30,31,28,29,
26,27,24,25,23,22,21,20,19,18,17,16,20,21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,6,7,4,5,2,3,0,1,14,
15,12,13,10,11,8,9,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,8,9,10,11,12,13,14,15,1,0,3,2,5,4,
7,6,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,20,21,22,23,
16,17,18,19,28,29,30,31,24,25,26,27,14,15,12,13,10,11,8,9,7,6,5,4,3,2,1,0,8,9,10,11,12,13,14,15,1,0,3,
2,5,4,7,6,25,24,27,26,29,28,31,30,16,17,18,19,20,21,22,23,10,11,8,9,14,15,12,13,3,2,1,0,7,6,5,4,27,26,
25,24,31,30,29,28,18,19,16,17,22,23,20,21,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,31,30,29,28,27,26,25,
24,22,23,20,21,18,19,16,17,20,21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,6,7,4,5,2,3,0,1,14,15,12,13,
10,11,8,9,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,25,24,27,26,29,28,31,30,16,17,18,19,20,21,22,23,10,11,
8,9,14,15,12,13,3,2,1,0,7,6,5,4,27,26,25,24,31,30,29,28,18,19,16,17,22,23,20,21,12,13,14,15,8,9,10,11,
5,4,7,6,1,0,3,2,31,30,29,28,27,26,25,24,22,23,20,21,18,19,16,17,16,17,18,19,20,21,22,23,24,25,26,27,28,
29,30,31,1,0,3,2,5,4,7,6,9,8,11,10,13,12,15,14,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,28,29,30,31,24,25,
26,27,21,20,23,22,17,16,19,18,14,15,12,13,10,11,8,9,7,6,5,4,3,2,1,0,30,31,28,29,26,27,24,25,23,22,21,
20,19,18,17,16,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,
4,5,6,7,0,1,2,3,13,12,15,14,9,8,11,10,22,23,20,21,18,19,16,17,31,30,29,28,27,26,25,24,12,13,14,15,8,9,
10,11,5,4,7,6,1,0,3,2,28,29,30,31,24,25,26,27,21,20,23,22,17,16,19,18,14,15,12,13,10,11,8,9,7,6,5,4,3,
2,1,0,30,31,28,29,26,27,24,25,23,22,21,20,19,18,17,16,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,
3,2,1,0,7,6,5,4,11,10,9,8,15,14,13,12,20,21,22,23,16,17,18,19,29,28,31,30,25,24,27,26,5,4,7,6,1,0,3,2,
12,13,14,15,8,9,10,11,20,21,22,23,16,17,18,19,29,28,31,30,25,24,27,26,8,9,10,11,12,13,14,15,0,1,2,3,4,
5,6,7,22,23,20,21,18,19,16,17,31,30,29,28,27,26,25,24,10,11,8,9,14,15,12,13,2,3,0,1,6,7,4,5,4,5,6,7,0,
1,2,3,13,12,15,14,9,8,11,10,24,25,26,27,28,29,30,31,16,17,18,19,20,21,22,23,20,21,22,23,16,17,18,19,29,
28,31,30,25,24,27,26,9,8,11,10,13,12,15,14,1,0,3,2,5,4,7,6,22,23,20,21,18,19,16,17,31,30,29,28,27,26,
25,24,11,10,9,8,15,14,13,12,3,2,1,0,7,6,5,4,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,1,0,3,2,5,
4,7,6,9,8,11,10,13,12,15,14,20,21,22,23,16,17,18,19,29,28,31,30,25,24,27,26,10,11,8,9,14,15,12,13,2,3,
0,1,6,7,4,5,22,23,20,21,18,19,16,17,31,30,29,28,27,26,25,24,8,9,10,11,12,13,14,15,0,1,2,3,4,5,6,7,16,
17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,12,13,14,15,8,9,10,
11,5,4,7,6,1,0,3,2,28,29,30,31,24,25,26,27,21,20,23,22,17,16,19,18,14,15,12,13,10,11,8,9,7,6,5,4,3,2,
1,0,31,30,29,28,27,26,25,24,22,23,20,21,18,19,16,17,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,3,
2,1,0,7,6,5,4,11,10,9,8,15,14,13,12,22,23,20,21,18,19,16,17,31,30,29,28,27,26,25,24,7,6,5,4,3,2,1,0,14,
15,12,13,10,11,8,9,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,31,30,29,28,27,26,25,24,22,23,20,21,18,19,16,
17,14,15,12,13,10,11,8,9,7,6,5,4,3,2,1,0,28,29,30,31,24,25,26,27,21,20,23,22,17,16,19,18,16,17,18,19,
20,21,22,23,24,25,26,27,28,29,30,31,4,5,6,7,0,1,2,3,13,12,15,14,9,8,11,10,16,17,18,19,20,21,22,23,24,
25,26,27,28,29,30,31,12,13,14,15,8,9,10,11,5,4,7,6,1,0,3,2,18,19,16,17,22,23,20,21,26,27,24,25,30,31,
28,29,15,14,13,12,11,10,9,8,6,7,4,5,2,3,0,1,20,21,22,23,16,17,18,19,29,28,31,30,25,24,27,26,11,10,9,8,
15,14,13,12,3,2,1,0,7,6,5,4,20,21,22,23,16,17,18,19,29,28,31,30,25,24,27,26,8,9,10,11,12,13,14,15,0,1,
2,3,4,5,6,7,22,23,20,21,18,19,16,17,31,30,29,28,27,26,25,24,11,10,9,8,15,14,13,12,3,2,1,0,7,6,5,4,18,
19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,3,2,1,0,7,6,5,4,11,10,9,8,15,14,13,12,8,9,10,11,12,13,14,
15,2,3,0,1,6,7,4,5,24,25,26,27,28,29,30,31,18,19,16,17,22,23,20,21,9,8,11,10,13,12,15,14,3,2,1,0,7,6,
5,4,25,24,27,26,29,28,31,30,19,18,17,16,23,22,21,20,12,13,14,15,8,9,10,11,7,6,5,4,3,2,1,0,30,31,28,29,
26,27,24,25,21,20,23,22,17,16,19,18,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,3,2,1,0,7,6,5,4,11,
10,9,8,15,14,13,12,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,
10,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,6,7,4,5,3,2,1,0,14,15,12,13,11,10,9,8,24,25,26,27,
28,29,30,31,18,19,16,17,22,23,20,21,12,13,14,15,9,8,11,10,6,7,4,5,3,2,1,0,16,17,18,19,20,21,22,23,24,
25,26,27,28,29,30,31,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,10,18,19,16,17,22,23,20,21,26,27,24,25,30,31,
28,29,6,7,4,5,3,2,1,0,14,15,12,13,11,10,9,8,24,25,26,27,28,29,30,31,18,19,16,17,22,23,20,21,13,12,15,
14,8,9,10,11,7,6,5,4,2,3,0,1,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,10,20,21,22,23,17,16,19,18,28,29,30,31,
25,24,27,26,6,7,4,5,3,2,1,0,14,15,12,13,11,10,9,8,22,23,20,21,19,18,17,16,30,31,28,29,27,26,25,24,8,9,
10,11,12,13,14,15,2,3,0,1,6,7,4,5,26,27,24,25,30,31,28,29,16,17,18,19,20,21,22,23,16,17,18,19,20,21,22,
23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,16,17,18,19,20,21,22,23,24,25,26,27,
28,29,30,31,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,10,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,6,7,
4,5,3,2,1,0,14,15,12,13,11,10,9,8,24,25,26,27,28,29,30,31,18,19,16,17,22,23,20,21,14,15,12,13,11,10,9,
8,4,5,6,7,1,0,3,2,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,10,21,20,23,22,16,17,18,19,29,28,31,30,24,25,26,
27,6,7,4,5,3,2,1,0,14,15,12,13,11,10,9,8,23,22,21,20,18,19,16,17,31,30,29,28,26,27,24,25,8,9,10,11,12,
13,14,15,2,3,0,1,6,7,4,5,26,27,24,25,30,31,28,29,16,17,18,19,20,21,22,23,16,17,18,19,20,21,22,23,24,25,
26,27,28,29,30,31,1,0,3,2,5,4,7,6,9,8,11,10,13,12,15,14,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,10,21,20,23,
22,16,17,18,19,29,28,31,30,24,25,26,27,6,7,4,5,3,2,1,0,14,15,12,13,11,10,9,8,23,22,21,20,18,19,16,17,
31,30,29,28,26,27,24,25,8,9,10,11,12,13,14,15,2,3,0,1,6,7,4,5,27,26,25,24,31,30,29,28,17,16,19,18,21,
20,23,22,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,24,25,
26,27,28,29,30,31,18,19,16,17,22,23,20,21,14,15,12,13,11,10,9,8,4,5,6,7,1,0,3,2,26,27,24,25,30,31,28,
29,16,17,18,19,20,21,22,23,13,12,15,14,8,9,10,11,7,6,5,4,2,3,0,1,8,9,10,11,12,13,14,15,2,3,0,1,6,7,4,
5,30,31,28,29,27,26,25,24,20,21,22,23,17,16,19,18,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,8,9,
10,11,12,13,14,15,4,5,6,7,1,0,3,2,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,10,11,8,9,14,15,12,
13,6,7,4,5,3,2,1,0,8,9,10,11,12,13,14,15,4,5,6,7,1,0,3,2,28,29,30,31,25,24,27,26,17,16,19,18,21,20,23,
22,10,11,8,9,14,15,12,13,6,7,4,5,3,2,1,0,30,31,28,29,27,26,25,24,19,18,17,16,23,22,21,20,16,17,18,19,
20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,8,9,10,11,12,13,14,15,4,5,6,
7,1,0,3,2,29,28,31,30,24,25,26,27,16,17,18,19,20,21,22,23,10,11,8,9,14,15,12,13,6,7,4,5,3,2,1,0,31,30,
29,28,26,27,24,25,18,19,16,17,22,23,20,21,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,1,0,3,2,5,4,
7,6,9,8,11,10,13,12,15,14,8,9,10,11,12,13,14,15,4,5,6,7,1,0,3,2,29,28,31,30,24,25,26,27,16,17,18,19,20,
21,22,23,10,11,8,9,14,15,12,13,6,7,4,5,3,2,1,0,31,30,29,28,26,27,24,25,18,19,16,17,22,23,20,21,16,17,
18,19,20,21,22,23,24,25,26,27,28,29,30,31,2,3,0,1,6,7,4,5,10,11,8,9,14,15,12,13,8,9,10,11,12,13,14,15,
4,5,6,7,1,0,3,2,30,31,28,29,27,26,25,24,19,18,17,16,23,22,21,20,10,11,8,9,14,15,12,13,6,7,4,5,3,2,1,0,
28,29,30,31,25,24,27,26,17,16,19,18,21,20,23,22,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,1,0,3,
2,5,4,7,6,9,8,11,10,13,12,15,14,8,9,10,11,12,13,14,15,4,5,6,7,1,0,3,2,24,25,26,27,28,29,30,31,20,21,22,
23,17,16,19,18,10,11,8,9,14,15,12,13,6,7,4,5,3,2,1,0,27,26,25,24,31,30,29,28,23,22,21,20,18,19,16,17,
24,25,26,27,28,29,30,31,20,21,22,23,17,16,19,18,8,9,10,11,12,13,14,15,4,5,6,7,1,0,3,2,16,17,18,19,20,
21,22,23,24,25,26,27,28,29,30,31,8,9,10,11,12,13,14,15,4,5,6,7,1,0,3,2,18,19,16,17,22,23,20,21,26,27,
24,25,30,31,28,29,11,10,9,8,15,14,13,12,7,6,5,4,2,3,0,1,8,9,10,11,12,13,14,15,4,5,6,7,1,0,3,2,28,29,30,
31,25,24,27,26,17,16,19,18,21,20,23,22,10,11,8,9,14,15,12,13,6,7,4,5,3,2,1,0,31,30,29,28,26,27,24,25,
18,19,16,17,22,23,20,21,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,3,2,1,0,7,6,5,4,11,10,9,8,15,
14,13,12,8,9,10,11,12,13,14,15,4,5,6,7,1,0,3,2,28,29,30,31,25,24,27,26,17,16,19,18,21,20,23,22,10,11,
8,9,14,15,12,13,6,7,4,5,3,2,1,0,31,30,29,28,26,27,24,25,18,19,16,17,22,23,20,21,16,17,18,19,20,21,22,
23,24,25,26,27,28,29,30,31,6,7,4,5,3,2,1,0,14,15,12,13,11,10,9,8,4,5,6,7,1,0,3,2,13,12,15,14,8,9,10,11,
20,21,22,23,17,16,19,18,29,28,31,30,24,25,26,27,6,7,4,5,3,2,1,0,15,14,13,12,10,11,8,9,23,22,21,20,18,
19,16,17,30,31,28,29,27,26,25,24,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,24,25,26,27,28,29,30,31,17,16,
19,18,21,20,23,22,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,3,2,1,0,7,6,5,4,11,10,9,8,15,14,13,
12,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,4,5,6,7,1,0,3,2,13,12,15,14,8,9,10,11,18,19,16,17,
22,23,20,21,26,27,24,25,30,31,28,29,7,6,5,4,2,3,0,1,14,15,12,13,11,10,9,8,24,25,26,27,28,29,30,31,17,
16,19,18,21,20,23,22,14,15,12,13,11,10,9,8,6,7,4,5,3,2,1,0,16,17,18,19,20,21,22,23,24,25,26,27,28,29,
30,31,4,5,6,7,1,0,3,2,13,12,15,14,8,9,10,11,18,19,16,17,22,23,20,21,26,27,24,25,30,31,28,29,7,6,5,4,2,
3,0,1,14,15,12,13,11,10,9,8,8,9,10,11,12,13,14,15,1,0,3,2,5,4,7,6,29,28,31,30,24,25,26,27,21,20,23,22,
16,17,18,19,18,19,16,17,23,22,21,20,28,29,30,31,24,25,26,27,8,9,10,11,12,13,14,15,0,1,2,3,4,5,6,7,2,3,
0,1,7,6,5,4,12,13,14,15,8,9,10,11,24,25,26,27,28,29,30,31,16,17,18,19,20,21,22,23,18,19,16,17,23,22,21,
20,28,29,30,31,24,25,26,27,9,8,11,10,13,12,15,14,1,0,3,2,5,4,7,6,16,17,18,19,20,21,22,23,24,25,26,27,
28,29,30,31,1,0,3,2,5,4,7,6,9,8,11,10,13,12,15,14,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,8,9,
10,11,12,13,14,15,4,5,6,7,2,3,1,0,8,9,10,11,12,13,14,15,4,5,6,7,2,3,1,0,31,30,28,29,24,25,26,27,16,17,
18,19,20,21,22,23,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,1,0,3,2,5,4,7,6,9,8,11,10,13,12,15,
14,12,13,14,15,16,17,18,19,20,21,11,23,24,25,26,27,28,29,30,31,32,22,1,2,3,4,5,6,7,8,9,10,0,18,19,20,
21,22,23,24,25,26,27,28,29,30,31,32,33,17,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,0,1,2,3,4,5,6,7,8,9,
10,11,12,13,14,15,16,0,33,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,17,18,19,20,21,22,23,24,25,
26,27,28,29,30,31,32,33,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,8,9,10,11,12,13,7,15,16,17,18,19,20,
14,22,23,24,25,26,27,21,29,30,31,32,33,34,28,1,2,3,4,5,6,0,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,
6,28,29,27,31,32,30,34,35,33,19,20,18,22,23,21,25,26,24,12,13,14,15,16,17,9,10,11,3,4,5,6,7,8,0,1,2,30,
31,32,33,34,35,27,28,29,21,22,23,24,25,26,18,19,20,19,20,18,22,23,21,25,26,24,28,29,27,31,32,30,34,35,
33,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,28,29,27,31,32,30,34,35,33,
10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,6,21,22,23,24,25,26,18,19,20,30,31,32,33,34,35,27,28,29,12,
13,14,15,16,17,9,10,11,3,4,5,6,7,8,0,1,2,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,6,28,29,27,31,32,30,
34,35,33,19,20,18,22,23,21,25,26,24,12,13,14,15,16,17,9,10,11,3,4,5,6,7,8,0,1,2,33,34,35,27,28,29,30,
31,32,24,25,26,18,19,20,21,22,23,19,20,18,22,23,21,25,26,24,28,29,27,31,32,30,34,35,33,1,2,0,4,5,3,7,
8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,28,29,27,31,32,30,34,35,33,10,11,9,13,14,12,
16,17,15,1,2,0,4,5,3,7,8,6,22,23,21,25,26,24,19,20,18,31,32,30,34,35,33,28,29,27,16,17,15,10,11,9,13,
14,12,7,8,6,1,2,0,4,5,3,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,6,29,27,28,32,30,31,35,33,34,20,18,
19,23,21,22,26,24,25,12,13,14,15,16,17,9,10,11,3,4,5,6,7,8,0,1,2,33,34,35,27,28,29,30,31,32,24,25,26,
18,19,20,21,22,23,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,0,1,2,3,4,5,6,7,8,9,10,11,12,
13,14,15,16,17,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,6,29,27,28,32,30,31,35,33,34,20,18,19,23,21,
22,26,24,25,12,13,14,15,16,17,9,10,11,3,4,5,6,7,8,0,1,2,33,34,35,27,28,29,30,31,32,24,25,26,18,19,20,
21,22,23,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,9,10,11,12,13,14,15,16,17,0,1,2,3,4,5,
6,7,8,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,6,29,27,28,32,30,31,35,33,34,20,18,19,23,21,22,26,24,
25,13,14,12,16,17,15,10,11,9,7,8,6,1,2,0,4,5,3,32,30,31,35,33,34,29,27,28,26,24,25,20,18,19,23,21,22,
21,22,23,24,25,26,18,19,20,33,34,35,27,28,29,30,31,32,3,4,5,6,7,8,0,1,2,15,16,17,9,10,11,12,13,14,18,
19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,9,10,11,12,13,14,15,16,17,0,1,2,3,4,5,6,7,8,19,20,
18,22,23,21,25,26,24,29,27,28,32,30,31,35,33,34,15,16,17,9,10,11,12,13,14,3,4,5,6,7,8,0,1,2,12,13,14,
15,16,17,10,11,9,3,4,5,6,7,8,1,2,0,30,31,32,33,34,35,28,29,27,21,22,23,24,25,26,19,20,18,21,22,23,24,
25,26,19,20,18,30,31,32,33,34,35,28,29,27,3,4,5,6,7,8,1,2,0,12,13,14,15,16,17,10,11,9,21,22,23,24,25,
26,19,20,18,30,31,32,33,34,35,28,29,27,12,13,14,15,16,17,10,11,9,3,4,5,6,7,8,1,2,0,12,13,14,15,16,17,
10,11,9,3,4,5,6,7,8,1,2,0,35,33,34,27,28,29,30,31,32,26,24,25,18,19,20,21,22,23,18,19,20,21,22,23,24,
25,26,27,28,29,30,31,32,33,34,35,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,12,13,14,15,16,17,10,11,
9,3,4,5,6,7,8,1,2,0,35,33,34,27,28,29,30,31,32,26,24,25,18,19,20,21,22,23,18,19,20,21,22,23,24,25,26,
27,28,29,30,31,32,33,34,35,9,10,11,12,13,14,15,16,17,0,1,2,3,4,5,6,7,8,4,5,3,1,2,0,10,11,9,7,8,6,22,23,
21,19,20,18,16,17,15,13,14,12,31,32,30,34,35,33,25,26,24,28,29,27,7,8,6,10,11,9,1,2,0,4,5,3,16,17,15,
13,14,12,22,23,21,19,20,18,34,35,33,31,32,30,28,29,27,25,26,24,12,13,14,15,16,17,18,19,20,21,22,23,24,
25,26,27,28,29,30,31,32,33,34,35,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,
26,27,28,29,30,31,32,33,34,35,1,2,0,4,5,3,7,8,6,10,11,9,15,16,17,12,13,14,21,22,23,18,19,20,33,34,35,
30,31,32,27,28,29,24,25,26,7,8,6,10,11,9,1,2,0,4,5,3,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,
20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,0,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,
36,37,19,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,
0,37,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,19,20,21,22,23,24,25,26,27,28,29,30,31,32,
33,34,35,36,37,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,14,15,16,17,18,19,20,21,22,23,24,25,13,
27,28,29,30,31,32,33,34,35,36,37,38,26,1,2,3,4,5,6,7,8,9,10,11,12,0,1,2,3,4,5,6,7,8,9,10,11,12,0,22,23,
24,25,13,14,15,16,17,18,19,20,21,29,30,31,32,33,34,35,36,37,38,26,27,28,13,14,15,16,17,18,19,20,21,22,
23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,0,1,2,3,4,5,6,7,8,9,10,11,12,6,7,8,9,5,1,2,3,4,0,16,17,
18,19,15,11,12,13,14,10,26,27,28,29,25,21,22,23,24,20,36,37,38,39,35,31,32,33,34,30,11,12,13,14,10,16,
17,18,19,15,1,2,3,4,0,6,7,8,9,5,31,32,33,34,30,36,37,38,39,35,21,22,23,24,20,26,27,28,29,25,21,22,23,
24,20,26,27,28,29,25,31,32,33,34,30,36,37,38,39,35,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,17,18,19,15,
21,22,23,24,20,26,27,28,29,25,31,32,33,34,30,36,37,38,39,35,6,7,8,9,5,1,2,3,4,0,16,17,18,19,15,11,12,
13,14,10,31,32,33,34,30,36,37,38,39,35,21,22,23,24,20,26,27,28,29,25,16,17,18,19,15,11,12,13,14,10,6,
7,8,9,5,1,2,3,4,0,31,32,33,34,30,36,37,38,39,35,21,22,23,24,20,26,27,28,29,25,16,17,18,19,15,11,12,13,
14,10,6,7,8,9,5,1,2,3,4,0,11,12,13,14,10,16,17,18,19,15,1,2,3,4,0,6,7,8,9,5,36,37,38,39,35,31,32,33,34,
30,26,27,28,29,25,21,22,23,24,20,6,7,8,9,5,1,2,3,4,0,16,17,18,19,15,11,12,13,14,10,29,25,26,27,28,24,
20,21,22,23,39,35,36,37,38,34,30,31,32,33,11,12,13,14,10,16,17,18,19,15,1,2,3,4,0,6,7,8,9,5,34,30,31,
32,33,39,35,36,37,38,24,20,21,22,23,29,25,26,27,28,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,
37,38,39,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,6,7,8,9,5,1,2,3,4,0,16,17,18,19,15,11,12,13,
14,10,29,25,26,27,28,24,20,21,22,23,39,35,36,37,38,34,30,31,32,33,11,12,13,14,10,16,17,18,19,15,1,2,3,
4,0,6,7,8,9,5,34,30,31,32,33,39,35,36,37,38,24,20,21,22,23,29,25,26,27,28,20,21,22,23,24,25,26,27,28,
29,30,31,32,33,34,35,36,37,38,39,5,6,7,8,9,0,1,2,3,4,15,16,17,18,19,10,11,12,13,14,6,7,8,9,5,1,2,3,4,
0,16,17,18,19,15,11,12,13,14,10,29,25,26,27,28,24,20,21,22,23,39,35,36,37,38,34,30,31,32,33,11,12,13,
14,10,16,17,18,19,15,1,2,3,4,0,6,7,8,9,5,39,35,36,37,38,34,30,31,32,33,29,25,26,27,28,24,20,21,22,23,
30,31,32,33,34,35,36,37,38,39,20,21,22,23,24,25,26,27,28,29,15,16,17,18,19,10,11,12,13,14,5,6,7,8,9,0,
1,2,3,4,21,22,23,24,20,26,27,28,29,25,31,32,33,34,30,36,37,38,39,35,11,12,13,14,10,16,17,18,19,15,6,7,
8,9,5,1,2,3,4,0,11,12,13,14,10,16,17,18,19,15,6,7,8,9,5,1,2,3,4,0,36,37,38,39,35,31,32,33,34,30,21,22,
23,24,20,26,27,28,29,25,21,22,23,24,20,26,27,28,29,25,31,32,33,34,30,36,37,38,39,35,6,7,8,9,5,1,2,3,4,
0,16,17,18,19,15,11,12,13,14,10,11,12,13,14,10,16,17,18,19,15,6,7,8,9,5,1,2,3,4,0,34,30,31,32,33,39,35,
36,37,38,29,25,26,27,28,24,20,21,22,23,30,31,32,33,34,35,36,37,38,39,25,26,27,28,29,20,21,22,23,24,10,
11,12,13,14,15,16,17,18,19,5,6,7,8,9,0,1,2,3,4,11,12,13,14,10,16,17,18,19,15,6,7,8,9,5,1,2,3,4,0,34,30,
31,32,33,39,35,36,37,38,29,25,26,27,28,24,20,21,22,23,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,
36,37,38,39,10,11,12,13,14,15,16,17,18,19,5,6,7,8,9,0,1,2,3,4,11,12,13,14,10,16,17,18,19,15,6,7,8,9,5,
1,2,3,4,0,39,35,36,37,38,34,30,31,32,33,24,20,21,22,23,29,25,26,27,28,20,21,22,23,24,25,26,27,28,29,30,
31,32,33,34,35,36,37,38,39,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,11,12,13,14,10,16,17,18,
19,15,6,7,8,9,5,1,2,3,4,0,39,35,36,37,38,34,30,31,32,33,24,20,21,22,23,29,25,26,27,28,20,21,22,23,24,
25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,5,6,7,8,9,0,1,2,3,4,15,16,17,18,19,10,11,12,13,14,6,7,8,
9,5,1,2,3,4,0,19,15,16,17,18,14,10,11,12,13,28,29,25,26,27,23,24,20,21,22,37,38,39,35,36,32,33,34,30,
31,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,10,11,12,13,14,15,16,17,18,19,0,1,2,3,
4,5,6,7,8,9,6,7,8,9,5,1,2,3,4,0,19,15,16,17,18,14,10,11,12,13,28,29,25,26,27,23,24,20,21,22,37,38,39,
35,36,32,33,34,30,31,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,10,11,12,13,14,15,16,
17,18,19,5,6,7,8,9,0,1,2,3,4,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,
28,29,30,31,32,33,34,35,36,37,38,39,40,0,29,30,31,32,33,34,28,36,37,38,39,40,41,35,22,23,24,25,26,27,
21,8,9,10,11,12,13,7,15,16,17,18,19,20,14,1,2,3,4,5,6,0,8,9,10,11,12,13,7,15,16,17,18,19,20,14,1,2,3,
4,5,6,0,36,37,38,39,40,41,35,22,23,24,25,26,27,21,29,30,31,32,33,34,28,22,23,24,25,26,27,21,29,30,31,
32,33,34,28,36,37,38,39,40,41,35,1,2,3,4,5,6,0,8,9,10,11,12,13,7,15,16,17,18,19,20,14,8,9,10,11,12,13,
7,15,16,17,18,19,20,14,1,2,3,4,5,6,0,34,28,29,30,31,32,33,41,35,36,37,38,39,40,27,21,22,23,24,25,26,28,
29,30,31,32,33,34,35,36,37,38,39,40,41,21,22,23,24,25,26,27,7,8,9,10,11,12,13,14,15,16,17,18,19,20,0,
1,2,3,4,5,6,8,9,10,11,12,13,7,15,16,17,18,19,20,14,1,2,3,4,5,6,0,41,35,36,37,38,39,40,27,21,22,23,24,
25,26,34,28,29,30,31,32,33,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,0,1,2,3,4,5,
6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,22,23,24,25,26,27,21,32,33,34,28,29,30,31,37,38,39,40,41,35,
36,1,2,3,4,5,6,0,11,12,13,7,8,9,10,16,17,18,19,20,14,15,28,29,30,31,32,33,34,35,36,37,38,39,40,41,21,
22,23,24,25,26,27,7,8,9,10,11,12,13,14,15,16,17,18,19,20,0,1,2,3,4,5,6,1,2,3,4,5,6,0,11,12,13,7,8,9,10,
16,17,18,19,20,14,15,26,27,21,22,23,24,25,34,28,29,30,31,32,33,38,39,40,41,35,36,37,21,22,23,24,25,26,
27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,7,8,9,10,11,12,13,14,15,16,17,18,19,20,0,1,2,3,4,5,6,1,2,
3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,
39,40,41,42,0,12,13,14,15,16,17,18,19,20,21,11,1,2,3,4,5,6,7,8,9,10,0,34,35,36,37,38,39,40,41,42,43,33,
23,24,25,26,27,28,29,30,31,32,22,23,24,25,26,27,28,29,30,31,32,22,34,35,36,37,38,39,40,41,42,43,33,1,
2,3,4,5,6,7,8,9,10,0,12,13,14,15,16,17,18,19,20,21,11,23,24,25,26,27,28,29,30,31,32,22,34,35,36,37,38,
39,40,41,42,43,33,12,13,14,15,16,17,18,19,20,21,11,1,2,3,4,5,6,7,8,9,10,0,12,13,14,15,16,17,18,19,20,
21,11,1,2,3,4,5,6,7,8,9,10,0,43,33,34,35,36,37,38,39,40,41,42,32,22,23,24,25,26,27,28,29,30,31,22,23,
24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,
17,18,19,20,21,12,13,14,15,16,17,18,19,20,21,11,1,2,3,4,5,6,7,8,9,10,0,43,33,34,35,36,37,38,39,40,41,
42,32,22,23,24,25,26,27,28,29,30,31,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,
11,12,13,14,15,16,17,18,19,20,21,0,1,2,3,4,5,6,7,8,9,10,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,21,22,23,24,
20,26,27,28,29,25,16,17,18,19,15,36,37,38,39,35,41,42,43,44,40,31,32,33,34,30,16,17,18,19,15,21,22,23,
24,20,26,27,28,29,25,31,32,33,34,30,36,37,38,39,35,41,42,43,44,40,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,
16,17,18,19,15,21,22,23,24,20,26,27,28,29,25,31,32,33,34,30,36,37,38,39,35,41,42,43,44,40,6,7,8,9,5,11,
12,13,14,10,1,2,3,4,0,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,23,1,2,3,4,5,
6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,
22,0,45,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,23,24,25,26,27,28,29,30,31,
32,33,34,35,36,37,38,39,40,41,42,43,44,45,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,
1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,
38,39,40,41,42,43,44,45,46,0,4,5,3,1,2,0,10,11,9,7,8,6,16,17,15,13,14,12,22,23,21,19,20,18,28,29,27,25,
26,24,34,35,33,31,32,30,40,41,39,37,38,36,46,47,45,43,44,42,7,8,6,10,11,9,1,2,0,4,5,3,19,20,18,22,23,
21,13,14,12,16,17,15,31,32,30,34,35,33,25,26,24,28,29,27,43,44,42,46,47,45,37,38,36,40,41,39,13,14,12,
16,17,15,19,20,18,22,23,21,1,2,0,4,5,3,7,8,6,10,11,9,37,38,36,40,41,39,43,44,42,46,47,45,25,26,24,28,
29,27,31,32,30,34,35,33,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,1,2,0,
4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,
40,41,39,43,44,42,46,47,45,4,5,3,1,2,0,10,11,9,7,8,6,16,17,15,13,14,12,22,23,21,19,20,18,31,32,30,34,
35,33,25,26,24,28,29,27,43,44,42,46,47,45,37,38,36,40,41,39,10,11,9,7,8,6,4,5,3,1,2,0,22,23,21,19,20,
18,16,17,15,13,14,12,37,38,36,40,41,39,43,44,42,46,47,45,25,26,24,28,29,27,31,32,30,34,35,33,16,17,15,
13,14,12,22,23,21,19,20,18,4,5,3,1,2,0,10,11,9,7,8,6,37,38,36,40,41,39,43,44,42,46,47,45,25,26,24,28,
29,27,31,32,30,34,35,33,16,17,15,13,14,12,22,23,21,19,20,18,4,5,3,1,2,0,10,11,9,7,8,6,43,44,42,46,47,
45,37,38,36,40,41,39,31,32,30,34,35,33,25,26,24,28,29,27,22,23,21,19,20,18,16,17,15,13,14,12,10,11,9,
7,8,6,4,5,3,1,2,0,13,14,12,16,17,15,19,20,18,22,23,21,1,2,0,4,5,3,7,8,6,10,11,9,40,41,39,37,38,36,46,
47,45,43,44,42,28,29,27,25,26,24,34,35,33,31,32,30,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,
39,43,44,42,46,47,45,7,8,6,10,11,9,1,2,0,4,5,3,19,20,18,22,23,21,13,14,12,16,17,15,28,29,27,25,26,24,
34,35,33,31,32,30,40,41,39,37,38,36,46,47,45,43,44,42,10,11,9,7,8,6,4,5,3,1,2,0,22,23,21,19,20,18,16,
17,15,13,14,12,37,38,36,40,41,39,43,44,42,46,47,45,25,26,24,28,29,27,31,32,30,34,35,33,22,23,21,19,20,
18,16,17,15,13,14,12,10,11,9,7,8,6,4,5,3,1,2,0,4,5,3,1,2,0,10,11,9,7,8,6,16,17,15,13,14,12,22,23,21,19,
20,18,29,27,28,26,24,25,35,33,34,32,30,31,41,39,40,38,36,37,47,45,46,44,42,43,7,8,6,10,11,9,1,2,0,4,5,
3,19,20,18,22,23,21,13,14,12,16,17,15,32,30,31,35,33,34,26,24,25,29,27,28,44,42,43,47,45,46,38,36,37,
41,39,40,13,14,12,16,17,15,19,20,18,22,23,21,1,2,0,4,5,3,7,8,6,10,11,9,38,36,37,41,39,40,44,42,43,47,
45,46,26,24,25,29,27,28,32,30,31,35,33,34,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,
44,45,46,47,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,4,5,3,1,2,0,10,11,9,7,8,6,16,
17,15,13,14,12,22,23,21,19,20,18,29,27,28,26,24,25,35,33,34,32,30,31,41,39,40,38,36,37,47,45,46,44,42,
43,7,8,6,10,11,9,1,2,0,4,5,3,19,20,18,22,23,21,13,14,12,16,17,15,32,30,31,35,33,34,26,24,25,29,27,28,
44,42,43,47,45,46,38,36,37,41,39,40,13,14,12,16,17,15,19,20,18,22,23,21,1,2,0,4,5,3,7,8,6,10,11,9,38,
36,37,41,39,40,44,42,43,47,45,46,26,24,25,29,27,28,32,30,31,35,33,34,24,25,26,27,28,29,30,31,32,33,34,
35,36,37,38,39,40,41,42,43,44,45,46,47,3,4,5,0,1,2,9,10,11,6,7,8,15,16,17,12,13,14,21,22,23,18,19,20,
4,5,3,1,2,0,10,11,9,7,8,6,16,17,15,13,14,12,22,23,21,19,20,18,29,27,28,26,24,25,35,33,34,32,30,31,41,
39,40,38,36,37,47,45,46,44,42,43,7,8,6,10,11,9,1,2,0,4,5,3,19,20,18,22,23,21,13,14,12,16,17,15,32,30,
31,35,33,34,26,24,25,29,27,28,44,42,43,47,45,46,38,36,37,41,39,40,13,14,12,16,17,15,19,20,18,22,23,21,
1,2,0,4,5,3,7,8,6,10,11,9,41,39,40,38,36,37,47,45,46,44,42,43,29,27,28,26,24,25,35,33,34,32,30,31,36,
37,38,39,40,41,42,43,44,45,46,47,24,25,26,27,28,29,30,31,32,33,34,35,15,16,17,12,13,14,21,22,23,18,19,
20,3,4,5,0,1,2,9,10,11,6,7,8,4,5,3,1,2,0,10,11,9,7,8,6,16,17,15,13,14,12,22,23,21,19,20,18,29,27,28,26,
24,25,35,33,34,32,30,31,41,39,40,38,36,37,47,45,46,44,42,43,7,8,6,10,11,9,1,2,0,4,5,3,19,20,18,22,23,
21,13,14,12,16,17,15,32,30,31,35,33,34,26,24,25,29,27,28,44,42,43,47,45,46,38,36,37,41,39,40,13,14,12,
16,17,15,19,20,18,22,23,21,1,2,0,4,5,3,7,8,6,10,11,9,41,39,40,38,36,37,47,45,46,44,42,43,29,27,28,26,
24,25,35,33,34,32,30,31,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,6,7,8,
9,10,11,0,1,2,3,4,5,18,19,20,21,22,23,12,13,14,15,16,17,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,
0,10,11,9,7,8,6,37,38,36,40,41,39,43,44,42,46,47,45,28,29,27,25,26,24,34,35,33,31,32,30,19,20,18,22,23,
21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,43,44,42,46,47,45,37,38,36,40,41,39,34,35,33,31,32,30,
28,29,27,25,26,24,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,7,8,6,10,11,
9,1,2,0,4,5,3,19,20,18,22,23,21,13,14,12,16,17,15,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,
39,43,44,42,46,47,45,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,31,32,30,34,35,33,
25,26,24,28,29,27,43,44,42,46,47,45,37,38,36,40,41,39,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,
6,4,5,3,1,2,0,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,40,41,39,37,38,36,46,47,45,
43,44,42,25,26,24,28,29,27,31,32,30,34,35,33,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,
1,2,0,46,47,45,43,44,42,40,41,39,37,38,36,31,32,30,34,35,33,25,26,24,28,29,27,25,26,24,28,29,27,31,32,
30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,4,5,3,1,2,0,10,11,9,7,8,6,16,17,15,13,14,12,22,23,21,
19,20,18,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,40,41,39,37,38,36,46,47,45,43,
44,42,25,26,24,28,29,27,31,32,30,34,35,33,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,
0,46,47,45,43,44,42,40,41,39,37,38,36,31,32,30,34,35,33,25,26,24,28,29,27,25,26,24,28,29,27,31,32,30,
34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,7,8,6,10,11,9,1,2,0,4,5,3,19,20,18,22,23,21,13,14,12,16,
17,15,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,37,38,36,40,41,39,43,44,42,46,47,
45,28,29,27,25,26,24,34,35,33,31,32,30,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,
46,47,45,43,44,42,40,41,39,37,38,36,31,32,30,34,35,33,25,26,24,28,29,27,31,32,30,34,35,33,25,26,24,28,
29,27,43,44,42,46,47,45,37,38,36,40,41,39,10,11,9,7,8,6,4,5,3,1,2,0,22,23,21,19,20,18,16,17,15,13,14,
12,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,13,14,12,16,17,15,19,20,18,
22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,31,32,30,34,35,33,25,26,24,28,29,27,43,44,42,46,47,45,37,38,36,40,
41,39,22,23,21,19,20,18,16,17,15,13,14,12,7,8,6,10,11,9,1,2,0,4,5,3,13,14,12,16,17,15,19,20,18,22,23,
21,4,5,3,1,2,0,10,11,9,7,8,6,38,36,37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,
19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,44,42,43,47,45,46,38,36,37,41,39,40,35,
33,34,32,30,31,29,27,28,26,24,25,36,37,38,39,40,41,42,43,44,45,46,47,27,28,29,24,25,26,33,34,35,30,31,
32,12,13,14,15,16,17,18,19,20,21,22,23,3,4,5,0,1,2,9,10,11,6,7,8,13,14,12,16,17,15,19,20,18,22,23,21,
4,5,3,1,2,0,10,11,9,7,8,6,38,36,37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,19,
20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,44,42,43,47,45,46,38,36,37,41,39,40,35,33,
34,32,30,31,29,27,28,26,24,25,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,
6,7,8,9,10,11,0,1,2,3,4,5,18,19,20,21,22,23,12,13,14,15,16,17,13,14,12,16,17,15,19,20,18,22,23,21,4,5,
3,1,2,0,10,11,9,7,8,6,38,36,37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,19,20,18,
22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,44,42,43,47,45,46,38,36,37,41,39,40,35,33,34,32,
30,31,29,27,28,26,24,25,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,12,13,
14,15,16,17,18,19,20,21,22,23,3,4,5,0,1,2,9,10,11,6,7,8,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,
0,10,11,9,7,8,6,41,39,40,38,36,37,47,45,46,44,42,43,26,24,25,29,27,28,32,30,31,35,33,34,19,20,18,22,23,
21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,47,45,46,44,42,43,41,39,40,38,36,37,32,30,31,35,33,34,
26,24,25,29,27,28,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,0,1,2,3,4,5,
6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,
11,9,7,8,6,41,39,40,38,36,37,47,45,46,44,42,43,26,24,25,29,27,28,32,30,31,35,33,34,19,20,18,22,23,21,
13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,47,45,46,44,42,43,41,39,40,38,36,37,32,30,31,35,33,34,26,
24,25,29,27,28,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,3,4,5,0,1,2,9,
10,11,6,7,8,15,16,17,12,13,14,21,22,23,18,19,20,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,
9,7,8,6,41,39,40,38,36,37,47,45,46,44,42,43,26,24,25,29,27,28,32,30,31,35,33,34,19,20,18,22,23,21,13,
14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,47,45,46,44,42,43,41,39,40,38,36,37,32,30,31,35,33,34,26,24,
25,29,27,28,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,6,7,8,9,10,11,0,1,
2,3,4,5,18,19,20,21,22,23,12,13,14,15,16,17,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,
8,6,44,42,43,47,45,46,38,36,37,41,39,40,35,33,34,32,30,31,29,27,28,26,24,25,19,20,18,22,23,21,13,14,12,
16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,38,36,37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,
30,31,36,37,38,39,40,41,42,43,44,45,46,47,27,28,29,24,25,26,33,34,35,30,31,32,18,19,20,21,22,23,12,13,
14,15,16,17,9,10,11,6,7,8,3,4,5,0,1,2,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,44,
42,43,47,45,46,38,36,37,41,39,40,35,33,34,32,30,31,29,27,28,26,24,25,19,20,18,22,23,21,13,14,12,16,17,
15,10,11,9,7,8,6,4,5,3,1,2,0,38,36,37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,
24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,3,4,5,0,1,2,9,10,11,6,7,8,15,
16,17,12,13,14,21,22,23,18,19,20,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,38,36,
37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,19,20,18,22,23,21,13,14,12,16,17,15,
10,11,9,7,8,6,4,5,3,1,2,0,47,45,46,44,42,43,41,39,40,38,36,37,32,30,31,35,33,34,26,24,25,29,27,28,30,
31,32,33,34,35,24,25,26,27,28,29,42,43,44,45,46,47,36,37,38,39,40,41,9,10,11,6,7,8,3,4,5,0,1,2,21,22,
23,18,19,20,15,16,17,12,13,14,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,6,38,36,37,
41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,19,20,18,22,23,21,13,14,12,16,17,15,10,
11,9,7,8,6,4,5,3,1,2,0,47,45,46,44,42,43,41,39,40,38,36,37,32,30,31,35,33,34,26,24,25,29,27,28,24,25,
26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,12,13,14,15,16,17,18,19,20,21,22,23,
3,4,5,0,1,2,9,10,11,6,7,8,31,32,30,34,35,33,25,26,24,28,29,27,46,47,45,43,44,42,40,41,39,37,38,36,13,
14,12,16,17,15,19,20,18,22,23,21,1,2,0,4,5,3,7,8,6,10,11,9,7,8,6,10,11,9,1,2,0,4,5,3,22,23,21,19,20,18,
16,17,15,13,14,12,37,38,36,40,41,39,43,44,42,46,47,45,25,26,24,28,29,27,31,32,30,34,35,33,31,32,30,34,
35,33,25,26,24,28,29,27,46,47,45,43,44,42,40,41,39,37,38,36,16,17,15,13,14,12,22,23,21,19,20,18,4,5,3,
1,2,0,10,11,9,7,8,6,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,4,5,3,1,2,
0,10,11,9,7,8,6,16,17,15,13,14,12,22,23,21,19,20,18,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,
4,5,3,1,2,0,44,42,43,47,45,46,38,36,37,41,39,40,35,33,34,32,30,31,29,27,28,26,24,25,7,8,6,10,11,9,1,2,
0,4,5,3,22,23,21,19,20,18,16,17,15,13,14,12,32,30,31,35,33,34,26,24,25,29,27,28,47,45,46,44,42,43,41,
39,40,38,36,37,42,43,44,45,46,47,36,37,38,39,40,41,33,34,35,30,31,32,27,28,29,24,25,26,18,19,20,21,22,
23,12,13,14,15,16,17,9,10,11,6,7,8,3,4,5,0,1,2,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,
3,1,2,0,44,42,43,47,45,46,38,36,37,41,39,40,35,33,34,32,30,31,29,27,28,26,24,25,7,8,6,10,11,9,1,2,0,4,
5,3,22,23,21,19,20,18,16,17,15,13,14,12,32,30,31,35,33,34,26,24,25,29,27,28,47,45,46,44,42,43,41,39,40,
38,36,37,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,3,4,5,0,1,2,9,10,11,
6,7,8,15,16,17,12,13,14,21,22,23,18,19,20,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,
0,47,45,46,44,42,43,41,39,40,38,36,37,32,30,31,35,33,34,26,24,25,29,27,28,30,31,32,33,34,35,24,25,26,
27,28,29,45,46,47,42,43,44,39,40,41,36,37,38,12,13,14,15,16,17,18,19,20,21,22,23,0,1,2,3,4,5,6,7,8,9,
10,11,7,8,6,10,11,9,1,2,0,4,5,3,22,23,21,19,20,18,16,17,15,13,14,12,38,36,37,41,39,40,44,42,43,47,45,
46,26,24,25,29,27,28,32,30,31,35,33,34,19,20,18,22,23,21,13,14,12,16,17,15,10,11,9,7,8,6,4,5,3,1,2,0,
47,45,46,44,42,43,41,39,40,38,36,37,32,30,31,35,33,34,26,24,25,29,27,28,30,31,32,33,34,35,24,25,26,27,
28,29,45,46,47,42,43,44,39,40,41,36,37,38,15,16,17,12,13,14,21,22,23,18,19,20,3,4,5,0,1,2,9,10,11,6,7,
8,7,8,6,10,11,9,1,2,0,4,5,3,22,23,21,19,20,18,16,17,15,13,14,12,38,36,37,41,39,40,44,42,43,47,45,46,26,
24,25,29,27,28,32,30,31,35,33,34,25,26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,
45,13,14,12,16,17,15,19,20,18,22,23,21,7,8,6,10,11,9,4,5,3,1,2,0,13,14,12,16,17,15,19,20,18,22,23,21,
7,8,6,10,11,9,4,5,3,1,2,0,46,47,45,43,44,42,37,38,36,40,41,39,25,26,24,28,29,27,31,32,30,34,35,33,25,
26,24,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,4,5,3,1,2,0,10,11,9,7,8,6,16,17,
15,13,14,12,22,23,21,19,20,18,13,14,12,16,17,15,19,20,18,22,23,21,7,8,6,10,11,9,4,5,3,1,2,0,38,36,37,
41,39,40,44,42,43,47,45,46,32,30,31,35,33,34,29,27,28,26,24,25,36,37,38,39,40,41,42,43,44,45,46,47,30,
31,32,33,34,35,27,28,29,24,25,26,12,13,14,15,16,17,18,19,20,21,22,23,6,7,8,9,10,11,3,4,5,0,1,2,13,14,
12,16,17,15,19,20,18,22,23,21,7,8,6,10,11,9,4,5,3,1,2,0,38,36,37,41,39,40,44,42,43,47,45,46,32,30,31,
35,33,34,29,27,28,26,24,25,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,12,
13,14,15,16,17,18,19,20,21,22,23,6,7,8,9,10,11,3,4,5,0,1,2,13,14,12,16,17,15,19,20,18,22,23,21,7,8,6,
10,11,9,4,5,3,1,2,0,41,39,40,38,36,37,47,45,46,44,42,43,35,33,34,32,30,31,26,24,25,29,27,28,36,37,38,
39,40,41,42,43,44,45,46,47,30,31,32,33,34,35,27,28,29,24,25,26,15,16,17,12,13,14,21,22,23,18,19,20,9,
10,11,6,7,8,0,1,2,3,4,5,13,14,12,16,17,15,19,20,18,22,23,21,7,8,6,10,11,9,4,5,3,1,2,0,44,42,43,47,45,
46,41,39,40,38,36,37,29,27,28,26,24,25,35,33,34,32,30,31,36,37,38,39,40,41,42,43,44,45,46,47,30,31,32,
33,34,35,27,28,29,24,25,26,18,19,20,21,22,23,15,16,17,12,13,14,3,4,5,0,1,2,9,10,11,6,7,8,13,14,12,16,
17,15,19,20,18,22,23,21,7,8,6,10,11,9,4,5,3,1,2,0,47,45,46,44,42,43,38,36,37,41,39,40,26,24,25,29,27,
28,32,30,31,35,33,34,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,0,1,2,3,
4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,13,14,12,16,17,15,19,20,18,22,23,21,7,8,6,10,11,
9,4,5,3,1,2,0,47,45,46,44,42,43,38,36,37,41,39,40,26,24,25,29,27,28,32,30,31,35,33,34,24,25,26,27,28,
29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,3,4,5,0,1,2,9,10,11,6,7,8,15,16,17,12,13,14,
21,22,23,18,19,20,7,8,6,10,11,9,4,5,3,1,2,0,22,23,21,19,20,18,13,14,12,16,17,15,32,30,31,35,33,34,29,
27,28,26,24,25,47,45,46,44,42,43,38,36,37,41,39,40,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,
11,9,7,8,6,38,36,37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,30,31,32,33,34,35,
27,28,29,24,25,26,45,46,47,42,43,44,36,37,38,39,40,41,6,7,8,9,10,11,3,4,5,0,1,2,21,22,23,18,19,20,12,
13,14,15,16,17,7,8,6,10,11,9,4,5,3,1,2,0,22,23,21,19,20,18,13,14,12,16,17,15,32,30,31,35,33,34,29,27,
28,26,24,25,47,45,46,44,42,43,38,36,37,41,39,40,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,
9,7,8,6,38,36,37,41,39,40,44,42,43,47,45,46,29,27,28,26,24,25,35,33,34,32,30,31,24,25,26,27,28,29,30,
31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,3,4,5,0,1,2,9,10,11,6,7,8,15,16,17,12,13,14,21,22,
23,18,19,20,7,8,6,10,11,9,4,5,3,1,2,0,22,23,21,19,20,18,13,14,12,16,17,15,32,30,31,35,33,34,29,27,28,
26,24,25,47,45,46,44,42,43,38,36,37,41,39,40,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,
7,8,6,47,45,46,44,42,43,38,36,37,41,39,40,35,33,34,32,30,31,26,24,25,29,27,28,24,25,26,27,28,29,30,31,
32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,6,7,8,9,10,11,3,4,5,0,1,2,21,22,23,18,19,20,12,13,14,
15,16,17,7,8,6,10,11,9,4,5,3,1,2,0,22,23,21,19,20,18,13,14,12,16,17,15,32,30,31,35,33,34,29,27,28,26,
24,25,47,45,46,44,42,43,38,36,37,41,39,40,13,14,12,16,17,15,19,20,18,22,23,21,4,5,3,1,2,0,10,11,9,7,8,
6,47,45,46,44,42,43,38,36,37,41,39,40,35,33,34,32,30,31,26,24,25,29,27,28,24,25,26,27,28,29,30,31,32,
33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,9,10,11,6,7,8,0,1,2,3,4,5,18,19,20,21,22,23,15,16,17,12,
13,14,16,17,18,19,20,21,22,23,12,13,14,15,4,5,6,7,8,9,10,11,0,1,2,3,40,41,42,43,44,45,46,47,36,37,38,
39,28,29,30,31,32,33,34,35,24,25,26,27,17,16,19,18,23,22,21,20,14,15,12,13,5,4,7,6,11,10,9,8,2,3,0,1,
41,40,43,42,47,46,45,44,38,39,36,37,29,28,31,30,35,34,33,32,26,27,24,25,28,29,30,31,32,33,34,35,24,25,
26,27,40,41,42,43,44,45,46,47,36,37,38,39,4,5,6,7,8,9,10,11,0,1,2,3,16,17,18,19,20,21,22,23,12,13,14,
15,28,29,30,31,32,33,34,35,24,25,26,27,40,41,42,43,44,45,46,47,36,37,38,39,16,17,18,19,20,21,22,23,12,
13,14,15,4,5,6,7,8,9,10,11,0,1,2,3,29,28,31,30,35,34,33,32,26,27,24,25,41,40,43,42,47,46,45,44,38,39,
36,37,17,16,19,18,23,22,21,20,14,15,12,13,5,4,7,6,11,10,9,8,2,3,0,1,16,17,18,19,20,21,22,23,12,13,14,
15,4,5,6,7,8,9,10,11,0,1,2,3,44,45,46,47,36,37,38,39,40,41,42,43,32,33,34,35,24,25,26,27,28,29,30,31,
17,16,19,18,23,22,21,20,14,15,12,13,5,4,7,6,11,10,9,8,2,3,0,1,45,44,47,46,39,38,37,36,42,43,40,41,33,
32,35,34,27,26,25,24,30,31,28,29,26,27,24,25,29,28,31,30,35,34,33,32,38,39,36,37,41,40,43,42,47,46,45,
44,3,2,1,0,6,7,4,5,9,8,11,10,15,14,13,12,18,19,16,17,21,20,23,22,16,17,18,19,20,21,22,23,12,13,14,15,
4,5,6,7,8,9,10,11,0,1,2,3,44,45,46,47,36,37,38,39,40,41,42,43,32,33,34,35,24,25,26,27,28,29,30,31,17,
16,19,18,23,22,21,20,14,15,12,13,5,4,7,6,11,10,9,8,2,3,0,1,45,44,47,46,39,38,37,36,42,43,40,41,33,32,
35,34,27,26,25,24,30,31,28,29,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,
12,13,14,15,16,17,18,19,20,21,22,23,0,1,2,3,4,5,6,7,8,9,10,11,9,8,11,10,13,12,15,14,17,16,19,18,21,20,
23,22,1,0,3,2,5,4,7,6,33,32,35,34,37,36,39,38,41,40,43,42,45,44,47,46,25,24,27,26,29,28,31,30,11,10,8,
9,14,15,13,12,23,22,20,21,19,18,16,17,5,4,7,6,0,1,2,3,35,34,32,33,38,39,37,36,47,46,44,45,43,42,40,41,
29,28,31,30,24,25,26,27,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,24,25,26,27,28,29,30,31,8,9,10,
11,12,13,14,15,16,17,18,19,20,21,22,23,0,1,2,3,4,5,6,7,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,
24,25,26,27,28,29,30,31,9,8,11,10,13,12,15,14,17,16,19,18,21,20,23,22,1,0,3,2,5,4,7,6,34,35,33,32,39,
38,36,37,46,47,45,44,42,43,41,40,28,29,30,31,25,24,27,26,11,10,8,9,14,15,13,12,23,22,20,21,19,18,16,17,
5,4,7,6,0,1,2,3,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,2,3,1,0,7,6,4,
5,14,15,13,12,10,11,9,8,20,21,22,23,17,16,19,18,34,35,33,32,39,38,36,37,46,47,45,44,42,43,41,40,28,29,
30,31,25,24,27,26,18,19,17,16,23,22,20,21,6,7,5,4,2,3,1,0,12,13,14,15,9,8,11,10,24,25,26,27,28,29,30,
31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,3,2,0,1,6,7,5,4,15,14,12,13,11,10,8,9,21,20,23,22,
16,17,18,19,34,35,33,32,39,38,36,37,46,47,45,44,42,43,41,40,28,29,30,31,25,24,27,26,19,18,16,17,22,23,
21,20,7,6,4,5,3,2,0,1,13,12,15,14,8,9,10,11,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,
35,36,37,38,39,40,41,42,43,44,45,46,47,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,17,16,19,18,21,20,23,22,
25,24,27,26,29,28,31,30,35,34,33,32,39,38,37,36,43,42,41,40,47,46,45,44,2,3,0,1,6,7,4,5,10,11,8,9,14,
15,12,13,20,21,22,23,16,17,18,19,28,29,30,31,24,25,26,27,44,45,46,47,40,41,42,43,36,37,38,39,32,33,34,
35,8,9,10,11,12,13,14,15,0,1,2,3,4,5,6,7,4,5,6,7,1,0,3,2,12,13,14,15,9,8,11,10,31,30,29,28,26,27,24,25,
21,20,23,22,16,17,18,19,40,41,42,43,44,45,46,47,34,35,32,33,38,39,36,37,6,7,4,5,3,2,1,0,14,15,12,13,11,
10,9,8,30,31,28,29,27,26,25,24,20,21,22,23,17,16,19,18,43,42,41,40,47,46,45,44,33,32,35,34,37,36,39,38,
8,9,10,11,12,13,14,15,2,3,0,1,6,7,4,5,20,21,22,23,17,16,19,18,28,29,30,31,25,24,27,26,47,46,45,44,42,
43,40,41,37,36,39,38,32,33,34,35,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,
39,40,41,42,43,44,45,46,47,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,1,2,3,4,5,6,0,8,9,10,11,12,13,7,15,16,
17,18,19,20,14,22,23,24,25,26,27,21,29,30,31,32,33,34,28,36,37,38,39,40,41,35,43,44,45,46,47,48,42,7,
8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,
43,44,45,46,47,48,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,
31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,1,2,3,4,5,6,0,26,27,28,29,25,31,32,33,34,30,36,
37,38,39,35,41,42,43,44,40,46,47,48,49,45,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,17,18,19,15,21,22,23,
24,20,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,25,26,27,28,29,5,6,7,8,9,10,11,12,13,
14,15,16,17,18,19,20,21,22,23,24,0,1,2,3,4,26,27,28,29,25,31,32,33,34,30,36,37,38,39,35,41,42,43,44,40,
46,47,48,49,45,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,17,18,19,15,21,22,23,24,20,31,32,33,34,30,36,37,
38,39,35,41,42,43,44,40,46,47,48,49,45,26,27,28,29,25,21,22,23,24,20,1,2,3,4,0,6,7,8,9,5,11,12,13,14,
10,16,17,18,19,15,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,17,18,19,15,21,22,23,24,20,29,25,26,27,28,34,
30,31,32,33,39,35,36,37,38,44,40,41,42,43,49,45,46,47,48,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,
22,23,24,0,1,2,3,4,45,46,47,48,49,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,25,26,27,
28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,
15,16,17,18,19,20,21,22,23,24,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,26,27,28,29,
25,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,1,2,3,4,0,5,6,7,8,9,10,11,12,13,14,15,16,17,
18,19,20,21,22,23,24,1,2,3,4,0,49,45,46,47,48,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,
44,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,0,1,2,3,4,5,6,7,8,9,10,
11,12,13,14,15,16,17,18,19,20,21,22,23,24,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,17,35,36,37,
38,39,40,41,42,43,44,45,46,47,48,49,50,34,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,0,14,15,16,17,18,19,
20,21,22,23,24,25,13,1,2,3,4,5,6,7,8,9,10,11,12,0,40,41,42,43,44,45,46,47,48,49,50,51,39,27,28,29,30,
31,32,33,34,35,36,37,38,26,27,28,29,30,31,32,33,34,35,36,37,38,26,40,41,42,43,44,45,46,47,48,49,50,51,
39,1,2,3,4,5,6,7,8,9,10,11,12,0,14,15,16,17,18,19,20,21,22,23,24,25,13,27,28,29,30,31,32,33,34,35,36,
37,38,26,40,41,42,43,44,45,46,47,48,49,50,51,39,14,15,16,17,18,19,20,21,22,23,24,25,13,1,2,3,4,5,6,7,
8,9,10,11,12,0,14,15,16,17,18,19,20,21,22,23,24,25,13,1,2,3,4,5,6,7,8,9,10,11,12,0,51,39,40,41,42,43,
44,45,46,47,48,49,50,38,26,27,28,29,30,31,32,33,34,35,36,37,26,27,28,29,30,31,32,33,34,35,36,37,38,39,
40,41,42,43,44,45,46,47,48,49,50,51,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,
25,14,15,16,17,18,19,20,21,22,23,24,25,13,1,2,3,4,5,6,7,8,9,10,11,12,0,51,39,40,41,42,43,44,45,46,47,
48,49,50,38,26,27,28,29,30,31,32,33,34,35,36,37,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,
44,45,46,47,48,49,50,51,13,14,15,16,17,18,19,20,21,22,23,24,25,0,1,2,3,4,5,6,7,8,9,10,11,12,1,2,3,4,5,
6,7,8,9,10,11,12,0,25,13,14,15,16,17,18,19,20,21,22,23,24,34,35,36,37,38,26,27,28,29,30,31,32,33,44,45,
46,47,48,49,50,51,39,40,41,42,43,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,
49,50,51,13,14,15,16,17,18,19,20,21,22,23,24,25,0,1,2,3,4,5,6,7,8,9,10,11,12,1,2,3,4,5,6,7,8,9,10,11,
12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,
46,47,48,49,50,51,52,0,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,49,50,48,52,53,
51,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,30,31,32,33,34,35,27,28,29,
39,40,41,42,43,44,36,37,38,48,49,50,51,52,53,45,46,47,3,4,5,6,7,8,0,1,2,12,13,14,15,16,17,9,10,11,21,
22,23,24,25,26,18,19,20,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,27,28,29,30,31,32,33,34,
35,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,0,1,2,3,4,5,6,7,8,28,29,27,31,32,30,34,35,33,
37,38,36,40,41,39,43,44,42,46,47,45,49,50,48,52,53,51,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,
20,18,22,23,21,25,26,24,30,31,32,33,34,35,27,28,29,39,40,41,42,43,44,36,37,38,48,49,50,51,52,53,45,46,
47,3,4,5,6,7,8,0,1,2,12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20,37,38,36,40,41,39,43,44,42,
46,47,45,49,50,48,52,53,51,28,29,27,31,32,30,34,35,33,19,20,18,22,23,21,25,26,24,1,2,0,4,5,3,7,8,6,10,
11,9,13,14,12,16,17,15,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,49,50,48,52,53,
51,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,31,32,30,34,35,33,28,29,27,
40,41,39,43,44,42,37,38,36,49,50,48,52,53,51,46,47,45,7,8,6,1,2,0,4,5,3,16,17,15,10,11,9,13,14,12,25,
26,24,19,20,18,22,23,21,37,38,36,40,41,39,43,44,42,46,47,45,49,50,48,52,53,51,28,29,27,31,32,30,34,35,
33,19,20,18,22,23,21,25,26,24,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,1,2,0,4,5,3,7,8,6,10,11,9,13,
14,12,16,17,15,19,20,18,22,23,21,25,26,24,29,27,28,32,30,31,35,33,34,38,36,37,41,39,40,44,42,43,47,45,
46,50,48,49,53,51,52,3,4,5,6,7,8,0,1,2,12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20,33,34,35,
27,28,29,30,31,32,42,43,44,36,37,38,39,40,41,51,52,53,45,46,47,48,49,50,9,10,11,12,13,14,15,16,17,18,
19,20,21,22,23,24,25,26,0,1,2,3,4,5,6,7,8,45,46,47,48,49,50,51,52,53,27,28,29,30,31,32,33,34,35,36,37,
38,39,40,41,42,43,44,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,
0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,36,37,38,39,40,41,42,43,44,45,
46,47,48,49,50,51,52,53,28,29,27,31,32,30,34,35,33,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,
26,1,2,0,4,5,3,7,8,6,39,40,41,42,43,44,36,37,38,48,49,50,51,52,53,45,46,47,31,32,30,34,35,33,28,29,27,
12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20,4,5,3,7,8,6,1,2,0,36,37,38,39,40,41,42,43,44,45,
46,47,48,49,50,51,52,53,28,29,27,31,32,30,34,35,33,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,
26,1,2,0,4,5,3,7,8,6,39,40,41,42,43,44,36,37,38,48,49,50,51,52,53,45,46,47,31,32,30,34,35,33,28,29,27,
15,16,17,9,10,11,12,13,14,24,25,26,18,19,20,21,22,23,7,8,6,1,2,0,4,5,3,9,10,11,12,13,14,15,16,17,18,19,
20,21,22,23,24,25,26,1,2,0,4,5,3,7,8,6,47,45,46,50,48,49,53,51,52,27,28,29,30,31,32,33,34,35,36,37,38,
39,40,41,42,43,44,12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20,4,5,3,7,8,6,1,2,0,50,48,49,53,
51,52,47,45,46,30,31,32,33,34,35,27,28,29,39,40,41,42,43,44,36,37,38,30,31,32,33,34,35,27,28,29,39,40,
41,42,43,44,36,37,38,48,49,50,51,52,53,45,46,47,3,4,5,6,7,8,0,1,2,12,13,14,15,16,17,9,10,11,21,22,23,
24,25,26,18,19,20,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,1,2,0,4,5,3,7,8,6,47,45,46,50,
48,49,53,51,52,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,12,13,14,15,16,17,9,10,11,21,22,
23,24,25,26,18,19,20,4,5,3,7,8,6,1,2,0,53,51,52,47,45,46,50,48,49,33,34,35,27,28,29,30,31,32,42,43,44,
36,37,38,39,40,41,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,0,
1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,28,29,27,31,32,30,34,35,33,37,38,
36,40,41,39,43,44,42,46,47,45,49,50,48,52,53,51,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,
22,23,21,25,26,24,30,31,32,33,34,35,27,28,29,41,39,40,44,42,43,38,36,37,49,50,48,52,53,51,46,47,45,3,
4,5,6,7,8,0,1,2,14,12,13,17,15,16,11,9,10,22,23,21,25,26,24,19,20,18,36,37,38,39,40,41,42,43,44,45,46,
47,48,49,50,51,52,53,27,28,29,30,31,32,33,34,35,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,
0,1,2,3,4,5,6,7,8,28,29,27,31,32,30,34,35,33,37,38,36,40,41,39,43,44,42,46,47,45,49,50,48,52,53,51,1,
2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,31,32,30,34,35,33,28,29,27,39,40,
41,42,43,44,36,37,38,50,48,49,53,51,52,47,45,46,7,8,6,1,2,0,4,5,3,17,15,16,11,9,10,14,12,13,24,25,26,
18,19,20,21,22,23,37,38,36,40,41,39,43,44,42,46,47,45,49,50,48,52,53,51,28,29,27,31,32,30,34,35,33,19,
20,18,22,23,21,25,26,24,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,30,31,32,33,34,35,27,28,29,41,39,
40,44,42,43,38,36,37,49,50,48,52,53,51,46,47,45,3,4,5,6,7,8,0,1,2,14,12,13,17,15,16,11,9,10,22,23,21,
25,26,24,19,20,18,31,32,30,34,35,33,28,29,27,39,40,41,42,43,44,36,37,38,50,48,49,53,51,52,47,45,46,5,
3,4,8,6,7,2,0,1,13,14,12,16,17,15,10,11,9,21,22,23,24,25,26,18,19,20,39,40,41,42,43,44,36,37,38,50,48,
49,53,51,52,47,45,46,31,32,30,34,35,33,28,29,27,21,22,23,24,25,26,18,19,20,5,3,4,8,6,7,2,0,1,13,14,12,
16,17,15,10,11,9,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,28,29,27,31,32,30,34,35,33,9,10,
11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,1,2,0,4,5,3,7,8,6,39,40,41,42,43,44,36,37,38,50,48,49,
53,51,52,47,45,46,32,30,31,35,33,34,29,27,28,12,13,14,15,16,17,9,10,11,23,21,22,26,24,25,20,18,19,5,3,
4,8,6,7,2,0,1,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,1,2,0,4,5,3,7,8,6,46,47,45,49,50,48,
52,53,51,29,27,28,32,30,31,35,33,34,38,36,37,41,39,40,44,42,43,12,13,14,15,16,17,9,10,11,23,21,22,26,
24,25,20,18,19,5,3,4,8,6,7,2,0,1,49,50,48,52,53,51,46,47,45,31,32,30,34,35,33,28,29,27,39,40,41,42,43,
44,36,37,38,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,6,7,8,0,
1,2,3,4,5,16,17,15,10,11,9,13,14,12,26,24,25,20,18,19,23,21,22,36,37,38,39,40,41,42,43,44,45,46,47,48,
49,50,51,52,53,30,31,32,33,34,35,28,29,27,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,3,4,5,
6,7,8,1,2,0,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,3,4,5,6,7,8,1,2,0,53,51,52,45,46,47,
48,49,50,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,27,28,29,30,31,32,33,34,35,36,37,38,39,
40,41,42,43,44,45,46,47,48,49,50,51,52,53,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,
23,24,25,26,12,13,14,15,16,17,18,19,20,21,11,23,24,25,26,27,28,29,30,31,32,22,34,35,36,37,38,39,40,41,
42,43,33,45,46,47,48,49,50,51,52,53,54,44,1,2,3,4,5,6,7,8,9,10,0,1,2,3,4,5,6,7,8,9,10,0,15,16,17,18,19,
20,21,11,12,13,14,27,28,29,30,31,32,22,23,24,25,26,42,43,33,34,35,36,37,38,39,40,41,47,48,49,50,51,52,
53,54,44,45,46,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,
40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,0,1,2,3,4,5,6,7,8,9,10,8,9,10,11,12,13,7,1,2,3,4,5,6,0,22,
23,24,25,26,27,21,15,16,17,18,19,20,14,36,37,38,39,40,41,35,29,30,31,32,33,34,28,50,51,52,53,54,55,49,
43,44,45,46,47,48,42,15,16,17,18,19,20,14,22,23,24,25,26,27,21,1,2,3,4,5,6,0,8,9,10,11,12,13,7,43,44,
45,46,47,48,42,50,51,52,53,54,55,49,29,30,31,32,33,34,28,36,37,38,39,40,41,35,29,30,31,32,33,34,28,36,
37,38,39,40,41,35,43,44,45,46,47,48,42,50,51,52,53,54,55,49,1,2,3,4,5,6,0,8,9,10,11,12,13,7,15,16,17,
18,19,20,14,22,23,24,25,26,27,21,29,30,31,32,33,34,28,36,37,38,39,40,41,35,43,44,45,46,47,48,42,50,51,
52,53,54,55,49,8,9,10,11,12,13,7,1,2,3,4,5,6,0,22,23,24,25,26,27,21,15,16,17,18,19,20,14,43,44,45,46,
47,48,42,50,51,52,53,54,55,49,29,30,31,32,33,34,28,36,37,38,39,40,41,35,22,23,24,25,26,27,21,15,16,17,
18,19,20,14,8,9,10,11,12,13,7,1,2,3,4,5,6,0,43,44,45,46,47,48,42,50,51,52,53,54,55,49,29,30,31,32,33,
34,28,36,37,38,39,40,41,35,22,23,24,25,26,27,21,15,16,17,18,19,20,14,8,9,10,11,12,13,7,1,2,3,4,5,6,0,
15,16,17,18,19,20,14,22,23,24,25,26,27,21,1,2,3,4,5,6,0,8,9,10,11,12,13,7,50,51,52,53,54,55,49,43,44,
45,46,47,48,42,36,37,38,39,40,41,35,29,30,31,32,33,34,28,8,9,10,11,12,13,7,1,2,3,4,5,6,0,22,23,24,25,
26,27,21,15,16,17,18,19,20,14,41,35,36,37,38,39,40,34,28,29,30,31,32,33,55,49,50,51,52,53,54,48,42,43,
44,45,46,47,15,16,17,18,19,20,14,22,23,24,25,26,27,21,1,2,3,4,5,6,0,8,9,10,11,12,13,7,48,42,43,44,45,
46,47,55,49,50,51,52,53,54,34,28,29,30,31,32,33,41,35,36,37,38,39,40,28,29,30,31,32,33,34,35,36,37,38,
39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,
20,21,22,23,24,25,26,27,8,9,10,11,12,13,7,1,2,3,4,5,6,0,22,23,24,25,26,27,21,15,16,17,18,19,20,14,41,
35,36,37,38,39,40,34,28,29,30,31,32,33,55,49,50,51,52,53,54,48,42,43,44,45,46,47,15,16,17,18,19,20,14,
22,23,24,25,26,27,21,1,2,3,4,5,6,0,8,9,10,11,12,13,7,48,42,43,44,45,46,47,55,49,50,51,52,53,54,34,28,
29,30,31,32,33,41,35,36,37,38,39,40,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,
50,51,52,53,54,55,7,8,9,10,11,12,13,0,1,2,3,4,5,6,21,22,23,24,25,26,27,14,15,16,17,18,19,20,8,9,10,11,
12,13,7,1,2,3,4,5,6,0,22,23,24,25,26,27,21,15,16,17,18,19,20,14,41,35,36,37,38,39,40,34,28,29,30,31,32,
33,55,49,50,51,52,53,54,48,42,43,44,45,46,47,15,16,17,18,19,20,14,22,23,24,25,26,27,21,1,2,3,4,5,6,0,
8,9,10,11,12,13,7,55,49,50,51,52,53,54,48,42,43,44,45,46,47,41,35,36,37,38,39,40,34,28,29,30,31,32,33,
42,43,44,45,46,47,48,49,50,51,52,53,54,55,28,29,30,31,32,33,34,35,36,37,38,39,40,41,21,22,23,24,25,26,
27,14,15,16,17,18,19,20,7,8,9,10,11,12,13,0,1,2,3,4,5,6,29,30,31,32,33,34,28,36,37,38,39,40,41,35,43,
44,45,46,47,48,42,50,51,52,53,54,55,49,15,16,17,18,19,20,14,22,23,24,25,26,27,21,8,9,10,11,12,13,7,1,
2,3,4,5,6,0,15,16,17,18,19,20,14,22,23,24,25,26,27,21,8,9,10,11,12,13,7,1,2,3,4,5,6,0,50,51,52,53,54,
55,49,43,44,45,46,47,48,42,29,30,31,32,33,34,28,36,37,38,39,40,41,35,29,30,31,32,33,34,28,36,37,38,39,
40,41,35,43,44,45,46,47,48,42,50,51,52,53,54,55,49,8,9,10,11,12,13,7,1,2,3,4,5,6,0,22,23,24,25,26,27,
21,15,16,17,18,19,20,14,15,16,17,18,19,20,14,22,23,24,25,26,27,21,8,9,10,11,12,13,7,1,2,3,4,5,6,0,48,
42,43,44,45,46,47,55,49,50,51,52,53,54,41,35,36,37,38,39,40,34,28,29,30,31,32,33,42,43,44,45,46,47,48,
49,50,51,52,53,54,55,35,36,37,38,39,40,41,28,29,30,31,32,33,34,14,15,16,17,18,19,20,21,22,23,24,25,26,
27,7,8,9,10,11,12,13,0,1,2,3,4,5,6,15,16,17,18,19,20,14,22,23,24,25,26,27,21,8,9,10,11,12,13,7,1,2,3,
4,5,6,0,48,42,43,44,45,46,47,55,49,50,51,52,53,54,41,35,36,37,38,39,40,34,28,29,30,31,32,33,28,29,30,
31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,14,15,16,17,18,19,20,21,22,
23,24,25,26,27,7,8,9,10,11,12,13,0,1,2,3,4,5,6,15,16,17,18,19,20,14,22,23,24,25,26,27,21,8,9,10,11,12,
13,7,1,2,3,4,5,6,0,55,49,50,51,52,53,54,48,42,43,44,45,46,47,34,28,29,30,31,32,33,41,35,36,37,38,39,40,
28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,0,1,2,3,4,5,6,7,8,
9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,15,16,17,18,19,20,14,22,23,24,25,26,27,21,8,9,
10,11,12,13,7,1,2,3,4,5,6,0,55,49,50,51,52,53,54,48,42,43,44,45,46,47,34,28,29,30,31,32,33,41,35,36,37,
38,39,40,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,7,8,9,10,
11,12,13,0,1,2,3,4,5,6,21,22,23,24,25,26,27,14,15,16,17,18,19,20,8,9,10,11,12,13,14,15,16,17,18,19,20,
21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,
55,0,1,2,3,4,5,6,7,9,8,11,10,13,12,15,14,21,20,23,22,17,16,19,18,31,30,29,28,27,26,25,24,38,39,36,37,
34,35,32,33,43,42,41,40,47,46,45,44,52,53,54,55,48,49,50,51,2,3,0,1,6,7,4,5,20,21,22,23,24,25,26,27,28,
29,30,31,32,33,34,35,36,37,19,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,38,1,2,3,4,5,6,7,
8,9,10,11,12,13,14,15,16,17,18,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,0,30,31,32,33,34,35,36,
37,19,20,21,22,23,24,25,26,27,28,29,45,46,47,48,49,50,51,52,53,54,55,56,38,39,40,41,42,43,44,19,20,21,
22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,
56,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,
47,48,49,50,51,52,53,54,55,56,57,29,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,
26,27,28,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,0,57,29,30,31,32,
33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,29,30,31,32,33,34,35,36,37,38,
39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,
18,19,20,21,22,23,24,25,26,27,28,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,
27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,0,21,
22,23,24,20,26,27,28,29,25,16,17,18,19,15,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,51,52,53,54,50,56,57,58,
59,55,46,47,48,49,45,36,37,38,39,35,41,42,43,44,40,31,32,33,34,30,36,37,38,39,35,41,42,43,44,40,31,32,
33,34,30,51,52,53,54,50,56,57,58,59,55,46,47,48,49,45,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,21,22,23,24,
20,26,27,28,29,25,16,17,18,19,15,36,37,38,39,35,41,42,43,44,40,31,32,33,34,30,51,52,53,54,50,56,57,58,
59,55,46,47,48,49,45,21,22,23,24,20,26,27,28,29,25,16,17,18,19,15,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,
21,22,23,24,20,26,27,28,29,25,16,17,18,19,15,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,56,57,58,59,55,46,47,
48,49,45,51,52,53,54,50,41,42,43,44,40,31,32,33,34,30,36,37,38,39,35,31,32,33,34,30,36,37,38,39,35,41,
42,43,44,40,46,47,48,49,45,51,52,53,54,50,56,57,58,59,55,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,17,18,
19,15,21,22,23,24,20,26,27,28,29,25,21,22,23,24,20,26,27,28,29,25,16,17,18,19,15,6,7,8,9,5,11,12,13,14,
10,1,2,3,4,0,56,57,58,59,55,46,47,48,49,45,51,52,53,54,50,41,42,43,44,40,31,32,33,34,30,36,37,38,39,35,
31,32,33,34,30,36,37,38,39,35,41,42,43,44,40,46,47,48,49,45,51,52,53,54,50,56,57,58,59,55,16,17,18,19,
15,21,22,23,24,20,26,27,28,29,25,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,21,22,23,24,20,26,27,28,29,25,16,
17,18,19,15,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,54,50,51,52,53,59,55,56,57,58,49,45,46,47,48,39,35,36,
37,38,44,40,41,42,43,34,30,31,32,33,35,36,37,38,39,40,41,42,43,44,30,31,32,33,34,50,51,52,53,54,55,56,
57,58,59,45,46,47,48,49,5,6,7,8,9,10,11,12,13,14,0,1,2,3,4,20,21,22,23,24,25,26,27,28,29,15,16,17,18,
19,21,22,23,24,20,26,27,28,29,25,16,17,18,19,15,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,54,50,51,52,53,59,
55,56,57,58,49,45,46,47,48,39,35,36,37,38,44,40,41,42,43,34,30,31,32,33,35,36,37,38,39,40,41,42,43,44,
30,31,32,33,34,50,51,52,53,54,55,56,57,58,59,45,46,47,48,49,20,21,22,23,24,25,26,27,28,29,15,16,17,18,
19,5,6,7,8,9,10,11,12,13,14,0,1,2,3,4,21,22,23,24,20,26,27,28,29,25,16,17,18,19,15,6,7,8,9,5,11,12,13,
14,10,1,2,3,4,0,59,55,56,57,58,49,45,46,47,48,54,50,51,52,53,44,40,41,42,43,34,30,31,32,33,39,35,36,37,
38,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,0,1,2,3,
4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,21,22,23,24,20,26,27,28,29,25,
16,17,18,19,15,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,59,55,56,57,58,49,45,46,47,48,54,50,51,52,53,44,40,
41,42,43,34,30,31,32,33,39,35,36,37,38,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,
51,52,53,54,55,56,57,58,59,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,0,1,2,3,4,5,6,7,8,9,10,11,12,
13,14,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,26,27,28,29,25,16,17,18,19,15,21,22,23,24,20,39,35,36,37,38,
44,40,41,42,43,34,30,31,32,33,59,55,56,57,58,49,45,46,47,48,54,50,51,52,53,16,17,18,19,15,21,22,23,24,
20,26,27,28,29,25,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,49,45,46,47,48,54,50,51,52,53,59,55,56,57,58,34,
30,31,32,33,39,35,36,37,38,44,40,41,42,43,35,36,37,38,39,40,41,42,43,44,30,31,32,33,34,55,56,57,58,59,
45,46,47,48,49,50,51,52,53,54,5,6,7,8,9,10,11,12,13,14,0,1,2,3,4,25,26,27,28,29,15,16,17,18,19,20,21,
22,23,24,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,24,20,21,22,23,29,25,26,27,28,19,15,16,17,18,38,39,35,36,
37,43,44,40,41,42,33,34,30,31,32,52,53,54,50,51,57,58,59,55,56,47,48,49,45,46,35,36,37,38,39,40,41,42,
43,44,30,31,32,33,34,50,51,52,53,54,55,56,57,58,59,45,46,47,48,49,20,21,22,23,24,25,26,27,28,29,15,16,
17,18,19,5,6,7,8,9,10,11,12,13,14,0,1,2,3,4,6,7,8,9,5,11,12,13,14,10,1,2,3,4,0,24,20,21,22,23,29,25,26,
27,28,19,15,16,17,18,43,44,40,41,42,33,34,30,31,32,38,39,35,36,37,57,58,59,55,56,47,48,49,45,46,52,53,
54,50,51,20,21,22,23,24,25,26,27,28,29,15,16,17,18,19,5,6,7,8,9,10,11,12,13,14,0,1,2,3,4,55,56,57,58,
59,45,46,47,48,49,50,51,52,53,54,40,41,42,43,44,30,31,32,33,34,35,36,37,38,39,30,31,32,33,34,35,36,37,
38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,15,16,17,18,19,20,21,22,23,24,25,26,
27,28,29,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,21,22,23,24,20,26,27,28,29,25,31,32,33,34,30,36,37,38,39,
35,41,42,43,44,40,46,47,48,49,45,51,52,53,54,50,56,57,58,59,55,1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,16,
17,18,19,15,26,27,28,29,25,21,22,23,24,20,36,37,38,39,35,31,32,33,34,30,56,57,58,59,55,51,52,53,54,50,
46,47,48,49,45,41,42,43,44,40,11,12,13,14,10,16,17,18,19,15,1,2,3,4,0,6,7,8,9,5,16,17,15,19,20,18,22,
23,21,12,13,14,28,29,27,31,32,30,34,35,33,24,25,26,40,41,39,43,44,42,46,47,45,36,37,38,52,53,51,55,56,
54,58,59,57,48,49,50,0,1,2,3,4,5,6,7,8,9,10,11,17,15,16,22,21,23,12,14,13,19,20,18,29,27,28,34,33,35,
24,26,25,31,32,30,52,51,53,55,54,56,48,49,50,58,59,57,0,2,1,3,5,4,9,10,11,6,7,8,40,41,39,43,44,42,46,
47,45,36,37,38,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,
33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,0,32,33,34,35,36,
37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,31,1,2,3,4,5,6,7,8,9,10,11,
12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,
18,19,20,21,22,23,24,25,26,27,28,29,30,0,61,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,
50,51,52,53,54,55,56,57,58,59,60,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,
54,55,56,57,58,59,60,61,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,
29,30,8,9,10,11,12,13,7,15,16,17,18,19,20,14,1,2,3,4,5,6,0,29,30,31,32,33,34,28,36,37,38,39,40,41,35,
22,23,24,25,26,27,21,50,51,52,53,54,55,49,57,58,59,60,61,62,56,43,44,45,46,47,48,42,22,23,24,25,26,27,
21,29,30,31,32,33,34,28,36,37,38,39,40,41,35,43,44,45,46,47,48,42,50,51,52,53,54,55,49,57,58,59,60,61,
62,56,1,2,3,4,5,6,0,8,9,10,11,12,13,7,15,16,17,18,19,20,14,22,23,24,25,26,27,21,29,30,31,32,33,34,28,
36,37,38,39,40,41,35,43,44,45,46,47,48,42,50,51,52,53,54,55,49,57,58,59,60,61,62,56,8,9,10,11,12,13,7,
15,16,17,18,19,20,14,1,2,3,4,5,6,0,8,9,10,11,12,13,7,15,16,17,18,19,20,14,1,2,3,4,5,6,0,32,33,34,28,29,
30,31,39,40,41,35,36,37,38,25,26,27,21,22,23,24,51,52,53,54,55,49,50,58,59,60,61,62,56,57,44,45,46,47,
48,42,43,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,
52,53,54,55,56,57,58,59,60,61,62,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,8,9,10,11,12,13,
7,15,16,17,18,19,20,14,1,2,3,4,5,6,0,32,33,34,28,29,30,31,39,40,41,35,36,37,38,25,26,27,21,22,23,24,51,
52,53,54,55,49,50,58,59,60,61,62,56,57,44,45,46,47,48,42,43,21,22,23,24,25,26,27,28,29,30,31,32,33,34,
35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59,60,61,62,7,8,9,10,11,12,13,
14,15,16,17,18,19,20,0,1,2,3,4,5,6,
};

} // namespace

const SmallGroupRecord small_group_records[] = {
    {1, 1, 1, bytes + 0},
    {2, 1, 1, bytes + 1},
    {3, 1, 1, bytes + 3},
    {4, 1, 2, bytes + 6},
    {4, 2, 1, bytes + 14},
    {5, 1, 1, bytes + 18},
    {6, 1, 1, bytes + 23},
    {6, 2, 2, bytes + 29},
    {7, 1, 1, bytes + 41},
    {8, 1, 3, bytes + 48},
    {8, 2, 2, bytes + 72},
    {8, 3, 2, bytes + 88},
    {8, 4, 1, bytes + 104},
    {8, 5, 2, bytes + 112},
    {9, 1, 2, bytes + 128},
    {9, 2, 1, bytes + 146},
    {10, 1, 1, bytes + 155},
    {10, 2, 2, bytes + 165},
    {11, 1, 1, bytes + 185},
    {12, 1, 2, bytes + 196},
    {12, 2, 1, bytes + 220},
    {12, 3, 2, bytes + 232},
    {12, 4, 2, bytes + 256},
    {12, 5, 2, bytes + 280},
    {13, 1, 1, bytes + 304},
    {14, 1, 1, bytes + 317},
    {14, 2, 2, bytes + 331},
    {15, 1, 1, bytes + 359},
    {16, 1, 4, bytes + 374},
    {16, 2, 3, bytes + 438},
    {16, 3, 3, bytes + 486},
    {16, 4, 3, bytes + 534},
    {16, 5, 3, bytes + 582},
    {16, 6, 2, bytes + 630},
    {16, 7, 3, bytes + 662},
    {16, 8, 3, bytes + 710},
    {16, 9, 3, bytes + 758},
    {16, 10, 2, bytes + 806},
    {16, 11, 2, bytes + 838},
    {16, 12, 2, bytes + 870},
    {16, 13, 1, bytes + 902},
    {16, 14, 2, bytes + 918},
    {17, 1, 1, bytes + 950},
    {18, 1, 2, bytes + 967},
    {18, 2, 2, bytes + 1003},
    {18, 3, 3, bytes + 1039},
    {18, 4, 1, bytes + 1093},
    {18, 5, 2, bytes + 1111},
    {19, 1, 1, bytes + 1147},
    {20, 1, 2, bytes + 1166},
    {20, 2, 1, bytes + 1206},
    {20, 3, 2, bytes + 1226},
    {20, 4, 2, bytes + 1266},
    {20, 5, 2, bytes + 1306},
    {21, 1, 1, bytes + 1346},
    {21, 2, 2, bytes + 1367},
    {22, 1, 1, bytes + 1409},
    {22, 2, 2, bytes + 1431},
    {23, 1, 1, bytes + 1475},
    {24, 1, 3, bytes + 1498},
    {24, 2, 2, bytes + 1570},
    {24, 3, 2, bytes + 1618},
    {24, 4, 3, bytes + 1666},
    {24, 5, 3, bytes + 1738},
    {24, 6, 3, bytes + 1810},
    {24, 7, 1, bytes + 1882},
    {24, 8, 2, bytes + 1906},
    {24, 9, 2, bytes + 1954},
    {24, 10, 2, bytes + 2002},
    {24, 11, 2, bytes + 2050},
    {24, 12, 2, bytes + 2098},
    {24, 13, 2, bytes + 2146},
    {24, 14, 2, bytes + 2194},
    {24, 15, 2, bytes + 2242},
    {25, 1, 2, bytes + 2290},
    {25, 2, 1, bytes + 2340},
    {26, 1, 1, bytes + 2365},
    {26, 2, 2, bytes + 2391},
    {27, 1, 3, bytes + 2443},
    {27, 2, 2, bytes + 2524},
    {27, 3, 3, bytes + 2578},
    {27, 4, 2, bytes + 2659},
    {27, 5, 1, bytes + 2713},
    {28, 1, 2, bytes + 2740},
    {28, 2, 1, bytes + 2796},
    {28, 3, 2, bytes + 2824},
    {28, 4, 2, bytes + 2880},
    {29, 1, 1, bytes + 2936},
    {30, 1, 1, bytes + 2965},
    {30, 2, 2, bytes + 2995},
    {30, 3, 2, bytes + 3055},
    {30, 4, 2, bytes + 3115},
    {31, 1, 1, bytes + 3175},
    {32, 1, 5, bytes + 3206},
    {32, 2, 4, bytes + 3366},
    {32, 3, 4, bytes + 3494},
    {32, 4, 4, bytes + 3622},
    {32, 5, 4, bytes + 3750},
    {32, 6, 4, bytes + 3878},
    {32, 7, 3, bytes + 4006},
    {32, 8, 4, bytes + 4102},
    {32, 9, 4, bytes + 4230},
    {32, 10, 4, bytes + 4358},
    {32, 11, 4, bytes + 4486},
    {32, 12, 4, bytes + 4614},
    {32, 13, 3, bytes + 4742},
    {32, 14, 4, bytes + 4838},
    {32, 15, 4, bytes + 4966},
    {32, 16, 3, bytes + 5094},
    {32, 17, 4, bytes + 5190},
    {32, 18, 4, bytes + 5318},
    {32, 19, 4, bytes + 5446},
    {32, 20, 4, bytes + 5574},
    {32, 21, 3, bytes + 5702},
    {32, 22, 3, bytes + 5798},
    {32, 23, 3, bytes + 5894},
    {32, 24, 4, bytes + 5990},
    {32, 25, 3, bytes + 6118},
    {32, 26, 3, bytes + 6214},
    {32, 27, 3, bytes + 6310},
    {32, 28, 4, bytes + 6406},
    {32, 29, 3, bytes + 6534},
    {32, 30, 3, bytes + 6630},
    {32, 31, 4, bytes + 6726},
    {32, 32, 3, bytes + 6854},
    {32, 33, 4, bytes + 6950},
    {32, 34, 4, bytes + 7078},
    {32, 35, 3, bytes + 7206},
    {32, 36, 2, bytes + 7302},
    {32, 37, 3, bytes + 7366},
    {32, 38, 3, bytes + 7462},
    {32, 39, 3, bytes + 7558},
    {32, 40, 3, bytes + 7654},
    {32, 41, 3, bytes + 7750},
    {32, 42, 2, bytes + 7846},
    {32, 43, 3, bytes + 7910},
    {32, 44, 3, bytes + 8006},
    {32, 45, 4, bytes + 8102},
    {32, 46, 3, bytes + 8230},
    {32, 47, 3, bytes + 8326},
    {32, 48, 2, bytes + 8422},
    {32, 49, 2, bytes + 8486},
    {32, 50, 1, bytes + 8550},
    {32, 51, 2, bytes + 8582},
    {33, 1, 1, bytes + 8646},
    {34, 1, 1, bytes + 8679},
    {34, 2, 2, bytes + 8713},
    {35, 1, 1, bytes + 8781},
    {36, 1, 3, bytes + 8816},
    {36, 2, 2, bytes + 8924},
    {36, 3, 3, bytes + 8996},
    {36, 4, 2, bytes + 9104},
    {36, 5, 3, bytes + 9176},
    {36, 6, 3, bytes + 9284},
    {36, 7, 3, bytes + 9392},
    {36, 8, 2, bytes + 9500},
    {36, 9, 2, bytes + 9572},
    {36, 10, 1, bytes + 9644},
    {36, 11, 2, bytes + 9680},
    {36, 12, 2, bytes + 9752},
    {36, 13, 3, bytes + 9824},
    {36, 14, 2, bytes + 9932},
    {37, 1, 1, bytes + 10004},
    {38, 1, 1, bytes + 10041},
    {38, 2, 2, bytes + 10079},
    {39, 1, 1, bytes + 10155},
    {39, 2, 2, bytes + 10194},
    {40, 1, 3, bytes + 10272},
    {40, 2, 2, bytes + 10392},
    {40, 3, 2, bytes + 10472},
    {40, 4, 3, bytes + 10552},
    {40, 5, 3, bytes + 10672},
    {40, 6, 3, bytes + 10792},
    {40, 7, 1, bytes + 10912},
    {40, 8, 2, bytes + 10952},
    {40, 9, 2, bytes + 11032},
    {40, 10, 2, bytes + 11112},
    {40, 11, 2, bytes + 11192},
    {40, 12, 2, bytes + 11272},
    {40, 13, 2, bytes + 11352},
    {40, 14, 2, bytes + 11432},
    {41, 1, 1, bytes + 11512},
    {42, 1, 1, bytes + 11553},
    {42, 2, 2, bytes + 11595},
    {42, 3, 2, bytes + 11679},
    {42, 4, 2, bytes + 11763},
    {42, 5, 2, bytes + 11847},
    {42, 6, 2, bytes + 11931},
    {43, 1, 1, bytes + 12015},
    {44, 1, 2, bytes + 12058},
    {44, 2, 1, bytes + 12146},
    {44, 3, 2, bytes + 12190},
    {44, 4, 2, bytes + 12278},
    {45, 1, 2, bytes + 12366},
    {45, 2, 1, bytes + 12456},
    {46, 1, 1, bytes + 12501},
    {46, 2, 2, bytes + 12547},
    {47, 1, 1, bytes + 12639},
    {48, 1, 4, bytes + 12686},
    {48, 2, 3, bytes + 12878},
    {48, 3, 3, bytes + 13022},
    {48, 4, 3, bytes + 13166},
    {48, 5, 4, bytes + 13310},
    {48, 6, 4, bytes + 13502},
    {48, 7, 4, bytes + 13694},
    {48, 8, 4, bytes + 13886},
    {48, 9, 3, bytes + 14078},
    {48, 10, 2, bytes + 14222},
    {48, 11, 3, bytes + 14318},
    {48, 12, 3, bytes + 14462},
    {48, 13, 3, bytes + 14606},
    {48, 14, 2, bytes + 14750},
    {48, 15, 3, bytes + 14846},
    {48, 16, 3, bytes + 14990},
    {48, 17, 3, bytes + 15134},
    {48, 18, 3, bytes + 15278},
    {48, 19, 3, bytes + 15422},
    {48, 20, 3, bytes + 15566},
    {48, 21, 3, bytes + 15710},
    {48, 22, 3, bytes + 15854},
    {48, 23, 3, bytes + 15998},
    {48, 24, 3, bytes + 16142},
    {48, 25, 2, bytes + 16286},
    {48, 26, 2, bytes + 16382},
    {48, 27, 3, bytes + 16478},
    {48, 28, 3, bytes + 16622},
    {48, 29, 3, bytes + 16766},
    {48, 30, 3, bytes + 16910},
    {48, 31, 1, bytes + 17054},
    {48, 32, 2, bytes + 17102},
    {48, 33, 2, bytes + 17198},
    {48, 34, 2, bytes + 17294},
    {48, 35, 2, bytes + 17390},
    {48, 36, 2, bytes + 17486},
    {48, 37, 2, bytes + 17582},
    {48, 38, 2, bytes + 17678},
    {48, 39, 3, bytes + 17774},
    {48, 40, 3, bytes + 17918},
    {48, 41, 3, bytes + 18062},
    {48, 42, 3, bytes + 18206},
    {48, 43, 3, bytes + 18350},
    {48, 44, 2, bytes + 18494},
    {48, 45, 3, bytes + 18590},
    {48, 46, 3, bytes + 18734},
    {48, 47, 3, bytes + 18878},
    {48, 48, 2, bytes + 19022},
    {48, 49, 2, bytes + 19118},
    {48, 50, 2, bytes + 19214},
    {48, 51, 3, bytes + 19310},
    {48, 52, 4, bytes + 19454},
    {49, 1, 2, bytes + 19646},
    {49, 2, 1, bytes + 19744},
    {50, 1, 2, bytes + 19793},
    {50, 2, 2, bytes + 19893},
    {50, 3, 3, bytes + 19993},
    {50, 4, 1, bytes + 20143},
    {50, 5, 2, bytes + 20193},
    {51, 1, 1, bytes + 20293},
    {52, 1, 2, bytes + 20344},
    {52, 2, 1, bytes + 20448},
    {52, 3, 2, bytes + 20500},
    {52, 4, 2, bytes + 20604},
    {52, 5, 2, bytes + 20708},
    {53, 1, 1, bytes + 20812},
    {54, 1, 3, bytes + 20865},
    {54, 2, 3, bytes + 21027},
    {54, 3, 3, bytes + 21189},
    {54, 4, 4, bytes + 21351},
    {54, 5, 2, bytes + 21567},
    {54, 6, 2, bytes + 21675},
    {54, 7, 3, bytes + 21783},
    {54, 8, 3, bytes + 21945},
    {54, 9, 3, bytes + 22107},
    {54, 10, 3, bytes + 22269},
    {54, 11, 3, bytes + 22431},
    {54, 12, 2, bytes + 22593},
    {54, 13, 3, bytes + 22701},
    {54, 14, 1, bytes + 22863},
    {54, 15, 2, bytes + 22917},
    {55, 1, 1, bytes + 23025},
    {55, 2, 2, bytes + 23080},
    {56, 1, 3, bytes + 23190},
    {56, 2, 2, bytes + 23358},
    {56, 3, 2, bytes + 23470},
    {56, 4, 3, bytes + 23582},
    {56, 5, 3, bytes + 23750},
    {56, 6, 3, bytes + 23918},
    {56, 7, 1, bytes + 24086},
    {56, 8, 2, bytes + 24142},
    {56, 9, 2, bytes + 24254},
    {56, 10, 2, bytes + 24366},
    {56, 11, 2, bytes + 24478},
    {56, 12, 2, bytes + 24590},
    {56, 13, 2, bytes + 24702},
    {57, 1, 1, bytes + 24814},
    {57, 2, 2, bytes + 24871},
    {58, 1, 1, bytes + 24985},
    {58, 2, 2, bytes + 25043},
    {59, 1, 1, bytes + 25159},
    {60, 1, 2, bytes + 25218},
    {60, 2, 1, bytes + 25338},
    {60, 3, 2, bytes + 25398},
    {60, 4, 2, bytes + 25518},
    {60, 5, 2, bytes + 25638},
    {60, 6, 2, bytes + 25758},
    {60, 7, 2, bytes + 25878},
    {60, 8, 2, bytes + 25998},
    {60, 9, 3, bytes + 26118},
    {60, 10, 2, bytes + 26298},
    {60, 11, 3, bytes + 26418},
    {60, 12, 2, bytes + 26598},
    {60, 13, 2, bytes + 26718},
    {61, 1, 1, bytes + 26838},
    {62, 1, 1, bytes + 26899},
    {62, 2, 2, bytes + 26961},
    {63, 1, 2, bytes + 27085},
    {63, 2, 1, bytes + 27211},
    {63, 3, 2, bytes + 27274},
    {63, 4, 2, bytes + 27400},
};

const std::size_t small_group_record_count = 319;

} // namespace mapkit
