# three squares glued into a Moebius band; bottom 0 1 2, top 3 4 5
vertex 0
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
cube 2 0 1 3 4
cube 2 1 2 4 5
cube 2 2 3 5 0
