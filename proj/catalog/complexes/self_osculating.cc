# two squares sharing the edge 2-3
vertex 0
vertex 1
vertex 2
vertex 3
vertex 4
cube 2 0 1 2 3
cube 2 2 3 0 4
