vertex 0
vertex 1
vertex 2
vertex 3
cube 2 0 1 2 3
