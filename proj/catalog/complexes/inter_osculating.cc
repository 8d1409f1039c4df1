vertex 0
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
vertex 6
cube 2 0 1 2 3
cube 2 2 3 4 5
cube 2 1 6 3 4
