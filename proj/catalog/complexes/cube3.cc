vertex 0
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
vertex 6
vertex 7
cube 3 0 1 2 3 4 5 6 7
