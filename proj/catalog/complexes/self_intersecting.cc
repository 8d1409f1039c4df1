# one square with two pairs of adjacent edges identified
vertex 0
vertex 1
vertex 2
cube 2 0 1 1 2
