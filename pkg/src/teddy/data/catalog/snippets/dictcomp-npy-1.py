cubes = {}
for n in values:
    cubes[n] = n * n
