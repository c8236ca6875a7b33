cubes = {n: n * n for n in values}
