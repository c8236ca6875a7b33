width = 10
height = 20
depth = 30
