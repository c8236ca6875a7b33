point = get_point()
x = point[0]
y = point[1]
