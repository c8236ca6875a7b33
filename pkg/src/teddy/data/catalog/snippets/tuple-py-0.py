x, y = get_point()
