if color in ("red", "green", "blue"):
    print(color)
