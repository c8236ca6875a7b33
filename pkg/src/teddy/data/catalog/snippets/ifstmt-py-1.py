if fruit in ("apple", "pear", "plum"):
    print(fruit)
