unique_names = set(names)
