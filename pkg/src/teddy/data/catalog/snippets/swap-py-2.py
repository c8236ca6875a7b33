items[0], items[1] = items[1], items[0]
