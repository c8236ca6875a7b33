result = [x for x in numbers if x % 2 == 0]
