result = []
for x in numbers:
    if x % 2 == 0:
        result.append(x)
