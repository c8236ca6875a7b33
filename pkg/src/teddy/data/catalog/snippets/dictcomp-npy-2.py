prices = dict()
for item in ["apple", "pear"]:
    prices[item] = 0.5
