prices = {item: 0.5 for item in ["apple", "pear"]}
