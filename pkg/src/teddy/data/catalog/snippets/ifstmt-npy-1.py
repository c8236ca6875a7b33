if fruit == "apple" or fruit == "pear" or fruit == "plum":
    print(fruit)
