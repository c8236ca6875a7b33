for i in range(len(names)):
    print(i, names[i])
