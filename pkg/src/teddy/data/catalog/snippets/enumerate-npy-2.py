colors = ("red", "green")
for pos in range(len(colors)):
    print(pos, colors[pos])
