colors = ("red", "green")
for pos, color in enumerate(colors):
    print(pos, color)
