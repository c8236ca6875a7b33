with open("data.txt") as file:
    content = file.read()
