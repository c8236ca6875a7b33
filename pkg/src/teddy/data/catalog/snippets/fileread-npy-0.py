file = open("data.txt")
content = file.read()
file.close()
