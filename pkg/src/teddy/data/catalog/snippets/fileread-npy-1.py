handle = open("notes.txt")
text = handle.read()
handle.close()
