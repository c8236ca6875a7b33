with open("notes.txt") as handle:
    text = handle.read()
