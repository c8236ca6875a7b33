with open("image.png", "rb") as stream:
    payload = stream.readlines()
