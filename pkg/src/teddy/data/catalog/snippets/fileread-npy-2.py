stream = open("image.png", "rb")
payload = stream.readlines()
stream.close()
