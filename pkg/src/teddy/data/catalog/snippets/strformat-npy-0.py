message = "Hello " + name + ", you are " + str(age) + " years old"
