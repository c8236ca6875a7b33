message = "Hello {}, you are {} years old".format(name, age)
