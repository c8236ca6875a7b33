temp = a
a = b
b = temp
