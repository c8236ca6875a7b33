tmp = x
x = y
y = tmp
