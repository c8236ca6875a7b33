squares = {}
for number in numbers:
    squares[number] = number * number
