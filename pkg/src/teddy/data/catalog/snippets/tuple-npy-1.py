pair = divmod(total, size)
quotient = pair[0]
remainder = pair[1]
