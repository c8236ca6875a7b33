quotient, remainder = divmod(total, size)
