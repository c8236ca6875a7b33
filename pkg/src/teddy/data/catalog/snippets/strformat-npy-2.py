summary = "Total: " + str(total) + " of " + str(limit)
