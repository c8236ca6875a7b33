summary = "Total: {} of {}".format(total, limit)
