greeting = "Dear {}, you have {} new messages".format(user, count)
