greeting = "Dear " + user + ", you have " + str(count) + " new messages"
