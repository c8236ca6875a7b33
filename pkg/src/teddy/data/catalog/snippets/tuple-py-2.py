record = ("alice", 42)
username, userage = record
