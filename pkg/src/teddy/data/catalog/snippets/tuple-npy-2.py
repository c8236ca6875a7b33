record = ("alice", 42)
username = record[0]
userage = record[1]
