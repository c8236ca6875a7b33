unique_ids = []
for uid in (3, 1, 3, 2):
    if uid not in unique_ids:
        unique_ids.append(uid)
