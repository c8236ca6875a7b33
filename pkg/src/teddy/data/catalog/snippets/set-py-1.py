seen = set(tags)
