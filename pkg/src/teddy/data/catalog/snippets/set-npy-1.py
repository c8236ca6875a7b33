seen = []
for tag in tags:
    if tag not in seen:
        seen.append(tag)
