labels = []
for code in codes:
    if code != "":
        labels.append(code)
