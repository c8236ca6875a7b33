unique_names = []
for name in names:
    if name not in unique_names:
        unique_names.append(name)
