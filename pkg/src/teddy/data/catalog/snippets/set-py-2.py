unique_ids = set((3, 1, 3, 2))
