if status in (200, 201, 204):
    print(status)
