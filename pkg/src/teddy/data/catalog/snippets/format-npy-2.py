title = "report"; ratio = 2.5; verbose = True
