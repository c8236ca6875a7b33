labels = [code for code in codes if code != ""]
