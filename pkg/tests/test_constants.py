AUDIT = False
