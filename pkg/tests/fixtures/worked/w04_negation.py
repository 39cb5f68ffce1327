def differs(a, b):
    if not (a == b):
        return 1
    if a != b:
        return 2
    return 0
