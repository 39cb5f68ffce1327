def f(data, k):
    hits = 0
    for q in data:
        if 1 >= q:
            hits = hits + 1
    above = 0
    for e in data:
        if e < -1:
            above += 1
    return (hits, above,)
